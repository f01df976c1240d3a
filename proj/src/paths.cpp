#include "affmult/paths.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace affmult {

bool Region::has_box(int row, int col) const {
  if (row < 1 || row > ell || col < 1 || col > ell) return false;
  if (row >= ell - a + 2 && col < row) return false;
  if (col >= ell - b + 2 && row < col) return false;
  return true;
}

int Region::color_count(int j) const {
  if (j == 0) return ell;
  if (j < 0) return -j <= ell - a ? ell + j - (a - 1) : 0;
  return j <= ell - b ? ell - j - (b - 1) : 0;
}

int Region::total_boxes() const {
  return ell + (ell - a) * (ell - a + 1) / 2 + (ell - b) * (ell - b + 1) / 2;
}

Region build_region(int ell, int a, int b) {
  if (a < 1 || b < 1 || std::max(a, b) > ell)
    throw std::invalid_argument("build_region: need 1 <= a, b <= ell");
  return Region{ell, a, b};
}

// Everything below works on lower paths; an upper sequence is reflected
// across the 0-diagonal on entry (swap a and b, D -> R, L -> U) and back on
// exit.
namespace {

std::string to_lower_word(const std::string& w, PathKind kind) {
  if (kind == PathKind::lower) return w;
  std::string out = w;
  for (char& ch : out) ch = ch == 'D' ? 'R' : 'U';
  return out;
}

std::string from_lower_word(const std::string& w, PathKind kind) {
  if (kind == PathKind::lower) return w;
  std::string out = w;
  for (char& ch : out) ch = ch == 'R' ? 'D' : 'L';
  return out;
}

Region lower_frame(const Region& region, PathKind kind) {
  return kind == PathKind::lower ? region : Region{region.ell, region.b, region.a};
}

int path_length(const Region& region, PathKind kind) {
  return kind == PathKind::lower ? region.ell - region.a : region.ell - region.b;
}

// Boxes of color -j below a lower path: the whole diagonal right of the
// path's final column, plus the box in column c whenever the c-th right
// move comes at word position ell-a+2-j or later.
std::vector<int> below_counts(const std::string& word, const Region& fr) {
  int width = fr.ell - fr.a;
  std::vector<int> s;
  s.reserve(word.size());
  for (int p = 0; p < static_cast<int>(word.size()); ++p)
    if (word[p] == 'R') s.push_back(p + 1);
  int m = static_cast<int>(s.size());
  std::vector<int> out(width, 0);
  for (int j = 1; j <= width; ++j)
    for (int c = 1; c <= fr.color_count(-j); ++c)
      if (c > m || s[c - 1] >= fr.ell - fr.a + 2 - j) ++out[j - 1];
  return out;
}

std::vector<std::vector<int>> strips_lower(const std::vector<std::string>& words,
                                           const Region& fr) {
  int width = fr.ell - fr.a;
  std::vector<std::vector<int>> t;
  t.reserve(words.size());
  std::vector<int> prev(width, 0);
  for (const auto& w : words) {
    auto cur = below_counts(w, fr);
    std::vector<int> row(width);
    for (int j = 0; j < width; ++j) row[j] = cur[j] - prev[j];
    t.push_back(std::move(row));
    prev = std::move(cur);
  }
  return t;
}

std::vector<std::string> lower_words(const PathSequence& seq) {
  std::vector<std::string> out;
  out.reserve(seq.moves.size());
  for (const auto& w : seq.moves) out.push_back(to_lower_word(w, seq.kind));
  return out;
}

bool admissible_lower(const std::vector<std::string>& words, const Region& fr, int k) {
  if (!words.empty()) {
    int r = 0, u = 0;
    for (char ch : words[0]) {
      ++(ch == 'R' ? r : u);
      if (u > r) return false;
    }
  }
  int width = fr.ell - fr.a;
  std::vector<std::vector<int>> below;
  below.reserve(words.size());
  for (const auto& w : words) below.push_back(below_counts(w, fr));
  for (std::size_t i = 1; i < below.size(); ++i)
    for (int j = 0; j < width; ++j)
      if (below[i][j] < below[i - 1][j]) return false;
  for (int i = 2; i <= k - 1; ++i) {
    for (int j = 1; j <= width; ++j) {
      int ti = below[i - 1][j - 1] - below[i - 2][j - 1];
      int prev = i == 2 ? below[0][j - 1] : below[i - 2][j - 1] - below[i - 3][j - 1];
      int room = fr.color_count(-j) - below[0][j - 1] - below[i - 2][j - 1];
      if (ti > std::min(prev, room)) return false;
    }
    for (int g = 2; g <= width; ++g) {
      int tg = below[i - 1][g - 1] - below[i - 2][g - 1];
      int shallower = below[i - 1][g - 2] - below[i - 2][g - 2];
      if (tg > shallower) return false;
    }
  }
  return true;
}

}  // namespace

PathSequence make_sequence(PathKind kind, std::vector<std::string> moves, const Region& region) {
  int len = path_length(region, kind);
  const char* alphabet = kind == PathKind::lower ? "RU" : "DL";
  for (const auto& w : moves) {
    if (static_cast<int>(w.size()) != len)
      throw std::invalid_argument("make_sequence: wrong path length");
    for (char ch : w)
      if (ch != alphabet[0] && ch != alphabet[1])
        throw std::invalid_argument("make_sequence: bad move character");
  }
  PathSequence seq{kind, std::move(moves), {}};
  seq.strip_counts = strips_lower(lower_words(seq), lower_frame(region, kind));
  return seq;
}

bool is_admissible(const PathSequence& seq, const Region& region, int k) {
  if (seq.paths() != k - 1)
    throw std::invalid_argument("is_admissible: expected k-1 paths");
  int len = path_length(region, seq.kind);
  for (const auto& w : seq.moves)
    if (static_cast<int>(w.size()) != len)
      throw std::invalid_argument("is_admissible: wrong path length");
  return admissible_lower(lower_words(seq), lower_frame(region, seq.kind), k);
}

Partition sequence_type(const PathSequence& seq, const Region& region) {
  Region fr = lower_frame(region, seq.kind);
  std::vector<int> parts;
  parts.reserve(seq.paths() + 1);
  int last = 0;
  std::vector<int> firsts;
  for (const auto& w : lower_words(seq)) {
    auto below = below_counts(w, fr);
    int cur = below.empty() ? 0 : below[0];
    firsts.push_back(cur - last);
    last = cur;
  }
  parts.push_back(fr.color_count(-1) - last);
  parts.insert(parts.end(), firsts.begin(), firsts.end());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

PathSequence f_map(const StandardTableau& x, int k, const Region& region, PathKind kind) {
  int len = path_length(region, kind);
  if (x.size() != len) throw std::invalid_argument("f_map: tableau size mismatch");
  if (x.shape().length() > k) throw std::invalid_argument("f_map: tableau has more than k rows");
  char along = kind == PathKind::lower ? 'R' : 'D';
  char away = kind == PathKind::lower ? 'U' : 'L';
  std::vector<std::string> moves;
  moves.reserve(k - 1);
  for (int i = 1; i <= k - 1; ++i) {
    std::string w(len, along);
    for (int j = 1; j <= len; ++j) {
      int r = x.row_of(j);
      if (r >= 1 && r <= i) w[j - 1] = away;
    }
    moves.push_back(std::move(w));
  }
  return make_sequence(kind, std::move(moves), region);
}

StandardTableau g_map(const PathSequence& seq) {
  char away = seq.kind == PathKind::lower ? 'U' : 'L';
  Filling rows;
  for (int j = 1; j <= seq.length(); ++j) {
    int row = 0;
    for (int s = 0; s < seq.paths(); ++s)
      if (seq.moves[s][j - 1] == away) {
        row = s + 1;
        break;
      }
    if (static_cast<int>(rows.size()) <= row) rows.resize(row + 1);
    rows[row].push_back(j);
  }
  return StandardTableau(rows);
}

namespace {

void words_with_aways(int len, int aways, std::string& cur, std::vector<std::string>& out) {
  if (static_cast<int>(cur.size()) == len) {
    if (aways == 0) out.push_back(cur);
    return;
  }
  int slots = len - static_cast<int>(cur.size());
  if (aways > slots) return;
  cur.push_back('R');
  words_with_aways(len, aways, cur, out);
  cur.back() = 'U';
  if (aways > 0) words_with_aways(len, aways - 1, cur, out);
  cur.pop_back();
}

struct SequenceSearch {
  const Region& fr;
  int k;
  std::vector<std::vector<std::string>> candidates;  // per path, fixed away count
  std::vector<std::vector<int>> below;
  std::vector<std::string> words;
  std::vector<std::vector<std::string>> found;

  void rec(int i) {
    if (i > k - 1) {
      found.push_back(words);
      return;
    }
    for (const auto& w : candidates[i - 1]) {
      if (i == 1) {
        int r = 0, u = 0;
        bool crossed = false;
        for (char ch : w) {
          ++(ch == 'R' ? r : u);
          if (u > r) {
            crossed = true;
            break;
          }
        }
        if (crossed) continue;
      }
      auto b = below_counts(w, fr);
      int width = fr.ell - fr.a;
      if (i >= 2) {
        bool ok = true;
        for (int j = 0; j < width && ok; ++j) ok = b[j] >= below[i - 2][j];
        for (int j = 1; j <= width && ok; ++j) {
          int ti = b[j - 1] - below[i - 2][j - 1];
          int prev = i == 2 ? below[0][j - 1] : below[i - 2][j - 1] - below[i - 3][j - 1];
          int room = fr.color_count(-j) - below[0][j - 1] - below[i - 2][j - 1];
          ok = ti <= std::min(prev, room);
        }
        for (int g = 2; g <= width && ok; ++g)
          ok = b[g - 1] - below[i - 2][g - 1] <= b[g - 2] - below[i - 2][g - 2];
        if (!ok) continue;
      }
      below.push_back(std::move(b));
      words.push_back(w);
      rec(i + 1);
      words.pop_back();
      below.pop_back();
    }
  }
};

}  // namespace

std::vector<PathSequence> enumerate_admissible(const Region& region, int k,
                                               const Partition& type, PathKind kind) {
  int len = path_length(region, kind);
  if (type.weight() != len)
    throw std::invalid_argument("enumerate_admissible: type must partition the path length");
  if (type.length() > k) throw std::invalid_argument("enumerate_admissible: type longer than k");
  Region fr = lower_frame(region, kind);

  SequenceSearch search{fr, k, {}, {}, {}, {}};
  search.candidates.resize(k - 1);
  int cum = 0;
  for (int i = 1; i <= k - 1; ++i) {
    cum += type.part(i);
    std::string cur;
    words_with_aways(len, cum, cur, search.candidates[i - 1]);
  }
  search.rec(1);

  std::vector<PathSequence> out;
  out.reserve(search.found.size());
  for (auto& words : search.found) {
    for (auto& w : words) w = from_lower_word(w, kind);
    out.push_back(make_sequence(kind, std::move(words), region));
  }
  return out;
}

std::vector<PathPair> enumerate_pairs(const Region& region, int k, const Partition& mu) {
  if (mu.weight() != region.ell)
    throw std::invalid_argument("enumerate_pairs: mu must partition ell");
  if (std::max(region.a, region.b) > mu.length() || mu.length() > k)
    throw std::invalid_argument("enumerate_pairs: need max{a, b} <= l(mu) <= k");

  auto launch = [&](const std::vector<Partition>& types, PathKind kind) {
    std::vector<std::future<std::vector<PathSequence>>> futs;
    futs.reserve(types.size());
    for (const auto& type : types)
      futs.push_back(std::async(std::launch::async,
                                [&, type] { return enumerate_admissible(region, k, type, kind); }));
    std::vector<PathSequence> all;
    for (auto& f : futs) {
      auto part = f.get();
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return all;
  };
  auto lowers = launch(decrement_set(mu, region.a), PathKind::lower);
  auto uppers = launch(decrement_set(mu, region.b), PathKind::upper);

  std::vector<PathPair> out;
  out.reserve(lowers.size() * uppers.size());
  for (const auto& lo : lowers)
    for (const auto& up : uppers) out.push_back(PathPair{lo, up});
  return out;
}

namespace {

// Boxes of one color form a run along their diagonal starting next to the
// origin; stacking the runs of all colors must give contiguous columns.
ExtendedYoungDiagram rebuild_diagram(int zeros, const std::vector<int>& neg,
                                     const std::vector<int>& pos) {
  std::vector<std::pair<int, int>> runs{{0, zeros}};
  for (int j = 1; j <= static_cast<int>(neg.size()); ++j) runs.emplace_back(-j, neg[j - 1]);
  for (int j = 1; j <= static_cast<int>(pos.size()); ++j) runs.emplace_back(j, pos[j - 1]);
  std::vector<int> count, deepest;
  for (auto [c, q] : runs)
    for (int i = 0; i < q; ++i) {
      int col = std::max(c, 0) + i;
      int depth = std::max(c, 0) - c + 1 + i;
      if (col >= static_cast<int>(count.size())) {
        count.resize(col + 1, 0);
        deepest.resize(col + 1, 0);
      }
      ++count[col];
      deepest[col] = std::max(deepest[col], depth);
    }
  std::vector<int> seq;
  seq.reserve(count.size());
  for (std::size_t col = 0; col < count.size(); ++col) {
    if (count[col] != deepest[col])
      throw std::logic_error("rebuild_diagram: colors do not stack into columns");
    seq.push_back(-deepest[col]);
  }
  return ExtendedYoungDiagram(seq);
}

// Unreduced color counts of one diagram, split by sign.
struct ColorSplit {
  int zeros = 0;
  std::vector<int> neg;
  std::vector<int> pos;
};

ColorSplit split_colors(const ExtendedYoungDiagram& y, int wneg, int wpos) {
  ColorSplit out{0, std::vector<int>(wneg, 0), std::vector<int>(wpos, 0)};
  for (int i = 0; i < y.cols(); ++i)
    for (int t = 1; t <= -y.at(i); ++t) {
      int c = i + 1 - t;
      if (c == 0)
        ++out.zeros;
      else if (c < 0 && -c <= wneg)
        ++out.neg[-c - 1];
      else if (c > 0 && c <= wpos)
        ++out.pos[c - 1];
      else
        throw std::invalid_argument("crystal_to_paths: box color outside the region's range");
    }
  return out;
}

// Rebuilds the lower path whose below-the-path sets are the size-q suffix
// of each diagonal: walk from the start, stepping away from the region
// boundary exactly when the box whose top edge meets the current height
// belongs to a suffix.
std::string march_path(const Region& fr, const std::vector<int>& q) {
  int x = 0, y = -(fr.ell - fr.a + 1);
  std::string w;
  while (y < -x - 1) {
    int row = -y, col = x + 1;
    int j = row - col;
    if (row > fr.ell - fr.a + 1 - q[j - 1]) {
      ++y;
      w += 'U';
    } else {
      ++x;
      w += 'R';
    }
  }
  if (below_counts(w, fr) != q)
    throw std::logic_error("crystal_to_paths: walk does not reproduce the strip counts");
  return w;
}

}  // namespace

CrystalTuple paths_to_crystal(const PathPair& pair, const Partition& mu, const Region& region,
                              int k, int n) {
  if (pair.lower.kind != PathKind::lower || pair.upper.kind != PathKind::upper)
    throw std::invalid_argument("paths_to_crystal: pair sides are mislabeled");
  if (mu.weight() != region.ell)
    throw std::invalid_argument("paths_to_crystal: mu must partition ell");
  if (std::max(region.a, region.b) > mu.length() || mu.length() > k)
    throw std::invalid_argument("paths_to_crystal: need max{a, b} <= l(mu) <= k");
  if (n < n_min(region.ell, region.a, region.b))
    throw std::invalid_argument("paths_to_crystal: rank below the stable range");
  if (!is_admissible(pair.lower, region, k) || !is_admissible(pair.upper, region, k))
    throw std::invalid_argument("paths_to_crystal: inadmissible pair");
  auto in_set = [](const std::vector<Partition>& set, const Partition& p) {
    return std::find(set.begin(), set.end(), p) != set.end();
  };
  if (!in_set(decrement_set(mu, region.a), sequence_type(pair.lower, region)) ||
      !in_set(decrement_set(mu, region.b), sequence_type(pair.upper, region)))
    throw std::invalid_argument("paths_to_crystal: pair types do not decrement mu");

  Region frl = lower_frame(region, PathKind::lower);
  Region fru = lower_frame(region, PathKind::upper);
  auto tl = strips_lower(lower_words(pair.lower), frl);
  auto tu = strips_lower(lower_words(pair.upper), fru);
  int wl = frl.ell - frl.a, wu = fru.ell - fru.a;
  std::vector<int> t0l(wl), t0u(wu);
  for (int j = 1; j <= wl; ++j) {
    t0l[j - 1] = frl.color_count(-j);
    for (const auto& row : tl) t0l[j - 1] -= row[j - 1];
  }
  for (int j = 1; j <= wu; ++j) {
    t0u[j - 1] = fru.color_count(-j);
    for (const auto& row : tu) t0u[j - 1] -= row[j - 1];
  }

  CrystalTuple out;
  out.diagrams.reserve(k);
  for (int m = 1; m <= k; ++m) {
    const std::vector<int>& neg = m == 1 ? t0l : tl[m - 2];
    const std::vector<int>& pos = m == 1 ? t0u : tu[m - 2];
    out.diagrams.push_back(rebuild_diagram(mu.part(m - 1), neg, pos));
  }
  if (!is_member(out, n))
    throw std::logic_error("paths_to_crystal: assembled tuple fails membership");
  return out;
}

std::pair<PathPair, Partition> crystal_to_paths(const CrystalTuple& t, const Region& region,
                                                int k) {
  if (t.level() != k) throw std::invalid_argument("crystal_to_paths: tuple level != k");
  int n = n_min(region.ell, region.a, region.b);
  if (tuple_weight(t, n).c != lambda_coeffs(region.ell, region.a, region.b, n).c)
    throw std::invalid_argument("crystal_to_paths: tuple weight mismatch");
  if (!is_member(t, n))
    throw std::invalid_argument("crystal_to_paths: tuple is not a crystal element");

  Region frl = lower_frame(region, PathKind::lower);
  Region fru = lower_frame(region, PathKind::upper);
  int wl = frl.ell - frl.a, wu = fru.ell - fru.a;
  std::vector<ColorSplit> split;
  split.reserve(k);
  for (const auto& y : t.diagrams) split.push_back(split_colors(y, wl, wu));

  std::vector<int> zero_parts;
  zero_parts.reserve(k);
  for (const auto& s : split) zero_parts.push_back(s.zeros);
  while (!zero_parts.empty() && zero_parts.back() == 0) zero_parts.pop_back();
  Partition mu(zero_parts);

  auto build_side = [&](const Region& fr, int width, bool negative, PathKind kind) {
    std::vector<std::string> words;
    std::vector<int> q(width, 0);
    for (int i = 1; i <= k - 1; ++i) {
      const auto& add = negative ? split[i].neg : split[i].pos;
      for (int j = 0; j < width; ++j) q[j] += add[j];
      words.push_back(from_lower_word(march_path(fr, q), kind));
    }
    return make_sequence(kind, std::move(words), region);
  };
  PathPair pair{build_side(frl, wl, true, PathKind::lower),
                build_side(fru, wu, false, PathKind::upper)};
  if (!is_admissible(pair.lower, region, k) || !is_admissible(pair.upper, region, k))
    throw std::logic_error("crystal_to_paths: recovered pair is not admissible");
  return {std::move(pair), std::move(mu)};
}

}  // namespace affmult
