#include "affmult/tableau.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace affmult {

bool is_increasing_filling(const Filling& rows) {
  std::set<int> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      if (v <= 0 || !seen.insert(v).second) return false;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return !(!rows.empty() && rows.back().empty());
}

StandardTableau::StandardTableau(Filling rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  if (!is_increasing_filling(rows_))
    throw std::invalid_argument("StandardTableau: not an increasing filling");
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  std::vector<bool> present(n + 1, false);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v > n) throw std::invalid_argument("StandardTableau: entries must be 1..n");
      present[v] = true;
    }
  for (int v = 1; v <= n; ++v)
    if (!present[v]) throw std::invalid_argument("StandardTableau: entries must be 1..n");
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(parts);
}

int StandardTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

int StandardTableau::row_of(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (std::binary_search(rows_[r].begin(), rows_[r].end(), entry))
      return static_cast<int>(r);
  return -1;
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  const int n = shape.weight();
  Filling rows(shape.length());
  std::vector<int> len(shape.length(), 0);

  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      Filling trimmed;
      for (const auto& row : rows)
        if (!row.empty()) trimmed.push_back(row);
      out.push_back(StandardTableau(trimmed));
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      if (len[r] >= shape.part(r)) continue;
      if (r > 0 && len[r] >= len[r - 1]) continue;
      rows[r].push_back(next);
      ++len[r];
      self(self, next + 1);
      --len[r];
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<StandardTableau> enumerate_anchored_syt(const Partition& shape, int a) {
  if (a < 0 || a > shape.length())
    throw std::invalid_argument("enumerate_anchored_syt: need 0 <= a <= l(shape)");
  std::vector<StandardTableau> out;
  for (auto& t : enumerate_syt(shape)) {
    bool ok = true;
    for (int r = 0; r < a; ++r)
      if (t.rows()[r][0] != r + 1) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(t));
  }
  return out;
}

namespace {

constexpr int kHole = 0;

struct Grid {
  std::vector<std::vector<int>> cells;  // kHole marks an empty cell
  std::vector<int> len;                 // current row lengths

  bool filled(int r, int c) const {
    return r >= 0 && r < static_cast<int>(len.size()) && c >= 0 && c < len[r] &&
           cells[r][c] != kHole;
  }
};

}  // namespace

std::pair<Filling, std::vector<std::pair<int, int>>> rectify(const SkewTableau& skew) {
  const Partition& outer = skew.outer;
  const Partition& inner = skew.inner;
  if (inner.length() > outer.length())
    throw std::invalid_argument("rectify: inner shape exceeds outer");
  for (int r = 0; r < inner.length(); ++r)
    if (inner.part(r) > outer.part(r))
      throw std::invalid_argument("rectify: inner shape exceeds outer");
  if (static_cast<int>(skew.rows.size()) != outer.length())
    throw std::invalid_argument("rectify: row count does not match outer shape");

  Grid g;
  g.len.resize(outer.length());
  g.cells.resize(outer.length());
  for (int r = 0; r < outer.length(); ++r) {
    g.len[r] = outer.part(r);
    g.cells[r].assign(outer.part(r), kHole);
    if (static_cast<int>(skew.rows[r].size()) != outer.part(r) - inner.part(r))
      throw std::invalid_argument("rectify: row entries do not match skew shape");
    for (int c = inner.part(r); c < outer.part(r); ++c)
      g.cells[r][c] = skew.rows[r][c - inner.part(r)];
  }
  {
    Filling check;
    for (int r = 0; r < outer.length(); ++r) check.push_back(skew.rows[r]);
    std::set<int> seen;
    for (int r = 0; r < outer.length(); ++r)
      for (int c = inner.part(r); c < outer.part(r); ++c) {
        int v = g.cells[r][c];
        if (v <= 0 || !seen.insert(v).second)
          throw std::invalid_argument("rectify: entries must be distinct positive");
        if (c > inner.part(r) && g.cells[r][c - 1] >= v)
          throw std::invalid_argument("rectify: rows must increase");
        if (r > 0 && c >= inner.part(r - 1) && c < outer.part(r - 1) &&
            g.cells[r - 1][c] >= v)
          throw std::invalid_argument("rectify: columns must increase");
      }
  }

  std::vector<std::pair<int, int>> log;

  // Remaining inner cells per row; process inside corners bottom to top.
  std::vector<int> left(inner.length());
  for (int r = 0; r < inner.length(); ++r) left[r] = inner.part(r);
  int remaining = 0;
  for (int r = 0; r < inner.length(); ++r) remaining += left[r];
  while (remaining > 0) {
    int r0 = -1;
    for (int r = inner.length() - 1; r >= 0; --r) {
      if (left[r] == 0) continue;
      bool below_inner = r + 1 < inner.length() && left[r + 1] >= left[r];
      if (!below_inner) {
        r0 = r;
        break;
      }
    }
    if (r0 < 0) throw std::logic_error("rectify: no inside corner");
    int r = r0, c = left[r0] - 1;
    while (true) {
      bool right = g.filled(r, c + 1);
      bool below = g.filled(r + 1, c);
      if (!right && !below) {
        if (c != g.len[r] - 1) throw std::logic_error("rectify: hole stuck mid-row");
        g.len[r] -= 1;
        g.cells[r].pop_back();
        log.emplace_back(r + 1, c + 1);
        break;
      }
      if (!below || (right && g.cells[r][c + 1] < g.cells[r + 1][c])) {
        g.cells[r][c] = g.cells[r][c + 1];
        g.cells[r][c + 1] = kHole;
        c += 1;
      } else {
        g.cells[r][c] = g.cells[r + 1][c];
        g.cells[r + 1][c] = kHole;
        r += 1;
      }
    }
    left[r0] -= 1;
    remaining -= 1;
  }

  Filling result;
  for (int r = 0; r < static_cast<int>(g.len.size()); ++r) {
    if (g.len[r] == 0) continue;
    result.push_back(std::vector<int>(g.cells[r].begin(), g.cells[r].begin() + g.len[r]));
  }
  if (!is_increasing_filling(result))
    throw std::logic_error("rectify: result is not an increasing filling");
  return {result, log};
}

std::pair<Partition, StandardTableau> strip_rectify(const StandardTableau& m, int a) {
  if (a < 0 || a > m.shape().length())
    throw std::invalid_argument("strip_rectify: need 0 <= a <= l(shape)");
  for (int r = 0; r < a; ++r)
    if (m.rows()[r][0] != r + 1)
      throw std::invalid_argument("strip_rectify: entries 1..a must head the first column");

  SkewTableau skew;
  skew.outer = m.shape();
  std::vector<int> inner_parts(a, 1);
  skew.inner = Partition(inner_parts);
  skew.rows.resize(skew.outer.length());
  for (int r = 0; r < skew.outer.length(); ++r) {
    int from = r < a ? 1 : 0;
    skew.rows[r].assign(m.rows()[r].begin() + from, m.rows()[r].end());
  }

  auto [filling, log] = rectify(skew);
  (void)log;
  for (auto& row : filling)
    for (int& v : row) v -= a;
  StandardTableau v(filling);
  return {v.shape(), v};
}

StandardTableau unstrip(const StandardTableau& v, const Partition& mu, int a) {
  const Partition tau = v.shape();
  if (a < 0 || a > mu.length())
    throw std::invalid_argument("unstrip: need 0 <= a <= l(mu)");
  if (tau.weight() + a != mu.weight())
    throw std::invalid_argument("unstrip: |mu| must equal |shape(v)| + a");

  std::vector<int> diff_rows;
  for (int r = 0; r < mu.length(); ++r) {
    if (mu.part(r) == tau.part(r) + 1)
      diff_rows.push_back(r);
    else if (mu.part(r) != tau.part(r))
      throw std::invalid_argument("unstrip: shape(v) is not mu minus a boxes in distinct rows");
  }
  if (static_cast<int>(diff_rows.size()) != a)
    throw std::invalid_argument("unstrip: shape(v) is not mu minus a boxes in a distinct rows");

  Grid g;
  g.len.resize(mu.length(), 0);
  g.cells.resize(mu.length());
  for (int r = 0; r < tau.length(); ++r) {
    g.len[r] = tau.part(r);
    g.cells[r] = v.rows()[r];
    for (int& val : g.cells[r]) val += a;
  }

  // Reverse the forward slides: the forward pass removed its holes from the
  // diff rows bottom to top, so restore them top to bottom, sliding each new
  // hole up-left until it parks at the next first-column cell.
  for (int t = 0; t < a; ++t) {
    int r = diff_rows[t];
    int c = g.len[r];
    if (r > 0 && c >= g.len[r - 1])
      throw std::invalid_argument("unstrip: box restoration leaves the shape");
    g.cells[r].push_back(kHole);
    g.len[r] += 1;
    while (true) {
      bool up = g.filled(r - 1, c);
      bool left = g.filled(r, c - 1);
      if (!up && !left) break;
      if (!left || (up && g.cells[r - 1][c] > g.cells[r][c - 1])) {
        g.cells[r][c] = g.cells[r - 1][c];
        g.cells[r - 1][c] = kHole;
        r -= 1;
      } else {
        g.cells[r][c] = g.cells[r][c - 1];
        g.cells[r][c - 1] = kHole;
        c -= 1;
      }
    }
    if (r != t || c != 0)
      throw std::invalid_argument("unstrip: reverse slide did not reach the first column");
  }

  for (int r = 0; r < a; ++r) g.cells[r][0] = r + 1;
  Filling rows;
  for (int r = 0; r < static_cast<int>(g.len.size()); ++r)
    if (g.len[r] > 0) rows.push_back(g.cells[r]);
  return StandardTableau(rows);
}

}  // namespace affmult
