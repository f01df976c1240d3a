#include "affmult/crystal.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace affmult {

ExtendedYoungDiagram::ExtendedYoungDiagram(std::vector<int> seq) : seq_(std::move(seq)) {
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (seq_[i] > 0)
      throw std::invalid_argument("ExtendedYoungDiagram: entries must be non-positive");
    if (i > 0 && seq_[i] < seq_[i - 1])
      throw std::invalid_argument("ExtendedYoungDiagram: entries must be weakly increasing");
  }
  while (!seq_.empty() && seq_.back() == 0) seq_.pop_back();
}

int ExtendedYoungDiagram::at(int i) const { return i < cols() ? seq_[i] : 0; }

int ExtendedYoungDiagram::box_count() const {
  int total = 0;
  for (int y : seq_) total -= y;
  return total;
}

bool ExtendedYoungDiagram::contains(const ExtendedYoungDiagram& sub) const {
  for (int i = 0; i < sub.cols(); ++i)
    if (sub.seq_[i] < at(i)) return false;
  return true;
}

std::string ExtendedYoungDiagram::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < cols(); ++i) os << (i ? "," : "") << seq_[i];
  os << ']';
  return os.str();
}

WeightVector diagram_weight(const ExtendedYoungDiagram& y, int n) {
  if (n < 2) throw std::invalid_argument("diagram_weight: need n >= 2");
  WeightVector w{1, std::vector<int>(n, 0)};
  for (int i = 0; i < y.cols(); ++i)
    for (int t = 1; t <= -y.at(i); ++t) ++w.c[((i + 1 - t) % n + n) % n];
  return w;
}

WeightVector tuple_weight(const CrystalTuple& t, int n) {
  WeightVector w{t.level(), std::vector<int>(n, 0)};
  for (const auto& y : t.diagrams) {
    WeightVector part = diagram_weight(y, n);
    for (int j = 0; j < n; ++j) w.c[j] += part.c[j];
  }
  return w;
}

int n_min(int ell, int a, int b) { return 2 * ell + 2 - a - b; }

WeightVector lambda_coeffs(int ell, int a, int b, int n) {
  if (a < 1 || b < 1 || std::max(a, b) > ell)
    throw std::invalid_argument("lambda_coeffs: need 1 <= a, b <= ell");
  if (n < n_min(ell, a, b))
    throw std::invalid_argument("lambda_coeffs: rank below the stable range");
  WeightVector w{0, std::vector<int>(n, 0)};
  w.c[0] = ell;
  for (int i = 1; i <= ell - b; ++i) w.c[i] = ell - b - i + 1;
  for (int s = 0; s <= ell - a - 1; ++s) w.c[n - ell + a + s] = s + 1;
  return w;
}

bool is_member(const CrystalTuple& t, int n) {
  int k = t.level();
  if (k < 1) throw std::invalid_argument("is_member: tuple is empty");
  const auto& d = t.diagrams;
  for (int j = 0; j + 1 < k; ++j)
    if (!d[j].contains(d[j + 1])) return false;
  for (int i = 0; i < d[0].cols(); ++i)
    if (d[0].at(i) + n < d[k - 1].at(i)) return false;
  int len = 0;
  for (const auto& y : d) len = std::max(len, y.cols());
  // Columns past every stored prefix pass via Y_{k+1} = Y_1[n], whose
  // entries there equal n > 0.
  for (int i = 0; i <= len; ++i) {
    bool ok = false;
    for (int j = 0; j < k && !ok; ++j) {
      int next = (j + 1 < k) ? d[j + 1].at(i) : d[0].at(i) + n;
      ok = next > d[j].at(i + 1);
    }
    if (!ok) return false;
  }
  return true;
}

namespace {

void gen_diagrams(int max_cols, int prev, std::vector<int>& cur,
                  std::vector<ExtendedYoungDiagram>& out) {
  if (static_cast<int>(cur.size()) == max_cols) return;
  for (int v = prev; v <= -1; ++v) {
    cur.push_back(v);
    out.emplace_back(cur);
    gen_diagrams(max_cols, v, cur, out);
    cur.pop_back();
  }
}

struct SpaceSearch {
  int k;
  int n;
  const std::vector<ExtendedYoungDiagram>& cands;
  const std::vector<std::vector<int>>& wt;
  const std::vector<std::vector<int>>& kids;
  const std::vector<int>& target;
  std::vector<int> chain;
  std::vector<int> cum;
  std::vector<CrystalTuple> found;

  SpaceSearch(int k, int n, const std::vector<ExtendedYoungDiagram>& cands,
              const std::vector<std::vector<int>>& wt, const std::vector<std::vector<int>>& kids,
              const std::vector<int>& target)
      : k(k), n(n), cands(cands), wt(wt), kids(kids), target(target), cum(target.size(), 0) {
    chain.reserve(k);
  }

  void extend(int idx, int depth) {
    const auto& w = wt[idx];
    for (std::size_t j = 0; j < w.size(); ++j)
      if (cum[j] + w[j] > target[j]) return;
    for (std::size_t j = 0; j < w.size(); ++j) cum[j] += w[j];
    chain.push_back(idx);
    if (depth == k - 1) {
      if (cum == target) {
        CrystalTuple t;
        t.diagrams.reserve(k);
        for (int c : chain) t.diagrams.push_back(cands[c]);
        if (is_member(t, n)) found.push_back(std::move(t));
      }
    } else {
      // Later diagrams sit inside this one, so each color they add is
      // bounded by this diagram's count of it.
      bool feasible = true;
      for (std::size_t j = 0; j < w.size() && feasible; ++j)
        feasible = target[j] - cum[j] <= (k - depth - 1) * w[j];
      if (feasible)
        for (int nxt : kids[idx]) extend(nxt, depth + 1);
    }
    chain.pop_back();
    for (std::size_t j = 0; j < w.size(); ++j) cum[j] -= w[j];
  }
};

}  // namespace

std::vector<CrystalTuple> enumerate_weight_space(int n, int k, int ell, int a, int b) {
  if (k < a + b) throw std::invalid_argument("enumerate_weight_space: need k >= a + b");
  WeightVector target = lambda_coeffs(ell, a, b, n);

  std::vector<ExtendedYoungDiagram> cands;
  cands.emplace_back();
  {
    std::vector<int> cur;
    gen_diagrams(ell - b + 1, -(ell - a + 1), cur, cands);
  }
  int m = static_cast<int>(cands.size());

  std::vector<std::vector<int>> wt(m);
  for (int i = 0; i < m; ++i) wt[i] = diagram_weight(cands[i], n).c;
  std::vector<std::vector<int>> kids(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (cands[i].contains(cands[j])) kids[i].push_back(j);

  // The choice of Y_1 fans out across workers; chunks are joined in index
  // order to keep the output deterministic.
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  int chunk = (m + static_cast<int>(workers) - 1) / static_cast<int>(workers);
  std::vector<std::future<std::vector<CrystalTuple>>> parts;
  for (int lo = 0; lo < m; lo += chunk) {
    int hi = std::min(m, lo + chunk);
    parts.push_back(std::async(std::launch::async, [&, lo, hi] {
      SpaceSearch s(k, n, cands, wt, kids, target.c);
      for (int i = lo; i < hi; ++i) s.extend(i, 0);
      return std::move(s.found);
    }));
  }
  std::vector<CrystalTuple> out;
  for (auto& f : parts) {
    auto part = f.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace affmult
