#include "affmult/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace affmult {

bool is_permutation_word(const Word& w) {
  std::vector<bool> seen(w.size(), false);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size())) return false;
    if (seen[x - 1]) return false;
    seen[x - 1] = true;
  }
  return true;
}

std::pair<Filling, std::pair<int, int>> insert(const Filling& t, int x) {
  Filling out = t;
  for (std::size_t r = 0; r < out.size(); ++r) {
    auto& row = out[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {out, {static_cast<int>(r) + 1, static_cast<int>(row.size())}};
    }
    std::swap(*it, x);
  }
  out.push_back({x});
  return {out, {static_cast<int>(out.size()), 1}};
}

std::pair<StandardTableau, StandardTableau> rsk_forward(const Word& w) {
  if (!is_permutation_word(w)) throw std::invalid_argument("rsk_forward: not a permutation");
  Filling m, n;
  for (std::size_t step = 0; step < w.size(); ++step) {
    auto [grown, cell] = insert(m, w[step]);
    m = std::move(grown);
    auto [r, c] = cell;
    if (r > static_cast<int>(n.size())) n.push_back({});
    n[r - 1].push_back(static_cast<int>(step) + 1);
    (void)c;
  }
  return {StandardTableau(m), StandardTableau(n)};
}

Word rsk_inverse(const StandardTableau& m, const StandardTableau& n) {
  if (m.shape() != n.shape()) throw std::invalid_argument("rsk_inverse: shapes differ");
  Filling cur = m.rows();
  Word w(m.size());
  // Remove entries in reverse insertion order; N says which row each
  // insertion terminated in.
  for (int entry = m.size(); entry >= 1; --entry) {
    int r = n.row_of(entry);
    int x = cur[r].back();
    cur[r].pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
      auto& row = cur[rr];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(*it, x);
    }
    if (cur[r].empty()) cur.pop_back();
    w[entry - 1] = x;
  }
  return w;
}

int lds_length(const Word& w) {
  if (w.empty()) return 0;
  std::vector<int> best(w.size(), 1);
  int out = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (w[j] > w[i]) best[i] = std::max(best[i], best[j] + 1);
    out = std::max(out, best[i]);
  }
  return out;
}

}  // namespace affmult
