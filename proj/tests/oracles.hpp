#pragma once

// Reference implementations kept deliberately naive and separate from the
// library code paths, so every frozen value below is backed by a second
// derivation.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "affmult/bigint.hpp"
#include "affmult/partition.hpp"
#include "affmult/rsk.hpp"

namespace oracle {

inline void partitions_rec(int n, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// Euler's pentagonal-number recurrence.
inline long long partition_count(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k * (3 * k - 1) / 2 <= m; ++k) {
      long long sign = k % 2 == 1 ? 1 : -1;
      p[m] += sign * p[m - k * (3 * k - 1) / 2];
      if (m >= k * (3 * k + 1) / 2) p[m] += sign * p[m - k * (3 * k + 1) / 2];
    }
  return p[n];
}

// Count standard fillings by trying every assignment of 1..n to the cells.
inline long long syt_brute(const affmult::Partition& shape) {
  const int n = shape.weight();
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape.part(r); ++c) cells.emplace_back(r, c);
  std::vector<int> entries(n);
  std::iota(entries.begin(), entries.end(), 1);
  std::vector<std::vector<int>> grid(shape.length());
  for (int r = 0; r < shape.length(); ++r) grid[r].assign(shape.part(r), 0);
  long long count = 0;
  do {
    for (int i = 0; i < n; ++i) grid[cells[i].first][cells[i].second] = entries[i];
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      auto [r, c] = cells[i];
      if (c > 0 && grid[r][c - 1] >= grid[r][c]) ok = false;
      if (r > 0 && grid[r - 1][c] >= grid[r][c]) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(entries.begin(), entries.end()));
  return count;
}

// Longest strictly decreasing subsequence by inspecting every subset.
inline int lds_brute(const affmult::Word& w) {
  const int n = static_cast<int>(w.size());
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int prev = 0, len = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask & (1u << i)) {
        if (len > 0 && w[i] >= prev) ok = false;
        prev = w[i];
        ++len;
      }
    if (ok) best = std::max(best, len);
  }
  return best;
}

inline bool avoids_321(const affmult::Word& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (w[i] > w[j] && w[j] > w[k]) return false;
  return true;
}

// Catalan numbers via the exact integer recurrence C(i) = C(i-1)(4i-2)/(i+1).
inline affmult::BigInt catalan(int n) {
  affmult::BigInt c = 1;
  for (int i = 1; i <= n; ++i) c = c * (4 * i - 2) / (i + 1);
  return c;
}

}  // namespace oracle
