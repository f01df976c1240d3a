#include "affmult/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace affmult {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  return i >= 0 && i < length() ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    out.resize(parts_[0]);
    for (int c = 0; c < parts_[0]; ++c)
      out[c] = static_cast<int>(
          std::count_if(parts_.begin(), parts_.end(), [&](int p) { return p > c; }));
  }
  return Partition(out);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void gen_rec(int remaining, int max_part, int min_len, int max_len,
             std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    if (static_cast<int>(acc.size()) >= min_len) out.push_back(Partition(acc));
    return;
  }
  int slots = max_len - static_cast<int>(acc.size());
  if (slots <= 0) return;
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    if (static_cast<long long>(p) * slots < remaining) break;
    acc.push_back(p);
    gen_rec(remaining - p, p, min_len, max_len, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> gen_partitions(int n, int min_len, int max_len) {
  if (n < 0 || min_len < 0)
    throw std::invalid_argument("gen_partitions: negative argument");
  std::vector<Partition> out;
  if (max_len < min_len) return out;
  std::vector<int> acc;
  gen_rec(n, n, min_len, max_len, acc, out);
  return out;
}

std::vector<Partition> decrement_set(const Partition& mu, int j) {
  const int l = mu.length();
  if (j < 0 || j > l)
    throw std::invalid_argument("decrement_set: need 0 <= j <= l(mu)");

  std::set<std::vector<int>, std::greater<>> results;
  std::vector<int> pick(j);
  // Iterate over all j-subsets of row indices.
  for (int i = 0; i < j; ++i) pick[i] = i;
  while (true) {
    std::vector<int> rows = mu.parts();
    for (int i : pick) rows[i] -= 1;
    std::vector<int> trimmed;
    for (int p : rows)
      if (p > 0) trimmed.push_back(p);
    if (std::is_sorted(trimmed.begin(), trimmed.end(), std::greater<>()))
      results.insert(trimmed);

    if (j == 0) break;
    int i = j - 1;
    while (i >= 0 && pick[i] == l - j + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int t = i + 1; t < j; ++t) pick[t] = pick[t - 1] + 1;
  }

  std::vector<Partition> out;
  out.reserve(results.size());
  for (const auto& r : results) out.push_back(Partition(r));
  return out;
}

BigInt hook_count(const Partition& shape) {
  const auto& mu = shape.parts();
  const Partition conj = shape.conjugate();
  const int n = shape.weight();
  BigInt numerator = 1;
  for (int i = 2; i <= n; ++i) numerator *= i;
  BigInt denominator = 1;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < mu[i]; ++j)
      denominator *= mu[i] - j + conj.part(j) - i - 1;
  return numerator / denominator;
}

}  // namespace affmult
