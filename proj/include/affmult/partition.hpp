#pragma once

#include <compare>
#include <string>
#include <vector>

#include "affmult/bigint.hpp"

namespace affmult {

// Integer partition: weakly decreasing positive parts; the empty partition is
// the empty vector.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  // 0-indexed part, 0 past the end.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n with min_len <= length <= max_len, lexicographically
// decreasing.
std::vector<Partition> gen_partitions(int n, int min_len, int max_len);

// Partitions obtained from mu by decrementing j distinct rows by one box
// each, deduplicated, lexicographically decreasing.
std::vector<Partition> decrement_set(const Partition& mu, int j);

// Number of standard Young tableaux of the given shape (hook lengths; exact).
BigInt hook_count(const Partition& shape);

}  // namespace affmult
