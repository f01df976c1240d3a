#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affmult/bigint.hpp"
#include "affmult/crystal.hpp"
#include "affmult/partition.hpp"

namespace affmult {

// One weight: level k, parameters (a, b, ell), optional rank (defaults to
// the smallest rank in the stable range).
struct MultiplicityQuery {
  int k = 0;
  int a = 0;
  int b = 0;
  int ell = 0;
  std::optional<int> n;

  int rank() const { return n ? *n : n_min(ell, a, b); }
};

// Throws unless k >= a + b, max{a, b} <= ell, and the rank is in the
// stable range.
void validate_query(const MultiplicityQuery& q);

struct MultiplicityReport {
  MultiplicityQuery query;
  std::map<std::string, BigInt> values;
  bool agree = false;
  std::vector<std::pair<Partition, BigInt>> breakdown;
};

// The summand for one partition mu: (sum of tableau counts over the
// a-decrements) times (the same over the b-decrements).
BigInt formula_term(const MultiplicityQuery& q, const Partition& mu);

// Hook-length formula summed over partitions of ell with between
// max{a, b} and k parts.
BigInt mult_formula(const MultiplicityQuery& q);

// Count of constrained pattern-avoiding permutations of [ell].
BigInt mult_permutations(const MultiplicityQuery& q);

// Count of admissible (lower, upper) path pairs over all compatible mu.
BigInt mult_paths(const MultiplicityQuery& q);

// Size of the brute-force weight space; ground truth at small scale.
BigInt mult_crystal(const MultiplicityQuery& q);

using MethodFn = std::function<BigInt(const MultiplicityQuery&)>;
using MethodTable = std::map<std::string, MethodFn>;

// {"formula", "permutations", "paths", "crystal"} -> the four methods.
MethodTable default_methods();

// Runs at least two named methods concurrently and reports their values,
// whether they agree, and the per-mu breakdown of the formula sum.
// Disagreement is a report state, not an error.
MultiplicityReport cross_check(const MultiplicityQuery& q, const std::vector<std::string>& methods);
MultiplicityReport cross_check(const MultiplicityQuery& q, const std::vector<std::string>& methods,
                               const MethodTable& table);

}  // namespace affmult
