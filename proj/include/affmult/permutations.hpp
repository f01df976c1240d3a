#pragma once

#include <vector>

#include "affmult/bigint.hpp"
#include "affmult/rsk.hpp"

namespace affmult {

// Parameters cutting out the permutation class counted by the multiplicity:
// w in S_ell with longest strictly decreasing subsequence at most k, the
// values 1..a appearing in the order a, a-1, ..., 1, and the first b letters
// strictly decreasing. a = 0 or b = 0 poses no condition, so both are
// normalized to 1.
struct Constraint {
  int k;
  int a;
  int b;
  int ell;

  Constraint(int k, int a, int b, int ell);
};

bool is_admissible(const Word& w, const Constraint& c);

// Brute count by pruned lexicographic search.
BigInt count_admissible(const Constraint& c);

std::vector<Word> enumerate_admissible(const Constraint& c);

}  // namespace affmult
