#pragma once

#include <utility>
#include <vector>

#include "affmult/tableau.hpp"

namespace affmult {

// Permutation in one-line notation: a rearrangement of 1..l.
using Word = std::vector<int>;

bool is_permutation_word(const Word& w);

// Schensted row insertion of x into an increasing filling. Returns the grown
// filling and the (row, col) of the new cell, 1-indexed.
std::pair<Filling, std::pair<int, int>> insert(const Filling& t, int x);

// Row-insert w left to right; N records in which cell M grew at each step.
std::pair<StandardTableau, StandardTableau> rsk_forward(const Word& w);

// Recover the unique w with rsk_forward(w) = (m, n).
Word rsk_inverse(const StandardTableau& m, const StandardTableau& n);

// Length of the longest strictly decreasing subsequence. Quadratic DP, kept
// independent of the insertion algorithms so the Schensted-theorem property
// test has two codepaths.
int lds_length(const Word& w);

}  // namespace affmult
