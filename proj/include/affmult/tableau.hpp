#pragma once

#include <utility>
#include <vector>

#include "affmult/partition.hpp"

namespace affmult {

// Rows of entries for a straight shape. Valid fillings increase strictly
// along rows and down columns; entries are distinct positive integers but
// need not be 1..n (intermediate insertion states use arbitrary values).
using Filling = std::vector<std::vector<int>>;

bool is_increasing_filling(const Filling& rows);

// Standard Young tableau: an increasing filling whose entries are exactly 1..n.
class StandardTableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(Filling rows);

  const Filling& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  // 0-indexed row containing the entry, -1 if absent.
  int row_of(int entry) const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  Filling rows_;
};

// Skew filling: entries for the cells of outer/inner, row by row; rows[i]
// holds the entries in columns inner_i .. outer_i - 1.
struct SkewTableau {
  Partition outer;
  Partition inner;
  Filling rows;
};

std::vector<StandardTableau> enumerate_syt(const Partition& shape);

// Standard tableaux of the shape whose first column starts with 1..a.
std::vector<StandardTableau> enumerate_anchored_syt(const Partition& shape, int a);

// Jeu de taquin rectification. Holes are processed bottom to top; each slide
// runs until the hole leaves through an outside corner, whose (row, col) is
// logged 1-indexed in processing order. Returns the straight-shape filling.
std::pair<Filling, std::vector<std::pair<int, int>>> rectify(const SkewTableau& skew);

// Delete the entries 1..a (which must occupy the top of the first column),
// rectify, and subtract a from every remaining entry. Returns the rectified
// shape and tableau.
std::pair<Partition, StandardTableau> strip_rectify(const StandardTableau& m, int a);

// Inverse of strip_rectify: rebuild the member of Q_a^mu that strips to v.
StandardTableau unstrip(const StandardTableau& v, const Partition& mu, int a);

}  // namespace affmult
