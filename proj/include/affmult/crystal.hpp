#pragma once

#include <compare>
#include <string>
#include <vector>

namespace affmult {

// Column-depth sequence (y_0, y_1, ...) of an extended Young diagram with
// charge 0: weakly increasing, non-positive, implicit zero tail. Stored
// trimmed, so cols() is the number of columns holding at least one box.
class ExtendedYoungDiagram {
 public:
  ExtendedYoungDiagram() = default;
  explicit ExtendedYoungDiagram(std::vector<int> seq);

  const std::vector<int>& seq() const { return seq_; }
  int cols() const { return static_cast<int>(seq_.size()); }
  int at(int i) const;
  bool empty() const { return seq_.empty(); }
  int box_count() const;

  // sub ⊆ this: every column of sub is at most as deep.
  bool contains(const ExtendedYoungDiagram& sub) const;

  std::string to_string() const;

  auto operator<=>(const ExtendedYoungDiagram&) const = default;

 private:
  std::vector<int> seq_;
};

// Level together with the coefficients c_j of -alpha_j, j = 0..n-1.
struct WeightVector {
  int level = 0;
  std::vector<int> c;

  bool operator==(const WeightVector&) const = default;
};

struct CrystalTuple {
  std::vector<ExtendedYoungDiagram> diagrams;

  int level() const { return static_cast<int>(diagrams.size()); }
  bool operator==(const CrystalTuple&) const = default;
};

// Weight of a single diagram at rank n: level 1, c_j = number of boxes of
// color j, where the box of column i and depth t has color i+1-t mod n.
WeightVector diagram_weight(const ExtendedYoungDiagram& y, int n);

WeightVector tuple_weight(const CrystalTuple& t, int n);

// Coefficient vector of the maximal dominant weight parametrized by
// (ell, a, b) at rank n: c_0 = ell, the positive colors step down from
// ell-b, the negative colors step down from ell-a.
WeightVector lambda_coeffs(int ell, int a, int b, int n);

// Smallest rank for which (ell, a, b) is in the stable range.
int n_min(int ell, int a, int b);

// Highest-weight crystal membership at level k = t.level(): nested
// containment Y_1 ⊇ ... ⊇ Y_k ⊇ Y_1[n] plus, for every column index i,
// some j with (Y_{j+1})_i > (Y_j)_{i+1}, where Y_{k+1} := Y_1[n].
bool is_member(const CrystalTuple& t, int n);

// Brute-force enumeration of the weight space: all k-tuples of nested
// diagrams inside the (ell-a+1) x (ell-b+1) bounding box whose total weight
// matches lambda_coeffs and which pass is_member. Any diagram outside the
// box owns a box of a color the target weight lacks, so the box is a safe
// restriction.
std::vector<CrystalTuple> enumerate_weight_space(int n, int k, int ell, int a, int b);

}  // namespace affmult
