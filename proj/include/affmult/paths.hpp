#pragma once

#include <string>
#include <utility>
#include <vector>

#include "affmult/crystal.hpp"
#include "affmult/partition.hpp"
#include "affmult/tableau.hpp"

namespace affmult {

// The ell x ell square with, in each of the bottom a-1 rows, the boxes left
// of the 0-diagonal removed, and in each of the rightmost b-1 columns, the
// boxes above it. Rows and columns are 1-indexed from the upper left; the
// box (r, c) has color c - r, kept unreduced.
struct Region {
  int ell = 0;
  int a = 0;
  int b = 0;

  bool has_box(int row, int col) const;
  int color(int row, int col) const { return col - row; }
  int color_count(int j) const;
  int total_boxes() const;
};

Region build_region(int ell, int a, int b);

enum class PathKind { lower, upper };

// k-1 monotone lattice paths on the region. Lower paths run from
// (0, -(ell-a+1)) to the -1-diagonal in ell-a moves over {R, U}; upper
// paths from (ell-b+1, 0) to the +1-diagonal in ell-b moves over {D, L}.
// strip_counts holds t_i^j for i = 1..k-1 (row i-1), j = -1..-(ell-a)
// for lower and +1..+(ell-b) for upper (column |j|-1); t_0^j is always
// color_count(j) minus the column sum.
struct PathSequence {
  PathKind kind = PathKind::lower;
  std::vector<std::string> moves;
  std::vector<std::vector<int>> strip_counts;

  int paths() const { return static_cast<int>(moves.size()); }
  int length() const { return moves.empty() ? 0 : static_cast<int>(moves[0].size()); }
};

struct PathPair {
  PathSequence lower;
  PathSequence upper;
};

// Validates the move words and fills in strip_counts.
PathSequence make_sequence(PathKind kind, std::vector<std::string> moves, const Region& region);

// The admissibility criteria: the first path stays weakly below the
// diagonal through its start point, strips nest, each strip fits under the
// previous one and the remaining room, and strips weakly grow toward the
// +-1 diagonal.
bool is_admissible(const PathSequence& seq, const Region& region, int k);

// Type of the sequence: the partition (t_0, t_1, ..., t_{k-1}) of the
// +-1-colored strip sizes.
Partition sequence_type(const PathSequence& seq, const Region& region);

// Tableau-to-paths map: path i moves away from the diagonal at step j
// exactly when entry j sits in rows 2..i+1 of x. The kind argument picks
// the side; shapes of weight ell-a (lower) or ell-b (upper) are accepted.
PathSequence f_map(const StandardTableau& x, int k, const Region& region, PathKind kind);

// Inverse of f_map: entry j goes to row 1 when no path moves away at step
// j, otherwise to row s+1 for the first such path s.
StandardTableau g_map(const PathSequence& seq);

// All admissible sequences of the given type, by direct search over move
// words; deliberately not implemented via f_map so the two can be compared.
std::vector<PathSequence> enumerate_admissible(const Region& region, int k,
                                               const Partition& type, PathKind kind);

// All (lower, upper) pairs whose types decrement mu by a and b entries.
std::vector<PathPair> enumerate_pairs(const Region& region, int k, const Partition& mu);

// Assembles the k-tuple of extended Young diagrams: Y_{i+1} collects the
// strip between paths i-1 and i on both sides plus mu_{i+1} zero-colored
// boxes; Y_1 takes the remainder.
CrystalTuple paths_to_crystal(const PathPair& pair, const Partition& mu, const Region& region,
                              int k, int n);

// Inverse construction, recovering the pair and the zero-color partition.
std::pair<PathPair, Partition> crystal_to_paths(const CrystalTuple& t, const Region& region,
                                                int k);

}  // namespace affmult
