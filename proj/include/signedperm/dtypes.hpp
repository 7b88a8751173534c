#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "signedperm/grid.hpp"
#include "signedperm/statistics.hpp"

namespace signedperm {

/// Effect of a single insertion on the descent statistics: how much des and
/// ides grow (each change is always 0 or 1).
struct InsertionType {
  int des_shift = 0;
  int ides_shift = 0;
  friend bool operator==(InsertionType, InsertionType) = default;
};

/// Type of the insertion at grid point (row, col) with the given sign,
/// computed from the definition (insert, then diff the statistics).
InsertionType insertion_type(const SignedPermutation& pi, int row, int col,
                             int sign, Order order);

/// Counts of the four insertion types over all (n+1)^2 grid points for one
/// sign.  count[p][q] is the number of points whose type is (p, q).
struct TypeCounts {
  std::array<std::array<long long, 2>, 2> count{};
  long long at(int p, int q) const { return count[p][q]; }
  friend bool operator==(const TypeCounts&, const TypeCounts&) = default;
};

enum class CountMethod { BruteForce, ClosedForm };

/// Tally of insertion types for one sign, either by inserting at every grid
/// point or by the closed forms in n, des, ides and the negative count.
TypeCounts count_insertion_types(const SignedPermutation& pi, int sign,
                                 Order order, CountMethod method);

/// Boundary-to-boundary monotone lattice paths.  Grid points with the same
/// des-shift (for Horizontal) or ides-shift (for Vertical) under one
/// insertion sign organize into disjoint paths; a horizontal path starts at
/// the left boundary (i, 1) and ends in column n+1, a vertical path starts at
/// the top boundary (1, j) and ends in row n+1.
enum class Axis { Horizontal, Vertical };

struct PathFamily {
  Axis axis = Axis::Horizontal;
  int value = 0;  // the constant des-shift (h) or ides-shift (v), 0 or 1
  int sign = +1;  // insertion sign classifying the points
};

enum class PathCountMethod { Formula, Boundary };

/// Number of paths in the family: by the closed formulas in des/ides, or by
/// classifying the boundary starting points.
long long count_paths(const SignedPermutation& pi, Order order,
                      PathFamily family, PathCountMethod method);

/// The full path starting at boundary index `start` (the row i of (i, 1) for
/// horizontal families, the column j of (1, j) for vertical ones).  Throws
/// std::invalid_argument when the start point's shift does not match
/// family.value.
std::vector<GridPoint> trace_path(const SignedPermutation& pi, Order order,
                                  PathFamily family, int start);

/// First meeting of a horizontal path with the main diagonal: either an
/// on-diagonal grid point (i, i), or the corner (i+1, i) from which the path
/// crosses a same-sign diagonal square with an up-right step.  Defined for
/// involutions, where every horizontal path meets the diagonal exactly once
/// this way.
struct DiagonalTouch {
  int path_start = 0;  // boundary row the path starts from (the path id)
  GridPoint point;
  friend bool operator==(const DiagonalTouch&, const DiagonalTouch&) = default;
};

/// Touch points of all paths of the horizontal family with the given value
/// and sign, ordered by starting row.  Requires pi to be an involution.
std::vector<DiagonalTouch> diagonal_touches(const SignedPermutation& pi,
                                            Order order, int value, int sign);

/// Uniformly random element of B_n (independent magnitudes shuffle and signs).
SignedPermutation random_signed_permutation(int n, std::mt19937_64& rng);

}  // namespace signedperm
