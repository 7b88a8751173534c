#pragma once

#include <string>
#include <vector>

#include "signedperm/core.hpp"

namespace signedperm {

/// A lattice point of the (n+1) x (n+1) grid of corners of an n x n board,
/// 1-based, row counted from the top.
struct GridPoint {
  int row = 0;
  int col = 0;
  friend bool operator==(GridPoint, GridPoint) = default;
};

/// A filled cell of the board: row i, column |pi_i|, sign of pi_i.
struct Square {
  int row = 0;
  int col = 0;
  int sign = 0;  // +1 or -1
  friend bool operator==(Square, Square) = default;
};

/// The board of pi: one filled square per row, <i, |pi_i|> with sign(pi_i).
/// The board of an involution is symmetric across the main diagonal, and the
/// board of pi^{-1} is the transpose of the board of pi.
std::vector<Square> board(const SignedPermutation& pi);

/// Sign of the square at (row, col): +1, -1, or 0 when empty.
int square_sign(const SignedPermutation& pi, int row, int col);

/// ASCII board, one row per line: '.' empty, '#' positive, 'x' negative.
std::string render_board(const SignedPermutation& pi);

/// Single insertion at grid point (row, col) with the given sign, mapping
/// B_n -> B_{n+1}: the new window has value sign*col at position row; every
/// other entry keeps its sign and its magnitude is bumped by one when >= col.
SignedPermutation insert_square(const SignedPermutation& pi, int row, int col,
                                int sign);

/// Inverse of insert_square: removes row `row` (which must hold magnitude
/// `col`) and decrements every magnitude > col.
SignedPermutation delete_square(const SignedPermutation& sigma, int row,
                                int col);

/// Symmetric double insertion at the mirror pair of points (i, j) and (j, i),
/// i != j, preserving involutions.  Adds two positive squares for sign = +1,
/// two negative squares for sign = -1.
SignedPermutation double_insert_cross(const SignedPermutation& pi, int i,
                                      int j, int sign);

/// Patterns produced on the main diagonal by the double insertions at grid
/// point (i, i): a pair of adjacent fixed magnitudes (sigma_i = i,
/// sigma_{i+1} = i+1, or both negated) or an adjacent 2-cycle
/// (sigma_i = i+1, sigma_{i+1} = i, or both negated).
enum class PairPattern { FixedPos, FixedNeg, SwapPos, SwapNeg };

/// Double insertion at the diagonal grid point (i, i), preserving involutions.
SignedPermutation double_insert_diag(const SignedPermutation& pi, int i,
                                     PairPattern pattern);

/// Which double insertion a double deletion undoes.  Cross cases carry the
/// sign of the removed pair; diagonal cases name the removed pattern.
enum class DoubleDeleteCase {
  CrossPos,
  CrossNeg,
  FixedPos,
  FixedNeg,
  SwapPos,
  SwapNeg
};

/// Inverse of the double insertions.  `anchor` is the grid point (i, j) (with
/// i == j for diagonal patterns) at which the corresponding insertion was
/// performed.  Preconditions on sigma's window are validated and a violation
/// throws std::invalid_argument naming the failed requirement.
SignedPermutation double_delete(const SignedPermutation& sigma,
                                DoubleDeleteCase kind, GridPoint anchor);

}  // namespace signedperm
