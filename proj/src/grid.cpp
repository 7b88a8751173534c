#include "signedperm/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace signedperm {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(what);
}

std::string entry_requirement(const char* name, int pos, int expected,
                              const SignedPermutation& sigma) {
  std::ostringstream msg;
  msg << name << " requires window entry " << expected << " at position "
      << pos << ", found " << sigma.at(pos);
  return msg.str();
}

}  // namespace

std::vector<Square> board(const SignedPermutation& pi) {
  std::vector<Square> squares;
  squares.reserve(static_cast<size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) {
    const int v = pi.at(i);
    squares.push_back(Square{i, std::abs(v), v > 0 ? 1 : -1});
  }
  return squares;
}

int square_sign(const SignedPermutation& pi, int row, int col) {
  if (row < 1 || row > pi.size() || col < 1 || col > pi.size()) return 0;
  const int v = pi.at(row);
  if (std::abs(v) != col) return 0;
  return v > 0 ? 1 : -1;
}

std::string render_board(const SignedPermutation& pi) {
  std::string out;
  const int n = pi.size();
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out += '\n';
    for (int j = 1; j <= n; ++j) {
      const int s = square_sign(pi, i, j);
      out += s == 0 ? '.' : (s > 0 ? '#' : 'x');
    }
  }
  return out;
}

SignedPermutation insert_square(const SignedPermutation& pi, int row, int col,
                                int sign) {
  const int n = pi.size();
  require(sign == 1 || sign == -1, "insert_square requires sign +1 or -1");
  require(row >= 1 && row <= n + 1 && col >= 1 && col <= n + 1,
          "insert_square point outside [1, n+1]^2");
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    if (i == row) w.push_back(sign * col);
    const int v = pi.at(i);
    const int mag = std::abs(v);
    const int bumped = mag >= col ? mag + 1 : mag;
    w.push_back(v > 0 ? bumped : -bumped);
  }
  if (row == n + 1) w.push_back(sign * col);
  return SignedPermutation(std::move(w));
}

SignedPermutation delete_square(const SignedPermutation& sigma, int row,
                                int col) {
  const int n = sigma.size();
  require(row >= 1 && row <= n && col >= 1 && col <= n,
          "delete_square position outside the board");
  if (std::abs(sigma.at(row)) != col) {
    std::ostringstream msg;
    msg << "delete_square requires magnitude " << col << " at position " << row
        << ", found " << sigma.at(row);
    fail(msg.str());
  }
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n) - 1);
  for (int i = 1; i <= n; ++i) {
    if (i == row) continue;
    const int v = sigma.at(i);
    const int mag = std::abs(v);
    const int dropped = mag > col ? mag - 1 : mag;
    w.push_back(v > 0 ? dropped : -dropped);
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation double_insert_cross(const SignedPermutation& pi, int i,
                                      int j, int sign) {
  require(i != j, "double_insert_cross requires i != j");
  if (i < j) {
    return insert_square(insert_square(pi, i, j, sign), j + 1, i, sign);
  }
  return insert_square(insert_square(pi, i, j, sign), j, i + 1, sign);
}

SignedPermutation double_insert_diag(const SignedPermutation& pi, int i,
                                     PairPattern pattern) {
  switch (pattern) {
    case PairPattern::FixedPos:
      return insert_square(insert_square(pi, i, i, 1), i, i, 1);
    case PairPattern::FixedNeg:
      return insert_square(insert_square(pi, i, i, -1), i, i, -1);
    case PairPattern::SwapPos:
      return insert_square(insert_square(pi, i, i, 1), i + 1, i, 1);
    case PairPattern::SwapNeg:
      return insert_square(insert_square(pi, i, i, -1), i + 1, i, -1);
  }
  fail("double_insert_diag: unknown pattern");
}

SignedPermutation double_delete(const SignedPermutation& sigma,
                                DoubleDeleteCase kind, GridPoint anchor) {
  const int i = anchor.row;
  const int j = anchor.col;
  const int n = sigma.size();
  require(i >= 1 && j >= 1 && std::max(i, j) + 1 <= n,
          "double_delete anchor outside the board");
  switch (kind) {
    case DoubleDeleteCase::CrossPos:
    case DoubleDeleteCase::CrossNeg: {
      require(i != j, "cross double_delete requires an off-diagonal anchor");
      const int s = kind == DoubleDeleteCase::CrossPos ? 1 : -1;
      if (i < j) {
        if (sigma.at(i) != s * (j + 1)) {
          fail(entry_requirement("cross double_delete (i < j)", i, s * (j + 1),
                                 sigma));
        }
        return delete_square(delete_square(sigma, j + 1, i), i, j);
      }
      if (sigma.at(i + 1) != s * j) {
        fail(entry_requirement("cross double_delete (i > j)", i + 1, s * j,
                               sigma));
      }
      return delete_square(delete_square(sigma, j, i + 1), i, j);
    }
    case DoubleDeleteCase::FixedPos:
    case DoubleDeleteCase::FixedNeg: {
      require(i == j, "fixed-pair double_delete requires a diagonal anchor");
      const int s = kind == DoubleDeleteCase::FixedPos ? 1 : -1;
      if (sigma.at(i) != s * i) {
        fail(entry_requirement("fixed-pair double_delete", i, s * i, sigma));
      }
      if (sigma.at(i + 1) != s * (i + 1)) {
        fail(entry_requirement("fixed-pair double_delete", i + 1, s * (i + 1),
                               sigma));
      }
      return delete_square(delete_square(sigma, i, i), i, i);
    }
    case DoubleDeleteCase::SwapPos:
    case DoubleDeleteCase::SwapNeg: {
      require(i == j, "swap-pair double_delete requires a diagonal anchor");
      const int s = kind == DoubleDeleteCase::SwapPos ? 1 : -1;
      if (sigma.at(i) != s * (i + 1)) {
        fail(entry_requirement("swap-pair double_delete", i, s * (i + 1),
                               sigma));
      }
      if (sigma.at(i + 1) != s * i) {
        fail(entry_requirement("swap-pair double_delete", i + 1, s * i,
                               sigma));
      }
      return delete_square(delete_square(sigma, i + 1, i), i, i);
    }
  }
  fail("double_delete: unknown case");
}

}  // namespace signedperm
