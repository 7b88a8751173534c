#include "signedperm/dtypes.hpp"

#include <algorithm>
#include <sstream>

namespace signedperm {

InsertionType insertion_type(const SignedPermutation& pi, int row, int col,
                             int sign, Order order) {
  const SignedPermutation sigma = insert_square(pi, row, col, sign);
  return InsertionType{des(sigma, order) - des(pi, order),
                       ides(sigma, order) - ides(pi, order)};
}

TypeCounts count_insertion_types(const SignedPermutation& pi, int sign,
                                 Order order, CountMethod method) {
  const int n = pi.size();
  TypeCounts tc;
  if (method == CountMethod::BruteForce) {
    for (int row = 1; row <= n + 1; ++row) {
      for (int col = 1; col <= n + 1; ++col) {
        const InsertionType t = insertion_type(pi, row, col, sign, order);
        ++tc.count[static_cast<size_t>(t.des_shift)]
                  [static_cast<size_t>(t.ides_shift)];
      }
    }
    return tc;
  }
  const long long d = des(pi, order);
  const long long e = ides(pi, order);
  const long long neg = pi.negative_count();
  if (sign > 0) {
    tc.count[0][0] = (d + 1) * (e + 1) - neg + n;
    tc.count[1][0] = (e + 1) * (n - d) + neg - n;
    tc.count[0][1] = (d + 1) * (n - e) + neg - n;
    tc.count[1][1] = (n - d) * (n - e) - neg + n;
  } else {
    tc.count[0][0] = d * e + neg;
    tc.count[1][0] = e * (n - d + 1) - neg;
    tc.count[0][1] = d * (n - e + 1) - neg;
    tc.count[1][1] = (n - d + 1) * (n - e + 1) + neg;
  }
  return tc;
}

namespace {

// Shift of a boundary/interior grid point along the axis that keys the
// family: the des change for horizontal families, the ides change for
// vertical ones.
int axis_shift(const SignedPermutation& pi, Order order, Axis axis,
               GridPoint p, int sign) {
  const InsertionType t = insertion_type(pi, p.row, p.col, sign, order);
  return axis == Axis::Horizontal ? t.des_shift : t.ides_shift;
}

// Whether the family's paths prefer the southeast diagonal step (as opposed
// to northeast for horizontal / southwest for vertical families).
bool prefers_southeast(PathFamily family, Order order) {
  bool use_se = family.value == 0;
  if (family.sign < 0 && order == Order::Natural) use_se = !use_se;
  return use_se;
}

GridPoint next_point(const SignedPermutation& pi, Order order,
                     PathFamily family, GridPoint p) {
  const bool use_se = prefers_southeast(family, order);
  if (family.axis == Axis::Horizontal) {
    // March rightward; diagonal steps fire on squares of the family's sign.
    if (use_se && square_sign(pi, p.row, p.col) == family.sign) {
      return GridPoint{p.row + 1, p.col + 1};
    }
    if (!use_se && square_sign(pi, p.row - 1, p.col) == family.sign) {
      return GridPoint{p.row - 1, p.col + 1};
    }
    return GridPoint{p.row, p.col + 1};
  }
  // March downward.
  if (use_se && square_sign(pi, p.row, p.col) == family.sign) {
    return GridPoint{p.row + 1, p.col + 1};
  }
  if (!use_se && square_sign(pi, p.row, p.col - 1) == family.sign) {
    return GridPoint{p.row + 1, p.col - 1};
  }
  return GridPoint{p.row + 1, p.col};
}

}  // namespace

long long count_paths(const SignedPermutation& pi, Order order,
                      PathFamily family, PathCountMethod method) {
  const int n = pi.size();
  if (method == PathCountMethod::Formula) {
    const long long stat = family.axis == Axis::Horizontal ? des(pi, order)
                                                           : ides(pi, order);
    if (family.value == 0) return family.sign > 0 ? stat + 1 : stat;
    return family.sign > 0 ? n - stat : n - stat + 1;
  }
  // Each path starts at exactly one boundary point: (i, 1) for horizontal
  // families, (1, j) for vertical ones.
  long long count = 0;
  for (int k = 1; k <= n + 1; ++k) {
    const GridPoint start = family.axis == Axis::Horizontal
                                ? GridPoint{k, 1}
                                : GridPoint{1, k};
    if (axis_shift(pi, order, family.axis, start, family.sign) ==
        family.value) {
      ++count;
    }
  }
  return count;
}

std::vector<GridPoint> trace_path(const SignedPermutation& pi, Order order,
                                  PathFamily family, int start) {
  const int n = pi.size();
  if (start < 1 || start > n + 1) {
    throw std::invalid_argument("trace_path start outside [1, n+1]");
  }
  GridPoint p = family.axis == Axis::Horizontal ? GridPoint{start, 1}
                                                : GridPoint{1, start};
  if (axis_shift(pi, order, family.axis, p, family.sign) != family.value) {
    std::ostringstream msg;
    msg << "trace_path start " << start << " is not on a " << family.value
        << (family.axis == Axis::Horizontal ? "_h" : "_v")
        << (family.sign > 0 ? "+" : "-") << " path";
    throw std::invalid_argument(msg.str());
  }
  std::vector<GridPoint> points{p};
  while ((family.axis == Axis::Horizontal ? p.col : p.row) < n + 1) {
    p = next_point(pi, order, family, p);
    points.push_back(p);
  }
  return points;
}

std::vector<DiagonalTouch> diagonal_touches(const SignedPermutation& pi,
                                            Order order, int value, int sign) {
  if (!pi.is_involution()) {
    throw std::invalid_argument("diagonal_touches requires an involution");
  }
  const PathFamily family{Axis::Horizontal, value, sign};
  std::vector<DiagonalTouch> touches;
  for (int start = 1; start <= pi.size() + 1; ++start) {
    if (axis_shift(pi, order, Axis::Horizontal, GridPoint{start, 1},
                   sign) != value) {
      continue;
    }
    const std::vector<GridPoint> points = trace_path(pi, order, family, start);
    bool found = false;
    for (size_t k = 0; k < points.size() && !found; ++k) {
      const GridPoint p = points[k];
      if (p.row == p.col) {
        // The path passes through an on-diagonal grid point.
        touches.push_back(DiagonalTouch{start, p});
        found = true;
      } else if (p.row == p.col + 1 && k + 1 < points.size() &&
                 points[k + 1].row == p.row - 1) {
        // A northeast step from (c+1, c) crosses the diagonal square (c, c);
        // the touch is recorded at the step's starting corner.
        touches.push_back(DiagonalTouch{start, p});
        found = true;
      }
    }
    if (!found) {
      throw std::logic_error("a horizontal path of an involution never met "
                             "the main diagonal");
    }
  }
  return touches;
}

SignedPermutation random_signed_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  std::uniform_int_distribution<int> coin(0, 1);
  for (auto& v : w) {
    if (coin(rng) == 1) v = -v;
  }
  return SignedPermutation(std::move(w));
}

}  // namespace signedperm
