#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "signedperm/dtypes.hpp"

using namespace signedperm;

TEST_SUITE("dtypes") {
  TEST_CASE("insertion type basics") {
    CHECK(insertion_type(SignedPermutation::identity(1), 1, 1, +1,
                         Order::Natural) == InsertionType{0, 0});
    const SignedPermutation pi = SignedPermutation::parse("-3,1,6,-5,2,4");
    const InsertionType t = insertion_type(pi, 3, 5, +1, Order::Natural);
    const SignedPermutation sigma = insert_square(pi, 3, 5, +1);
    CHECK(t.des_shift ==
          des(sigma, Order::Natural) - des(pi, Order::Natural));
    CHECK(t.ides_shift ==
          ides(sigma, Order::Natural) - ides(pi, Order::Natural));
    for (int shift : {t.des_shift, t.ides_shift}) {
      CHECK(shift >= 0);
      CHECK(shift <= 1);
    }
  }

  TEST_CASE("four corners of a filled square") {
    // Positive squares: the NW/SE corner insertions of the same sign change
    // nothing, the NE/SW ones raise both statistics; negative squares behave
    // the same with the roles of the corners swapped under the natural order
    // and identically under the r order.
    for (Order order : {Order::Natural, Order::R}) {
      for (const auto& pi : enumerate_family(3, PermClass::All)) {
        for (const Square& s : board(pi)) {
          const InsertionType nw =
              insertion_type(pi, s.row, s.col, s.sign, order);
          const InsertionType se =
              insertion_type(pi, s.row + 1, s.col + 1, s.sign, order);
          const InsertionType ne =
              insertion_type(pi, s.row, s.col + 1, s.sign, order);
          const InsertionType sw =
              insertion_type(pi, s.row + 1, s.col, s.sign, order);
          const bool flipped = s.sign < 0 && order == Order::Natural;
          const InsertionType same{0, 0};
          const InsertionType both{1, 1};
          CHECK(nw == (flipped ? both : same));
          CHECK(se == (flipped ? both : same));
          CHECK(ne == (flipped ? same : both));
          CHECK(sw == (flipped ? same : both));
        }
      }
    }
  }

  TEST_CASE("insertion type counting goldens") {
    const auto quad = [](const TypeCounts& c) {
      return std::vector<long long>{c.at(0, 0), c.at(1, 0), c.at(0, 1),
                                    c.at(1, 1)};
    };
    const SignedPermutation a = SignedPermutation::parse("2,-4,3,-1,5");
    for (CountMethod m : {CountMethod::BruteForce, CountMethod::ClosedForm}) {
      CHECK(quad(count_insertion_types(a, +1, Order::Natural, m)) ==
            std::vector<long long>{12, 6, 6, 12});
      CHECK(quad(count_insertion_types(a, -1, Order::Natural, m)) ==
            std::vector<long long>{6, 6, 6, 18});
    }
    const SignedPermutation b = SignedPermutation::parse("4,-3,1,-2,-5");
    for (CountMethod m : {CountMethod::BruteForce, CountMethod::ClosedForm}) {
      CHECK(quad(count_insertion_types(b, +1, Order::R, m)) ==
            std::vector<long long>{14, 10, 4, 8});
      CHECK(quad(count_insertion_types(b, -1, Order::R, m)) ==
            std::vector<long long>{9, 9, 3, 15});
    }
    const SignedPermutation id1 = SignedPermutation::identity(1);
    CHECK(quad(count_insertion_types(id1, +1, Order::Natural,
                                     CountMethod::BruteForce)) ==
          std::vector<long long>{2, 0, 0, 2});
    CHECK(quad(count_insertion_types(id1, -1, Order::Natural,
                                     CountMethod::BruteForce)) ==
          std::vector<long long>{0, 0, 0, 4});
  }

  TEST_CASE("closed form equals brute force with full-grid totals") {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& pi : enumerate_family(n, PermClass::All)) {
        for (Order order : {Order::Natural, Order::R}) {
          for (int sign : {+1, -1}) {
            const TypeCounts brute =
                count_insertion_types(pi, sign, order,
                                      CountMethod::BruteForce);
            const TypeCounts closed =
                count_insertion_types(pi, sign, order,
                                      CountMethod::ClosedForm);
            CHECK(brute == closed);
            const long long total = brute.at(0, 0) + brute.at(1, 0) +
                                    brute.at(0, 1) + brute.at(1, 1);
            CHECK(total == static_cast<long long>(n + 1) * (n + 1));
          }
        }
      }
    }
  }

  TEST_CASE("path count goldens") {
    const SignedPermutation a = SignedPermutation::parse("2,-4,3,-1,5");
    for (PathCountMethod m :
         {PathCountMethod::Formula, PathCountMethod::Boundary}) {
      CHECK(count_paths(a, Order::Natural,
                        PathFamily{Axis::Horizontal, 0, +1}, m) == 3);
    }
    for (int n = 1; n <= 4; ++n) {
      const SignedPermutation id = SignedPermutation::identity(n);
      CHECK(count_paths(id, Order::Natural, PathFamily{Axis::Horizontal, 0, +1},
                        PathCountMethod::Formula) == 1);
      CHECK(count_paths(id, Order::Natural, PathFamily{Axis::Horizontal, 1, -1},
                        PathCountMethod::Formula) == n + 1);
    }
    const SignedPermutation neg({-2, -1});
    for (PathCountMethod m :
         {PathCountMethod::Formula, PathCountMethod::Boundary}) {
      CHECK(count_paths(neg, Order::R, PathFamily{Axis::Horizontal, 0, +1},
                        m) == 3);
      CHECK(count_paths(neg, Order::R, PathFamily{Axis::Horizontal, 1, +1},
                        m) == 0);
    }
  }

  TEST_CASE("formula equals boundary classification") {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& pi : enumerate_family(n, PermClass::All)) {
        for (Order order : {Order::Natural, Order::R}) {
          for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
            for (int value : {0, 1}) {
              for (int sign : {+1, -1}) {
                const PathFamily family{axis, value, sign};
                CHECK(count_paths(pi, order, family,
                                  PathCountMethod::Formula) ==
                      count_paths(pi, order, family,
                                  PathCountMethod::Boundary));
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("traced path goldens and validation") {
    const SignedPermutation id2 = SignedPermutation::identity(2);
    CHECK(trace_path(id2, Order::Natural, PathFamily{Axis::Horizontal, 0, +1},
                     1) ==
          std::vector<GridPoint>{{1, 1}, {2, 2}, {3, 3}});
    // Start of the wrong type is rejected.
    CHECK_THROWS_AS(trace_path(id2, Order::Natural,
                               PathFamily{Axis::Horizontal, 1, +1}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(trace_path(id2, Order::Natural,
                               PathFamily{Axis::Horizontal, 0, +1}, 5),
                    std::invalid_argument);
  }

  TEST_CASE("paths partition the grid points of their shift value") {
    for (const auto& pi : enumerate_family(3, PermClass::All)) {
      const int n = pi.size();
      for (Order order : {Order::Natural, Order::R}) {
        for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
          for (int sign : {+1, -1}) {
            std::set<std::pair<int, int>> covered;
            long long points = 0;
            for (int value : {0, 1}) {
              const PathFamily family{axis, value, sign};
              for (int start = 1; start <= n + 1; ++start) {
                const int row = axis == Axis::Horizontal ? start : 1;
                const int col = axis == Axis::Horizontal ? 1 : start;
                const InsertionType t =
                    insertion_type(pi, row, col, sign, order);
                const int shift =
                    axis == Axis::Horizontal ? t.des_shift : t.ides_shift;
                if (shift != value) continue;
                for (const GridPoint& p :
                     trace_path(pi, order, family, start)) {
                  covered.insert({p.row, p.col});
                  ++points;
                  const InsertionType u =
                      insertion_type(pi, p.row, p.col, sign, order);
                  const int here = axis == Axis::Horizontal ? u.des_shift
                                                            : u.ides_shift;
                  CHECK(here == value);
                }
              }
            }
            // Every grid point lies on exactly one path of its own value.
            CHECK(points == static_cast<long long>(n + 1) * (n + 1));
            CHECK(covered.size() == static_cast<size_t>((n + 1) * (n + 1)));
          }
        }
      }
    }
  }

  TEST_CASE("horizontal zero paths cover exactly the zero-shift points") {
    const SignedPermutation pi = SignedPermutation::parse("2,-4,3,-1,5");
    std::set<std::pair<int, int>> covered;
    for (int start = 1; start <= 6; ++start) {
      const InsertionType t = insertion_type(pi, start, 1, +1, Order::Natural);
      if (t.des_shift != 0) continue;
      for (const GridPoint& p : trace_path(
               pi, Order::Natural, PathFamily{Axis::Horizontal, 0, +1},
               start)) {
        covered.insert({p.row, p.col});
      }
    }
    std::set<std::pair<int, int>> zero_points;
    for (int r = 1; r <= 6; ++r) {
      for (int c = 1; c <= 6; ++c) {
        if (insertion_type(pi, r, c, +1, Order::Natural).des_shift == 0) {
          zero_points.insert({r, c});
        }
      }
    }
    CHECK(zero_points.size() == 18);  // 12 of type (0,0) plus 6 of type (0,1)
    CHECK(covered == zero_points);
  }

  TEST_CASE("value-one negative paths never step through positive squares") {
    for (const auto& pi : enumerate_family(3, PermClass::All)) {
      for (int start = 1; start <= 4; ++start) {
        const InsertionType t = insertion_type(pi, start, 1, -1,
                                               Order::Natural);
        if (t.des_shift != 1) continue;
        const auto path = trace_path(
            pi, Order::Natural, PathFamily{Axis::Horizontal, 1, -1}, start);
        for (size_t k = 0; k + 1 < path.size(); ++k) {
          const bool diagonal_step = path[k + 1].row == path[k].row + 1 &&
                                     path[k + 1].col == path[k].col + 1;
          if (diagonal_step) {
            CHECK(square_sign(pi, path[k].row, path[k].col) == -1);
          }
        }
      }
    }
  }

  TEST_CASE("diagonal touches") {
    const SignedPermutation id2 = SignedPermutation::identity(2);
    const auto touches = diagonal_touches(id2, Order::Natural, 0, +1);
    REQUIRE(touches.size() == 1);
    CHECK(touches[0].point == GridPoint{1, 1});
    CHECK_THROWS_AS(
        diagonal_touches(SignedPermutation({2, 3, 1}), Order::Natural, 0, +1),
        std::invalid_argument);
    // One touch per path; value 0 over both signs gives 2 des + 1 of them.
    for (int n = 1; n <= 4; ++n) {
      for (const auto& pi : enumerate_family(n, PermClass::Involution)) {
        const auto plus = diagonal_touches(pi, Order::Natural, 0, +1);
        const auto minus = diagonal_touches(pi, Order::Natural, 0, -1);
        CHECK(static_cast<long long>(plus.size() + minus.size()) ==
              2 * des(pi, Order::Natural) + 1);
        for (const auto& touch : plus) {
          CHECK((touch.point.row == touch.point.col ||
                 touch.point.row == touch.point.col + 1));
        }
      }
    }
    // The touch points of a known involution stay on or under the diagonal.
    const SignedPermutation v({1, -3, -2, 4, 5});
    for (int value : {0, 1}) {
      for (int sign : {+1, -1}) {
        for (const auto& touch :
             diagonal_touches(v, Order::Natural, value, sign)) {
          CHECK((touch.point.row == touch.point.col ||
                 touch.point.row == touch.point.col + 1));
        }
      }
    }
  }

  TEST_CASE("random sampling is reproducible and valid") {
    std::mt19937_64 a(20240811ull);
    std::mt19937_64 b(20240811ull);
    for (int rep = 0; rep < 50; ++rep) {
      const SignedPermutation x = random_signed_permutation(6, a);
      const SignedPermutation y = random_signed_permutation(6, b);
      CHECK(x == y);
      CHECK(x.size() == 6);
    }
    std::mt19937_64 c(1ull);
    bool saw_negative = false;
    for (int rep = 0; rep < 20; ++rep) {
      if (random_signed_permutation(5, c).negative_count() > 0) {
        saw_negative = true;
      }
    }
    CHECK(saw_negative);
  }

  TEST_CASE("mirror-point symmetry on involution grids") {
    // On an involution's grid the insertion types at (i, j) and (j, i) are
    // component swaps of each other, because inserting at the mirror point of
    // the transposed (= identical) board produces the inverse window.  On the
    // diagonal this forces des-shift == ides-shift.
    for (int n = 0; n <= 4; ++n) {
      for (const auto& pi : enumerate_family(n, PermClass::Involution)) {
        for (Order order : {Order::Natural, Order::R}) {
          for (int sign : {+1, -1}) {
            for (int i = 1; i <= n + 1; ++i) {
              for (int j = i; j <= n + 1; ++j) {
                const InsertionType ij = insertion_type(pi, i, j, sign, order);
                const InsertionType ji = insertion_type(pi, j, i, sign, order);
                CHECK(ji.des_shift == ij.ides_shift);
                CHECK(ji.ides_shift == ij.des_shift);
                if (i == j) CHECK(ij.des_shift == ij.ides_shift);
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("double insertions shift the statistics by the anchor type") {
    // Cross insertions at (i, j), i != j, change des by the sum of the two
    // components of the matching-sign type at (i, j).  Diagonal pair patterns
    // change des by the diagonal type's component, plus one for the pattern
    // that starts a new descent; which negative pattern that is depends on
    // the comparison order.
    for (int n = 0; n <= 3; ++n) {
      for (const auto& pi : enumerate_family(n, PermClass::Involution)) {
        for (Order order : {Order::Natural, Order::R}) {
          const int base = des(pi, order);
          for (int i = 1; i <= n + 1; ++i) {
            for (int j = 1; j <= n + 1; ++j) {
              if (i == j) continue;
              for (int sign : {+1, -1}) {
                const InsertionType t = insertion_type(pi, i, j, sign, order);
                const SignedPermutation tau =
                    double_insert_cross(pi, i, j, sign);
                CHECK(des(tau, order) == base + t.des_shift + t.ides_shift);
              }
            }
          }
          for (int i = 1; i <= n + 1; ++i) {
            const int p = insertion_type(pi, i, i, +1, order).des_shift;
            const int q = insertion_type(pi, i, i, -1, order).des_shift;
            const int fixed_pos =
                des(double_insert_diag(pi, i, PairPattern::FixedPos), order);
            const int swap_pos =
                des(double_insert_diag(pi, i, PairPattern::SwapPos), order);
            const int fixed_neg =
                des(double_insert_diag(pi, i, PairPattern::FixedNeg), order);
            const int swap_neg =
                des(double_insert_diag(pi, i, PairPattern::SwapNeg), order);
            CHECK(fixed_pos == base + p);
            CHECK(swap_pos == base + p + 1);
            if (order == Order::Natural) {
              CHECK(fixed_neg == base + q + 1);
              CHECK(swap_neg == base + q);
            } else {
              CHECK(fixed_neg == base + q);
              CHECK(swap_neg == base + q + 1);
            }
          }
        }
      }
    }
  }
}
