// Acceptance battery: one PASS/FAIL line per criterion, exact integer
// comparisons throughout.  Returns the number of failed criteria.

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "signedperm/bijections.hpp"
#include "signedperm/core.hpp"
#include "signedperm/dtypes.hpp"
#include "signedperm/genfun.hpp"
#include "signedperm/grid.hpp"
#include "signedperm/recurrences.hpp"
#include "signedperm/statistics.hpp"

using namespace signedperm;

namespace {

constexpr Order kOrders[] = {Order::Natural, Order::R};

template <typename... Parts>
std::string msg(Parts&&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int run_criterion(int index, const char* name,
                  const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, msg("unexpected exception: ", e.what()));
  }
  if (c.ok) {
    std::cout << "PASS criterion-" << index << " " << name << "\n";
    return 0;
  }
  std::cout << "FAIL criterion-" << index << " " << name << " [" << c.detail
            << "]\n";
  return 1;
}

// ---------------------------------------------------------------------------
// criterion 1: the four-term joint recurrence reproduces brute-force
// triangles in both orders, from the size-1 seed.

void two_sided_recurrence(Checker& c) {
  for (Order order : kOrders) {
    const RecurrenceReport rep =
        check_two_sided_recurrence(order, 2, 6, enumeration_limit());
    c.expect(rep.ok, msg(rep.id, ": ", rep.witness));
  }
  const std::vector<std::vector<long long>> seed = {{1, 0}, {0, 1}};
  c.expect(two_sided_by_recurrence(1) == seed, "size-1 seed triangle");
}

// ---------------------------------------------------------------------------
// criterion 2: the two comparison orders equidistribute the joint statistic
// on the full group and the descent statistic on involutions, but not on
// fixed-point-free involutions.

void order_equidistribution(Checker& c) {
  for (int n = 1; n <= 6; ++n) {
    const Triangle a = two_sided_triangle(n, Order::Natural);
    const Triangle b = two_sided_triangle(n, Order::R);
    c.expect(a.cell == b.cell, msg("joint triangles differ at n=", n));
  }
  for (int n = 1; n <= 8; ++n) {
    const auto a = descent_vector(n, PermClass::Involution, Order::Natural);
    const auto b = descent_vector(n, PermClass::Involution, Order::R);
    c.expect(a == b, msg("involution vectors differ at n=", n));
  }
  const std::vector<long long> fpf_nat = {0, 2, 0};
  const std::vector<long long> fpf_r = {0, 1, 1};
  c.expect(descent_vector(2, PermClass::FpfInvolution, Order::Natural) ==
               fpf_nat,
           "fpf size-2 vector, natural order");
  c.expect(descent_vector(2, PermClass::FpfInvolution, Order::R) == fpf_r,
           "fpf size-2 vector, r order");
}

// ---------------------------------------------------------------------------
// criterion 3: the five-term involution recurrence against brute force.

void involution_recurrence(Checker& c) {
  for (Order order : kOrders) {
    const RecurrenceReport rep =
        check_involution_recurrence(order, 3, 9, enumeration_limit());
    c.expect(rep.ok, msg(rep.id, ": ", rep.witness));
  }
  const std::vector<long long> i2 = {1, 4, 1};
  const std::vector<long long> i3 = {1, 9, 9, 1};
  c.expect(involution_by_recurrence(2) == i2, "size-2 vector");
  c.expect(involution_by_recurrence(3) == i3, "size-3 vector");
}

// ---------------------------------------------------------------------------
// criterion 4: the order-specific three-term fixed-point-free recurrences.

void fpf_recurrence(Checker& c) {
  for (Order order : kOrders) {
    const RecurrenceReport rep =
        check_fpf_recurrence(order, 4, 10, enumeration_limit());
    c.expect(rep.ok, msg(rep.id, ": ", rep.witness));
  }
  const std::vector<long long> j4_nat = {0, 3, 6, 3, 0};
  const std::vector<long long> j4_r = {0, 1, 5, 5, 1};
  c.expect(fpf_by_recurrence(4, Order::Natural) == j4_nat,
           "size-4 vector, natural order");
  c.expect(fpf_by_recurrence(4, Order::R) == j4_r, "size-4 vector, r order");
}

// ---------------------------------------------------------------------------
// criterion 5: path counts by formula equal path counts by boundary
// classification for every element, both orders, all eight families.

void path_counting(Checker& c) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& pi : enumerate_family(n, PermClass::All)) {
      for (Order order : kOrders) {
        for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
          for (int value : {0, 1}) {
            for (int sign : {+1, -1}) {
              const PathFamily family{axis, value, sign};
              const long long f =
                  count_paths(pi, order, family, PathCountMethod::Formula);
              const long long b =
                  count_paths(pi, order, family, PathCountMethod::Boundary);
              if (f != b) {
                c.expect(false,
                         msg("window ", pi.str(), " order ", order_name(order),
                             " axis ", axis == Axis::Horizontal ? 'h' : 'v',
                             " value ", value, " sign ", sign, ": formula ", f,
                             " boundary ", b));
              }
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// criterion 6: insertion-type tallies by closed form equal brute force,
// exhaustively at small sizes and on seeded random samples at larger ones.

std::array<long long, 4> quad(const TypeCounts& t) {
  return {t.at(0, 0), t.at(1, 0), t.at(0, 1), t.at(1, 1)};
}

void check_type_counts(Checker& c, const SignedPermutation& pi) {
  for (Order order : kOrders) {
    for (int sign : {+1, -1}) {
      const TypeCounts brute =
          count_insertion_types(pi, sign, order, CountMethod::BruteForce);
      const TypeCounts closed =
          count_insertion_types(pi, sign, order, CountMethod::ClosedForm);
      if (!(brute == closed)) {
        c.expect(false, msg("window ", pi.str(), " order ", order_name(order),
                            " sign ", sign, ": closed form disagrees"));
      }
    }
  }
}

void insertion_type_counts(Checker& c) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& pi : enumerate_family(n, PermClass::All)) {
      check_type_counts(c, pi);
    }
  }
  std::mt19937_64 rng(20240811ull);
  for (int n = 5; n <= 8; ++n) {
    for (int rep = 0; rep < 1000; ++rep) {
      check_type_counts(c, random_signed_permutation(n, rng));
    }
  }
  const SignedPermutation a({2, -4, 3, -1, 5});
  const SignedPermutation b({4, -3, 1, -2, -5});
  for (CountMethod method : {CountMethod::BruteForce, CountMethod::ClosedForm}) {
    const std::array<long long, 4> a_plus = {12, 6, 6, 12};
    const std::array<long long, 4> a_minus = {6, 6, 6, 18};
    const std::array<long long, 4> b_plus = {14, 10, 4, 8};
    const std::array<long long, 4> b_minus = {9, 9, 3, 15};
    c.expect(quad(count_insertion_types(a, +1, Order::Natural, method)) ==
                 a_plus,
             "natural-order positive tally of the first reference window");
    c.expect(quad(count_insertion_types(a, -1, Order::Natural, method)) ==
                 a_minus,
             "natural-order negative tally of the first reference window");
    c.expect(quad(count_insertion_types(b, +1, Order::R, method)) == b_plus,
             "r-order positive tally of the second reference window");
    c.expect(quad(count_insertion_types(b, -1, Order::R, method)) == b_minus,
             "r-order negative tally of the second reference window");
  }
}

// ---------------------------------------------------------------------------
// criterion 7: the insertion bijections round-trip on all three families,
// the per-class source tallies match the recurrence coefficients bucket by
// bucket, and the documented inverse-map examples come out exactly.

void check_report(Checker& c, const BijectionReport& rep,
                  unsigned long long want) {
  const char* fam = family_name(rep.family);
  c.expect(rep.ok, msg(fam, " n=", rep.n, " order ", order_name(rep.order),
                       ": ", rep.witness));
  c.expect(rep.sources == want && rep.targets == want,
           msg(fam, " n=", rep.n, " order ", order_name(rep.order),
               ": sources ", rep.sources, " targets ", rep.targets,
               " expected ", want));
}

void two_sided_slots(Checker& c, Order order, int n) {
  const Triangle tri = two_sided_triangle(n - 1, order);
  std::map<std::tuple<int, int, int>, long long> actual;
  for (const auto& s : enumerate_sources(BijectionFamily::TwoSided, order, n)) {
    const int a = des(s.perm, order);
    const int b = ides(s.perm, order);
    ++actual[{static_cast<int>(s.cls), a, b}];
  }
  std::map<std::tuple<int, int, int>, long long> expected;
  for (int a = 0; a <= n - 1; ++a) {
    for (int b = 0; b <= n - 1; ++b) {
      const long long count = tri.cell[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (count == 0) continue;
      const long long nn = n;
      const long long d00 = (nn + a + b + 2ll * a * b) * count;
      const long long d01 = ((2 * nn - 1) * a - (2ll * a + 1) * b) * count;
      const long long d10 = ((2 * nn - 1) * b - (2ll * b + 1) * a) * count;
      const long long d11 =
          (2 * nn * nn - nn - (2 * nn - 1) * (a + b) + 2ll * a * b) * count;
      if (d00) expected[{static_cast<int>(SourceClass::D00), a, b}] = d00;
      if (d01) expected[{static_cast<int>(SourceClass::D01), a, b}] = d01;
      if (d10) expected[{static_cast<int>(SourceClass::D10), a, b}] = d10;
      if (d11) expected[{static_cast<int>(SourceClass::D11), a, b}] = d11;
    }
  }
  if (actual != expected) {
    c.expect(false, msg("two-sided class tallies differ from the recurrence "
                        "coefficients at n=",
                        n, " order ", order_name(order)));
  }
}

void involution_slots(Checker& c, Order order, int n) {
  const auto prev1 = descent_vector(n - 1, PermClass::Involution, order);
  const auto prev2 = descent_vector(n - 2, PermClass::Involution, order);
  std::map<std::tuple<int, int>, long long> actual;
  for (const auto& s :
       enumerate_sources(BijectionFamily::Involution, order, n)) {
    ++actual[{static_cast<int>(s.cls), des(s.perm, order)}];
  }
  std::map<std::tuple<int, int>, long long> expected;
  auto put = [&expected](SourceClass cls, int a, long long v) {
    if (v != 0) expected[{static_cast<int>(cls), a}] = v;
  };
  const long long nn = n;
  for (int a = 0; a <= n - 1; ++a) {
    const long long i1 =
        a < static_cast<int>(prev1.size()) ? prev1[static_cast<size_t>(a)] : 0;
    const long long i2 =
        a < static_cast<int>(prev2.size()) ? prev2[static_cast<size_t>(a)] : 0;
    put(SourceClass::E1, a, (2ll * a + 1) * i1);
    put(SourceClass::E2, a, (2 * nn - 2 * a - 1) * i1);
    put(SourceClass::E3, a, (nn - 1 + 2ll * a * (a + 1)) * i2);
    put(SourceClass::E4, a, (2 * (nn - 1) + 4ll * (nn - a - 2) * a) * i2);
    put(SourceClass::E5, a,
        ((2 * nn - 3) * (nn - 1) + 2ll * a * (a - 2 * nn + 3)) * i2);
  }
  if (actual != expected) {
    c.expect(false, msg("involution class tallies differ from the recurrence "
                        "coefficients at n=",
                        n, " order ", order_name(order)));
  }
}

void fpf_slots(Checker& c, Order order, int two_n) {
  std::map<std::tuple<int, int, int>, long long> tally;
  for (const auto& s :
       enumerate_sources(BijectionFamily::FpfInvolution, order, two_n)) {
    ++tally[{static_cast<int>(s.cls), s.sign, des(s.perm, order)}];
  }
  auto cnt = [&tally](SourceClass cls, int sign, int a) -> long long {
    const auto it = tally.find({static_cast<int>(cls), sign, a});
    return it == tally.end() ? 0 : it->second;
  };
  const auto jv = descent_vector(two_n - 2, PermClass::FpfInvolution, order);
  const long long h = two_n / 2;  // half the target size
  const long long t = two_n;
  for (int a = 0; a <= two_n - 2; ++a) {
    const long long j =
        a < static_cast<int>(jv.size()) ? jv[static_cast<size_t>(a)] : 0;
    long long g0, g1, g2, e0, e1, e2;
    if (order == Order::Natural) {
      // Under the natural order the negative swap pattern is the one that
      // leaves des unchanged, so the diagonal (0,0) negative copies land in
      // the zero-shift group and the (1,1) negative ones in the middle.
      g0 = cnt(SourceClass::F1, +1, a) + cnt(SourceClass::F1, -1, a) +
           cnt(SourceClass::F2, -1, a);
      g1 = cnt(SourceClass::F5, +1, a) + cnt(SourceClass::F5, -1, a) +
           cnt(SourceClass::F2, +1, a) + cnt(SourceClass::F4, -1, a);
      g2 = cnt(SourceClass::F3, +1, a) + cnt(SourceClass::F3, -1, a) +
           cnt(SourceClass::F4, +1, a);
      e0 = 2 * (1ll * a * a + a + h - 1) * j;
      e1 = 4 * (a * (t - a - 2) + h) * j;
      e2 = 2 * ((t - a - 2) * (t - a - 1) + h - 1) * j;
    } else {
      // Under the r order the negative swap pattern starts a descent, so the
      // diagonal classes shift by their type component plus one exactly like
      // the positive ones.
      g0 = cnt(SourceClass::F1, +1, a) + cnt(SourceClass::F1, -1, a);
      g1 = cnt(SourceClass::F5, +1, a) + cnt(SourceClass::F5, -1, a) +
           cnt(SourceClass::F2, +1, a) + cnt(SourceClass::F2, -1, a);
      g2 = cnt(SourceClass::F3, +1, a) + cnt(SourceClass::F3, -1, a) +
           cnt(SourceClass::F4, +1, a) + cnt(SourceClass::F4, -1, a);
      e0 = 2 * (1ll * a * a + h - 1) * j;
      e1 = 2 * (2ll * a * (t - a - 1) + 1) * j;
      e2 = 2 * (1ll * a * (a + 2 - 2 * t) + 4 * h * h - 3 * h) * j;
    }
    c.expect(g0 == e0 && g1 == e1 && g2 == e2,
             msg("fpf shift-group tallies differ at size ", two_n, " order ",
                 order_name(order), " bucket ", a, ": got (", g0, ",", g1, ",",
                 g2, ") expected (", e0, ",", e1, ",", e2, ")"));
  }
}

void bijection_round_trips(Checker& c) {
  for (Order order : kOrders) {
    for (int n = 1; n <= 5; ++n) {
      check_report(c,
                   verify_bijection(BijectionFamily::TwoSided, order, n,
                                    enumeration_limit(), 4),
                   static_cast<unsigned long long>(n) *
                       family_size(n, PermClass::All));
    }
    for (int n = 1; n <= 6; ++n) {
      check_report(c,
                   verify_bijection(BijectionFamily::Involution, order, n,
                                    enumeration_limit(), 4),
                   static_cast<unsigned long long>(n) *
                       family_size(n, PermClass::Involution));
    }
    for (int two_n : {2, 4, 6}) {
      check_report(c,
                   verify_bijection(BijectionFamily::FpfInvolution, order,
                                    two_n, enumeration_limit(), 4),
                   static_cast<unsigned long long>(two_n) *
                       family_size(two_n, PermClass::FpfInvolution));
    }
    for (int n = 2; n <= 5; ++n) two_sided_slots(c, order, n);
    for (int n = 2; n <= 6; ++n) involution_slots(c, order, n);
    for (int two_n : {4, 6}) fpf_slots(c, order, two_n);
  }

  // Documented inverse-map examples on the two-sided family.
  struct Example {
    int r;
    const char* window;
    int row, col, sign;
    SourceClass cls;
  };
  const SignedPermutation sigma({3, -2, -5, 1, -4});
  const Example examples[] = {
      {1, "-2,-4,1,-3", 1, 3, +1, SourceClass::D00},
      {2, "2,-4,1,-3", 2, 2, -1, SourceClass::D10},
      {3, "3,-2,1,-4", 3, 5, -1, SourceClass::D10},
      {4, "2,-1,-4,-3", 4, 1, +1, SourceClass::D10},
      {5, "3,-2,-4,1", 5, 4, -1, SourceClass::D10},
  };
  for (const Example& e : examples) {
    const TargetPair target{sigma, e.r};
    const SourcePair s =
        inverse_map(BijectionFamily::TwoSided, Order::Natural, target);
    const bool fields_ok = s.perm == SignedPermutation::parse(e.window) &&
                           s.point == GridPoint{e.row, e.col} &&
                           s.sign == e.sign && s.cls == e.cls;
    c.expect(fields_ok, msg("inverse map at marked position ", e.r,
                            " produced ", s.perm.str(), " point (",
                            s.point.row, ",", s.point.col, ") ",
                            class_label(s.cls, s.sign)));
    c.expect(forward_map(s) == target,
             msg("forward map does not return the marked pair at r=", e.r));
  }
  {
    const TargetPair target{SignedPermutation({1, 3, 2, -5, -4}), 2};
    const SourcePair s =
        inverse_map(BijectionFamily::Involution, Order::Natural, target);
    c.expect(s.perm == SignedPermutation({1, -3, -2}) &&
                 s.point == GridPoint{2, 2} && s.sign == +1 &&
                 s.cls == SourceClass::E4 && s.occurrence == 1,
             "involution inverse-map example");
    c.expect(forward_map(s) == target, "involution forward round trip");
  }
  {
    const TargetPair target{SignedPermutation({-5, 6, 4, 3, -1, 2}), 3};
    const SourcePair s =
        inverse_map(BijectionFamily::FpfInvolution, Order::Natural, target);
    c.expect(s.perm == SignedPermutation({-3, 4, -1, 2}) &&
                 s.point == GridPoint{3, 3} && s.sign == +1 &&
                 s.cls == SourceClass::F4 && s.occurrence == 2,
             "fixed-point-free inverse-map example");
    c.expect(forward_map(s) == target, "fixed-point-free forward round trip");
  }
}

// ---------------------------------------------------------------------------
// criterion 8: the differential recurrence on the joint polynomial.

void differential_recurrence(Checker& c) {
  const RecurrenceReport rep =
      check_differential_recurrence(2, 6, enumeration_limit());
  c.expect(rep.ok, msg(rep.id, ": ", rep.witness));
  const BivarPoly p1 = bivar_term(1, 0, 0) + bivar_term(1, 1, 1);
  c.expect(two_sided_poly_by_differential(1) == p1, "size-1 seed polynomial");
}

// ---------------------------------------------------------------------------
// criterion 9: the two r-order generating identities through degree six.

void series_identities(Checker& c) {
  for (SeriesIdentity id :
       {SeriesIdentity::Involution, SeriesIdentity::FpfInvolution}) {
    const TruncSeries lhs = lhs_series(id, 6, 6, enumeration_limit());
    const TruncSeries rhs = rhs_series(id, 6, 6);
    const auto mismatch = compare_series(lhs, rhs);
    if (mismatch) {
      c.expect(false,
               msg(id == SeriesIdentity::Involution ? "involution"
                                                    : "fixed-point-free",
                   " identity differs at x^", mismatch->a, " t^", mismatch->b,
                   ": ", mismatch->lhs.str(), " vs ", mismatch->rhs.str()));
    }
  }
}

// ---------------------------------------------------------------------------
// criterion 10: structural battery (board symmetry, insertion round trips,
// mirror-point swap, descent laws, corner patterns, family preservation,
// vector symmetry, touch counts), all within a two-minute budget.

void structural_battery(Checker& c) {
  const auto start = std::chrono::steady_clock::now();

  // Transposing a board inverts the window.
  for (int n = 0; n <= 5; ++n) {
    for (const auto& pi : enumerate_family(n, PermClass::All)) {
      std::set<std::tuple<int, int, int>> direct, transposed;
      for (const Square& s : board(pi)) transposed.insert({s.col, s.row, s.sign});
      for (const Square& s : board(pi.inverse())) direct.insert({s.row, s.col, s.sign});
      if (direct != transposed) {
        c.expect(false, msg("inverse board is not the transpose for ", pi.str()));
      }
    }
  }

  // Single insertions and deletions are mutually inverse.
  for (const auto& pi : enumerate_family(3, PermClass::All)) {
    for (int row = 1; row <= 4; ++row) {
      for (int col = 1; col <= 4; ++col) {
        for (int sign : {+1, -1}) {
          if (!(delete_square(insert_square(pi, row, col, sign), row, col) ==
                pi)) {
            c.expect(false, msg("insert/delete round trip fails for ",
                                pi.str(), " at (", row, ",", col, ")"));
          }
        }
      }
    }
  }
  for (const auto& sigma : enumerate_family(4, PermClass::All)) {
    for (const Square& s : board(sigma)) {
      if (!(insert_square(delete_square(sigma, s.row, s.col), s.row, s.col,
                          s.sign) == sigma)) {
        c.expect(false, msg("delete/insert round trip fails for ", sigma.str(),
                            " at (", s.row, ",", s.col, ")"));
      }
    }
  }

  // Inserting at the corner (i+1, i) below a fixed point of matching sign
  // keeps the window an involution.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_family(n, PermClass::Involution)) {
      for (int i = 1; i <= n; ++i) {
        if (pi.at(i) == i &&
            !insert_square(pi, i + 1, i, +1).is_involution()) {
          c.expect(false, msg("corner insertion below fixed ", i, " of ",
                              pi.str(), " is not an involution"));
        }
        if (pi.at(i) == -i &&
            !insert_square(pi, i + 1, i, -1).is_involution()) {
          c.expect(false, msg("corner insertion below negated fixed ", i,
                              " of ", pi.str(), " is not an involution"));
        }
      }
    }
  }

  // On involution grids the mirror point swaps the type components; on the
  // diagonal the two components agree.
  for (int n = 0; n <= 5; ++n) {
    for (const auto& pi : enumerate_family(n, PermClass::Involution)) {
      for (Order order : kOrders) {
        for (int sign : {+1, -1}) {
          for (int i = 1; i <= n + 1; ++i) {
            for (int j = i; j <= n + 1; ++j) {
              const InsertionType ij = insertion_type(pi, i, j, sign, order);
              const InsertionType ji = insertion_type(pi, j, i, sign, order);
              if (ji.des_shift != ij.ides_shift ||
                  ji.ides_shift != ij.des_shift ||
                  (i == j && ij.des_shift != ij.ides_shift)) {
                c.expect(false, msg("mirror types at (", i, ",", j, ") of ",
                                    pi.str(), " do not swap"));
              }
            }
          }
        }
      }
    }
  }

  // Natural order: inserting +. at (i+1, i) over a fixed point raises des by
  // one; inserting -. over a negated fixed point keeps des.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_family(n, PermClass::All)) {
      const int base = des(pi, Order::Natural);
      for (int i = 1; i <= n; ++i) {
        if (pi.at(i) == i &&
            des(insert_square(pi, i + 1, i, +1), Order::Natural) != base + 1) {
          c.expect(false, msg("positive corner insertion on ", pi.str(),
                              " at ", i, " does not raise des"));
        }
        if (pi.at(i) == -i &&
            des(insert_square(pi, i + 1, i, -1), Order::Natural) != base) {
          c.expect(false, msg("negative corner insertion on ", pi.str(),
                              " at ", i, " changes des"));
        }
      }
    }
  }

  // Double insertions shift des by the anchor's type, with the pattern that
  // starts a new descent depending on the comparison order.
  for (int n = 0; n <= 4; ++n) {
    for (const auto& pi : enumerate_family(n, PermClass::Involution)) {
      for (Order order : kOrders) {
        const int base = des(pi, order);
        bool bad = false;
        for (int i = 1; i <= n + 1 && !bad; ++i) {
          for (int j = 1; j <= n + 1 && !bad; ++j) {
            if (i == j) continue;
            for (int sign : {+1, -1}) {
              const InsertionType t = insertion_type(pi, i, j, sign, order);
              if (des(double_insert_cross(pi, i, j, sign), order) !=
                  base + t.des_shift + t.ides_shift) {
                bad = true;
              }
            }
          }
        }
        for (int i = 1; i <= n + 1 && !bad; ++i) {
          const int p = insertion_type(pi, i, i, +1, order).des_shift;
          const int q = insertion_type(pi, i, i, -1, order).des_shift;
          const int fp =
              des(double_insert_diag(pi, i, PairPattern::FixedPos), order);
          const int sp =
              des(double_insert_diag(pi, i, PairPattern::SwapPos), order);
          const int fn =
              des(double_insert_diag(pi, i, PairPattern::FixedNeg), order);
          const int sn =
              des(double_insert_diag(pi, i, PairPattern::SwapNeg), order);
          if (fp != base + p || sp != base + p + 1) bad = true;
          if (order == Order::Natural) {
            if (fn != base + q + 1 || sn != base + q) bad = true;
          } else {
            if (fn != base + q || sn != base + q + 1) bad = true;
          }
        }
        if (bad) {
          c.expect(false, msg("double-insertion descent law fails on ",
                              pi.str(), " order ", order_name(order)));
        }
      }
    }
  }

  // The four grid corners of a filled square have the constant and the
  // both-raising type in the expected arrangement.
  for (Order order : kOrders) {
    for (const auto& pi : enumerate_family(4, PermClass::All)) {
      for (const Square& s : board(pi)) {
        const bool flipped = s.sign < 0 && order == Order::Natural;
        const InsertionType same{0, 0};
        const InsertionType both{1, 1};
        const InsertionType want_nw = flipped ? both : same;
        const InsertionType want_ne = flipped ? same : both;
        if (!(insertion_type(pi, s.row, s.col, s.sign, order) == want_nw &&
              insertion_type(pi, s.row + 1, s.col + 1, s.sign, order) ==
                  want_nw &&
              insertion_type(pi, s.row, s.col + 1, s.sign, order) == want_ne &&
              insertion_type(pi, s.row + 1, s.col, s.sign, order) ==
                  want_ne)) {
          c.expect(false, msg("corner types around square (", s.row, ",",
                              s.col, ") of ", pi.str(), " are off"));
        }
      }
    }
  }

  // Cross and swap double insertions preserve fixed-point-freeness.
  for (int two_n : {0, 2, 4}) {
    for (const auto& pi : enumerate_family(two_n, PermClass::FpfInvolution)) {
      bool bad = false;
      for (int i = 1; i <= two_n + 1 && !bad; ++i) {
        for (int j = 1; j <= two_n + 1 && !bad; ++j) {
          if (i == j) continue;
          for (int sign : {+1, -1}) {
            if (!double_insert_cross(pi, i, j, sign).is_fpf_involution()) {
              bad = true;
            }
          }
        }
      }
      for (int i = 1; i <= two_n + 1 && !bad; ++i) {
        if (!double_insert_diag(pi, i, PairPattern::SwapPos)
                 .is_fpf_involution() ||
            !double_insert_diag(pi, i, PairPattern::SwapNeg)
                 .is_fpf_involution()) {
          bad = true;
        }
      }
      if (bad) {
        c.expect(false,
                 msg("a pair insertion on ", pi.str(), " left the family"));
      }
    }
  }

  // The involution descent vector is palindromic.
  for (int n = 1; n <= 8; ++n) {
    const auto v = descent_vector(n, PermClass::Involution, Order::Natural);
    for (int k = 0; k <= n; ++k) {
      if (v[static_cast<size_t>(k)] != v[static_cast<size_t>(n - k)]) {
        c.expect(false, msg("involution vector asymmetric at n=", n));
      }
    }
  }

  // Horizontal paths of an involution touch the diagonal once each, so the
  // touch tallies are 2 des + 1 and 2(n - des) + 1.
  for (int n = 0; n <= 5; ++n) {
    for (const auto& pi : enumerate_family(n, PermClass::Involution)) {
      const int d = des(pi, Order::Natural);
      const auto count = [&pi](int value, int sign) {
        return static_cast<long long>(
            diagonal_touches(pi, Order::Natural, value, sign).size());
      };
      if (count(0, +1) + count(0, -1) != 2 * d + 1 ||
          count(1, +1) + count(1, -1) != 2 * (n - d) + 1) {
        c.expect(false, msg("touch tallies are off for ", pi.str()));
      }
    }
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  c.expect(secs < 120.0, msg("battery took ", secs, "s, budget is 120s"));
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "two-sided-recurrence", two_sided_recurrence);
  failures += run_criterion(2, "order-equidistribution", order_equidistribution);
  failures += run_criterion(3, "involution-recurrence", involution_recurrence);
  failures += run_criterion(4, "fpf-recurrence", fpf_recurrence);
  failures += run_criterion(5, "path-counting", path_counting);
  failures += run_criterion(6, "insertion-type-counts", insertion_type_counts);
  failures += run_criterion(7, "bijection-round-trips", bijection_round_trips);
  failures += run_criterion(8, "differential-recurrence",
                            differential_recurrence);
  failures += run_criterion(9, "series-identities", series_identities);
  failures += run_criterion(10, "structural-battery", structural_battery);
  if (failures == 0) {
    std::cout << "10/10 criteria satisfied\n";
  } else {
    std::cout << failures << " criteria failing\n";
  }
  return failures;
}
