#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "signedperm/statistics.hpp"

namespace signedperm {

using BigInt = boost::multiprecision::cpp_int;

/// Bivariate power series in x and t, truncated to x^a t^b with a <= max_x,
/// b <= max_t, with exact arbitrary-precision integer coefficients.
class TruncSeries {
 public:
  TruncSeries(int max_x, int max_t);

  int max_x() const { return mx_; }
  int max_t() const { return mt_; }
  const BigInt& coeff(int a, int b) const;
  void set(int a, int b, BigInt v);
  void add_at(int a, int b, const BigInt& v);

  TruncSeries& operator+=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
    a += b;
    return a;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  int mx_, mt_;
  std::vector<BigInt> c_;  // (mx_+1) * (mt_+1), row-major in x
};

/// Multiplicative inverse of a series whose constant term is +1 or -1
/// (solved coefficient-by-coefficient; exact).  Throws std::invalid_argument
/// for any other constant term.
TruncSeries recip(const TruncSeries& a);

/// a^k for k >= 0 by repeated multiplication.
TruncSeries pow(const TruncSeries& a, int k);

/// (1 - x^dx t^dt)^{-e} truncated: sum_j C(e-1+j, j) (x^dx t^dt)^j.
/// dx = dt = 0 is rejected; e = 0 gives 1.
TruncSeries inv_pow_series(int dx, int dt, long long e, int max_x, int max_t);

/// The two descent generating identities on the r-order statistics, one over
/// involutions and one over fixed-point-free involutions.
enum class SeriesIdentity { Involution, FpfInvolution };

/// Left side: sum_{n >= 0} V_n(t) x^n (1-t)^{-(n+1)} truncated, where V_n is
/// the brute-force descent vector of the family under the R order (V_0 = 1;
/// odd fixed-point-free sizes contribute nothing).
TruncSeries lhs_series(SeriesIdentity id, int max_x, int max_t,
                       unsigned long long limit);
TruncSeries lhs_series(SeriesIdentity id, int max_x, int max_t);

/// Right side:
///   Involution:      sum_{m=0}^{max_t} t^m (1-x)^{-(2m+1)} (1-x^2)^{-m^2}
///   FpfInvolution:   sum_{m=0}^{max_t} t^m (1-x^2)^{-m^2}
TruncSeries rhs_series(SeriesIdentity id, int max_x, int max_t);

/// First differing coefficient, if any.
struct SeriesMismatch {
  int a = 0;
  int b = 0;
  BigInt lhs;
  BigInt rhs;
};

std::optional<SeriesMismatch> compare_series(const TruncSeries& lhs,
                                             const TruncSeries& rhs);

}  // namespace signedperm
