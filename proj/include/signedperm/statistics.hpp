#pragma once

#include <string>
#include <vector>

#include "signedperm/core.hpp"

namespace signedperm {

/// Total orders on window values used by the descent statistics.
///   Natural:  -n < ... < -1 < 0 < 1 < ... < n   (plain integers)
///   R:        -1 < -2 < ... < -n < 0 < 1 < ... < n
/// Both place every negative value below 0 and every positive value above 0;
/// they differ only in how two negatives compare (R compares magnitudes).
enum class Order { Natural, R };

/// Strict comparison of window values under the given order.
bool value_less(int a, int b, Order order);

/// Descent positions i in [0, n-1] with pi_i > pi_{i+1}, using pi_0 = 0.
std::vector<int> descent_set(const SignedPermutation& pi, Order order);

/// Number of descents.
int des(const SignedPermutation& pi, Order order);

/// Number of descents of the inverse.
int ides(const SignedPermutation& pi, Order order);

/// Joint distribution of (des, ides) over B_n: cell[i][j] counts elements
/// with des = i and ides = j; (n+1) x (n+1).
struct Triangle {
  int n = 0;
  Order order = Order::Natural;
  std::vector<std::vector<long long>> cell;
};

Triangle two_sided_triangle(int n, Order order, unsigned long long limit);
Triangle two_sided_triangle(int n, Order order);

/// Marginal distribution of des over B_n (coefficients of the Eulerian
/// polynomial), size n+1.
std::vector<long long> eulerian_vector(int n, Order order,
                                       unsigned long long limit);
std::vector<long long> eulerian_vector(int n, Order order);

/// Distribution of des over a family (all of B_n, involutions, or
/// fixed-point-free involutions), size n+1.
std::vector<long long> descent_vector(int n, PermClass family, Order order,
                                      unsigned long long limit);
std::vector<long long> descent_vector(int n, PermClass family, Order order);

/// Dense bivariate polynomial sum c[i][j] s^i t^j with exact integer
/// coefficients.  Rows may be ragged-free rectangular; trailing zero
/// rows/columns are irrelevant for equality.
struct BivarPoly {
  std::vector<std::vector<long long>> c;

  static BivarPoly zero(int deg_s, int deg_t);
  long long coeff(int i, int j) const;

  BivarPoly& operator+=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) {
    a += b;
    return a;
  }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly scaled(long long k) const;
  /// Partial derivatives.
  BivarPoly d_ds() const;
  BivarPoly d_dt() const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b);
};

/// Builds s^i t^j * k.
BivarPoly bivar_term(long long k, int i, int j);

/// Sum over B_n of s^des t^ides.
BivarPoly two_sided_polynomial(int n, Order order, unsigned long long limit);
BivarPoly two_sided_polynomial(int n, Order order);

/// CSV rendering of a triangle with header row "i\j,0,1,...,n".
std::string triangle_csv(const Triangle& t);
/// JSON rendering: {"n":..,"order":"natural"|"r","counts":[[..],..]}.
std::string triangle_json(const Triangle& t);

const char* order_name(Order order);

}  // namespace signedperm
