#pragma once

#include <string>
#include <vector>

#include "signedperm/statistics.hpp"

namespace signedperm {

/// Result of checking one recurrence (or the differential equation) over a
/// size range against brute-force data.
struct RecurrenceReport {
  std::string id;
  Order order = Order::Natural;
  int n_min = 0;
  int n_max = 0;
  bool ok = false;
  std::string witness;  // first failing identity, empty when ok
};

/// Four-term recurrence for the joint (des, ides) counts b_{n,i,j} over B_n:
///   n b_{n,i,j} = (n+i+j+2ij) b_{n-1,i,j}
///               + ((2n-1)i - (2i+1)(j-1)) b_{n-1,i,j-1}
///               + ((2n-1)j - (2j+1)(i-1)) b_{n-1,i-1,j}
///               + ((2n^2-n) + 2(i-1)(j-1) + (1-2n)(i+j-2)) b_{n-1,i-1,j-1},
/// identical for both orders; out-of-range entries are 0.
RecurrenceReport check_two_sided_recurrence(Order order, int n_min, int n_max,
                                            unsigned long long limit);

/// Triangle computed bottom-up from the recurrence with initial triangle
/// b_1 = [[1,0],[0,1]].
std::vector<std::vector<long long>> two_sided_by_recurrence(int n);

/// Five-term recurrence for the descent counts I_{n,k} over involutions:
///   n I_{n,k} = (2k+1) I_{n-1,k} + (2n-2k+1) I_{n-1,k-1}
///             + (n-1+2k(k+1)) I_{n-2,k}
///             + (2(n-1)+4(n-k-1)(k-1)) I_{n-2,k-1}
///             + ((2n-3)(n-1)+2(k-2)(k-2n+1)) I_{n-2,k-2},
/// identical for both orders, with I_1 = (1,1) and I_2 = (1,4,1).
RecurrenceReport check_involution_recurrence(Order order, int n_min, int n_max,
                                             unsigned long long limit);

std::vector<long long> involution_by_recurrence(int n);

/// Three-term recurrences for descent counts over fixed-point-free
/// involutions of even size 2n (odd sizes have none).  The two orders obey
/// different recurrences:
///   Natural: n J_{2n,k} = (k^2+k+n-1) J_{2n-2,k}
///                       + 2((k-1)(2n-k-1)+n) J_{2n-2,k-1}
///                       + ((2n-k)(2n-k+1)+(n-1)) J_{2n-2,k-2},
///            J_2 = (0,2,0);
///   R:       n J_{2n,k} = (k^2+n-1) J_{2n-2,k}
///                       + (2(k-1)(2n-k)+1) J_{2n-2,k-1}
///                       + ((k-2)(k-4n)+4n^2-3n) J_{2n-2,k-2},
///            J_2 = (0,1,1).
RecurrenceReport check_fpf_recurrence(Order order, int size_min, int size_max,
                                      unsigned long long limit);

std::vector<long long> fpf_by_recurrence(int size, Order order);

/// Differential recurrence for the two-sided polynomial P_n(s,t) =
/// sum over B_n of s^des t^ides:
///   n P_n = (2n^2 st - n st + n) P_{n-1}
///         + (2n st(1-s) + s(1-s)(1-t)) dP_{n-1}/ds
///         + (2n st(1-t) + t(1-s)(1-t)) dP_{n-1}/dt
///         + 2 st(1-s)(1-t) d^2 P_{n-1}/ds dt,
/// with P_1 = 1 + st; checked with exact polynomial arithmetic.
RecurrenceReport check_differential_recurrence(int n_min, int n_max,
                                               unsigned long long limit);

/// P_n computed bottom-up from the differential recurrence.
BivarPoly two_sided_poly_by_differential(int n);

}  // namespace signedperm
