#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "signedperm/dtypes.hpp"

namespace signedperm {

/// Which recurrence the bijection realizes: the full two-sided one on B_n,
/// the involution one, or the fixed-point-free involution one (where sources
/// count diagonal points twice and the doubled recurrence is matched).
enum class BijectionFamily { TwoSided, Involution, FpfInvolution };

/// Source classes.  D** name the insertion type of the marked point for the
/// two-sided family; E1/E2 are the path touch classes on involutions (single
/// insertion), E3..E5 the double-insertion classes grouped by type
/// ((0,0) / mixed+diagonal / (1,1)); F1..F5 are the fixed-point-free analogues
/// (F1/F3 off-diagonal (0,0)/(1,1), F5 mixed, F2/F4 diagonal (0,0)/(1,1)
/// points, each taken twice).
enum class SourceClass {
  D00,
  D10,
  D01,
  D11,
  E1,
  E2,
  E3,
  E4,
  E5,
  F1,
  F2,
  F3,
  F4,
  F5
};

/// A marked small object: a permutation together with a grid point, an
/// insertion sign, its class, and (for fixed-point-free diagonal points) which
/// of the two copies it is.
struct SourcePair {
  BijectionFamily family = BijectionFamily::TwoSided;
  Order order = Order::Natural;
  SignedPermutation perm;
  GridPoint point;
  int sign = +1;
  SourceClass cls = SourceClass::D00;
  int occurrence = 1;  // 1 or 2; always 1 outside F2/F4
  friend bool operator==(const SourcePair&, const SourcePair&) = default;
};

/// A marked large object: a permutation with a distinguished window position.
struct TargetPair {
  SignedPermutation perm;
  int index = 1;
  friend bool operator==(const TargetPair&, const TargetPair&) = default;
};

/// Forward map: performs the insertion dictated by the source class and
/// returns the result together with the index recording where it happened.
TargetPair forward_map(const SourcePair& source);

/// Inverse map: dispatches on sigma_r (and its neighbour for the fixed-point
/// patterns), undoes the insertion, and reconstructs the full source
/// (class, sign, anchor, occurrence) from the type of the anchor point.
SourcePair inverse_map(BijectionFamily family, Order order,
                       const TargetPair& target);

/// Every source mapping into targets of size target_n (permutations of size
/// target_n - 1 for single insertions, target_n - 2 for double ones).
std::vector<SourcePair> enumerate_sources(BijectionFamily family, Order order,
                                          int target_n,
                                          unsigned long long limit);
std::vector<SourcePair> enumerate_sources(BijectionFamily family, Order order,
                                          int target_n);

/// Short label such as "D10-", "E4+", "F2-" (sign suffix) used in reports.
std::string class_label(SourceClass cls, int sign);

/// Round-trip verification of forward_map/inverse_map at one size, with
/// per-class tallies keyed by class_label.
struct BijectionReport {
  BijectionFamily family = BijectionFamily::TwoSided;
  Order order = Order::Natural;
  int n = 0;
  bool ok = false;
  unsigned long long sources = 0;
  unsigned long long targets = 0;
  std::map<std::string, unsigned long long> class_counts;
  std::string witness;  // first failure, empty when ok
};

BijectionReport verify_bijection(BijectionFamily family, Order order, int n,
                                 unsigned long long limit, int jobs = 1);

const char* family_name(BijectionFamily family);

}  // namespace signedperm
