#include "signedperm/bijections.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

namespace signedperm {

namespace {

// Row displacement applied by a cross double insertion: rows at or above the
// smaller coordinate keep their index, rows below it shift by one.
int chi(int i, int j) { return i <= j ? i : i + 1; }

[[noreturn]] void fail_class(const SourcePair& src, const std::string& why) {
  std::ostringstream msg;
  msg << "source (" << src.perm.str() << ", point (" << src.point.row << ","
      << src.point.col << "), sign " << (src.sign > 0 ? "+" : "-")
      << ", occurrence " << src.occurrence << ") rejected: " << why;
  throw std::invalid_argument(msg.str());
}

bool is_cross_type_class(SourceClass cls, InsertionType t, bool fpf) {
  const bool zero = t == InsertionType{0, 0};
  const bool one = t == InsertionType{1, 1};
  if (fpf) {
    if (zero) return cls == SourceClass::F1;
    if (one) return cls == SourceClass::F3;
    return cls == SourceClass::F5;
  }
  if (zero) return cls == SourceClass::E3;
  if (one) return cls == SourceClass::E5;
  return cls == SourceClass::E4;
}

// Diagonal dispatch for the involution family: which adjacent pair the class
// inserts at a diagonal point of type (p,p), per sign and order.
PairPattern involution_diag_pattern(SourceClass cls, InsertionType t, int sign,
                                    Order order, const SourcePair& src) {
  const bool zero = t == InsertionType{0, 0};
  const bool fixed_first =  // class listing the fixed pair on its (0,0) rows
      sign > 0 || order == Order::R;
  // For sign +, and for sign - under R: type (0,0) splits into the "low" class
  // via the fixed pair and the middle class via the swapped pair; type (1,1)
  // into the middle class via the fixed pair and the "high" class via the
  // swapped pair.  For sign - under the natural order the two pairs trade
  // places.
  bool use_fixed;
  if (cls == SourceClass::E3) {
    if (!zero) fail_class(src, "class expects a (0,0) diagonal point");
    use_fixed = fixed_first;
  } else if (cls == SourceClass::E5) {
    if (zero) fail_class(src, "class expects a (1,1) diagonal point");
    use_fixed = !fixed_first;
  } else if (cls == SourceClass::E4) {
    use_fixed = zero ? !fixed_first : fixed_first;
  } else {
    fail_class(src, "class cannot sit on a diagonal point");
  }
  if (sign > 0) {
    return use_fixed ? PairPattern::FixedPos : PairPattern::SwapPos;
  }
  return use_fixed ? PairPattern::FixedNeg : PairPattern::SwapNeg;
}

SourceClass d_class(InsertionType t) {
  if (t.des_shift == 0) {
    return t.ides_shift == 0 ? SourceClass::D00 : SourceClass::D01;
  }
  return t.ides_shift == 0 ? SourceClass::D10 : SourceClass::D11;
}

SourceClass cross_class(InsertionType t, bool fpf) {
  if (t == InsertionType{0, 0}) {
    return fpf ? SourceClass::F1 : SourceClass::E3;
  }
  if (t == InsertionType{1, 1}) {
    return fpf ? SourceClass::F3 : SourceClass::E5;
  }
  return fpf ? SourceClass::F5 : SourceClass::E4;
}

TargetPair forward_two_sided(const SourcePair& src) {
  if (src.occurrence != 1) fail_class(src, "occurrence must be 1");
  const InsertionType t = insertion_type(src.perm, src.point.row,
                                         src.point.col, src.sign, src.order);
  if (d_class(t) != src.cls) {
    fail_class(src, "class tag does not match the point's insertion type");
  }
  return TargetPair{
      insert_square(src.perm, src.point.row, src.point.col, src.sign),
      src.point.row};
}

TargetPair forward_involution(const SourcePair& src) {
  if (!src.perm.is_involution()) fail_class(src, "permutation not an involution");
  if (src.occurrence != 1) fail_class(src, "occurrence must be 1");
  const int i = src.point.row;
  const int j = src.point.col;
  if (src.cls == SourceClass::E1 || src.cls == SourceClass::E2) {
    const int value = src.cls == SourceClass::E1 ? 0 : 1;
    const auto touches = diagonal_touches(src.perm, src.order, value,
                                          src.sign);
    const bool is_touch =
        std::any_of(touches.begin(), touches.end(),
                    [&](const DiagonalTouch& t) { return t.point == src.point; });
    if (!is_touch) fail_class(src, "point is not a touch point of the class");
    return TargetPair{insert_square(src.perm, i, j, src.sign), i};
  }
  if (i != j) {
    const InsertionType t =
        insertion_type(src.perm, i, j, src.sign, src.order);
    if (!is_cross_type_class(src.cls, t, /*fpf=*/false)) {
      fail_class(src, "class tag does not match the point's insertion type");
    }
    return TargetPair{double_insert_cross(src.perm, i, j, src.sign),
                      chi(i, j)};
  }
  const InsertionType t = insertion_type(src.perm, i, i, src.sign, src.order);
  const PairPattern pattern =
      involution_diag_pattern(src.cls, t, src.sign, src.order, src);
  const bool fixed = pattern == PairPattern::FixedPos ||
                     pattern == PairPattern::FixedNeg;
  return TargetPair{double_insert_diag(src.perm, i, pattern),
                    fixed ? i + 1 : i};
}

TargetPair forward_fpf(const SourcePair& src) {
  if (!src.perm.is_fpf_involution()) {
    fail_class(src, "permutation not a fixed-point-free involution");
  }
  const int i = src.point.row;
  const int j = src.point.col;
  const InsertionType t = insertion_type(src.perm, i, j, src.sign, src.order);
  if (i != j) {
    if (src.occurrence != 1) fail_class(src, "occurrence must be 1");
    if (!is_cross_type_class(src.cls, t, /*fpf=*/true)) {
      fail_class(src, "class tag does not match the point's insertion type");
    }
    return TargetPair{double_insert_cross(src.perm, i, j, src.sign),
                      chi(i, j)};
  }
  const bool zero = t == InsertionType{0, 0};
  if (src.cls != (zero ? SourceClass::F2 : SourceClass::F4)) {
    fail_class(src, "class tag does not match the diagonal point's type");
  }
  if (src.occurrence != 1 && src.occurrence != 2) {
    fail_class(src, "occurrence must be 1 or 2");
  }
  // Only the swapped pair keeps the result fixed-point free.
  const PairPattern pattern =
      src.sign > 0 ? PairPattern::SwapPos : PairPattern::SwapNeg;
  return TargetPair{double_insert_diag(src.perm, i, pattern),
                    src.occurrence == 1 ? i + 1 : i};
}

InsertionType diag_type(const SignedPermutation& pi, int i, int sign,
                        Order order) {
  return insertion_type(pi, i, i, sign, order);
}

SourcePair inverse_two_sided(Order order, const TargetPair& target) {
  const SignedPermutation& sigma = target.perm;
  const int r = target.index;
  if (r < 1 || r > sigma.size()) {
    throw std::invalid_argument("target index outside [1, n]");
  }
  const int v = sigma.at(r);
  const int col = std::abs(v);
  const int sign = v > 0 ? 1 : -1;
  SignedPermutation pi = delete_square(sigma, r, col);
  const InsertionType t = insertion_type(pi, r, col, sign, order);
  return SourcePair{BijectionFamily::TwoSided, order, std::move(pi),
                    GridPoint{r, col}, sign, d_class(t), 1};
}

SourcePair inverse_involution(Order order, const TargetPair& target) {
  const SignedPermutation& sigma = target.perm;
  const int r = target.index;
  if (r < 1 || r > sigma.size()) {
    throw std::invalid_argument("target index outside [1, n]");
  }
  if (!sigma.is_involution()) {
    throw std::invalid_argument("target permutation is not an involution");
  }
  const int v = sigma.at(r);
  const bool natural = order == Order::Natural;

  SourcePair src;
  src.family = BijectionFamily::Involution;
  src.order = order;
  src.occurrence = 1;

  auto finish_cross = [&](DoubleDeleteCase kind, GridPoint anchor, int sign) {
    src.perm = double_delete(sigma, kind, anchor);
    src.point = anchor;
    src.sign = sign;
    src.cls = cross_class(insertion_type(src.perm, anchor.row, anchor.col,
                                         sign, order),
                          /*fpf=*/false);
  };

  if (v > r + 1) {
    finish_cross(DoubleDeleteCase::CrossPos, GridPoint{r, v - 1}, 1);
  } else if (v >= 1 && v < r - 1) {
    finish_cross(DoubleDeleteCase::CrossPos, GridPoint{r - 1, v}, 1);
  } else if (v < -(r + 1)) {
    finish_cross(DoubleDeleteCase::CrossNeg, GridPoint{r, -v - 1}, -1);
  } else if (v <= -1 && -v < r - 1) {
    finish_cross(DoubleDeleteCase::CrossNeg, GridPoint{r - 1, -v}, -1);
  } else if (v == r + 1) {
    // Swapped positive pair at (r, r); type (0,0) lands in the middle class.
    src.perm = double_delete(sigma, DoubleDeleteCase::SwapPos,
                             GridPoint{r, r});
    src.point = GridPoint{r, r};
    src.sign = 1;
    src.cls = diag_type(src.perm, r, 1, order) == InsertionType{0, 0}
                  ? SourceClass::E4
                  : SourceClass::E5;
  } else if (v == -(r + 1)) {
    src.perm = double_delete(sigma, DoubleDeleteCase::SwapNeg,
                             GridPoint{r, r});
    src.point = GridPoint{r, r};
    src.sign = -1;
    const bool zero = diag_type(src.perm, r, -1, order) == InsertionType{0, 0};
    src.cls = natural ? (zero ? SourceClass::E3 : SourceClass::E4)
                      : (zero ? SourceClass::E4 : SourceClass::E5);
  } else if (v == r && r >= 2 && sigma.at(r - 1) == r - 1) {
    src.perm = double_delete(sigma, DoubleDeleteCase::FixedPos,
                             GridPoint{r - 1, r - 1});
    src.point = GridPoint{r - 1, r - 1};
    src.sign = 1;
    src.cls = diag_type(src.perm, r - 1, 1, order) == InsertionType{0, 0}
                  ? SourceClass::E3
                  : SourceClass::E4;
  } else if (v == -r && r >= 2 && sigma.at(r - 1) == -(r - 1)) {
    src.perm = double_delete(sigma, DoubleDeleteCase::FixedNeg,
                             GridPoint{r - 1, r - 1});
    src.point = GridPoint{r - 1, r - 1};
    src.sign = -1;
    const bool zero =
        diag_type(src.perm, r - 1, -1, order) == InsertionType{0, 0};
    src.cls = natural ? (zero ? SourceClass::E4 : SourceClass::E5)
                      : (zero ? SourceClass::E3 : SourceClass::E4);
  } else if (v == r) {
    src.perm = delete_square(sigma, r, r);
    src.point = GridPoint{r, r};
    src.sign = 1;
    src.cls = diag_type(src.perm, r, 1, order) == InsertionType{0, 0}
                  ? SourceClass::E1
                  : SourceClass::E2;
  } else if (v == -r) {
    src.perm = delete_square(sigma, r, r);
    src.point = GridPoint{r, r};
    src.sign = -1;
    src.cls = diag_type(src.perm, r, -1, order) == InsertionType{0, 0}
                  ? SourceClass::E1
                  : SourceClass::E2;
  } else if (v == r - 1) {
    // Touch of kind (c+1, c): the path's class is pinned by sign and order.
    src.perm = delete_square(sigma, r, r - 1);
    src.point = GridPoint{r, r - 1};
    src.sign = 1;
    src.cls = SourceClass::E2;
  } else if (v == -(r - 1)) {
    src.perm = delete_square(sigma, r, r - 1);
    src.point = GridPoint{r, r - 1};
    src.sign = -1;
    src.cls = natural ? SourceClass::E1 : SourceClass::E2;
  } else {
    throw std::logic_error("involution inverse map: unreachable window value");
  }
  return src;
}

SourcePair inverse_fpf(Order order, const TargetPair& target) {
  const SignedPermutation& sigma = target.perm;
  const int r = target.index;
  if (r < 1 || r > sigma.size()) {
    throw std::invalid_argument("target index outside [1, n]");
  }
  if (!sigma.is_fpf_involution()) {
    throw std::invalid_argument(
        "target permutation is not a fixed-point-free involution");
  }
  const int v = sigma.at(r);

  SourcePair src;
  src.family = BijectionFamily::FpfInvolution;
  src.order = order;
  src.occurrence = 1;

  auto finish_cross = [&](DoubleDeleteCase kind, GridPoint anchor, int sign) {
    src.perm = double_delete(sigma, kind, anchor);
    src.point = anchor;
    src.sign = sign;
    src.cls = cross_class(insertion_type(src.perm, anchor.row, anchor.col,
                                         sign, order),
                          /*fpf=*/true);
  };
  auto finish_diag = [&](DoubleDeleteCase kind, int i, int sign,
                         int occurrence) {
    src.perm = double_delete(sigma, kind, GridPoint{i, i});
    src.point = GridPoint{i, i};
    src.sign = sign;
    src.occurrence = occurrence;
    src.cls = diag_type(src.perm, i, sign, order) == InsertionType{0, 0}
                  ? SourceClass::F2
                  : SourceClass::F4;
  };

  if (v > r + 1) {
    finish_cross(DoubleDeleteCase::CrossPos, GridPoint{r, v - 1}, 1);
  } else if (v >= 1 && v < r - 1) {
    finish_cross(DoubleDeleteCase::CrossPos, GridPoint{r - 1, v}, 1);
  } else if (v < -(r + 1)) {
    finish_cross(DoubleDeleteCase::CrossNeg, GridPoint{r, -v - 1}, -1);
  } else if (v <= -1 && -v < r - 1) {
    finish_cross(DoubleDeleteCase::CrossNeg, GridPoint{r - 1, -v}, -1);
  } else if (v == r - 1) {
    finish_diag(DoubleDeleteCase::SwapPos, r - 1, 1, 1);
  } else if (v == r + 1) {
    finish_diag(DoubleDeleteCase::SwapPos, r, 1, 2);
  } else if (v == -(r - 1)) {
    finish_diag(DoubleDeleteCase::SwapNeg, r - 1, -1, 1);
  } else if (v == -(r + 1)) {
    finish_diag(DoubleDeleteCase::SwapNeg, r, -1, 2);
  } else {
    throw std::logic_error(
        "fixed-point-free inverse map: unreachable window value");
  }
  return src;
}

}  // namespace

TargetPair forward_map(const SourcePair& source) {
  switch (source.family) {
    case BijectionFamily::TwoSided:
      return forward_two_sided(source);
    case BijectionFamily::Involution:
      return forward_involution(source);
    case BijectionFamily::FpfInvolution:
      return forward_fpf(source);
  }
  throw std::invalid_argument("forward_map: unknown family");
}

SourcePair inverse_map(BijectionFamily family, Order order,
                       const TargetPair& target) {
  switch (family) {
    case BijectionFamily::TwoSided:
      return inverse_two_sided(order, target);
    case BijectionFamily::Involution:
      return inverse_involution(order, target);
    case BijectionFamily::FpfInvolution:
      return inverse_fpf(order, target);
  }
  throw std::invalid_argument("inverse_map: unknown family");
}

std::vector<SourcePair> enumerate_sources(BijectionFamily family, Order order,
                                          int target_n,
                                          unsigned long long limit) {
  std::vector<SourcePair> out;
  const auto emit = [&](const SignedPermutation& pi, GridPoint p, int sign,
                        SourceClass cls, int occurrence) {
    out.push_back(SourcePair{family, order, pi, p, sign, cls, occurrence});
  };

  if (family == BijectionFamily::TwoSided) {
    for (const auto& pi :
         enumerate_family(target_n - 1, PermClass::All, limit)) {
      for (int i = 1; i <= target_n; ++i) {
        for (int j = 1; j <= target_n; ++j) {
          for (int sign : {1, -1}) {
            emit(pi, GridPoint{i, j}, sign,
                 d_class(insertion_type(pi, i, j, sign, order)), 1);
          }
        }
      }
    }
    return out;
  }

  if (family == BijectionFamily::Involution) {
    // Single insertions at path touch points, from involutions one smaller.
    for (const auto& pi :
         enumerate_family(target_n - 1, PermClass::Involution, limit)) {
      for (int sign : {1, -1}) {
        for (int value : {0, 1}) {
          for (const auto& touch : diagonal_touches(pi, order, value, sign)) {
            emit(pi, touch.point, sign,
                 value == 0 ? SourceClass::E1 : SourceClass::E2, 1);
          }
        }
      }
    }
    // Double insertions from involutions two smaller; diagonal points feed
    // the middle class in addition to their own.
    if (target_n >= 2) {
      for (const auto& pi :
           enumerate_family(target_n - 2, PermClass::Involution, limit)) {
        const int m = pi.size();
        for (int i = 1; i <= m + 1; ++i) {
          for (int j = 1; j <= m + 1; ++j) {
            for (int sign : {1, -1}) {
              const InsertionType t = insertion_type(pi, i, j, sign, order);
              if (i != j) {
                emit(pi, GridPoint{i, j}, sign, cross_class(t, false), 1);
              } else {
                emit(pi, GridPoint{i, i}, sign,
                     t == InsertionType{0, 0} ? SourceClass::E3
                                              : SourceClass::E5,
                     1);
                emit(pi, GridPoint{i, i}, sign, SourceClass::E4, 1);
              }
            }
          }
        }
      }
    }
    return out;
  }

  // Fixed-point-free family: every source is a double insertion; diagonal
  // points are taken twice with occurrence tags.
  if (target_n % 2 != 0) return out;
  if (target_n >= 2) {
    for (const auto& pi : enumerate_family(
             target_n - 2, PermClass::FpfInvolution, limit)) {
      const int m = pi.size();
      for (int i = 1; i <= m + 1; ++i) {
        for (int j = 1; j <= m + 1; ++j) {
          for (int sign : {1, -1}) {
            const InsertionType t = insertion_type(pi, i, j, sign, order);
            if (i != j) {
              emit(pi, GridPoint{i, j}, sign, cross_class(t, true), 1);
            } else {
              const SourceClass cls = t == InsertionType{0, 0}
                                          ? SourceClass::F2
                                          : SourceClass::F4;
              emit(pi, GridPoint{i, i}, sign, cls, 1);
              emit(pi, GridPoint{i, i}, sign, cls, 2);
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<SourcePair> enumerate_sources(BijectionFamily family, Order order,
                                          int target_n) {
  return enumerate_sources(family, order, target_n, enumeration_limit());
}

std::string class_label(SourceClass cls, int sign) {
  static const char* names[] = {"D00", "D10", "D01", "D11", "E1", "E2", "E3",
                                "E4", "E5", "F1", "F2", "F3", "F4", "F5"};
  std::string label = names[static_cast<int>(cls)];
  label += sign > 0 ? '+' : '-';
  return label;
}

namespace {

PermClass bijection_perm_class(BijectionFamily family) {
  switch (family) {
    case BijectionFamily::TwoSided:
      return PermClass::All;
    case BijectionFamily::Involution:
      return PermClass::Involution;
    case BijectionFamily::FpfInvolution:
      return PermClass::FpfInvolution;
  }
  return PermClass::All;
}

bool in_family(const SignedPermutation& pi, BijectionFamily family) {
  switch (family) {
    case BijectionFamily::TwoSided:
      return true;
    case BijectionFamily::Involution:
      return pi.is_involution();
    case BijectionFamily::FpfInvolution:
      return pi.is_fpf_involution();
  }
  return false;
}

// Runs fn(begin, end) over [0, count) split into `jobs` contiguous shards.
void parallel_for(size_t count, int jobs,
                  const std::function<void(size_t, size_t, size_t)>& fn) {
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
  }
  const size_t shards = std::min<size_t>(static_cast<size_t>(jobs),
                                         std::max<size_t>(count, 1));
  if (shards <= 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(shards);
  for (size_t s = 0; s < shards; ++s) {
    const size_t begin = count * s / shards;
    const size_t end = count * (s + 1) / shards;
    threads.emplace_back([=, &fn] { fn(s, begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

BijectionReport verify_bijection(BijectionFamily family, Order order, int n,
                                 unsigned long long limit, int jobs) {
  BijectionReport rep;
  rep.family = family;
  rep.order = order;
  rep.n = n;

  const std::vector<SourcePair> sources =
      enumerate_sources(family, order, n, limit);
  rep.sources = sources.size();

  const int shard_count =
      jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : jobs;
  const size_t shards =
      std::max<size_t>(1, static_cast<size_t>(std::max(shard_count, 1)));

  // Shard-local results, merged in shard order so the report is
  // parallelism-independent.
  std::vector<std::string> shard_witness(shards);
  std::vector<std::map<std::string, unsigned long long>> shard_counts(shards);

  parallel_for(sources.size(), static_cast<int>(shards),
               [&](size_t shard, size_t begin, size_t end) {
                 auto& witness = shard_witness[shard];
                 auto& counts = shard_counts[shard];
                 for (size_t k = begin; k < end && witness.empty(); ++k) {
                   const SourcePair& src = sources[k];
                   ++counts[class_label(src.cls, src.sign)];
                   TargetPair t;
                   try {
                     t = forward_map(src);
                   } catch (const std::exception& e) {
                     witness = std::string("forward_map failed: ") + e.what();
                     continue;
                   }
                   if (t.perm.size() != n || !in_family(t.perm, family)) {
                     witness = "forward image (" + t.perm.str() +
                               ") leaves the target family";
                     continue;
                   }
                   SourcePair back;
                   try {
                     back = inverse_map(family, order, t);
                   } catch (const std::exception& e) {
                     witness = std::string("inverse_map failed on (") +
                               t.perm.str() + ", " + std::to_string(t.index) +
                               "): " + e.what();
                     continue;
                   }
                   if (!(back == src)) {
                     witness = "inverse(forward(.)) != id at source (" +
                               src.perm.str() + "), target (" + t.perm.str() +
                               ", " + std::to_string(t.index) + ")";
                   }
                 }
               });

  std::string witness;
  for (const auto& w : shard_witness) {
    if (!w.empty()) {
      witness = w;
      break;
    }
  }
  for (const auto& counts : shard_counts) {
    for (const auto& [label, count] : counts) {
      rep.class_counts[label] += count;
    }
  }

  std::vector<SignedPermutation> targets;
  if (witness.empty()) {
    targets = enumerate_family(n, bijection_perm_class(family), limit);
    rep.targets = static_cast<unsigned long long>(targets.size()) *
                  static_cast<unsigned long long>(n);
    if (rep.targets != rep.sources) {
      std::ostringstream msg;
      msg << "source count " << rep.sources << " != target count "
          << rep.targets;
      witness = msg.str();
    }
  }

  if (witness.empty()) {
    std::fill(shard_witness.begin(), shard_witness.end(), std::string());
    parallel_for(
        targets.size(), static_cast<int>(shards),
        [&](size_t shard, size_t begin, size_t end) {
          auto& w = shard_witness[shard];
          for (size_t k = begin; k < end && w.empty(); ++k) {
            for (int r = 1; r <= n && w.empty(); ++r) {
              const TargetPair t{targets[k], r};
              try {
                const SourcePair src = inverse_map(family, order, t);
                const TargetPair round = forward_map(src);
                if (!(round == t)) {
                  w = "forward(inverse(.)) != id at target (" + t.perm.str() +
                      ", " + std::to_string(r) + ")";
                }
              } catch (const std::exception& e) {
                w = "round trip failed on (" + t.perm.str() + ", " +
                    std::to_string(r) + "): " + e.what();
              }
            }
          }
        });
    for (const auto& w : shard_witness) {
      if (!w.empty()) {
        witness = w;
        break;
      }
    }
  }

  rep.witness = witness;
  rep.ok = witness.empty();
  return rep;
}

const char* family_name(BijectionFamily family) {
  switch (family) {
    case BijectionFamily::TwoSided:
      return "two-sided";
    case BijectionFamily::Involution:
      return "involution";
    case BijectionFamily::FpfInvolution:
      return "fpf-involution";
  }
  return "?";
}

}  // namespace signedperm
