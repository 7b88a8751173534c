#include "signedperm/genfun.hpp"

#include <sstream>

namespace signedperm {

TruncSeries::TruncSeries(int max_x, int max_t) : mx_(max_x), mt_(max_t) {
  if (max_x < 0 || max_t < 0) {
    throw std::invalid_argument("series truncation degrees must be >= 0");
  }
  c_.assign(static_cast<size_t>(mx_ + 1) * static_cast<size_t>(mt_ + 1), 0);
}

const BigInt& TruncSeries::coeff(int a, int b) const {
  if (a < 0 || a > mx_ || b < 0 || b > mt_) {
    throw std::out_of_range("series coefficient outside truncation");
  }
  return c_[static_cast<size_t>(a) * static_cast<size_t>(mt_ + 1) +
            static_cast<size_t>(b)];
}

void TruncSeries::set(int a, int b, BigInt v) {
  if (a < 0 || a > mx_ || b < 0 || b > mt_) {
    throw std::out_of_range("series coefficient outside truncation");
  }
  c_[static_cast<size_t>(a) * static_cast<size_t>(mt_ + 1) +
     static_cast<size_t>(b)] = std::move(v);
}

void TruncSeries::add_at(int a, int b, const BigInt& v) {
  if (a < 0 || a > mx_ || b < 0 || b > mt_) return;  // beyond truncation
  c_[static_cast<size_t>(a) * static_cast<size_t>(mt_ + 1) +
     static_cast<size_t>(b)] += v;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (mx_ != o.mx_ || mt_ != o.mt_) {
    throw std::invalid_argument("series truncations differ");
  }
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.mx_ != b.mx_ || a.mt_ != b.mt_) {
    throw std::invalid_argument("series truncations differ");
  }
  TruncSeries r(a.mx_, a.mt_);
  for (int i = 0; i <= a.mx_; ++i) {
    for (int j = 0; j <= a.mt_; ++j) {
      const BigInt& av = a.coeff(i, j);
      if (av == 0) continue;
      for (int k = 0; i + k <= a.mx_; ++k) {
        for (int l = 0; j + l <= a.mt_; ++l) {
          const BigInt& bv = b.coeff(k, l);
          if (bv == 0) continue;
          r.add_at(i + k, j + l, av * bv);
        }
      }
    }
  }
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.mx_ == b.mx_ && a.mt_ == b.mt_ && a.c_ == b.c_;
}

TruncSeries recip(const TruncSeries& a) {
  const BigInt& a00 = a.coeff(0, 0);
  if (a00 != 1 && a00 != -1) {
    throw std::invalid_argument(
        "series reciprocal requires constant term +1 or -1");
  }
  TruncSeries b(a.max_x(), a.max_t());
  // Solve a*b = 1 coefficient by coefficient; every dependency (i-k, j-l)
  // is componentwise smaller, so row-major order works.
  for (int i = 0; i <= a.max_x(); ++i) {
    for (int j = 0; j <= a.max_t(); ++j) {
      BigInt acc = (i == 0 && j == 0) ? BigInt(1) : BigInt(0);
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          if (k == 0 && l == 0) continue;
          if (a.coeff(k, l) == 0) continue;
          acc -= a.coeff(k, l) * b.coeff(i - k, j - l);
        }
      }
      b.set(i, j, a00 == 1 ? acc : -acc);
    }
  }
  return b;
}

TruncSeries pow(const TruncSeries& a, int k) {
  if (k < 0) throw std::invalid_argument("series power requires k >= 0");
  TruncSeries r(a.max_x(), a.max_t());
  r.set(0, 0, 1);
  for (int step = 0; step < k; ++step) r = r * a;
  return r;
}

TruncSeries inv_pow_series(int dx, int dt, long long e, int max_x, int max_t) {
  if (e < 0) throw std::invalid_argument("inv_pow_series requires e >= 0");
  TruncSeries r(max_x, max_t);
  r.set(0, 0, 1);
  if (e == 0) return r;
  if (dx == 0 && dt == 0) {
    throw std::invalid_argument("inv_pow_series requires dx or dt positive");
  }
  BigInt binom = 1;  // C(e-1+j, j), built incrementally
  for (long long j = 1;; ++j) {
    const long long a = j * dx;
    const long long b = j * dt;
    if ((dx > 0 && a > max_x) || (dt > 0 && b > max_t)) break;
    binom = binom * (e - 1 + j) / j;
    r.add_at(static_cast<int>(a), static_cast<int>(b), binom);
  }
  return r;
}

TruncSeries lhs_series(SeriesIdentity id, int max_x, int max_t,
                       unsigned long long limit) {
  const PermClass family = id == SeriesIdentity::Involution
                               ? PermClass::Involution
                               : PermClass::FpfInvolution;
  TruncSeries total(max_x, max_t);
  for (int n = 0; n <= max_x; ++n) {
    if (family == PermClass::FpfInvolution && n % 2 != 0) continue;
    const std::vector<long long> vec =
        n == 0 ? std::vector<long long>{1}
               : descent_vector(n, family, Order::R, limit);
    const TruncSeries geo = inv_pow_series(0, 1, n + 1, max_x, max_t);
    TruncSeries term(max_x, max_t);
    for (size_t k = 0; k < vec.size(); ++k) {
      if (vec[k] == 0) continue;
      term.add_at(n, static_cast<int>(k), BigInt(vec[k]));
    }
    total += term * geo;
  }
  return total;
}

TruncSeries lhs_series(SeriesIdentity id, int max_x, int max_t) {
  return lhs_series(id, max_x, max_t, enumeration_limit());
}

TruncSeries rhs_series(SeriesIdentity id, int max_x, int max_t) {
  TruncSeries total(max_x, max_t);
  for (int m = 0; m <= max_t; ++m) {
    TruncSeries term = inv_pow_series(2, 0, static_cast<long long>(m) * m,
                                      max_x, max_t);
    if (id == SeriesIdentity::Involution) {
      term = term * inv_pow_series(1, 0, 2 * m + 1, max_x, max_t);
    }
    TruncSeries tm(max_x, max_t);
    tm.set(0, m, 1);
    total += tm * term;
  }
  return total;
}

std::optional<SeriesMismatch> compare_series(const TruncSeries& lhs,
                                             const TruncSeries& rhs) {
  if (lhs.max_x() != rhs.max_x() || lhs.max_t() != rhs.max_t()) {
    throw std::invalid_argument("series truncations differ");
  }
  for (int a = 0; a <= lhs.max_x(); ++a) {
    for (int b = 0; b <= lhs.max_t(); ++b) {
      if (lhs.coeff(a, b) != rhs.coeff(a, b)) {
        return SeriesMismatch{a, b, lhs.coeff(a, b), rhs.coeff(a, b)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace signedperm
