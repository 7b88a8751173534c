#include "signedperm/recurrences.hpp"

#include <sstream>

namespace signedperm {

namespace {

long long cell(const std::vector<std::vector<long long>>& table, int i,
               int j) {
  if (i < 0 || j < 0) return 0;
  const size_t si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
  if (si >= table.size() || sj >= table[si].size()) return 0;
  return table[si][sj];
}

long long entry(const std::vector<long long>& v, int k) {
  if (k < 0 || static_cast<size_t>(k) >= v.size()) return 0;
  return v[static_cast<size_t>(k)];
}

// One step of the four-term joint recurrence: n * b_n from b_{n-1}.
long long two_sided_rhs(const std::vector<std::vector<long long>>& prev,
                        long long n, long long i, long long j) {
  return (n + i + j + 2 * i * j) * cell(prev, static_cast<int>(i),
                                        static_cast<int>(j)) +
         ((2 * n - 1) * i - (2 * i + 1) * (j - 1)) *
             cell(prev, static_cast<int>(i), static_cast<int>(j - 1)) +
         ((2 * n - 1) * j - (2 * j + 1) * (i - 1)) *
             cell(prev, static_cast<int>(i - 1), static_cast<int>(j)) +
         ((2 * n * n - n) + 2 * (i - 1) * (j - 1) +
          (1 - 2 * n) * (i + j - 2)) *
             cell(prev, static_cast<int>(i - 1), static_cast<int>(j - 1));
}

// One step of the five-term involution recurrence: n * I_{n,k}.
long long involution_rhs(const std::vector<long long>& i1,
                         const std::vector<long long>& i2, long long n,
                         long long k) {
  return (2 * k + 1) * entry(i1, static_cast<int>(k)) +
         (2 * n - 2 * k + 1) * entry(i1, static_cast<int>(k - 1)) +
         (n - 1 + 2 * k * (k + 1)) * entry(i2, static_cast<int>(k)) +
         (2 * (n - 1) + 4 * (n - k - 1) * (k - 1)) *
             entry(i2, static_cast<int>(k - 1)) +
         ((2 * n - 3) * (n - 1) + 2 * (k - 2) * (k - 2 * n + 1)) *
             entry(i2, static_cast<int>(k - 2));
}

// One step of the three-term fixed-point-free recurrence for size 2n under
// either order: n * J_{2n,k} from J_{2n-2}.
long long fpf_rhs(const std::vector<long long>& prev, long long n, long long k,
                  Order order) {
  if (order == Order::Natural) {
    return (k * k + k + n - 1) * entry(prev, static_cast<int>(k)) +
           2 * ((k - 1) * (2 * n - k - 1) + n) *
               entry(prev, static_cast<int>(k - 1)) +
           ((2 * n - k) * (2 * n - k + 1) + (n - 1)) *
               entry(prev, static_cast<int>(k - 2));
  }
  return (k * k + n - 1) * entry(prev, static_cast<int>(k)) +
         (2 * (k - 1) * (2 * n - k) + 1) *
             entry(prev, static_cast<int>(k - 1)) +
         ((k - 2) * (k - 4 * n) + 4 * n * n - 3 * n) *
             entry(prev, static_cast<int>(k - 2));
}

}  // namespace

RecurrenceReport check_two_sided_recurrence(Order order, int n_min, int n_max,
                                            unsigned long long limit) {
  RecurrenceReport rep;
  rep.id = order == Order::Natural ? "rec-b-natural" : "rec-b-r";
  rep.order = order;
  rep.n_min = n_min;
  rep.n_max = n_max;
  if (n_min < 2) throw std::invalid_argument("two-sided recurrence needs n >= 2");
  if (n_max < n_min) throw std::invalid_argument("empty size range");
  auto prev = two_sided_triangle(n_min - 1, order, limit).cell;
  for (int n = n_min; n <= n_max; ++n) {
    const auto cur = two_sided_triangle(n, order, limit).cell;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const long long lhs = static_cast<long long>(n) * cell(cur, i, j);
        const long long rhs = two_sided_rhs(prev, n, i, j);
        if (lhs != rhs) {
          std::ostringstream msg;
          msg << "n=" << n << " i=" << i << " j=" << j << ": n*b=" << lhs
              << " rhs=" << rhs;
          rep.witness = msg.str();
          return rep;
        }
      }
    }
    prev = cur;
  }
  rep.ok = true;
  return rep;
}

std::vector<std::vector<long long>> two_sided_by_recurrence(int n) {
  if (n < 1) throw std::invalid_argument("two_sided_by_recurrence needs n >= 1");
  std::vector<std::vector<long long>> table{{1, 0}, {0, 1}};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::vector<long long>> next(
        static_cast<size_t>(m) + 1,
        std::vector<long long>(static_cast<size_t>(m) + 1, 0));
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m; ++j) {
        const long long rhs = two_sided_rhs(table, m, i, j);
        if (rhs % m != 0) {
          throw std::logic_error("two-sided recurrence step not divisible");
        }
        next[static_cast<size_t>(i)][static_cast<size_t>(j)] = rhs / m;
      }
    }
    table = std::move(next);
  }
  return table;
}

RecurrenceReport check_involution_recurrence(Order order, int n_min, int n_max,
                                             unsigned long long limit) {
  RecurrenceReport rep;
  rep.id = order == Order::Natural ? "rec-i-natural" : "rec-i-r";
  rep.order = order;
  rep.n_min = n_min;
  rep.n_max = n_max;
  if (n_min < 3) throw std::invalid_argument("involution recurrence needs n >= 3");
  if (n_max < n_min) throw std::invalid_argument("empty size range");
  auto at = [&](int n) {
    return descent_vector(n, PermClass::Involution, order, limit);
  };
  auto i2 = at(n_min - 2);
  auto i1 = at(n_min - 1);
  for (int n = n_min; n <= n_max; ++n) {
    const auto cur = at(n);
    for (int k = 0; k <= n; ++k) {
      const long long lhs = static_cast<long long>(n) * entry(cur, k);
      const long long rhs = involution_rhs(i1, i2, n, k);
      if (lhs != rhs) {
        std::ostringstream msg;
        msg << "n=" << n << " k=" << k << ": n*I=" << lhs << " rhs=" << rhs;
        rep.witness = msg.str();
        return rep;
      }
    }
    i2 = std::move(i1);
    i1 = cur;
  }
  rep.ok = true;
  return rep;
}

std::vector<long long> involution_by_recurrence(int n) {
  if (n < 1) throw std::invalid_argument("involution_by_recurrence needs n >= 1");
  std::vector<long long> i2{1, 1};        // size 1
  std::vector<long long> i1{1, 4, 1};     // size 2
  if (n == 1) return i2;
  if (n == 2) return i1;
  for (int m = 3; m <= n; ++m) {
    std::vector<long long> next(static_cast<size_t>(m) + 1, 0);
    for (int k = 0; k <= m; ++k) {
      const long long rhs = involution_rhs(i1, i2, m, k);
      if (rhs % m != 0) {
        throw std::logic_error("involution recurrence step not divisible");
      }
      next[static_cast<size_t>(k)] = rhs / m;
    }
    i2 = std::move(i1);
    i1 = std::move(next);
  }
  return i1;
}

RecurrenceReport check_fpf_recurrence(Order order, int size_min, int size_max,
                                      unsigned long long limit) {
  RecurrenceReport rep;
  rep.id = order == Order::Natural ? "rec-j-natural" : "rec-j-r";
  rep.order = order;
  rep.n_min = size_min;
  rep.n_max = size_max;
  if (size_min < 4 || size_min % 2 != 0 || size_max % 2 != 0) {
    throw std::invalid_argument(
        "fixed-point-free recurrence needs even sizes >= 4");
  }
  if (size_max < size_min) throw std::invalid_argument("empty size range");
  auto prev = descent_vector(size_min - 2, PermClass::FpfInvolution, order,
                             limit);
  for (int size = size_min; size <= size_max; size += 2) {
    const auto cur =
        descent_vector(size, PermClass::FpfInvolution, order, limit);
    const long long n = size / 2;
    for (int k = 0; k <= size; ++k) {
      const long long lhs = n * entry(cur, k);
      const long long rhs = fpf_rhs(prev, n, k, order);
      if (lhs != rhs) {
        std::ostringstream msg;
        msg << "2n=" << size << " k=" << k << ": n*J=" << lhs
            << " rhs=" << rhs;
        rep.witness = msg.str();
        return rep;
      }
    }
    prev = cur;
  }
  rep.ok = true;
  return rep;
}

std::vector<long long> fpf_by_recurrence(int size, Order order) {
  if (size < 2 || size % 2 != 0) {
    throw std::invalid_argument("fpf_by_recurrence needs even size >= 2");
  }
  std::vector<long long> cur = order == Order::Natural
                                   ? std::vector<long long>{0, 2, 0}
                                   : std::vector<long long>{0, 1, 1};
  for (int m = 4; m <= size; m += 2) {
    const long long n = m / 2;
    std::vector<long long> next(static_cast<size_t>(m) + 1, 0);
    for (int k = 0; k <= m; ++k) {
      const long long rhs = fpf_rhs(cur, n, k, order);
      if (rhs % n != 0) {
        throw std::logic_error("fpf recurrence step not divisible");
      }
      next[static_cast<size_t>(k)] = rhs / n;
    }
    cur = std::move(next);
  }
  return cur;
}

namespace {

// Coefficient polynomials of the differential recurrence at size n.
struct DifferentialCoeffs {
  BivarPoly value, ds, dt, dsdt;
};

DifferentialCoeffs differential_coeffs(long long n) {
  const BivarPoly one = bivar_term(1, 0, 0);
  const BivarPoly s = bivar_term(1, 1, 0);
  const BivarPoly t = bivar_term(1, 0, 1);
  const BivarPoly st = s * t;
  const BivarPoly one_s = one + s.scaled(-1);
  const BivarPoly one_t = one + t.scaled(-1);
  DifferentialCoeffs c;
  c.value = st.scaled(2 * n * n - n) + one.scaled(n);
  c.ds = (st * one_s).scaled(2 * n) + s * one_s * one_t;
  c.dt = (st * one_t).scaled(2 * n) + t * one_s * one_t;
  c.dsdt = (st * one_s * one_t).scaled(2);
  return c;
}

BivarPoly differential_rhs(const BivarPoly& prev, long long n) {
  const DifferentialCoeffs c = differential_coeffs(n);
  return c.value * prev + c.ds * prev.d_ds() + c.dt * prev.d_dt() +
         c.dsdt * prev.d_ds().d_dt();
}

}  // namespace

RecurrenceReport check_differential_recurrence(int n_min, int n_max,
                                               unsigned long long limit) {
  RecurrenceReport rep;
  rep.id = "pde";
  rep.order = Order::Natural;
  rep.n_min = n_min;
  rep.n_max = n_max;
  if (n_min < 2) {
    throw std::invalid_argument("differential recurrence needs n >= 2");
  }
  if (n_max < n_min) throw std::invalid_argument("empty size range");
  BivarPoly prev = two_sided_polynomial(n_min - 1, Order::Natural, limit);
  for (int n = n_min; n <= n_max; ++n) {
    const BivarPoly cur = two_sided_polynomial(n, Order::Natural, limit);
    if (!(cur.scaled(n) == differential_rhs(prev, n))) {
      std::ostringstream msg;
      msg << "n=" << n << ": n*P_n differs from the differential expression";
      rep.witness = msg.str();
      return rep;
    }
    prev = cur;
  }
  rep.ok = true;
  return rep;
}

BivarPoly two_sided_poly_by_differential(int n) {
  if (n < 1) {
    throw std::invalid_argument("two_sided_poly_by_differential needs n >= 1");
  }
  BivarPoly p = bivar_term(1, 0, 0) + bivar_term(1, 1, 1);  // 1 + st
  for (int m = 2; m <= n; ++m) {
    BivarPoly rhs = differential_rhs(p, m);
    for (auto& row : rhs.c) {
      for (auto& v : row) {
        if (v % m != 0) {
          throw std::logic_error("differential recurrence step not divisible");
        }
        v /= m;
      }
    }
    p = std::move(rhs);
  }
  return p;
}

}  // namespace signedperm
