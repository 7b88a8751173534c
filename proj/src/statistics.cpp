#include "signedperm/statistics.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace signedperm {

bool value_less(int a, int b, Order order) {
  if (order == Order::R && a < 0 && b < 0) {
    // Among negatives the r-order compares magnitudes: -1 < -2 < ... < -n.
    return -a < -b;
  }
  return a < b;
}

std::vector<int> descent_set(const SignedPermutation& pi, Order order) {
  std::vector<int> des;
  int prev = 0;  // pi_0 = 0
  for (int i = 0; i < pi.size(); ++i) {
    const int cur = pi.at(i + 1);
    if (value_less(cur, prev, order)) des.push_back(i);
    prev = cur;
  }
  return des;
}

int des(const SignedPermutation& pi, Order order) {
  int count = 0;
  int prev = 0;
  for (int i = 1; i <= pi.size(); ++i) {
    const int cur = pi.at(i);
    if (value_less(cur, prev, order)) ++count;
    prev = cur;
  }
  return count;
}

int ides(const SignedPermutation& pi, Order order) {
  return des(pi.inverse(), order);
}

Triangle two_sided_triangle(int n, Order order, unsigned long long limit) {
  Triangle t;
  t.n = n;
  t.order = order;
  t.cell.assign(static_cast<size_t>(n) + 1,
                std::vector<long long>(static_cast<size_t>(n) + 1, 0));
  for (const auto& pi : enumerate_family(n, PermClass::All, limit)) {
    ++t.cell[static_cast<size_t>(des(pi, order))]
            [static_cast<size_t>(ides(pi, order))];
  }
  return t;
}

Triangle two_sided_triangle(int n, Order order) {
  return two_sided_triangle(n, order, enumeration_limit());
}

std::vector<long long> eulerian_vector(int n, Order order,
                                       unsigned long long limit) {
  return descent_vector(n, PermClass::All, order, limit);
}

std::vector<long long> eulerian_vector(int n, Order order) {
  return eulerian_vector(n, order, enumeration_limit());
}

std::vector<long long> descent_vector(int n, PermClass family, Order order,
                                      unsigned long long limit) {
  std::vector<long long> counts(static_cast<size_t>(n) + 1, 0);
  for (const auto& pi : enumerate_family(n, family, limit)) {
    ++counts[static_cast<size_t>(des(pi, order))];
  }
  return counts;
}

std::vector<long long> descent_vector(int n, PermClass family, Order order) {
  return descent_vector(n, family, order, enumeration_limit());
}

BivarPoly BivarPoly::zero(int deg_s, int deg_t) {
  BivarPoly p;
  p.c.assign(static_cast<size_t>(deg_s) + 1,
             std::vector<long long>(static_cast<size_t>(deg_t) + 1, 0));
  return p;
}

long long BivarPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0) return 0;
  const size_t si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
  if (si >= c.size() || sj >= c[si].size()) return 0;
  return c[si][sj];
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (c.size() < o.c.size()) c.resize(o.c.size());
  for (size_t i = 0; i < o.c.size(); ++i) {
    if (c[i].size() < o.c[i].size()) c[i].resize(o.c[i].size(), 0);
    for (size_t j = 0; j < o.c[i].size(); ++j) c[i][j] += o.c[i][j];
  }
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  size_t bt = 0;
  for (const auto& row : b.c) bt = std::max(bt, row.size());
  size_t at = 0;
  for (const auto& row : a.c) at = std::max(at, row.size());
  if (a.c.empty() || b.c.empty() || at == 0 || bt == 0) return BivarPoly{};
  BivarPoly r = BivarPoly::zero(static_cast<int>(a.c.size() + b.c.size() - 2),
                                static_cast<int>(at + bt - 2));
  for (size_t i = 0; i < a.c.size(); ++i) {
    for (size_t j = 0; j < a.c[i].size(); ++j) {
      if (a.c[i][j] == 0) continue;
      for (size_t k = 0; k < b.c.size(); ++k) {
        for (size_t l = 0; l < b.c[k].size(); ++l) {
          r.c[i + k][j + l] += a.c[i][j] * b.c[k][l];
        }
      }
    }
  }
  return r;
}

BivarPoly BivarPoly::scaled(long long k) const {
  BivarPoly r = *this;
  for (auto& row : r.c) {
    for (auto& v : row) v *= k;
  }
  return r;
}

BivarPoly BivarPoly::d_ds() const {
  BivarPoly r;
  if (c.size() <= 1) return r;
  r.c.resize(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) {
    r.c[i - 1].resize(c[i].size());
    for (size_t j = 0; j < c[i].size(); ++j) {
      r.c[i - 1][j] = static_cast<long long>(i) * c[i][j];
    }
  }
  return r;
}

BivarPoly BivarPoly::d_dt() const {
  BivarPoly r;
  r.c.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].size() <= 1) continue;
    r.c[i].resize(c[i].size() - 1);
    for (size_t j = 1; j < c[i].size(); ++j) {
      r.c[i][j - 1] = static_cast<long long>(j) * c[i][j];
    }
  }
  return r;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
  const size_t rows = std::max(a.c.size(), b.c.size());
  for (size_t i = 0; i < rows; ++i) {
    size_t cols = 0;
    if (i < a.c.size()) cols = a.c[i].size();
    if (i < b.c.size()) cols = std::max(cols, b.c[i].size());
    for (size_t j = 0; j < cols; ++j) {
      if (a.coeff(static_cast<int>(i), static_cast<int>(j)) !=
          b.coeff(static_cast<int>(i), static_cast<int>(j))) {
        return false;
      }
    }
  }
  return true;
}

BivarPoly bivar_term(long long k, int i, int j) {
  BivarPoly p = BivarPoly::zero(i, j);
  p.c[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
  return p;
}

BivarPoly two_sided_polynomial(int n, Order order, unsigned long long limit) {
  BivarPoly p = BivarPoly::zero(n, n);
  for (const auto& pi : enumerate_family(n, PermClass::All, limit)) {
    ++p.c[static_cast<size_t>(des(pi, order))]
         [static_cast<size_t>(ides(pi, order))];
  }
  return p;
}

BivarPoly two_sided_polynomial(int n, Order order) {
  return two_sided_polynomial(n, order, enumeration_limit());
}

std::string triangle_csv(const Triangle& t) {
  std::ostringstream out;
  out << "i\\j";
  for (int j = 0; j <= t.n; ++j) out << ',' << j;
  out << '\n';
  for (int i = 0; i <= t.n; ++i) {
    out << i;
    for (int j = 0; j <= t.n; ++j) {
      out << ',' << t.cell[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    out << '\n';
  }
  return out.str();
}

std::string triangle_json(const Triangle& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["order"] = order_name(t.order);
  j["counts"] = t.cell;
  return j.dump();
}

const char* order_name(Order order) {
  return order == Order::Natural ? "natural" : "r";
}

}  // namespace signedperm
