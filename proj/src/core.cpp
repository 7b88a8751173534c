#include "signedperm/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace signedperm {

namespace {

// Saturating multiply for the family-size formulas.
unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  unsigned long long r;
  if (__builtin_mul_overflow(a, b, &r)) {
    return std::numeric_limits<unsigned long long>::max();
  }
  return r;
}

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
  unsigned long long r;
  if (__builtin_add_overflow(a, b, &r)) {
    return std::numeric_limits<unsigned long long>::max();
  }
  return r;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> window)
    : win_(std::move(window)) {
  const int n = static_cast<int>(win_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int i = 0; i < n; ++i) {
    const int mag = std::abs(win_[static_cast<size_t>(i)]);
    if (mag < 1 || mag > n) {
      std::ostringstream msg;
      msg << "window entry at position " << (i + 1) << " has magnitude " << mag
          << ", outside 1.." << n;
      throw std::invalid_argument(msg.str());
    }
    if (seen[static_cast<size_t>(mag)]) {
      std::ostringstream msg;
      msg << "window entry at position " << (i + 1) << " repeats magnitude "
          << mag;
      throw std::invalid_argument(msg.str());
    }
    seen[static_cast<size_t>(mag)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::parse(const std::string& text) {
  std::vector<int> w;
  std::string token;
  std::istringstream in(text);
  bool any_token = false;
  while (std::getline(in, token, ',')) {
    any_token = true;
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse window entry '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(
                                     token[pos]))) {
      ++pos;
    }
    if (pos != token.size()) {
      throw std::invalid_argument("cannot parse window entry '" + token + "'");
    }
    w.push_back(value);
  }
  if (!any_token) {
    // Empty or whitespace-only text denotes the unique element of B_0.
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("cannot parse window '" + text + "'");
      }
    }
  }
  return SignedPermutation(std::move(w));
}

int SignedPermutation::image(int a) const {
  const int n = size();
  const int mag = std::abs(a);
  if (mag < 1 || mag > n) {
    throw std::out_of_range("image() argument outside {-n..n} \\ {0}");
  }
  const int v = win_[static_cast<size_t>(mag) - 1];
  return a > 0 ? v : -v;
}

SignedPermutation SignedPermutation::inverse() const {
  const int n = size();
  std::vector<int> inv(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int v = at(i);
    if (v > 0) {
      inv[static_cast<size_t>(v) - 1] = i;
    } else {
      inv[static_cast<size_t>(-v) - 1] = -i;
    }
  }
  return SignedPermutation(std::move(inv));
}

int SignedPermutation::negative_count() const {
  return static_cast<int>(
      std::count_if(win_.begin(), win_.end(), [](int v) { return v < 0; }));
}

bool SignedPermutation::is_involution() const {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    if (image(image(i)) != i) return false;
  }
  return true;
}

bool SignedPermutation::is_fpf_involution() const {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    if (std::abs(at(i)) == i) return false;
  }
  return is_involution();
}

std::string SignedPermutation::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < win_.size(); ++i) {
    if (i > 0) out << ',';
    out << win_[i];
  }
  return out.str();
}

PermClass classify(const SignedPermutation& pi) {
  if (pi.is_fpf_involution()) return PermClass::FpfInvolution;
  if (pi.is_involution()) return PermClass::Involution;
  return PermClass::All;
}

unsigned long long family_size(int n, PermClass c) {
  switch (c) {
    case PermClass::All: {
      unsigned long long r = 1;
      for (int i = 1; i <= n; ++i) r = sat_mul(r, 2ULL * i);
      return r;
    }
    case PermClass::Involution: {
      // T(n) = 2 T(n-1) + 2(n-1) T(n-2): magnitude n is fixed with either
      // sign, or paired with one of n-1 magnitudes with two sign choices.
      unsigned long long prev2 = 1, prev1 = 1;  // T(-1) unused, T(0), T(1)=2
      if (n <= 0) return 1;
      prev1 = 2;
      if (n == 1) return prev1;
      for (int i = 2; i <= n; ++i) {
        const unsigned long long cur =
            sat_add(sat_mul(2, prev1), sat_mul(2ULL * (i - 1), prev2));
        prev2 = prev1;
        prev1 = cur;
      }
      return prev1;
    }
    case PermClass::FpfInvolution: {
      if (n % 2 != 0) return 0;
      // J(2m) = 2(2m-1) J(2m-2): magnitude 2m pairs with any other magnitude
      // with two sign choices.
      unsigned long long r = 1;
      for (int m = 1; 2 * m <= n; ++m) r = sat_mul(r, 2ULL * (2 * m - 1));
      return r;
    }
  }
  return 0;
}

unsigned long long enumeration_limit() {
  if (const char* env = std::getenv("SIGNEDPERM_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 20'000'000ULL;
}

namespace {

// Builds every involution on the magnitude set {1..n} by deciding, for the
// smallest unassigned magnitude, whether it is fixed (two signs) or paired
// with a larger magnitude (two sign patterns per pair).
void build_involutions(int n, bool allow_fixed, std::vector<int>& win,
                       std::vector<bool>& used,
                       std::vector<SignedPermutation>& out) {
  int m = 0;
  for (int i = 1; i <= n; ++i) {
    if (!used[static_cast<size_t>(i)]) {
      m = i;
      break;
    }
  }
  if (m == 0) {
    out.emplace_back(win);
    return;
  }
  used[static_cast<size_t>(m)] = true;
  if (allow_fixed) {
    for (int s : {1, -1}) {
      win[static_cast<size_t>(m) - 1] = s * m;
      build_involutions(n, allow_fixed, win, used, out);
    }
  }
  for (int j = m + 1; j <= n; ++j) {
    if (used[static_cast<size_t>(j)]) continue;
    used[static_cast<size_t>(j)] = true;
    // pi_m = s*j forces pi_j = s*m (involution with the sign rule).
    for (int s : {1, -1}) {
      win[static_cast<size_t>(m) - 1] = s * j;
      win[static_cast<size_t>(j) - 1] = s * m;
      build_involutions(n, allow_fixed, win, used, out);
    }
    used[static_cast<size_t>(j)] = false;
  }
  used[static_cast<size_t>(m)] = false;
}

}  // namespace

std::vector<SignedPermutation> enumerate_family(int n, PermClass c,
                                                unsigned long long limit) {
  if (n < 0) throw std::invalid_argument("enumerate_family: negative n");
  const unsigned long long total = family_size(n, c);
  if (total > limit) {
    std::ostringstream msg;
    msg << "enumerating " << total << " elements exceeds the limit of "
        << limit;
    throw ResourceLimitError(msg.str());
  }
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<size_t>(total));
  if (c == PermClass::All) {
    std::vector<int> mags(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) mags[static_cast<size_t>(i)] = i + 1;
    std::vector<int> win(static_cast<size_t>(n));
    do {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        for (int i = 0; i < n; ++i) {
          const int mag = mags[static_cast<size_t>(i)];
          win[static_cast<size_t>(i)] = (mask >> i) & 1u ? -mag : mag;
        }
        out.emplace_back(win);
      }
    } while (std::next_permutation(mags.begin(), mags.end()));
  } else {
    std::vector<int> win(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    if (c == PermClass::Involution) {
      build_involutions(n, true, win, used, out);
    } else if (n % 2 == 0) {
      build_involutions(n, false, win, used, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPermutation> enumerate_family(int n, PermClass c) {
  return enumerate_family(n, c, enumeration_limit());
}

}  // namespace signedperm
