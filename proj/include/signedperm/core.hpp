#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace signedperm {

/// Thrown when an operation would enumerate more objects than the configured
/// budget allows (see enumeration_limit()).
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A signed permutation of {1..n}: a bijection pi on {-n,..,-1,1,..,n} with
/// pi(-a) = -pi(a), stored as the window [pi(1), ..., pi(n)].  The empty
/// window (n = 0) is the unique element of B_0.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Validates that the magnitudes |w_1|,..,|w_n| are a permutation of 1..n.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  /// Parses a comma-separated window such as "-3,1,6,-5,2,4" (spaces allowed,
  /// empty string gives n = 0).
  static SignedPermutation parse(const std::string& text);

  int size() const { return static_cast<int>(win_.size()); }
  /// Window entry pi(pos) for 1 <= pos <= size().
  int at(int pos) const { return win_[static_cast<size_t>(pos) - 1]; }
  /// Image pi(a) for any a in {-n..n} \ {0}.
  int image(int a) const;
  const std::vector<int>& window() const { return win_; }

  SignedPermutation inverse() const;
  /// Number of negative window entries.
  int negative_count() const;
  bool is_involution() const;
  /// Involution with no fixed magnitude (pi(i) != i and pi(i) != -i for all i).
  bool is_fpf_involution() const;

  /// Comma-separated window, e.g. "3,-2,-5,1,-4".
  std::string str() const;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
  friend std::strong_ordering operator<=>(const SignedPermutation& a,
                                          const SignedPermutation& b) {
    return a.win_ <=> b.win_;
  }

 private:
  std::vector<int> win_;
};

/// Families of signed permutations.  `All` doubles as the classification
/// result for elements that are not involutions.
enum class PermClass { All, Involution, FpfInvolution };

/// Most specific class of pi.
PermClass classify(const SignedPermutation& pi);

/// |B_n|, the involution count, or the fixed-point-free involution count.
/// Saturates at the maximum representable value on overflow.
unsigned long long family_size(int n, PermClass c);

/// Enumeration budget: value of SIGNEDPERM_MAX_ENUM if set, else 20'000'000.
unsigned long long enumeration_limit();

/// All members of the family in increasing lexicographic window order
/// (integer comparison, so -k precedes +k).  Throws ResourceLimitError if the
/// family is larger than `limit`.
std::vector<SignedPermutation> enumerate_family(int n, PermClass c,
                                                unsigned long long limit);
std::vector<SignedPermutation> enumerate_family(int n, PermClass c);

}  // namespace signedperm
