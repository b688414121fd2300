#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

/// A permutation of {1,...,n} in one-line notation.
///
/// Indexing through operator() is 1-based: p(i) is the image of i. The empty
/// permutation (n = 0) is a valid value.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(kParse) unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const noexcept { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}
  friend Permutation inverse(const Permutation& p);
  friend Permutation from_trusted_values(std::vector<int> values);

  std::vector<int> values_;
};

/// Builds a Permutation without the bijection check. Only for values produced
/// by code that already guarantees a rearrangement of 1..n.
Permutation from_trusted_values(std::vector<int> values);

/// Parses comma-separated one-line notation ("5,7,2,4"). Whitespace around
/// entries is ignored; the empty string is the empty permutation.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& p);

struct StatVector {
  int cyc = 0;
  int fp = 0;
  int exc = 0;
  int inv = 0;

  friend bool operator==(const StatVector&, const StatVector&) = default;
  friend auto operator<=>(const StatVector&, const StatVector&) = default;
};

StatVector stats(const Permutation& p);

/// True iff some subsequence of `p` is order-isomorphic to `sigma`.
/// Backtracking search; meant for small inputs.
bool contains_pattern(const Permutation& p, const Permutation& sigma);

Permutation inverse(const Permutation& p);
bool is_involution(const Permutation& p);

/// h_i = |{j <= i : p(j) > i}| for i = 1..n.
std::vector<int> height_profile(const Permutation& p);

}  // namespace permclass
