#include "permclass/pattern_classes.hpp"

#include <algorithm>
#include <numeric>

#include "permclass/error.hpp"

namespace permclass {

bool is_almost_increasing(const Permutation& p, int k) {
  const auto h = height_profile(p);
  return std::all_of(h.begin(), h.end(), [k](int hi) { return hi <= k; });
}

PatternSet sigma_set(int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be nonnegative");
  const int half = k + 1;
  std::vector<int> high(static_cast<std::size_t>(half));
  std::vector<int> low(static_cast<std::size_t>(half));
  std::iota(high.begin(), high.end(), half + 1);
  std::iota(low.begin(), low.end(), 1);

  PatternSet set;
  // Both halves are walked in lexicographic order, so the output is sorted.
  do {
    std::vector<int> low_perm = low;
    do {
      std::vector<int> values = high;
      values.insert(values.end(), low_perm.begin(), low_perm.end());
      set.patterns.push_back(from_trusted_values(std::move(values)));
    } while (std::next_permutation(low_perm.begin(), low_perm.end()));
  } while (std::next_permutation(high.begin(), high.end()));
  return set;
}

bool is_almost_increasing_by_patterns(const Permutation& p, int k) {
  const auto set = sigma_set(k);
  return std::none_of(set.patterns.begin(), set.patterns.end(),
                      [&p](const Permutation& sigma) { return contains_pattern(p, sigma); });
}

const PatternSet& x_class_patterns() {
  static const PatternSet set{{
      Permutation({2, 1, 4, 3}),
      Permutation({2, 4, 1, 3}),
      Permutation({3, 1, 4, 2}),
      Permutation({3, 4, 1, 2}),
  }};
  return set;
}

bool is_x_class(const Permutation& p) {
  const auto& set = x_class_patterns();
  return std::none_of(set.patterns.begin(), set.patterns.end(),
                      [&p](const Permutation& sigma) { return contains_pattern(p, sigma); });
}

std::string_view corner_name(Corner c) {
  switch (c) {
    case Corner::kLowerLeft: return "LOWER_LEFT";
    case Corner::kLowerRight: return "LOWER_RIGHT";
    case Corner::kUpperLeft: return "UPPER_LEFT";
    case Corner::kUpperRight: return "UPPER_RIGHT";
  }
  return "?";
}

std::optional<Corner> corner_dot(const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "corner_dot needs n >= 1");
  // Upper corners first, then right before left.
  if (p(n) == n) return Corner::kUpperRight;
  if (p(1) == n) return Corner::kUpperLeft;
  if (p(n) == 1) return Corner::kLowerRight;
  if (p(1) == 1) return Corner::kLowerLeft;
  return std::nullopt;
}

}  // namespace permclass
