#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

/// A set of patterns of a common length, kept sorted and duplicate-free.
struct PatternSet {
  std::vector<Permutation> patterns;

  std::size_t size() const noexcept { return patterns.size(); }
};

/// Membership in A^(k)_n: at most k entries among the first i exceed i, for
/// every i. This is the production test (one linear scan).
bool is_almost_increasing(const Permutation& p, int k);

/// The forbidden set for A^(k): permutations of length 2k+2 whose first k+1
/// entries are {k+2,...,2k+2} and last k+1 entries are {1,...,k+1}.
/// Materialized eagerly, ((k+1)!)^2 patterns.
PatternSet sigma_set(int k);

/// Same predicate as is_almost_increasing, decided by avoidance of sigma_set(k).
bool is_almost_increasing_by_patterns(const Permutation& p, int k);

/// The four patterns 2143, 2413, 3142, 3412.
const PatternSet& x_class_patterns();

/// Membership in the X-class (avoids every pattern of x_class_patterns()).
bool is_x_class(const Permutation& p);

enum class Corner { kLowerLeft, kLowerRight, kUpperLeft, kUpperRight };

std::string_view corner_name(Corner c);

/// Which corner of the array of p holds a dot. When two (opposite) corners do,
/// the upper one wins; for n = 1 all four coincide and the answer is
/// kUpperRight. Returns nullopt when no corner holds a dot, which only happens
/// outside the X-class. Requires n >= 1.
std::optional<Corner> corner_dot(const Permutation& p);

}  // namespace permclass
