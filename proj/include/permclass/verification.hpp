#pragma once

#include <string_view>
#include <vector>

#include "permclass/oracle.hpp"

namespace permclass {

// Named exhaustive checks. Each returns one CheckReport; the domain bounds are
// arguments so that callers can shrink them.

CheckReport check_wx_bijection(int max_n);
CheckReport check_wx_inverse_on_xclass(int max_n);
CheckReport check_wx_image(int max_n);
CheckReport check_aw_bijection(int max_n);
CheckReport check_aw_inverse_on_aip(int max_n);
CheckReport check_aw_image(int max_n);
CheckReport check_zeta_bijection(int max_n);
CheckReport check_zeta_inverse_on_paths(int max_n);
CheckReport check_zeta_image(int max_n);
/// E letters vs returns from above, W vs returns from below, and R letters not
/// followed by E vs points at |y| = 3.
CheckReport check_zeta_structure(int max_n);
CheckReport check_psi_bijection(int max_n);
CheckReport check_psi_image(int max_n);
/// theta(p) is the underlying path of psi(p) and its step heights are h_i.
CheckReport check_theta_heights(int max_n);
/// Removing a corner dot of an X-class permutation stays in the X-class.
CheckReport check_corner_peeling(int max_n);
/// Involutions are exactly the permutations whose psi image is an involution coloring.
CheckReport check_involution_coloring(int max_n);

/// |X_n| = |W_n| = |P_n| = |A^(1)_n| = [x^n] (1-3x)/(1-4x+2x^2).
CheckReport check_equinumerosity(int max_n);

/// is_almost_increasing(p,k) iff path_height(theta(p)) <= k, k in 0..max_k.
CheckReport check_height_theorem(int max_n, int max_k);
/// is_almost_increasing == is_almost_increasing_by_patterns, k in 0..max_k.
CheckReport check_pattern_lemma(int max_n, int max_k);
/// Every X-class permutation has a corner dot.
CheckReport check_corner_lemma(int max_n);
/// |{j<=i : p(j)>i}| == |{j>i : p(j)<=i}| for all i.
CheckReport check_symmetry_identity(int max_n);

/// [x^n] ak_series(k) == |A^(k)_n| by brute force.
CheckReport check_ak_counts(int max_n, int max_k);
/// ak_series(k, order) == the known rational form for k = 1..4.
CheckReport check_rational_forms(int order);
/// F, G and H coefficients equal the brute-force stat-table polynomials.
CheckReport check_refined_series(int max_n, int min_k, int max_k);
/// F(1,1,1) == G(1,1,1) == ak as series.
CheckReport check_specializations(int max_k, int order);
/// Unbounded ak gives n!, unbounded H at q=u=v=1 gives involution counts.
CheckReport check_unbounded_limits(int max_n_factorial, int max_n_involutions);

/// Self-test of the harness: a check with a deliberately broken inverse must
/// fail and carry a counterexample. Passes when that happens.
CheckReport check_harness_self_test();

/// The same broken-inverse check, reported as is (fails). Used to inject a
/// fault into a verification run.
CheckReport injected_fault_check();

enum class VerifySuite { kBijections, kSeries, kAll };

struct VerifyOptions {
  /// Upper bound for every exhaustive domain; the defaults below apply when larger.
  int max_n = 9;
  bool inject_fault = false;
};

/// Runs the suite with bounds min(max_n, default per check).
std::vector<CheckReport> run_verification(VerifySuite suite, const VerifyOptions& options);

/// Closed forms of A^(k)(x) for k = 1..4 as numerator/denominator coefficients.
struct RationalForm {
  int k;
  std::vector<Integer> numerator;
  std::vector<Integer> denominator;
};
const std::vector<RationalForm>& known_rational_forms();

}  // namespace permclass
