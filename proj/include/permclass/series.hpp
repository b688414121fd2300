#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permclass/multipoly.hpp"
#include "permclass/paths_words.hpp"

namespace permclass {

/// Power series in x truncated after x^order, with MultiPoly coefficients.
/// All arithmetic is exact modulo x^(order+1).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<MultiPoly> coefficients);

  /// An integer polynomial in x (coefficients listed from x^0), truncated.
  static TruncatedSeries from_integers(const std::vector<Integer>& coefficients, int order);

  int order() const noexcept { return order_; }
  const MultiPoly& operator[](int n) const { return coefficients_.at(static_cast<std::size_t>(n)); }
  MultiPoly& operator[](int n) { return coefficients_.at(static_cast<std::size_t>(n)); }
  const std::vector<MultiPoly>& coefficients() const noexcept { return coefficients_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const MultiPoly& scalar, const TruncatedSeries& s);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Multiplies by x^k.
  TruncatedSeries shifted(int k) const;

  TruncatedSeries substitute(Var v, const Integer& value) const;

  /// Integer coefficients, when no variable occurs in any of them.
  std::optional<std::vector<Integer>> as_integers() const;

 private:
  void require_same_order(const TruncatedSeries& other) const;

  int order_;
  std::vector<MultiPoly> coefficients_;
};

/// Throws Error(kNonunitConstant) unless the x^0 coefficient is 1 or -1, the
/// only units of Z[t,u,v,q].
TruncatedSeries reciprocal(const TruncatedSeries& s);

/// numer / denom expanded to x^order. denom must start with 1 or -1.
TruncatedSeries rational_series(const std::vector<Integer>& numer,
                                const std::vector<Integer>& denom, int order);

/// Step weights of a weighted Motzkin path family.
struct WeightProfile {
  std::string name;
  /// Weight of a level step at height h >= 0.
  std::function<MultiPoly(int)> level_weight;
  /// Joint weight of an up step into height h >= 1 and its matching down step.
  std::function<MultiPoly(int)> rise_fall_weight;
};

/// level 2h+1, rise/fall h^2: counts A^(k)_n.
WeightProfile ak_profile();
/// level h(1+v)+tu, rise/fall h(h-1+t)v: t^cyc u^fp v^exc.
WeightProfile f_profile();
/// level (1+v) q^h [h]_q + u q^(2h), rise/fall v q^(2h-1) [h]_q^2: q^inv u^fp v^exc.
WeightProfile g_profile();
/// level u q^(2h), rise/fall v q^(2h-1) (1+q^2+...+q^(2h-2)): involutions only.
WeightProfile h_profile();

/// Bottom-up evaluation of the continued fraction of depth k:
///   C_k = 1 / (1 - level(k) x),
///   C_h = 1 / (1 - level(h) x - rise_fall(h+1) x^2 C_{h+1}),
/// returning C_0. The x^n coefficient is the weighted count of Motzkin paths of
/// length n and height at most k.
TruncatedSeries cf_series(const WeightProfile& profile, int k, int order);

/// Depth floor(order/2) suffices: no path of length <= order rises higher.
TruncatedSeries unbounded_series(const WeightProfile& profile, int order);

TruncatedSeries ak_series(int k, int order);
TruncatedSeries f_series(int k, int order);
TruncatedSeries g_series(int k, int order);
TruncatedSeries h_series(int k, int order);

/// Initial terms (b_1, b_2) as sometimes quoted with the recurrence
/// b_n = 4b_{n-1} - 2b_{n-2}. The quoted b_2 = 1 disagrees with enumeration
/// (W_2 = {E, W}); every count here uses b_2 = 2, the x^2 coefficient below.
inline constexpr std::array<int, 2> kQuotedInitialTerms = {1, 1};

/// (1-3x)/(1-4x+2x^2), the counting series of the X-class.
TruncatedSeries xclass_series(int order);

/// Colorings that come from involutions: every level step has color 0 and
/// every down step repeats the color of its matching up step.
bool is_involution_coloring(const ColoredMotzkinPath& path);

/// One "n: <polynomial>" line per power of x.
std::string format_plain(const TruncatedSeries& s);

/// Integer coefficients joined by commas; nullopt if a variable remains.
std::optional<std::string> format_sequence(const TruncatedSeries& s);

}  // namespace permclass
