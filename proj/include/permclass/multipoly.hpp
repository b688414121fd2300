#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permclass {

using Integer = boost::multiprecision::cpp_int;

/// The formal variables of the refined generating functions.
enum class Var : std::size_t { kT = 0, kU = 1, kV = 2, kQ = 3 };

inline constexpr std::size_t kNumVars = 4;
inline constexpr std::array<char, kNumVars> kVarNames = {'t', 'u', 'v', 'q'};

struct Monomial {
  std::array<std::uint32_t, kNumVars> exponents{};

  std::uint32_t degree() const noexcept {
    return exponents[0] + exponents[1] + exponents[2] + exponents[3];
  }
  std::uint32_t operator[](Var v) const noexcept {
    return exponents[static_cast<std::size_t>(v)];
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Output order for monomials: ascending total degree, then lexicographic in
/// (t, u, v, q) with higher powers of earlier variables first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse polynomial in t, u, v, q with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Integer, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(long long constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v, std::uint32_t power = 1);
  static MultiPoly monomial(const Monomial& m, const Integer& coefficient = 1);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Integer coefficient(const Monomial& m) const;
  Integer constant_term() const { return coefficient(Monomial{}); }

  /// The value when no variable occurs, nullopt otherwise.
  std::optional<Integer> as_constant() const;

  /// Replaces `v` by an integer.
  MultiPoly substitute(Var v, const Integer& value) const;

  /// Evaluates with every variable replaced by `values`.
  Integer evaluate(const std::array<Integer, kNumVars>& values) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  void add_term(const Monomial& m, const Integer& coefficient);

 private:
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// E.g. "1 + 2*t*u^2 - q^3"; "0" for the zero polynomial.
std::string to_string(const MultiPoly& p);

/// [k]_q = 1 + q + ... + q^(k-1).
MultiPoly q_integer(int k);

}  // namespace permclass
