#include "permclass/multipoly.hpp"

namespace permclass {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kNumVars; ++i) out.exponents[i] = a.exponents[i] + b.exponents[i];
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return a.exponents > b.exponents;
}

MultiPoly::MultiPoly(long long constant) : MultiPoly(Integer(constant)) {}

MultiPoly::MultiPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

MultiPoly MultiPoly::variable(Var v, std::uint32_t power) {
  Monomial m;
  m.exponents[static_cast<std::size_t>(v)] = power;
  return monomial(m);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Integer& coefficient) {
  MultiPoly p;
  p.add_term(m, coefficient);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer MultiPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<Integer> MultiPoly::as_constant() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_.begin()->first.degree() == 0) return terms_.begin()->second;
  return std::nullopt;
}

MultiPoly MultiPoly::substitute(Var v, const Integer& value) const {
  const auto slot = static_cast<std::size_t>(v);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    reduced.exponents[slot] = 0;
    out.add_term(reduced, c * boost::multiprecision::pow(value, m.exponents[slot]));
  }
  return out;
}

Integer MultiPoly::evaluate(const std::array<Integer, kNumVars>& values) const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m.exponents[i] != 0) term *= boost::multiprecision::pow(values[i], m.exponents[i]);
    }
    total += term;
  }
  return total;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result(1);
  MultiPoly square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const auto e = m.exponents[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += kVarNames[i];
      if (e > 1) factors += '^' + std::to_string(e);
    }
    if (factors.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.str() + '*' + factors;
    }
  }
  return out;
}

MultiPoly q_integer(int k) {
  MultiPoly out;
  for (int i = 0; i < k; ++i) out += MultiPoly::variable(Var::kQ, static_cast<std::uint32_t>(i));
  return out;
}

}  // namespace permclass
