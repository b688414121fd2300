#include "permclass/series.hpp"

#include <stdexcept>

#include "permclass/error.hpp"

namespace permclass {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw Error(ErrorCode::kInvalidArgument, "series order must be nonnegative");
  coefficients_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<MultiPoly> coefficients)
    : TruncatedSeries(order) {
  const auto count = std::min(coefficients.size(), coefficients_.size());
  for (std::size_t i = 0; i < count; ++i) coefficients_[i] = std::move(coefficients[i]);
}

TruncatedSeries TruncatedSeries::from_integers(const std::vector<Integer>& coefficients,
                                               int order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i < coefficients.size() && i <= static_cast<std::size_t>(order); ++i) {
    s.coefficients_[i] = MultiPoly(coefficients[i]);
  }
  return s;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& other) const {
  if (order_ != other.order_) {
    throw Error(ErrorCode::kInvalidArgument, "series orders differ: " + std::to_string(order_) +
                                                 " vs " + std::to_string(other.order_));
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_order(b);
  TruncatedSeries out(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries operator*(const MultiPoly& scalar, const TruncatedSeries& s) {
  TruncatedSeries out(s.order_);
  for (int i = 0; i <= s.order_; ++i) out[i] = scalar * s[i];
  return out;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  TruncatedSeries out(order_);
  for (int i = 0; i + k <= order_; ++i) out[i + k] = (*this)[i];
  return out;
}

TruncatedSeries TruncatedSeries::substitute(Var v, const Integer& value) const {
  TruncatedSeries out(order_);
  for (int i = 0; i <= order_; ++i) out[i] = (*this)[i].substitute(v, value);
  return out;
}

std::optional<std::vector<Integer>> TruncatedSeries::as_integers() const {
  std::vector<Integer> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) {
    auto value = c.as_constant();
    if (!value) return std::nullopt;
    out.push_back(*value);
  }
  return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
  const auto c0 = s[0].as_constant();
  if (!c0 || (*c0 != 1 && *c0 != -1)) {
    throw Error(ErrorCode::kNonunitConstant,
                "constant coefficient " + to_string(s[0]) + " is not invertible");
  }
  // b_0 = 1/c_0 = c_0;  b_n = -b_0 * sum_{i=1..n} c_i b_{n-i}
  const MultiPoly b0(*c0);
  TruncatedSeries out(s.order());
  out[0] = b0;
  for (int n = 1; n <= s.order(); ++n) {
    MultiPoly acc;
    for (int i = 1; i <= n; ++i) {
      if (s[i].is_zero() || out[n - i].is_zero()) continue;
      acc += s[i] * out[n - i];
    }
    out[n] = -(b0 * acc);
  }
  return out;
}

TruncatedSeries rational_series(const std::vector<Integer>& numer,
                                const std::vector<Integer>& denom, int order) {
  return TruncatedSeries::from_integers(numer, order) *
         reciprocal(TruncatedSeries::from_integers(denom, order));
}

namespace {

MultiPoly var(Var v, int power = 1) {
  return MultiPoly::variable(v, static_cast<std::uint32_t>(power));
}

}  // namespace

WeightProfile ak_profile() {
  return {"ak", [](int h) { return MultiPoly(2LL * h + 1); },
          [](int h) { return MultiPoly(static_cast<long long>(h) * h); }};
}

WeightProfile f_profile() {
  const auto t = var(Var::kT);
  const auto u = var(Var::kU);
  const auto v = var(Var::kV);
  return {"f",
          [=](int h) { return MultiPoly(h) * (MultiPoly(1) + v) + t * u; },
          [=](int h) { return MultiPoly(h) * (MultiPoly(h - 1) + t) * v; }};
}

WeightProfile g_profile() {
  const auto u = var(Var::kU);
  const auto v = var(Var::kV);
  return {"g",
          [=](int h) {
            return (MultiPoly(1) + v) * var(Var::kQ, h) * q_integer(h) + u * var(Var::kQ, 2 * h);
          },
          [=](int h) { return v * var(Var::kQ, 2 * h - 1) * pow(q_integer(h), 2); }};
}

WeightProfile h_profile() {
  const auto u = var(Var::kU);
  const auto v = var(Var::kV);
  return {"h", [=](int h) { return u * var(Var::kQ, 2 * h); },
          [=](int h) {
            MultiPoly even_q;
            for (int i = 0; i < h; ++i) even_q += var(Var::kQ, 2 * i);
            return v * var(Var::kQ, 2 * h - 1) * even_q;
          }};
}

TruncatedSeries cf_series(const WeightProfile& profile, int k, int order) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "height bound must be nonnegative");
  const TruncatedSeries one = TruncatedSeries::from_integers({1}, order);

  TruncatedSeries level = one - (profile.level_weight(k) * one).shifted(1);
  TruncatedSeries inner = reciprocal(level);
  for (int h = k - 1; h >= 0; --h) {
    TruncatedSeries denom = one - (profile.level_weight(h) * one).shifted(1) -
                            (profile.rise_fall_weight(h + 1) * inner).shifted(2);
    inner = reciprocal(denom);
  }
  return inner;
}

TruncatedSeries unbounded_series(const WeightProfile& profile, int order) {
  return cf_series(profile, order / 2, order);
}

TruncatedSeries ak_series(int k, int order) { return cf_series(ak_profile(), k, order); }
TruncatedSeries f_series(int k, int order) { return cf_series(f_profile(), k, order); }
TruncatedSeries g_series(int k, int order) { return cf_series(g_profile(), k, order); }
TruncatedSeries h_series(int k, int order) { return cf_series(h_profile(), k, order); }

TruncatedSeries xclass_series(int order) { return rational_series({1, -3}, {1, -4, 2}, order); }

bool is_involution_coloring(const ColoredMotzkinPath& path) {
  std::vector<int> up_colors;
  for (const auto& step : path.steps()) {
    switch (step.kind) {
      case StepKind::kLevel:
        if (step.color != 0) return false;
        break;
      case StepKind::kUp:
        up_colors.push_back(step.color);
        break;
      case StepKind::kDown:
        if (up_colors.back() != step.color) return false;
        up_colors.pop_back();
        break;
    }
  }
  return true;
}

std::string format_plain(const TruncatedSeries& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    out += std::to_string(n) + ": " + to_string(s[n]) + '\n';
  }
  return out;
}

std::optional<std::string> format_sequence(const TruncatedSeries& s) {
  const auto values = s.as_integers();
  if (!values) return std::nullopt;
  std::string out;
  for (const auto& v : *values) {
    if (!out.empty()) out += ',';
    out += v.str();
  }
  return out;
}

}  // namespace permclass
