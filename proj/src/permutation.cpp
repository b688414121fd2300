#include "permclass/permutation.hpp"

#include <charconv>

#include "permclass/error.hpp"

namespace permclass {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = values_[i];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw Error(ErrorCode::kParse,
                  "value " + std::to_string(v) + " outside 1.." + std::to_string(n), i);
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::kParse, "value " + std::to_string(v) + " repeated", i);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(values), Unchecked{});
}

Permutation from_trusted_values(std::vector<int> values) {
  return Permutation(std::move(values), Permutation::Unchecked{});
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  std::vector<int> values;
  if (text.empty()) return Permutation{};
  std::size_t index = 0;
  while (true) {
    const auto comma = text.find(',');
    const auto field = trim(text.substr(0, comma));
    int value = 0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last) {
      throw Error(ErrorCode::kParse, "expected an integer, got '" + std::string(field) + "'",
                  index);
    }
    values.push_back(value);
    ++index;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Permutation(std::move(values));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

StatVector stats(const Permutation& p) {
  const int n = p.size();
  StatVector s;
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (p(i) == i) ++s.fp;
    if (p(i) > i) ++s.exc;
    for (int j = i + 1; j <= n; ++j) {
      if (p(i) > p(j)) ++s.inv;
    }
    if (!visited[static_cast<std::size_t>(i)]) {
      ++s.cyc;
      for (int j = i; !visited[static_cast<std::size_t>(j)]; j = p(j)) {
        visited[static_cast<std::size_t>(j)] = true;
      }
    }
  }
  return s;
}

namespace {

// chosen[s] is the position in p matched to sigma(s + 1).
bool extend_occurrence(const Permutation& p, const Permutation& sigma,
                       std::vector<int>& chosen, int next_position) {
  const auto depth = static_cast<int>(chosen.size());
  if (depth == sigma.size()) return true;
  const int remaining = sigma.size() - depth;
  for (int i = next_position; i <= p.size() - remaining + 1; ++i) {
    bool consistent = true;
    for (int s = 0; s < depth && consistent; ++s) {
      const bool p_less = p(chosen[static_cast<std::size_t>(s)]) < p(i);
      const bool sigma_less = sigma(s + 1) < sigma(depth + 1);
      consistent = p_less == sigma_less;
    }
    if (!consistent) continue;
    chosen.push_back(i);
    if (extend_occurrence(p, sigma, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& sigma) {
  if (sigma.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(sigma.size()));
  return extend_occurrence(p, sigma, chosen, 1);
}

Permutation inverse(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) inv[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(std::move(inv), Permutation::Unchecked{});
}

bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i) {
    if (p(p(i)) != i) return false;
  }
  return true;
}

std::vector<int> height_profile(const Permutation& p) {
  // h_i - h_{i-1} = [p(i) > i] - [p^{-1}(i) < i]
  const int n = p.size();
  const Permutation pinv = inverse(p);
  std::vector<int> h(static_cast<std::size_t>(n));
  int current = 0;
  for (int i = 1; i <= n; ++i) {
    if (p(i) > i) ++current;
    if (pinv(i) < i) --current;
    h[static_cast<std::size_t>(i - 1)] = current;
  }
  return h;
}

}  // namespace permclass
