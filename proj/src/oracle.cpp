#include "permclass/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <numeric>

#include <json.hpp>

#include "permclass/error.hpp"
#include "permclass/pattern_classes.hpp"

namespace permclass {

EnumerationCaps EnumerationCaps::capped_at(int max_n) const {
  EnumerationCaps out = *this;
  out.perm_n = std::min({out.perm_n, max_n, kHardMaxPermN});
  out.word_n = std::min({out.word_n, max_n, kHardMaxWordN});
  return out;
}

EnumerationCaps caps_from_environment() {
  EnumerationCaps caps;
  const char* raw = std::getenv("PERMCLASS_MAX_N");
  if (raw == nullptr || *raw == '\0') return caps;
  const std::string_view text(raw);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    throw Error(ErrorCode::kInvalidArgument, "PERMCLASS_MAX_N must be a nonnegative integer");
  }
  return caps.capped_at(value);
}

namespace {

void require_cap(int n, int cap, int hard, std::string_view what) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be nonnegative");
  if (n > std::min(cap, hard)) {
    throw Error(ErrorCode::kCapExceeded, std::string(what) + " of size " + std::to_string(n) +
                                             " exceeds the enumeration cap " +
                                             std::to_string(std::min(cap, hard)));
  }
}

}  // namespace

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const EnumerationCaps& caps) {
  require_cap(n, caps.perm_n, kHardMaxPermN, "S_n");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  do {
    visit(from_trusted_values(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

void for_each_permutation_with_first(int n, int first,
                                     const std::function<void(const Permutation&)>& visit,
                                     const EnumerationCaps& caps) {
  require_cap(n, caps.perm_n, kHardMaxPermN, "S_n");
  if (first < 1 || first > n) return;
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::rotate(values.begin(), values.begin() + (first - 1), values.begin() + first);
  do {
    visit(from_trusted_values(values));
  } while (std::next_permutation(values.begin() + 1, values.end()));
}

std::vector<Permutation> enumerate_perms(int n, const EnumerationCaps& caps) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&out](const Permutation& p) { out.push_back(p); }, caps);
  return out;
}

namespace {

void extend_word(std::string& prefix, std::size_t length, std::vector<XWord>& out) {
  if (prefix.size() == length) {
    out.push_back(validate_word(prefix));
    return;
  }
  const bool last = prefix.size() + 1 == length;
  for (const char c : {'E', 'L', 'R', 'W'}) {
    if (last && c != 'E' && c != 'W') continue;
    if (!prefix.empty()) {
      const char prev = prefix.back();
      if ((prev == 'L' && c == 'E') || (prev == 'R' && c == 'W')) continue;
    }
    prefix.push_back(c);
    extend_word(prefix, length, out);
    prefix.pop_back();
  }
}

void extend_path(std::string& prefix, int y, std::size_t length, std::vector<BoundedPath>& out) {
  if (prefix.size() == length) {
    if (y == 0) out.push_back(validate_bounded_path(prefix));
    return;
  }
  const int remaining = static_cast<int>(length - prefix.size()) - 1;
  for (const int dy : {-1, 1}) {
    const int next = y + dy;
    if (std::abs(next) > kBoundedPathLimit || std::abs(next) > remaining) continue;
    prefix.push_back(dy < 0 ? 'D' : 'U');
    extend_path(prefix, next, length, out);
    prefix.pop_back();
  }
}

void extend_colored(std::vector<ColoredStep>& prefix, int h, int n, int k,
                    std::vector<ColoredMotzkinPath>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    if (h == 0) out.push_back(validate_colored_motzkin(prefix));
    return;
  }
  const int remaining = n - static_cast<int>(prefix.size()) - 1;
  // D < L < U
  if (h >= 1 && h - 1 <= remaining) {
    for (int c = 1; c <= h; ++c) {
      prefix.push_back({StepKind::kDown, c});
      extend_colored(prefix, h - 1, n, k, out);
      prefix.pop_back();
    }
  }
  if (h <= remaining) {
    for (int c = 0; c <= 2 * h; ++c) {
      prefix.push_back({StepKind::kLevel, c});
      extend_colored(prefix, h, n, k, out);
      prefix.pop_back();
    }
  }
  if (h + 1 <= k && h + 1 <= remaining) {
    for (int c = 1; c <= h + 1; ++c) {
      prefix.push_back({StepKind::kUp, c});
      extend_colored(prefix, h + 1, n, k, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<XWord> enumerate_words(int n, const EnumerationCaps& caps) {
  require_cap(n, caps.word_n, kHardMaxWordN, "W_n");
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "W_n needs n >= 1");
  std::vector<XWord> out;
  std::string prefix;
  extend_word(prefix, static_cast<std::size_t>(n - 1), out);
  return out;
}

std::vector<BoundedPath> enumerate_bounded_paths(int n, const EnumerationCaps& caps) {
  require_cap(n, caps.word_n, kHardMaxWordN, "P_n");
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "P_n needs n >= 1");
  std::vector<BoundedPath> out;
  std::string prefix;
  extend_path(prefix, 0, static_cast<std::size_t>(2 * n - 2), out);
  return out;
}

std::vector<ColoredMotzkinPath> enumerate_colored_paths(int n, int k, const EnumerationCaps& caps) {
  require_cap(n, caps.perm_n, kHardMaxPermN, "colored Motzkin paths");
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be nonnegative");
  std::vector<ColoredMotzkinPath> out;
  std::vector<ColoredStep> prefix;
  extend_colored(prefix, 0, n, k, out);
  return out;
}

std::string_view perm_class_name(PermClass c) {
  switch (c) {
    case PermClass::kAip: return "AIP";
    case PermClass::kAipInvolutions: return "AIP_INVOLUTIONS";
    case PermClass::kXClass: return "XCLASS";
    case PermClass::kAll: return "ALL";
  }
  return "?";
}

bool in_class(const Permutation& p, PermClass cls, int k) {
  switch (cls) {
    case PermClass::kAip: return is_almost_increasing(p, k);
    case PermClass::kAipInvolutions: return is_involution(p) && is_almost_increasing(p, k);
    case PermClass::kXClass: return is_x_class(p);
    case PermClass::kAll: return true;
  }
  return false;
}

std::uint64_t StatTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [s, c] : counts) sum += c;
  return sum;
}

void StatTable::merge(const StatTable& other) {
  for (const auto& [s, c] : other.counts) counts[s] += c;
}

MultiPoly StatTable::cycle_polynomial() const {
  MultiPoly out;
  for (const auto& [s, c] : counts) {
    Monomial m;
    m.exponents = {static_cast<std::uint32_t>(s.cyc), static_cast<std::uint32_t>(s.fp),
                   static_cast<std::uint32_t>(s.exc), 0};
    out.add_term(m, Integer(c));
  }
  return out;
}

MultiPoly StatTable::inversion_polynomial() const {
  MultiPoly out;
  for (const auto& [s, c] : counts) {
    Monomial m;
    m.exponents = {0, static_cast<std::uint32_t>(s.fp), static_cast<std::uint32_t>(s.exc),
                   static_cast<std::uint32_t>(s.inv)};
    out.add_term(m, Integer(c));
  }
  return out;
}

std::vector<std::uint64_t> StatTable::inversion_distribution() const {
  std::vector<std::uint64_t> dist(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
  for (const auto& [s, c] : counts) dist[static_cast<std::size_t>(s.inv)] += c;
  return dist;
}

StatTable stat_table(int n, int k, PermClass cls, const EnumerationCaps& caps) {
  require_cap(n, caps.perm_n, kHardMaxPermN, "S_n");
  StatTable table{n, k, cls, {}};
  if (n == 0) {
    const Permutation empty;
    if (in_class(empty, cls, k)) table.counts[stats(empty)] = 1;
    return table;
  }
  std::vector<std::future<StatTable>> parts;
  for (int first = 1; first <= n; ++first) {
    parts.push_back(std::async(std::launch::async, [=] {
      StatTable part{n, k, cls, {}};
      for_each_permutation_with_first(
          n, first,
          [&](const Permutation& p) {
            if (in_class(p, cls, k)) ++part.counts[stats(p)];
          },
          caps);
      return part;
    }));
  }
  for (auto& part : parts) table.merge(part.get());
  return table;
}

void CheckReport::fail(std::string input, std::string expected, std::string actual) {
  passed = false;
  counterexample = Counterexample{std::move(input), std::move(expected), std::move(actual)};
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = name;
  j["domain_size"] = domain_size;
  j["passed"] = passed;
  j["seconds"] = seconds;
  if (counterexample) {
    j["counterexample"] = {{"input", counterexample->input},
                           {"expected", counterexample->expected},
                           {"actual", counterexample->actual}};
  }
  return j.dump();
}

std::string CheckReport::summary() const {
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3fs", seconds);
  std::string out = std::string(passed ? "PASS " : "FAIL ") + name + " (" +
                    std::to_string(domain_size) + " cases, " + timing + ")";
  if (counterexample) {
    out += "\n  input:    " + counterexample->input;
    out += "\n  expected: " + counterexample->expected;
    out += "\n  actual:   " + counterexample->actual;
  }
  return out;
}

std::string serialize(const Permutation& p) { return to_string(p); }
std::string serialize(const XWord& w) { return w.letters(); }
std::string serialize(const BoundedPath& p) { return p.steps(); }
std::string serialize(const ColoredMotzkinPath& p) { return to_string(p); }
std::string serialize(const MotzkinPath& p) { return p.steps; }

CheckReport check_sequence(std::string name, const std::vector<Integer>& expected,
                           const std::vector<Integer>& actual) {
  CheckReport report;
  report.name = std::move(name);
  report.domain_size = expected.size();
  const auto count = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::string e = i < expected.size() ? expected[i].str() : "<missing>";
    const std::string a = i < actual.size() ? actual[i].str() : "<missing>";
    if (e != a) {
      report.fail("index " + std::to_string(i), e, a);
      break;
    }
  }
  return report;
}

}  // namespace permclass
