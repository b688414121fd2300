#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permclass/multipoly.hpp"
#include "permclass/paths_words.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

// --- Enumeration ---------------------------------------------------------------

/// Largest domains that may ever be enumerated, whatever the configuration.
inline constexpr int kHardMaxPermN = 11;
inline constexpr int kHardMaxWordN = 16;

/// Configured enumeration bounds. `perm_n` also bounds colored Motzkin paths,
/// whose unrestricted count is n!.
struct EnumerationCaps {
  int perm_n = 9;
  int word_n = 12;

  /// Lowers both caps to `max_n` (never raises them past the hard maximum).
  EnumerationCaps capped_at(int max_n) const;
};

/// Caps with PERMCLASS_MAX_N applied when the variable is set. Throws
/// kInvalidArgument on a malformed value.
EnumerationCaps caps_from_environment();

/// Visits S_n in lexicographic order of one-line notation.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const EnumerationCaps& caps = {});

/// Visits the permutations of S_n whose first entry is `first` (a prefix
/// partition of S_n for parallel consumers).
void for_each_permutation_with_first(int n, int first,
                                     const std::function<void(const Permutation&)>& visit,
                                     const EnumerationCaps& caps = {});

std::vector<Permutation> enumerate_perms(int n, const EnumerationCaps& caps = {});

/// W_n (words of length n-1) in lexicographic order (E < L < R < W).
std::vector<XWord> enumerate_words(int n, const EnumerationCaps& caps = {});

/// P_n (paths of length 2n-2) in lexicographic order (D < U).
std::vector<BoundedPath> enumerate_bounded_paths(int n, const EnumerationCaps& caps = {});

/// Colored Motzkin paths of length n and height <= k, ordered step by step
/// with D < L < U and then by color.
std::vector<ColoredMotzkinPath> enumerate_colored_paths(int n, int k,
                                                        const EnumerationCaps& caps = {});

// --- Statistics ----------------------------------------------------------------

enum class PermClass { kAip, kAipInvolutions, kXClass, kAll };

std::string_view perm_class_name(PermClass c);

/// Direct class predicate: height scan for A^(k), pattern list for X.
bool in_class(const Permutation& p, PermClass cls, int k);

struct StatTable {
  int n = 0;
  int k = 0;
  PermClass cls = PermClass::kAll;
  std::map<StatVector, std::uint64_t> counts;

  std::uint64_t total() const;
  void merge(const StatTable& other);

  /// Sum of t^cyc u^fp v^exc.
  MultiPoly cycle_polynomial() const;
  /// Sum of q^inv u^fp v^exc.
  MultiPoly inversion_polynomial() const;
  /// Number of permutations with each inversion count, indexed by inv.
  std::vector<std::uint64_t> inversion_distribution() const;
};

/// Filters S_n by the class predicate and tallies stats(p). The work is split
/// by first entry and merged.
StatTable stat_table(int n, int k, PermClass cls, const EnumerationCaps& caps = {});

// --- Checks ----------------------------------------------------------------------

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string name;
  std::size_t domain_size = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  double seconds = 0.0;

  void fail(std::string input, std::string expected, std::string actual);

  /// One JSON object on one line.
  std::string to_json() const;
  std::string summary() const;
};

std::string serialize(const Permutation& p);
std::string serialize(const XWord& w);
std::string serialize(const BoundedPath& p);
std::string serialize(const ColoredMotzkinPath& p);
std::string serialize(const MotzkinPath& p);

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string describe_exception(std::exception_ptr e) {
  try {
    std::rethrow_exception(e);
  } catch (const std::exception& ex) {
    return std::string("exception: ") + ex.what();
  } catch (...) {
    return "exception: unknown";
  }
}

}  // namespace detail

/// Runs `forward` over the domain and checks that each image satisfies
/// `in_codomain`, that `inverse` brings it back, and that no two inputs share
/// an image. The first failure in domain order is kept.
template <class D, class Forward, class Inverse, class Predicate>
CheckReport check_bijection(std::string name, const std::vector<D>& domain, Forward forward,
                            Inverse inverse, Predicate in_codomain) {
  detail::Stopwatch watch;
  CheckReport report;
  report.name = std::move(name);
  report.domain_size = domain.size();
  std::map<std::string, std::string> seen;
  for (const auto& x : domain) {
    const std::string input = serialize(x);
    try {
      const auto y = forward(x);
      const std::string image = serialize(y);
      if (!in_codomain(y)) {
        report.fail(input, "image inside the codomain", image);
        break;
      }
      const auto back = inverse(y);
      if (!(back == x)) {
        report.fail(input, input, serialize(back));
        break;
      }
      const auto [it, inserted] = seen.emplace(image, input);
      if (!inserted) {
        report.fail(input, "image distinct from that of " + it->second, image);
        break;
      }
    } catch (...) {
      report.fail(input, "no exception", detail::describe_exception(std::current_exception()));
      break;
    }
  }
  report.seconds = watch.seconds();
  return report;
}

/// Checks forward(domain) == codomain as sets (double inclusion).
template <class D, class C, class Forward>
CheckReport check_image(std::string name, const std::vector<D>& domain, Forward forward,
                        const std::vector<C>& codomain) {
  detail::Stopwatch watch;
  CheckReport report;
  report.name = std::move(name);
  report.domain_size = domain.size();
  std::set<std::string> expected;
  for (const auto& c : codomain) expected.insert(serialize(c));
  std::set<std::string> produced;
  for (const auto& x : domain) {
    try {
      const std::string image = serialize(forward(x));
      if (!expected.contains(image)) {
        report.fail(serialize(x), "image in the target set", image);
        break;
      }
      produced.insert(image);
    } catch (...) {
      report.fail(serialize(x), "no exception",
                  detail::describe_exception(std::current_exception()));
      break;
    }
  }
  if (report.passed && produced != expected) {
    for (const auto& c : expected) {
      if (!produced.contains(c)) {
        report.fail(c, "some preimage", "not reached");
        break;
      }
    }
  }
  report.seconds = watch.seconds();
  return report;
}

/// Checks equality of two integer sequences, reporting the first differing index.
CheckReport check_sequence(std::string name, const std::vector<Integer>& expected,
                           const std::vector<Integer>& actual);

}  // namespace permclass
