#include "permclass/verification.hpp"

#include <algorithm>

#include "permclass/bijections.hpp"
#include "permclass/pattern_classes.hpp"
#include "permclass/series.hpp"

namespace permclass {

namespace {

// Checks below run over every size up to a bound; per-size reports are folded
// into one, keeping the first failure.
class Accumulator {
 public:
  explicit Accumulator(std::string name) { report_.name = std::move(name); }

  void add(const CheckReport& part, int n) {
    report_.domain_size += part.domain_size;
    if (report_.passed && !part.passed) {
      report_.passed = false;
      auto ce = *part.counterexample;
      ce.input = "n=" + std::to_string(n) + ": " + ce.input;
      report_.counterexample = std::move(ce);
    }
  }

  void count(std::size_t cases = 1) { report_.domain_size += cases; }
  bool ok() const { return report_.passed; }
  void fail(std::string input, std::string expected, std::string actual) {
    if (report_.passed) report_.fail(std::move(input), std::move(expected), std::move(actual));
  }

  CheckReport finish() {
    report_.seconds = watch_.seconds();
    return report_;
  }

 private:
  CheckReport report_;
  detail::Stopwatch watch_;
};

EnumerationCaps caps_for(int max_n) {
  EnumerationCaps caps;
  caps.perm_n = std::min(std::max(max_n, caps.perm_n), kHardMaxPermN);
  caps.word_n = std::min(std::max(max_n, caps.word_n), kHardMaxWordN);
  return caps;
}

std::vector<Permutation> filtered(int n, PermClass cls, int k) {
  std::vector<Permutation> out;
  for_each_permutation(
      n, [&](const Permutation& p) { if (in_class(p, cls, k)) out.push_back(p); }, caps_for(n));
  return out;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (const int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

bool always(const auto&) { return true; }

}  // namespace

CheckReport check_wx_bijection(int max_n) {
  Accumulator acc("wx: W_n -> X_n round trip");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    acc.add(check_bijection("", enumerate_words(n, caps_for(n)), word_to_xperm, xperm_to_word,
                            [](const Permutation& p) { return is_x_class(p); }),
            n);
  }
  return acc.finish();
}

CheckReport check_wx_inverse_on_xclass(int max_n) {
  Accumulator acc("wx-inv: X_n -> W_n round trip");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    acc.add(check_bijection("", filtered(n, PermClass::kXClass, 0), xperm_to_word, word_to_xperm,
                            always<XWord>),
            n);
  }
  return acc.finish();
}

CheckReport check_wx_image(int max_n) {
  Accumulator acc("wx: image of W_n is X_n");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    acc.add(check_image("", enumerate_words(n, caps_for(n)), word_to_xperm,
                        filtered(n, PermClass::kXClass, 0)),
            n);
  }
  return acc.finish();
}

CheckReport check_aw_bijection(int max_n) {
  Accumulator acc("aw-inv: W_n -> A^(1)_n round trip");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    acc.add(check_bijection("", enumerate_words(n, caps_for(n)), word_to_aip, aip_to_word,
                            [](const Permutation& p) { return is_almost_increasing(p, 1); }),
            n);
  }
  return acc.finish();
}

CheckReport check_aw_inverse_on_aip(int max_n) {
  Accumulator acc("aw: A^(1)_n -> W_n round trip");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    acc.add(check_bijection("", filtered(n, PermClass::kAip, 1), aip_to_word, word_to_aip,
                            always<XWord>),
            n);
  }
  return acc.finish();
}

CheckReport check_aw_image(int max_n) {
  Accumulator acc("aw-inv: image of W_n is A^(1)_n");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    acc.add(check_image("", enumerate_words(n, caps_for(n)), word_to_aip,
                        filtered(n, PermClass::kAip, 1)),
            n);
  }
  return acc.finish();
}

CheckReport check_zeta_bijection(int max_n) {
  Accumulator acc("zeta: W_n -> P_n round trip");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    acc.add(check_bijection("", enumerate_words(n, caps_for(n)), word_to_path, path_to_word,
                            always<BoundedPath>),
            n);
  }
  return acc.finish();
}

CheckReport check_zeta_inverse_on_paths(int max_n) {
  Accumulator acc("zeta-inv: P_n -> W_n round trip");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    acc.add(check_bijection("", enumerate_bounded_paths(n, caps_for(n)), path_to_word,
                            word_to_path, always<XWord>),
            n);
  }
  return acc.finish();
}

CheckReport check_zeta_image(int max_n) {
  Accumulator acc("zeta: image of W_n is P_n");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    acc.add(check_image("", enumerate_words(n, caps_for(n)), word_to_path,
                        enumerate_bounded_paths(n, caps_for(n))),
            n);
  }
  return acc.finish();
}

CheckReport check_zeta_structure(int max_n) {
  Accumulator acc("zeta: returns and |y|=3 points match letters");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    for (const auto& w : enumerate_words(n, caps_for(n))) {
      acc.count();
      const auto path = word_to_path(w);
      const auto& letters = w.letters();
      const auto tags = returns_classification(path);
      const auto from_above = std::count(tags.begin(), tags.end(), ReturnTag::kReturnFromAbove);
      const auto from_below = std::count(tags.begin(), tags.end(), ReturnTag::kReturnFromBelow);
      long lone_r = 0;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i] == 'R' && (i + 1 == letters.size() || letters[i + 1] != 'E')) ++lone_r;
      }
      long extreme = 0;
      int y = 0;
      for (const char c : path.steps()) {
        y += c == 'U' ? 1 : -1;
        if (y == 3 || y == -3) ++extreme;
      }
      const auto e = std::count(letters.begin(), letters.end(), 'E');
      const auto wc = std::count(letters.begin(), letters.end(), 'W');
      if (e != from_above || wc != from_below || lone_r != extreme) {
        acc.fail(w.letters(),
                 "E=" + std::to_string(e) + " W=" + std::to_string(wc) +
                     " lone R=" + std::to_string(lone_r),
                 "above=" + std::to_string(from_above) + " below=" + std::to_string(from_below) +
                     " |y|=3 points=" + std::to_string(extreme));
        break;
      }
    }
  }
  return acc.finish();
}

CheckReport check_psi_bijection(int max_n) {
  Accumulator acc("psi: S_n -> colored Motzkin paths round trip");
  for (int n = 0; n <= max_n && acc.ok(); ++n) {
    acc.add(check_bijection("", enumerate_perms(n, caps_for(n)), psi, psi_inverse,
                            always<ColoredMotzkinPath>),
            n);
  }
  return acc.finish();
}

CheckReport check_psi_image(int max_n) {
  Accumulator acc("psi: image of S_n is every colored Motzkin path");
  for (int n = 0; n <= max_n && acc.ok(); ++n) {
    acc.add(check_image("", enumerate_perms(n, caps_for(n)), psi,
                        enumerate_colored_paths(n, n, caps_for(n))),
            n);
  }
  return acc.finish();
}

CheckReport check_theta_heights(int max_n) {
  Accumulator acc("theta: step heights equal h_i and match psi");
  for (int n = 0; n <= max_n && acc.ok(); ++n) {
    for_each_permutation(
        n,
        [&](const Permutation& p) {
          if (!acc.ok()) return;
          acc.count();
          const auto path = theta(p);
          const auto heights = step_heights(path);
          const auto h = height_profile(p);
          if (heights != h) {
            acc.fail(to_string(p), join(h), join(heights));
          } else if (!(underlying_path(psi(p)) == path)) {
            acc.fail(to_string(p), path.steps, underlying_path(psi(p)).steps);
          }
        },
        caps_for(n));
  }
  return acc.finish();
}

CheckReport check_corner_peeling(int max_n) {
  Accumulator acc("X-class: removing a corner dot stays in the class");
  for (int n = 2; n <= max_n && acc.ok(); ++n) {
    for (const auto& p : filtered(n, PermClass::kXClass, 0)) {
      acc.count();
      // (column, row) of each corner that holds a dot
      const std::pair<int, int> corners[] = {{1, 1}, {1, n}, {n, 1}, {n, n}};
      for (const auto& [col, row] : corners) {
        if (p(col) != row) continue;
        std::vector<int> reduced;
        for (int i = 1; i <= n; ++i) {
          if (i == col) continue;
          reduced.push_back(p(i) > row ? p(i) - 1 : p(i));
        }
        const Permutation q(reduced);
        if (!is_x_class(q)) {
          acc.fail(to_string(p), "X-class after removing (" + std::to_string(col) + "," +
                                     std::to_string(row) + ")",
                   to_string(q));
          break;
        }
      }
      if (!acc.ok()) break;
    }
  }
  return acc.finish();
}

CheckReport check_involution_coloring(int max_n) {
  Accumulator acc("psi: involutions are exactly the involution colorings");
  for (int n = 0; n <= max_n && acc.ok(); ++n) {
    for_each_permutation(
        n,
        [&](const Permutation& p) {
          if (!acc.ok()) return;
          acc.count();
          const auto path = psi(p);
          if (is_involution(p) != is_involution_coloring(path)) {
            acc.fail(to_string(p), is_involution(p) ? "involution coloring" : "other coloring",
                     to_string(path));
          }
        },
        caps_for(n));
  }
  return acc.finish();
}

CheckReport check_equinumerosity(int max_n) {
  Accumulator acc("|X_n| = |W_n| = |P_n| = |A^(1)_n| = [x^n](1-3x)/(1-4x+2x^2)");
  const auto series = xclass_series(max_n).as_integers().value();
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    std::uint64_t x_count = 0;
    std::uint64_t a_count = 0;
    for_each_permutation(
        n,
        [&](const Permutation& p) {
          if (is_x_class(p)) ++x_count;
          if (is_almost_increasing(p, 1)) ++a_count;
        },
        caps_for(n));
    const auto w_count = enumerate_words(n, caps_for(n)).size();
    const auto p_count = enumerate_bounded_paths(n, caps_for(n)).size();
    const Integer expected = series[static_cast<std::size_t>(n)];
    acc.count();
    if (Integer(x_count) != expected || Integer(a_count) != expected ||
        Integer(w_count) != expected || Integer(p_count) != expected) {
      acc.fail("n=" + std::to_string(n), expected.str(),
               "X=" + std::to_string(x_count) + " W=" + std::to_string(w_count) +
                   " P=" + std::to_string(p_count) + " A1=" + std::to_string(a_count));
    }
  }
  return acc.finish();
}

CheckReport check_height_theorem(int max_n, int max_k) {
  Accumulator acc("A^(k)_n iff height(theta) <= k");
  for (int n = 0; n <= max_n && acc.ok(); ++n) {
    for_each_permutation(
        n,
        [&](const Permutation& p) {
          if (!acc.ok()) return;
          const int height = path_height(theta(p));
          for (int k = 0; k <= max_k; ++k) {
            acc.count();
            if (is_almost_increasing(p, k) != (height <= k)) {
              acc.fail(to_string(p) + " k=" + std::to_string(k),
                       "height " + std::to_string(height), "membership disagrees");
              return;
            }
          }
        },
        caps_for(n));
  }
  return acc.finish();
}

CheckReport check_pattern_lemma(int max_n, int max_k) {
  Accumulator acc("A^(k)_n = S_n(Sigma^(k))");
  for (int k = 0; k <= max_k && acc.ok(); ++k) {
    const auto patterns = sigma_set(k);
    for (int n = 0; n <= max_n && acc.ok(); ++n) {
      for_each_permutation(
          n,
          [&](const Permutation& p) {
            if (!acc.ok()) return;
            acc.count();
            const bool direct = is_almost_increasing(p, k);
            const bool avoids = std::none_of(
                patterns.patterns.begin(), patterns.patterns.end(),
                [&p](const Permutation& sigma) { return contains_pattern(p, sigma); });
            if (direct != avoids) {
              acc.fail(to_string(p) + " k=" + std::to_string(k),
                       direct ? "avoids Sigma" : "contains a Sigma pattern",
                       avoids ? "avoids Sigma" : "contains a Sigma pattern");
            }
          },
          caps_for(n));
    }
  }
  return acc.finish();
}

CheckReport check_corner_lemma(int max_n) {
  Accumulator acc("every X-class permutation has a corner dot");
  for (int n = 1; n <= max_n && acc.ok(); ++n) {
    for (const auto& p : filtered(n, PermClass::kXClass, 0)) {
      acc.count();
      if (!corner_dot(p)) {
        acc.fail(to_string(p), "a corner dot", "none");
        break;
      }
    }
  }
  return acc.finish();
}

CheckReport check_symmetry_identity(int max_n) {
  Accumulator acc("|{j<=i : p(j)>i}| = |{j>i : p(j)<=i}|");
  for (int n = 0; n <= max_n && acc.ok(); ++n) {
    for_each_permutation(
        n,
        [&](const Permutation& p) {
          if (!acc.ok()) return;
          acc.count();
          for (int i = 1; i <= n; ++i) {
            int left = 0;
            int right = 0;
            for (int j = 1; j <= n; ++j) {
              if (j <= i && p(j) > i) ++left;
              if (j > i && p(j) <= i) ++right;
            }
            if (left != right) {
              acc.fail(to_string(p) + " i=" + std::to_string(i), std::to_string(left),
                       std::to_string(right));
              return;
            }
          }
        },
        caps_for(n));
  }
  return acc.finish();
}

CheckReport check_ak_counts(int max_n, int max_k) {
  Accumulator acc("[x^n] A^(k)(x) = |A^(k)_n|");
  for (int k = 0; k <= max_k && acc.ok(); ++k) {
    const auto series = ak_series(k, max_n).as_integers().value();
    for (int n = 0; n <= max_n && acc.ok(); ++n) {
      acc.count();
      std::uint64_t count = 0;
      for_each_permutation(
          n, [&](const Permutation& p) { if (is_almost_increasing(p, k)) ++count; }, caps_for(n));
      if (Integer(count) != series[static_cast<std::size_t>(n)]) {
        acc.fail("k=" + std::to_string(k) + " n=" + std::to_string(n), std::to_string(count),
                 series[static_cast<std::size_t>(n)].str());
      }
    }
  }
  return acc.finish();
}

const std::vector<RationalForm>& known_rational_forms() {
  static const std::vector<RationalForm> forms = {
      {1, {1, -3}, {1, -4, 2}},
      {2, {1, -8, 11}, {1, -9, 18, -6}},
      {3, {1, -15, 58, -50}, {1, -16, 72, -96, 24}},
      {4, {1, -24, 177, -444, 274}, {1, -25, 200, -600, 600, -120}},
  };
  return forms;
}

CheckReport check_rational_forms(int order) {
  Accumulator acc("A^(k)(x) continued fraction = rational form, k=1..4");
  for (const auto& form : known_rational_forms()) {
    acc.count();
    const auto cf = ak_series(form.k, order);
    const auto rational = rational_series(form.numerator, form.denominator, order);
    if (!(cf == rational)) {
      acc.fail("k=" + std::to_string(form.k), format_sequence(rational).value_or("?"),
               format_sequence(cf).value_or("?"));
      break;
    }
  }
  return acc.finish();
}

CheckReport check_refined_series(int max_n, int min_k, int max_k) {
  Accumulator acc("F, G, H coefficients = brute-force statistic polynomials");
  for (int k = min_k; k <= max_k && acc.ok(); ++k) {
    const auto f = f_series(k, max_n);
    const auto g = g_series(k, max_n);
    const auto h = h_series(k, max_n);
    for (int n = 0; n <= max_n && acc.ok(); ++n) {
      const auto where = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      const auto aip = stat_table(n, k, PermClass::kAip, caps_for(n));
      const auto inv = stat_table(n, k, PermClass::kAipInvolutions, caps_for(n));
      acc.count(3);
      if (!(aip.cycle_polynomial() == f[n])) {
        acc.fail("F " + where, to_string(aip.cycle_polynomial()), to_string(f[n]));
      } else if (!(aip.inversion_polynomial() == g[n])) {
        acc.fail("G " + where, to_string(aip.inversion_polynomial()), to_string(g[n]));
      } else if (!(inv.inversion_polynomial() == h[n])) {
        acc.fail("H " + where, to_string(inv.inversion_polynomial()), to_string(h[n]));
      }
    }
  }
  return acc.finish();
}

namespace {

TruncatedSeries all_ones(const TruncatedSeries& s) {
  return s.substitute(Var::kT, 1).substitute(Var::kU, 1).substitute(Var::kV, 1).substitute(
      Var::kQ, 1);
}

}  // namespace

CheckReport check_specializations(int max_k, int order) {
  Accumulator acc("F(1,1,1) = G(1,1,1) = A^(k)");
  for (int k = 0; k <= max_k && acc.ok(); ++k) {
    acc.count();
    const auto a = ak_series(k, order);
    const auto f = all_ones(f_series(k, order));
    const auto g = all_ones(g_series(k, order));
    if (!(f == a) || !(g == a)) {
      acc.fail("k=" + std::to_string(k), format_sequence(a).value_or("?"),
               "F: " + format_sequence(f).value_or("?") + " G: " + format_sequence(g).value_or("?"));
    }
  }
  return acc.finish();
}

CheckReport check_unbounded_limits(int max_n_factorial, int max_n_involutions) {
  Accumulator acc("unbounded series: n! and involution counts");
  const auto a = unbounded_series(ak_profile(), max_n_factorial).as_integers().value();
  Integer factorial = 1;
  for (int n = 0; n <= max_n_factorial && acc.ok(); ++n) {
    if (n > 0) factorial *= n;
    acc.count();
    if (a[static_cast<std::size_t>(n)] != factorial) {
      acc.fail("ak n=" + std::to_string(n), factorial.str(), a[static_cast<std::size_t>(n)].str());
    }
  }
  const auto h = all_ones(unbounded_series(h_profile(), max_n_involutions)).as_integers().value();
  for (int n = 0; n <= max_n_involutions && acc.ok(); ++n) {
    std::uint64_t count = 0;
    for_each_permutation(n, [&](const Permutation& p) { if (is_involution(p)) ++count; },
                         caps_for(n));
    acc.count();
    if (Integer(count) != h[static_cast<std::size_t>(n)]) {
      acc.fail("involutions n=" + std::to_string(n), std::to_string(count),
               h[static_cast<std::size_t>(n)].str());
    }
  }
  return acc.finish();
}

CheckReport injected_fault_check() {
  // psi_inverse with the last two entries swapped whenever n >= 2.
  const auto broken_inverse = [](const ColoredMotzkinPath& path) {
    const Permutation p = psi_inverse(path);
    std::vector<int> values(p.values().begin(), p.values().end());
    if (values.size() >= 2) std::swap(values[values.size() - 1], values[values.size() - 2]);
    return Permutation(values);
  };
  return check_bijection("injected fault: psi with a corrupted inverse", enumerate_perms(3), psi,
                         broken_inverse, always<ColoredMotzkinPath>);
}

CheckReport check_harness_self_test() {
  detail::Stopwatch watch;
  const auto broken = injected_fault_check();
  CheckReport report;
  report.name = "harness self-test: corrupted inverse is caught";
  report.domain_size = broken.domain_size;
  if (broken.passed || !broken.counterexample) {
    report.fail("psi on S_3 with corrupted inverse", "a failing report with a counterexample",
                broken.passed ? "passed" : "failed without counterexample");
  }
  report.seconds = watch.seconds();
  return report;
}

std::vector<CheckReport> run_verification(VerifySuite suite, const VerifyOptions& options) {
  const auto bound = [&](int n) { return std::min(n, options.max_n); };
  std::vector<CheckReport> reports;
  reports.push_back(check_harness_self_test());
  if (suite == VerifySuite::kBijections || suite == VerifySuite::kAll) {
    reports.push_back(check_wx_bijection(bound(8)));
    reports.push_back(check_wx_inverse_on_xclass(bound(8)));
    reports.push_back(check_wx_image(bound(8)));
    reports.push_back(check_aw_bijection(bound(8)));
    reports.push_back(check_aw_inverse_on_aip(bound(8)));
    reports.push_back(check_aw_image(bound(8)));
    reports.push_back(check_zeta_bijection(bound(8)));
    reports.push_back(check_zeta_inverse_on_paths(bound(8)));
    reports.push_back(check_zeta_image(bound(8)));
    reports.push_back(check_zeta_structure(bound(8)));
    reports.push_back(check_psi_bijection(bound(7)));
    reports.push_back(check_psi_image(bound(7)));
    reports.push_back(check_theta_heights(bound(8)));
    reports.push_back(check_involution_coloring(bound(7)));
    reports.push_back(check_corner_peeling(bound(8)));
    reports.push_back(check_corner_lemma(bound(8)));
    reports.push_back(check_symmetry_identity(bound(8)));
    reports.push_back(check_height_theorem(bound(8), 4));
    reports.push_back(check_pattern_lemma(bound(8), 2));
    reports.push_back(check_equinumerosity(bound(9)));
  }
  if (suite == VerifySuite::kSeries || suite == VerifySuite::kAll) {
    reports.push_back(check_ak_counts(bound(8), 3));
    reports.push_back(check_rational_forms(12));
    reports.push_back(check_refined_series(bound(8), 1, 3));
    reports.push_back(check_specializations(3, 10));
    reports.push_back(check_unbounded_limits(bound(8), bound(7)));
  }
  if (options.inject_fault) reports.push_back(injected_fault_check());
  return reports;
}

}  // namespace permclass
