#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permclass/bijections.hpp"
#include "permclass/oracle.hpp"
#include "permclass/pattern_classes.hpp"
#include "permclass/series.hpp"
#include "test_util.hpp"

using namespace permclass;
using testutil::error_of;
using testutil::perm;

namespace {
const Permutation kFirstAip = perm({5, 2, 1, 4, 3, 7, 6, 10, 8, 13, 11, 9, 12});
const Permutation kSecondAip = perm({2, 6, 1, 4, 5, 8, 7, 3, 10, 9, 11});
const Permutation kFirstX = perm({2, 12, 10, 4, 9, 6, 8, 7, 5, 11, 13, 3, 1});
const Permutation kSecondX = perm({1, 8, 6, 5, 7, 9, 4, 10, 3, 2, 11});
const Permutation kHeightTwoPerm = perm({5, 7, 2, 4, 3, 8, 1, 6, 9, 12, 10, 11});
}  // namespace

TEST_CASE("words to X-class permutations") {
  CHECK(word_to_xperm(validate_word("")) == perm({1}));
  CHECK(word_to_xperm(validate_word("RLREWEWLWRLW")) == kFirstX);
  CHECK(word_to_xperm(validate_word("ELRREREWEW")) == kSecondX);
  CHECK(word_to_xperm(validate_word("E")) == perm({1, 2}));
  CHECK(word_to_xperm(validate_word("W")) == perm({2, 1}));
}

TEST_CASE("X-class permutations to words") {
  CHECK(xperm_to_word(perm({1})).letters() == "");
  CHECK(xperm_to_word(kFirstX).letters() == "RLREWEWLWRLW");
  CHECK(xperm_to_word(kSecondX).letters() == "ELRREREWEW");
  CHECK(error_of([] { xperm_to_word(perm({2, 4, 1, 3})); }) == ErrorCode::kNotInClass);
  CHECK(error_of([] { xperm_to_word(Permutation{}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("almost-increasing permutations to words") {
  CHECK(aip_to_word(kFirstAip).letters() == "RLREWEWLWRLW");
  CHECK(aip_to_word(kSecondAip).letters() == "ELRREREWEW");
  CHECK(aip_to_word(Permutation::identity(4)).letters() == "WWW");
  CHECK(aip_to_word(perm({1})).letters() == "");
  CHECK(error_of([] { aip_to_word(perm({3, 4, 1, 2})); }) == ErrorCode::kNotInClass);
}

TEST_CASE("words to almost-increasing permutations") {
  CHECK(word_to_aip(validate_word("WWW")) == Permutation::identity(4));
  CHECK(word_to_aip(validate_word("RLREWEWLWRLW")) == kFirstAip);
  CHECK(word_to_aip(validate_word("ELRREREWEW")) == kSecondAip);
  CHECK(word_to_aip(validate_word("")) == perm({1}));
}

TEST_CASE("composite maps") {
  CHECK(word_to_xperm(aip_to_word(kFirstAip)) == kFirstX);
  CHECK(word_to_xperm(aip_to_word(kSecondAip)) == kSecondX);
  CHECK(word_to_aip(xperm_to_word(kFirstX)) == kFirstAip);
}

TEST_CASE("words to bounded paths") {
  CHECK(word_to_path(validate_word("WRLWERLRE")).steps() == "DUDDDUUUUDUUUDDUDD");
  CHECK(word_to_path(validate_word("E")).steps() == "UD");
  CHECK(word_to_path(validate_word("W")).steps() == "DU");
  CHECK(word_to_path(validate_word("")).steps() == "");
  CHECK(path_to_word(validate_bounded_path("DUDDDUUUUDUUUDDUDD")).letters() == "WRLWERLRE");
  CHECK(path_to_word(validate_bounded_path("")).letters() == "");
}

TEST_CASE("returns correspond to E and W letters") {
  const auto tags = returns_classification(word_to_path(validate_word("WRLWERLRE")));
  std::string kinds;
  for (const auto t : tags) {
    if (t == ReturnTag::kReturnFromAbove) kinds += 'E';
    if (t == ReturnTag::kReturnFromBelow) kinds += 'W';
  }
  CHECK(kinds == "WWEE");
}

TEST_CASE("round trips on every word, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    std::set<Permutation> xs;
    std::set<Permutation> as;
    std::set<std::string> paths;
    for (const auto& w : enumerate_words(n)) {
      const Permutation x = word_to_xperm(w);
      REQUIRE(xperm_to_word(x) == w);
      xs.insert(x);
      const Permutation a = word_to_aip(w);
      REQUIRE(aip_to_word(a) == w);
      as.insert(a);
      const BoundedPath p = word_to_path(w);
      REQUIRE(path_to_word(p) == w);
      paths.insert(p.steps());
    }
    const auto words = enumerate_words(n).size();
    CHECK(xs.size() == words);
    CHECK(as.size() == words);
    CHECK(paths.size() == words);
    for (const auto& x : xs) REQUIRE(oracle::x_class({x.values().begin(), x.values().end()}));
    for (const auto& a : as) REQUIRE(oracle::almost_increasing({a.values().begin(), a.values().end()}, 1));
  }
}

TEST_CASE("diagonal sequence and theta") {
  CHECK(to_string(diagonal_sequence(Permutation::identity(3))) == "FIX FIX FIX");
  CHECK(to_string(diagonal_sequence(perm({2, 1}))) == "OPEN CLOSE");
  CHECK(theta(Permutation::identity(5)).steps == "LLLLL");
  CHECK(theta(perm({2, 1})).steps == "UD");
  CHECK(theta(kHeightTwoPerm).steps == "UULLDUDDLULD");
  CHECK(path_height(theta(kHeightTwoPerm)) == 2);
  CHECK(theta(Permutation{}).steps == "");
}

TEST_CASE("theta step heights are the height profile, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      REQUIRE(step_heights(theta(perm(v))) == oracle::heights(v));
    }
  }
}

TEST_CASE("psi examples") {
  CHECK(to_string(psi(perm({2, 1}))) == "U1 D1");
  CHECK(to_string(psi(Permutation::identity(4))) == "L0 L0 L0 L0");
  CHECK(to_string(psi(Permutation{})) == "");
  CHECK(psi_inverse(parse_colored_motzkin("U1 D1")) == perm({2, 1}));
  CHECK(psi_inverse(psi(kHeightTwoPerm)) == kHeightTwoPerm);
  CHECK(underlying_path(psi(kHeightTwoPerm)) == theta(kHeightTwoPerm));
}

TEST_CASE("psi is a bijection onto every colored path, n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    std::set<ColoredMotzkinPath> images;
    for_each_permutation(n, [&](const Permutation& p) {
      const auto m = psi(p);
      REQUIRE(psi_inverse(m) == p);
      REQUIRE(path_height(m) == path_height(theta(p)));
      images.insert(m);
    });
    const auto all = enumerate_colored_paths(n, n);
    CHECK(images == std::set<ColoredMotzkinPath>(all.begin(), all.end()));
  }
}

TEST_CASE("involutions have involution colorings") {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      REQUIRE(is_involution_coloring(psi(p)) == is_involution(p));
    });
  }
}

TEST_CASE("ray state") {
  // (2,1): open then close the only pair of rays
  RayState s(2);
  s.open();
  CHECK(s.height() == 1);
  CHECK(s.linked_row(1) == 1);
  CHECK(s.closes_cycle(1, 1));
  CHECK(s.close(1, 1));
  CHECK(s.completed_cycles() == 1);
  CHECK(s.result() == perm({2, 1}));
}

TEST_CASE("ray state: closing brackets complete a cycle exactly once per chain") {
  // At height h, of the h*h choices (vertical rank, horizontal rank) exactly h
  // complete a cycle: one per chain of linked rays.
  for (int h = 1; h <= 4; ++h) {
    RayState s(2 * h);
    for (int i = 0; i < h; ++i) s.open();
    int completing = 0;
    for (int a = 1; a <= h; ++a)
      for (int b = 1; b <= h; ++b) completing += s.closes_cycle(a, b);
    CHECK(completing == h);
  }
}

TEST_CASE("psi colors encode cycles: completing closes count cycles") {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      RayState s(p.size());
      std::vector<int> ups;
      const auto path = psi(p);
      for (const auto& step : path.steps()) {
        if (step.kind == StepKind::kUp) {
          ups.push_back(step.color);
          s.open();
        } else if (step.kind == StepKind::kDown) {
          s.close(ups.back(), step.color);
          ups.pop_back();
        } else if (step.color == 0) {
          s.fix();
        } else if (step.color <= s.height()) {
          s.upper_bounce(step.color);
        } else {
          s.lower_bounce(step.color - s.height());
        }
      }
      REQUIRE(s.completed_cycles() == stats(p).cyc);
    });
  }
}

TEST_CASE("render_array") {
  CHECK(render_array(perm({2, 1})) == "o]\n[o\n");
  CHECK(render_array(perm({1})) == "o\n");
}
