#include <doctest.h>

#include "oracles.hpp"
#include "permclass/oracle.hpp"
#include "permclass/permutation.hpp"
#include "test_util.hpp"

using namespace permclass;
using testutil::error_of;
using testutil::perm;
using testutil::values;

namespace {
const std::vector<int> kHeightTwoPerm = {5, 7, 2, 4, 3, 8, 1, 6, 9, 12, 10, 11};
}

TEST_CASE("parse and print") {
  CHECK(values(parse_permutation("4,1,3,2")) == std::vector<int>{4, 1, 3, 2});
  CHECK(values(parse_permutation(" 2 , 1 ")) == std::vector<int>{2, 1});
  CHECK(parse_permutation("").size() == 0);
  CHECK(to_string(perm({3, 1, 2})) == "3,1,2");
  CHECK(to_string(Permutation{}) == "");
}

TEST_CASE("invalid one-line notation is a parse error") {
  CHECK(error_of([] { parse_permutation("1,1"); }) == ErrorCode::kParse);
  CHECK(error_of([] { parse_permutation("0,1"); }) == ErrorCode::kParse);
  CHECK(error_of([] { parse_permutation("1,3"); }) == ErrorCode::kParse);
  CHECK(error_of([] { parse_permutation("1,,2"); }) == ErrorCode::kParse);
  CHECK(error_of([] { parse_permutation("1,x"); }) == ErrorCode::kParse);
  CHECK(error_of([] { perm({2, 2}); }) == ErrorCode::kParse);
}

TEST_CASE("statistics") {
  CHECK(stats(Permutation::identity(5)) == StatVector{5, 5, 0, 0});
  CHECK(stats(perm({2, 3, 1})) == StatVector{1, 0, 2, 2});
  // inv = 17 from the O(n^2) oracle
  CHECK(oracle::inversions(kHeightTwoPerm) == 17);
  CHECK(stats(perm(kHeightTwoPerm)) == StatVector{5, 2, 4, 17});
  CHECK(stats(Permutation{}) == StatVector{0, 0, 0, 0});
}

TEST_CASE("statistics agree with the definitions on S_n, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      const StatVector s = stats(perm(v));
      REQUIRE(s.cyc == oracle::cycles(v));
      REQUIRE(s.fp == oracle::fixed_points(v));
      REQUIRE(s.exc == oracle::excedances(v));
      REQUIRE(s.inv == oracle::inversions(v));
    }
  }
}

TEST_CASE("pattern containment") {
  CHECK(contains_pattern(perm({3, 4, 1, 2}), perm({3, 4, 1, 2})));
  CHECK_FALSE(contains_pattern(Permutation::identity(6), perm({2, 1})));
  CHECK_FALSE(contains_pattern(perm({5, 2, 1, 4, 3, 7, 6, 10, 8, 13, 11, 9, 12}), perm({3, 4, 1, 2})));
  CHECK(contains_pattern(perm({1, 2}), Permutation{}));
  CHECK_FALSE(contains_pattern(perm({1}), perm({1, 2})));
}

TEST_CASE("pattern containment matches subset enumeration") {
  const std::vector<std::vector<int>> patterns = {{2, 1}, {1, 3, 2}, {3, 4, 1, 2}, {2, 4, 1, 3}, {3, 2, 1}};
  for (int n = 0; n <= 6; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      for (const auto& s : patterns) {
        REQUIRE(contains_pattern(perm(v), perm(s)) == oracle::contains(v, s));
      }
    }
  }
}

TEST_CASE("inverse and involutions") {
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(is_involution(perm({2, 1, 4, 3})));
  CHECK_FALSE(is_involution(perm({2, 3, 1})));
  CHECK(is_involution(Permutation{}));
  CHECK(inverse(perm({2, 3, 1})) == perm({3, 1, 2}));
}

TEST_CASE("inverse invariants, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      const Permutation q = inverse(p);
      REQUIRE(inverse(q) == p);
      const StatVector a = stats(p);
      const StatVector b = stats(q);
      REQUIRE(a.inv == b.inv);
      REQUIRE(a.fp == b.fp);
      REQUIRE(a.cyc == b.cyc);
      REQUIRE(is_involution(p) == (p == q));
    });
  }
}

TEST_CASE("height profile") {
  CHECK(height_profile(Permutation::identity(4)) == std::vector<int>{0, 0, 0, 0});
  CHECK(height_profile(perm({2, 1})) == std::vector<int>{1, 0});
  CHECK(oracle::heights(kHeightTwoPerm) == std::vector<int>{1, 2, 2, 2, 1, 2, 1, 0, 0, 1, 1, 0});
  CHECK(height_profile(perm(kHeightTwoPerm)) == oracle::heights(kHeightTwoPerm));
  CHECK(height_profile(Permutation{}).empty());
}

TEST_CASE("height profile and its mirror count agree, n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    for_each_permutation(n, [n](const Permutation& p) {
      const auto h = height_profile(p);
      for (int i = 1; i <= n; ++i) {
        int below = 0;
        for (int j = i + 1; j <= n; ++j) below += p(j) <= i;
        REQUIRE(h[static_cast<std::size_t>(i - 1)] == below);
      }
    });
  }
}
