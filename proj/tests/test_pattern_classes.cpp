#include <doctest.h>

#include "oracles.hpp"
#include "permclass/oracle.hpp"
#include "permclass/pattern_classes.hpp"
#include "test_util.hpp"

using namespace permclass;
using testutil::error_of;
using testutil::perm;

TEST_CASE("almost-increasing membership") {
  for (int n = 0; n <= 6; ++n) CHECK(is_almost_increasing(Permutation::identity(n), 0));
  const auto p = perm({5, 7, 2, 4, 3, 8, 1, 6, 9, 12, 10, 11});
  CHECK(is_almost_increasing(p, 2));
  CHECK_FALSE(is_almost_increasing(p, 1));
  CHECK_FALSE(is_almost_increasing(perm({2, 1}), 0));
}

TEST_CASE("A^(0) is the identity and A^(floor(n/2)) is everything, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    int zero = 0;
    std::int64_t half = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      zero += is_almost_increasing(p, 0);
      half += is_almost_increasing(p, n / 2);
      for (int k = 0; k < 4; ++k) {
        if (is_almost_increasing(p, k)) REQUIRE(is_almost_increasing(p, k + 1));
      }
    });
    CHECK(zero == 1);
    CHECK(half == oracle::count_if_perm(n, [](const auto&) { return true; }));
  }
}

TEST_CASE("membership counts match the oracle") {
  // brute-force |A^(k)_n|, n = 0..8
  const std::vector<std::vector<std::int64_t>> expected = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 1, 2, 6, 20, 68, 232, 792, 2704},
      {1, 1, 2, 6, 24, 120, 684, 4140, 25668},
  };
  for (int k = 0; k <= 2; ++k) {
    for (int n = 0; n <= 7; ++n) {
      CHECK(oracle::count_if_perm(n, [k](const auto& v) { return oracle::almost_increasing(v, k); }) ==
            expected[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)]);
      std::int64_t count = 0;
      for_each_permutation(n, [&](const Permutation& p) { count += is_almost_increasing(p, k); });
      CHECK(count == expected[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("forbidden sets") {
  CHECK(sigma_set(0).patterns == std::vector<Permutation>{perm({2, 1})});
  CHECK(sigma_set(1).patterns == std::vector<Permutation>{perm({3, 4, 1, 2}), perm({3, 4, 2, 1}),
                                                          perm({4, 3, 1, 2}), perm({4, 3, 2, 1})});
  const auto s2 = sigma_set(2);
  CHECK(s2.size() == 36);
  CHECK(oracle::count_if_perm(6, [](const auto& v) { return v[0] >= 4 && v[1] >= 4 && v[2] >= 4; }) == 36);
  for (const auto& p : s2.patterns) {
    CHECK(p.size() == 6);
    CHECK(p(1) >= 4);
    CHECK(p(2) >= 4);
    CHECK(p(3) >= 4);
  }
  CHECK(sigma_set(3).size() == 576);
}

TEST_CASE("pattern characterization agrees with the direct test, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      for (int k = 0; k <= 2; ++k) {
        REQUIRE(is_almost_increasing(p, k) == is_almost_increasing_by_patterns(p, k));
      }
    });
  }
  CHECK_FALSE(is_almost_increasing_by_patterns(perm({4, 3, 2, 1}), 1));
  CHECK(is_almost_increasing_by_patterns(perm({2, 6, 1, 4, 5, 8, 7, 3, 10, 9, 11}), 1));
}

TEST_CASE("X-class membership") {
  CHECK(is_x_class(Permutation::identity(5)));
  CHECK_FALSE(is_x_class(perm({2, 1, 4, 3})));
  CHECK(is_x_class(perm({2, 12, 10, 4, 9, 6, 8, 7, 5, 11, 13, 3, 1})));
  CHECK(x_class_patterns().size() == 4);
  for (int n = 0; n <= 7; ++n) {
    for (const auto& v : oracle::all_perms(n)) REQUIRE(is_x_class(perm(v)) == oracle::x_class(v));
  }
}

TEST_CASE("corner dots") {
  CHECK(corner_dot(perm({1})) == Corner::kUpperRight);
  CHECK_FALSE(corner_dot(perm({2, 4, 1, 3})).has_value());
  CHECK(corner_dot(perm({2, 12, 10, 4, 9, 6, 8, 7, 5, 11, 13, 3, 1})) == Corner::kLowerRight);
  CHECK(corner_dot(perm({1, 2})) == Corner::kUpperRight);
  CHECK(corner_dot(perm({2, 1})) == Corner::kUpperLeft);
  CHECK(corner_dot(perm({1, 3, 2})) == Corner::kLowerLeft);
  CHECK(corner_name(Corner::kLowerLeft) == "LOWER_LEFT");
  CHECK(error_of([] { corner_dot(Permutation{}); }) == ErrorCode::kInvalidArgument);
}
