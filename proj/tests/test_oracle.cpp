#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "permclass/bijections.hpp"
#include "permclass/oracle.hpp"
#include "permclass/verification.hpp"
#include "test_util.hpp"

using namespace permclass;
using testutil::error_of;

TEST_CASE("enumerators") {
  CHECK(enumerate_perms(3).size() == 6);
  CHECK(enumerate_perms(0).size() == 1);
  CHECK(to_string(enumerate_perms(3).front()) == "1,2,3");
  CHECK(to_string(enumerate_perms(3).back()) == "3,2,1");
  std::vector<std::size_t> counts;
  for (int n = 1; n <= 6; ++n) counts.push_back(enumerate_words(n).size());
  CHECK(counts == std::vector<std::size_t>{1, 2, 6, 20, 68, 232});
  CHECK(enumerate_words(2).front().letters() == "E");
  CHECK(enumerate_bounded_paths(2).front().steps() == "DU");
  CHECK(enumerate_colored_paths(3, 1).size() == 6);
}

TEST_CASE("enumeration caps") {
  EnumerationCaps caps;
  CHECK(error_of([&] { enumerate_perms(10, caps); }) == ErrorCode::kCapExceeded);
  CHECK(error_of([&] { enumerate_words(13, caps); }) == ErrorCode::kCapExceeded);
  CHECK(error_of([&] { enumerate_perms(5, caps.capped_at(4)); }) == ErrorCode::kCapExceeded);
  CHECK(error_of([&] { enumerate_perms(-1, caps); }) == ErrorCode::kInvalidArgument);
  CHECK(caps.capped_at(100).perm_n == 9);
}

TEST_CASE("stat tables") {
  const auto all3 = stat_table(3, 0, PermClass::kAll);
  CHECK(all3.total() == 6);
  CHECK(all3.inversion_distribution() == std::vector<std::uint64_t>{1, 2, 2, 1});
  const auto empty = stat_table(0, 1, PermClass::kAip);
  CHECK(empty.counts.size() == 1);
  CHECK(empty.total() == 1);
  CHECK(stat_table(5, 1, PermClass::kAip).total() == 68);
  CHECK(stat_table(6, 0, PermClass::kXClass).total() == 232);
  CHECK(stat_table(6, 3, PermClass::kAipInvolutions).total() ==
        static_cast<std::uint64_t>(oracle::count_if_perm(6, oracle::is_involution)));
}

TEST_CASE("harness reports pass with domain size") {
  const auto wx = check_wx_bijection(8);
  CHECK(wx.passed);
  CHECK(wx.domain_size == 1 + 2 + 6 + 20 + 68 + 232 + 792 + 2704);
  const auto psi7 = check_psi_bijection(7);
  CHECK(psi7.passed);
  CHECK(psi7.domain_size >= 5040);
}

TEST_CASE("harness catches a corrupted inverse") {
  const auto report = injected_fault_check();
  CHECK_FALSE(report.passed);
  REQUIRE(report.counterexample.has_value());
  CHECK_FALSE(report.counterexample->input.empty());
  CHECK(report.summary().rfind("FAIL", 0) == 0);
  CHECK(report.to_json().find("\"counterexample\"") != std::string::npos);
  CHECK(check_harness_self_test().passed);
}

TEST_CASE("generic bijection check flags non-injective maps") {
  const std::vector<Permutation> domain = enumerate_perms(3);
  const auto report = check_bijection(
      "constant", domain, [](const Permutation&) { return Permutation::identity(3); },
      [](const Permutation& p) { return p; }, [](const Permutation&) { return true; });
  CHECK_FALSE(report.passed);
  const auto image = check_image("theta image", enumerate_perms(2),
                                 [](const Permutation& p) { return theta(p); },
                                 std::vector<MotzkinPath>{{"LL"}, {"UD"}});
  CHECK(image.passed);
}

TEST_CASE("sequence checks") {
  CHECK(check_sequence("same", {1, 2}, {1, 2}).passed);
  CHECK_FALSE(check_sequence("differs", {1, 2}, {1, 3}).passed);
  CHECK_FALSE(check_sequence("short", {1, 2}, {1}).passed);
}

TEST_CASE("small verification run passes") {
  for (const auto& r : run_verification(VerifySuite::kAll, VerifyOptions{5, false})) {
    INFO(r.summary());
    CHECK(r.passed);
  }
  const auto with_fault = run_verification(VerifySuite::kBijections, VerifyOptions{4, true});
  CHECK(std::any_of(with_fault.begin(), with_fault.end(), [](const CheckReport& r) { return !r.passed; }));
}
