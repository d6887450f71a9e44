#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "degen/errors.hpp"
#include "degen/identities.hpp"
#include "degen/wire.hpp"

namespace degen {
namespace {

std::size_t count_id(const std::vector<IdentityResult>& rs, const std::string& id) {
  return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [&](const auto& r) { return r.identity_id == id; }));
}

TEST(Thm1, Examples) {
  const auto r = verify_thm1(1, 3, {Rational{1}, Rational{1}, Rational{1}});
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.lhs.has_value());
  EXPECT_TRUE(verify_thm1(2, 3, {Rational{0}, Rational{1}, Rational{1}}).passed);
  EXPECT_TRUE(verify_thm1(2, 3, {Rational(-3, 7), Rational(5, 2), Rational(9, 4)}).passed);
}

TEST(Thm1, Preconditions) {
  EXPECT_THROW(verify_thm1(2, 3, {Rational{1}}), BadLength);
  EXPECT_THROW(verify_thm1(0, 3, {Rational{1}, Rational{1}, Rational{1}}), BadParameter);
  EXPECT_THROW(verify_thm1(4, 3, {Rational{1}, Rational{1}, Rational{1}}), BadParameter);
}

TEST(SumPowers, Examples) {
  const auto rs = verify_sum_powers(2, 3);
  ASSERT_EQ(rs.size(), 4U);
  EXPECT_EQ(rs[0].identity_id, "thm2");
  EXPECT_EQ(rs[1].identity_id, "thm3");
  EXPECT_EQ(rs[2].identity_id, "thm4");
  EXPECT_EQ(rs[3].identity_id, "eq23");
  for (const auto& r : rs) EXPECT_TRUE(r.passed) << r.identity_id;
  for (const auto& r : verify_sum_powers(1, 1)) EXPECT_TRUE(r.passed) << r.identity_id;
}

TEST(Thm5, Examples) {
  EXPECT_TRUE(verify_thm5(1, 2, Rational{2}).passed);
  EXPECT_TRUE(verify_thm5(2, 2, Rational(1, 3)).passed);
  EXPECT_THROW(verify_thm5(1, 1, Rational{1}), DegenerateParameter);
  EXPECT_THROW(verify_thm5(1, 1, Rational{0}), DegenerateParameter);
}

TEST(Thm7, CorrectedPasses) {
  EXPECT_TRUE(verify_thm7(1, 2, true).passed);
  EXPECT_TRUE(verify_thm7(2, 2, true).passed);
}

TEST(Thm7, PrintedFormFailsAtKnownPoint) {
  const auto r = verify_thm7(1, 2, false);
  EXPECT_EQ(r.identity_id, "thm7_verbatim");
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.expected_fail);
  EXPECT_EQ(r.lhs, "1*x + -3*x^3 + 2*x^4");
  EXPECT_EQ(r.rhs, "1*x + -4*x^4 + 3*x^5");
}

TEST(Thm11, SmallCasesHoldInBothForms) {
  for (bool corrected : {true, false}) {
    for (std::size_t m : {0U, 1U}) {
      for (const auto& r : verify_thm11(m, corrected)) EXPECT_TRUE(r.passed) << m << " " << corrected;
    }
  }
}

TEST(Thm11, PrintedFormFailsFromMTwo) {
  const auto rs = verify_thm11(2, false);
  ASSERT_EQ(rs.size(), 3U);
  EXPECT_FALSE(rs[0].passed);
  EXPECT_TRUE(rs[0].expected_fail);
  EXPECT_EQ(rs[0].lhs, "2 + -3*L + 1*L^2");
  EXPECT_EQ(rs[0].rhs, "2 + -5*L + 3*L^2");
  bool any_failed = false;
  for (const auto& r : verify_thm11(5, false)) any_failed = any_failed || !r.passed;
  EXPECT_TRUE(any_failed);
}

TEST(Thm11, CorrectedFormPasses) {
  for (std::size_t m = 0; m <= 8; ++m) {
    const auto rs = verify_thm11(m, true);
    ASSERT_EQ(rs.size(), m + 1);
    for (const auto& r : rs) EXPECT_TRUE(r.passed) << m;
  }
}

TEST(Misc, Examples) {
  EXPECT_TRUE(verify_misc("hockey_stick", {{"k", 2}, {"m", 5}}).passed);
  EXPECT_TRUE(verify_misc("bernoulli_reflection", {{"n", 2}}).passed);
  EXPECT_TRUE(verify_misc("eulerian_top_vanishes", {{"n", 4}}).passed);
  EXPECT_TRUE(verify_misc("eq24", {{"n", 5}, {"m", 3}}).passed);
  EXPECT_TRUE(verify_misc("eq26_1", {{"alpha", 2}, {"m", 4}}).passed);
  EXPECT_THROW(verify_misc("nope", {}), UnknownIdentity);
  EXPECT_THROW(verify_misc("hockey_stick", {{"k", 2}}), BadParameter);
}

TEST(GfChecks, PassOnBaseTables) {
  const BaseTables t = BaseTables::build(10);
  EXPECT_TRUE(verify_bernoulli_gf(t, 8).passed);
  EXPECT_TRUE(verify_frobenius_gf(8, Rational(-2, 5)).passed);
  EXPECT_TRUE(verify_thm6(t, 4, 16).passed);
  EXPECT_TRUE(verify_thm10(t, 6).passed);
  EXPECT_TRUE(verify_carlitz(t, 5).passed);
  EXPECT_TRUE(verify_row_sum(t, 7).passed);
  for (const Rational& t0 : {Rational{2}, Rational{-1}, Rational(1, 2)}) EXPECT_TRUE(verify_thm9_egf(t, 10, t0).passed);
}

TEST(Suite, NamesRoundTrip) {
  for (auto s : {Suite::All, Suite::Thm1, Suite::Thm2to4, Suite::Thm5, Suite::Thm7, Suite::Thm11, Suite::Misc, Suite::Gf}) {
    EXPECT_EQ(parse_suite(to_string(s)), s);
  }
  EXPECT_EQ(parse_suite("bogus"), std::nullopt);
}

TEST(Suite, SamplesAvoidZeroAndOne) {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const Rational r = sample_rational(42, i % 7, i);
    ASSERT_FALSE(r.is_zero());
    ASSERT_NE(r, Rational{1});
    ASSERT_LE(r.denominator(), 10);
    ASSERT_LE(abs(r.numerator()), 10);
  }
  const SuiteConfig c = resolve(SuiteConfig{});
  EXPECT_EQ(c.x_samples.size(), 3U);
  EXPECT_EQ(c.t_samples.size(), 3U);
  SuiteConfig bad;
  bad.x_samples = {Rational{1}};
  EXPECT_THROW((void)resolve(bad), BadParameter);
}

TEST(Suite, DefaultRunHasOnlyExpectedFailures) {
  const auto rs = run_suite(SuiteConfig{});
  EXPECT_EQ(unexpected_failures(rs), 0U);
  std::set<std::string> expected_fail_ids;
  for (const auto& r : rs) {
    EXPECT_EQ(r.passed, !r.lhs.has_value());
    EXPECT_EQ(r.passed, !r.rhs.has_value());
    if (!r.passed) expected_fail_ids.insert(r.identity_id);
  }
  EXPECT_EQ(expected_fail_ids, (std::set<std::string>{"thm7_verbatim", "thm11_verbatim"}));
  for (const char* id : {"thm1", "thm2", "thm3", "thm4", "eq23", "thm5", "thm7", "thm11", "hockey_stick", "eq24",
                         "bernoulli_reflection", "eq26_1", "eulerian_top_vanishes", "bernoulli_gf", "frobenius_gf",
                         "thm6", "eulerian_row_sum", "thm10", "carlitz", "thm9_egf"}) {
    EXPECT_GT(count_id(rs, id), 0U) << id;
  }
}

TEST(Suite, Deterministic) {
  SuiteConfig c;
  c.m_max = 5;
  c.alpha_max = 3;
  c.n_max = 4;
  EXPECT_EQ(run_suite(c), run_suite(c));
  SuiteConfig d = c;
  d.seed = 43;
  EXPECT_NE(run_suite(c, Suite::Thm1), run_suite(d, Suite::Thm1));
}

TEST(Suite, SelectingASuiteDoesNotChangeItsResults) {
  SuiteConfig c;
  c.m_max = 4;
  c.alpha_max = 3;
  c.n_max = 3;
  const auto all = run_suite(c);
  const auto thm5 = run_suite(c, Suite::Thm5);
  std::vector<IdentityResult> filtered;
  std::copy_if(all.begin(), all.end(), std::back_inserter(filtered), [](const auto& r) { return r.identity_id == "thm5"; });
  EXPECT_EQ(filtered, thm5);
}

TEST(Suite, ZeroBoundsRunOnlyTrivialChecks) {
  SuiteConfig c;
  c.n_max = 0;
  c.m_max = 0;
  c.alpha_max = 0;
  c.egf_order = 0;
  const auto rs = run_suite(c);
  EXPECT_FALSE(rs.empty());
  for (const auto& r : rs) EXPECT_TRUE(r.passed) << r.identity_id;
}

TEST(Suite, MutationOfAnyEarlyEntryIsDetected) {
  SuiteConfig c;
  c.alpha_max = 4;
  c.m_max = 5;
  c.n_max = 5;
  c.egf_order = 5;
  const BaseTables base = BaseTables::build(required_rows(c));
  ASSERT_EQ(unexpected_failures(run_suite(c, Suite::All, base)), 0U);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      BaseTables s2 = base;
      s2.s2 = base.s2.with_entry(n, k, base.s2.at(n, k) + LambdaPoly(Rational{1}));
      EXPECT_GT(unexpected_failures(run_suite(c, Suite::All, s2)), 0U) << "s2 " << n << "," << k;
      BaseTables br = base;
      br.bracket = base.bracket.with_entry(n, k, base.bracket.at(n, k) + LambdaPoly(Rational{1}));
      EXPECT_GT(unexpected_failures(run_suite(c, Suite::All, br)), 0U) << "bracket " << n << "," << k;
      BaseTables eu = base;
      eu.eulerian = base.eulerian.with_entry(n, k - 1, base.eulerian.at(n, k - 1) + LambdaPoly(Rational{1}));
      EXPECT_GT(unexpected_failures(run_suite(c, Suite::All, eu)), 0U) << "eulerian " << n << "," << k - 1;
    }
  }
}

}  // namespace
}  // namespace degen
