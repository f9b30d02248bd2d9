#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cantorval;

namespace {
Rational q(long p, long d = 1) { return make_rational(p, d); }
const LambdaSpec kEx1({}, {q(7, 15), q(5, 21)});
const LambdaSpec kEx2({}, {q(8, 21), q(11, 24), q(7, 33)});
}  // namespace

TEST(LambdaSpec, IndexingPrefixAndPeriod) {
  EXPECT_EQ(lambda_at(kEx1, 3), q(7, 15));
  EXPECT_EQ(lambda_at(kEx1, 4), q(5, 21));
  EXPECT_EQ(lambda_at(LambdaSpec::constant(q(1, 3)), 17), q(1, 3));
  EXPECT_EQ(lambda_at(kEx2, 5), q(11, 24));
  const LambdaSpec mixed({q(1, 4), q(1, 5)}, {q(2, 5)});
  EXPECT_EQ(mixed.at(1), q(1, 4));
  EXPECT_EQ(mixed.at(2), q(1, 5));
  EXPECT_EQ(mixed.at(3), q(2, 5));
  EXPECT_EQ(mixed.at(9), q(2, 5));
}

TEST(LambdaSpec, RejectsBoundaryValuesNamingEntry) {
  EXPECT_THROW(LambdaSpec({}, {q(1, 2)}), ParseError);
  EXPECT_THROW(LambdaSpec({}, {q(0)}), ParseError);
  EXPECT_THROW(LambdaSpec({q(-1, 3)}, {q(1, 3)}), ParseError);
  EXPECT_THROW(LambdaSpec({}, {}), ParseError);
  try {
    LambdaSpec({q(1, 3), q(3, 5)}, {q(1, 3)});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("prefix[1] = 3/5"), std::string::npos) << e.what();
  }
}

TEST(LambdaSpec, CanonicalEquality) {
  EXPECT_EQ(LambdaSpec({q(5, 21)}, {q(7, 15), q(5, 21)}), LambdaSpec({}, {q(5, 21), q(7, 15)}));
  EXPECT_EQ(LambdaSpec({}, {q(1, 4), q(1, 4)}), LambdaSpec::constant(q(1, 4)));
  EXPECT_FALSE(LambdaSpec({q(1, 5)}, {q(1, 4)}) == LambdaSpec::constant(q(1, 4)));
  const auto c = LambdaSpec({q(7, 15), q(5, 21), q(7, 15)}, {q(5, 21), q(7, 15)}).canonical();
  EXPECT_TRUE(c.prefix().empty());
  EXPECT_EQ(c.period(), (std::vector<Rational>{q(7, 15), q(5, 21)}));
}

TEST(D, Products) {
  EXPECT_EQ(d(kEx1, 0), q(1));
  EXPECT_EQ(d(kEx1, 2), q(1, 9));
  // d_n = r_n / S for the series 1, 2/3, 1/9, 2/27, ... with S = 15/8, r_2 = 15/72.
  EXPECT_EQ(d(kEx1, 2), q(15, 72) / q(15, 8));
  EXPECT_EQ(d(LambdaSpec::constant(q(1, 3)), 4), q(1, 81));
  const auto table = d_table(kEx1, 4);
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(table[n], d(kEx1, n));
}

TEST(D, StepsStrictlyDecrease) {
  oracle::Random rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const LambdaSpec spec = rng.spec(3, 4);
    const auto dn = d_table(spec, 12);
    for (std::size_t n = 1; n < 12; ++n) EXPECT_LT(dn[n] - dn[n + 1], dn[n - 1] - dn[n]);
  }
}

TEST(IntervalI, Examples) {
  EXPECT_EQ(interval_I(kEx1, BinaryCode{}), ClosedInterval(q(0), q(1)));
  EXPECT_EQ(interval_I(LambdaSpec::constant(q(1, 3)), BinaryCode::parse("1")), ClosedInterval(q(2, 3), q(1)));
  EXPECT_EQ(interval_I(kEx1, BinaryCode::parse("10")), ClosedInterval(q(8, 15), q(8, 15) + q(1, 9)));
}

TEST(IntervalI, MatchesGeometricSubdivision) {
  oracle::Random rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const LambdaSpec spec = rng.spec(2, 3);
    const std::size_t n = rng.index(0, 7);
    const auto parts = oracle::subdivide(spec, n);
    std::size_t i = 0;
    for_each_code<2>(n, [&](const BinaryCode& t) { EXPECT_EQ(interval_I(spec, t), parts[i++]); });
    EXPECT_EQ(i, parts.size());
  }
}

TEST(BuildCn, Examples) {
  EXPECT_EQ(build_C_n(kEx1, 0), IntervalUnion{ClosedInterval(q(0), q(1))});
  EXPECT_EQ(build_C_n(LambdaSpec::constant(q(1, 3)), 1),
            (IntervalUnion{ClosedInterval(q(0), q(1, 3)), ClosedInterval(q(2, 3), q(1))}));
  const auto c2 = build_C_n(kEx1, 2);
  ASSERT_EQ(c2.size(), 4u);
  const Rational lefts[] = {q(0), q(16, 45), q(8, 15), q(8, 15) + q(16, 45)};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(c2[i].lo, lefts[i]);
    EXPECT_EQ(c2[i].length(), q(1, 9));
  }
}

TEST(BuildCn, PropertiesRandom) {
  oracle::Random rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const LambdaSpec spec = rng.spec(3, 4);
    IntervalUnion prev = build_C_n(spec, 0);
    for (std::size_t n = 1; n <= 8; ++n) {
      const IntervalUnion c = build_C_n(spec, n);
      ASSERT_EQ(c.size(), std::size_t{1} << n);
      EXPECT_EQ(c.measure(), pow(Rational(2), n) * d(spec, n));
      EXPECT_TRUE(c.is_subset_of(prev));
      EXPECT_EQ(c.reflected(Rational(1)), c);
      EXPECT_EQ(c, oracle::cantor(spec, n));
      prev = c;
    }
  }
}

TEST(BuildCn, BudgetExceeded) {
  EXPECT_THROW(build_C_n(kEx1, 12, DepthBudget{1000}), BudgetExceeded);
  EXPECT_NO_THROW(build_C_n(kEx1, 9, DepthBudget{512}));
}

TEST(Codes, ParseAndAccessors) {
  const auto s = TernaryCode::parse("0120");
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.digit(2), 1);
  EXPECT_EQ(s.str(), "0120");
  EXPECT_THROW(TernaryCode::parse("013"), ParseError);
  EXPECT_THROW(BinaryCode::parse("2"), ParseError);
  EXPECT_EQ(last_nonzero_position(TernaryCode::parse("0120")), 3u);
  EXPECT_EQ(last_non_two_position(TernaryCode::parse("0122")), 2u);
  EXPECT_EQ(last_nonzero_position(TernaryCode::parse("000")), 0u);
  EXPECT_TRUE(TernaryCode::parse("01").is_prefix_of(s));
  EXPECT_EQ(TernaryCode::parse("0").extended(2, 3).str(), "0222");
}
