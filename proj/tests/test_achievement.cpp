#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cantorval;

namespace {
Rational q(long p, long d = 1) { return make_rational(p, d); }
const LambdaSpec kEx1({}, {q(7, 15), q(5, 21)});

SeriesSpec geometric(const Rational& first, const Rational& ratio) { return SeriesSpec({}, {first}, ratio); }

// r_n as S minus the first n terms.
Rational remainder_oracle(const SeriesSpec& s, std::size_t n) {
  Rational partial(0);
  for (std::size_t j = 1; j <= n; ++j) partial += s.term(j);
  return s.sum() - partial;
}
}  // namespace

TEST(SeriesSpec, TermsSumRemainder) {
  const SeriesSpec s({q(3)}, {q(1), q(2, 3)}, q(1, 9));
  EXPECT_EQ(s.term(1), q(3));
  EXPECT_EQ(s.term(2), q(1));
  EXPECT_EQ(s.term(3), q(2, 3));
  EXPECT_EQ(s.term(4), q(1, 9));
  EXPECT_EQ(s.term(5), q(2, 27));
  EXPECT_EQ(s.sum(), q(3) + q(15, 8));
  for (std::size_t n = 0; n <= 9; ++n) EXPECT_EQ(s.remainder(n), remainder_oracle(s, n));
  // Direct partial sums approach S from below.
  Rational partial(0);
  for (std::size_t j = 1; j <= 40; ++j) partial += s.term(j);
  EXPECT_LT(partial, s.sum());
  EXPECT_LT(s.sum() - partial, q(1, 1000000));
}

TEST(SeriesSpec, Validation) {
  EXPECT_THROW(SeriesSpec({}, {}, q(1, 2)), ParseError);
  EXPECT_THROW(SeriesSpec({}, {q(1)}, q(1)), ParseError);
  EXPECT_THROW(SeriesSpec({}, {q(1)}, q(0)), ParseError);
  EXPECT_THROW(SeriesSpec({}, {q(-1)}, q(1, 2)), ParseError);
  EXPECT_THROW(SeriesSpec({q(1)}, {q(2)}, q(1, 2)), ParseError);          // prefix to block
  EXPECT_THROW(SeriesSpec({}, {q(1), q(2)}, q(1, 4)), ParseError);        // inside block
  EXPECT_THROW(SeriesSpec({}, {q(1), q(1, 2)}, q(3, 4)), ParseError);     // block to next block
}

TEST(LambdaToSeries, Examples) {
  const auto third = lambda_to_series(LambdaSpec::constant(q(1, 3)));
  for (std::size_t j = 1; j <= 6; ++j) EXPECT_EQ(third.term(j), q(2, 3) * pow(q(1, 3), j - 1));
  const auto ex1 = lambda_to_series(kEx1);
  EXPECT_EQ(ex1.term(1), q(8, 15));
  EXPECT_EQ(ex1.term(2), q(16, 45));
  EXPECT_EQ(ex1.sum(), q(1));
  const auto quarter = lambda_to_series(LambdaSpec::constant(q(1, 4)));
  for (std::size_t j = 1; j <= 6; ++j) EXPECT_EQ(quarter.term(j), q(3, 4) * pow(q(1, 4), j - 1));
}

TEST(LambdaToSeries, RemaindersAreDn) {
  oracle::Random rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const LambdaSpec spec = rng.spec(3, 4);
    const SeriesSpec s = lambda_to_series(spec);
    EXPECT_EQ(s.sum(), 1);
    EXPECT_TRUE(is_fast_convergent(s));
    for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(s.remainder(n), d(spec, n));
  }
}

TEST(SeriesToLambda, Examples) {
  EXPECT_EQ(series_to_lambda(geometric(q(1), q(1, 3))), LambdaSpec::constant(q(1, 3)));
  EXPECT_EQ(series_to_lambda(SeriesSpec({}, {q(1), q(2, 3)}, q(1, 9))), kEx1);
  EXPECT_THROW(series_to_lambda(geometric(q(1, 2), q(1, 2))), DomainError);
}

TEST(SeriesToLambda, RoundTripRandom) {
  oracle::Random rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const LambdaSpec spec = rng.spec(4, 4);
    EXPECT_EQ(series_to_lambda(lambda_to_series(spec)), spec);
  }
}

TEST(FastConvergent, Examples) {
  EXPECT_TRUE(is_fast_convergent(geometric(q(1), q(1, 3))));
  EXPECT_FALSE(is_fast_convergent(geometric(q(1, 2), q(1, 2))));
  EXPECT_TRUE(is_fast_convergent(SeriesSpec({}, {q(1), q(2, 3)}, q(1, 9))));
}

TEST(FastConvergent, AgreesWithTermwiseCheck) {
  oracle::Random rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = rng.index(1, 3);
    std::vector<Rational> block;
    Rational last(1);
    for (std::size_t i = 0; i < m; ++i) {
      last *= make_rational(static_cast<long>(rng.index(1, 6)), 6);
      block.push_back(last);
    }
    const Rational ratio = last * make_rational(static_cast<long>(rng.index(1, 5)), 6);
    const SeriesSpec s({}, block, ratio);
    bool all = true;
    for (std::size_t n = 1; n <= 30; ++n) all = all && s.term(n) > remainder_oracle(s, n);
    EXPECT_EQ(is_fast_convergent(s), all);
  }
}

TEST(Kakeya, Examples) {
  EXPECT_EQ(kakeya_classify(geometric(q(1, 2), q(1, 2))), KakeyaVerdict::FiniteIntervalUnion);
  EXPECT_EQ(kakeya_classify(geometric(q(1), q(1, 3))), KakeyaVerdict::CantorSet);
  // x_n > r_n at even n only.
  const SeriesSpec alternating({}, {q(1), q(1)}, q(1, 4));
  EXPECT_LT(alternating.term(1), alternating.remainder(1));
  EXPECT_GT(alternating.term(2), alternating.remainder(2));
  EXPECT_EQ(kakeya_classify(alternating), KakeyaVerdict::Inconclusive);
  // A fast convergent tail after a slow prefix is neither.
  EXPECT_EQ(kakeya_classify(SeriesSpec({q(1), q(1)}, {q(1, 3)}, q(1, 3))), KakeyaVerdict::Inconclusive);
  // A slow tail after a fast prefix is a finite union.
  EXPECT_EQ(kakeya_classify(SeriesSpec({q(10)}, {q(1, 2)}, q(1, 2))), KakeyaVerdict::FiniteIntervalUnion);
}

TEST(KSequenceSpec, ParsingAndHypotheses) {
  const KSequenceSpec k("", "01");
  EXPECT_EQ(k.k_indices(3), (std::vector<std::size_t>{2, 4, 6}));
  EXPECT_EQ(KSequenceSpec("0", "110").k_indices(3), (std::vector<std::size_t>{2, 3, 5}));
  EXPECT_THROW(KSequenceSpec("0", "11"), DomainError);
  EXPECT_THROW(KSequenceSpec("", "0x"), ParseError);
  try {
    KSequenceSpec("", "10");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("k_1 > 1"), std::string::npos);
  }
  EXPECT_THROW(KSequenceSpec("0", "0"), DomainError);
  EXPECT_EQ(KSequenceSpec("0", "10"), KSequenceSpec("", "01"));
}

TEST(FromKSequence, Examples) {
  struct Case {
    const char* period;
    std::vector<Rational> block;
    Rational ratio;
    std::vector<Rational> lambda;
    Rational measure;
  };
  const Case cases[] = {
      {"01", {q(1), q(2, 3)}, q(1, 9), {q(7, 15), q(5, 21)}, q(8, 5)},
      {"001", {q(1), q(1, 3), q(2, 9)}, q(1, 27), {q(8, 21), q(11, 24), q(7, 33)}, q(13, 7)},
      {"011", {q(1), q(2, 3), q(2, 9)}, q(1, 27), {q(25, 51), q(23, 75), q(17, 69)}, q(26, 17)},
  };
  for (const auto& c : cases) {
    const auto result = from_k_sequence(KSequenceSpec("", c.period));
    EXPECT_EQ(result.series.block(), c.block);
    EXPECT_EQ(result.series.ratio(), c.ratio);
    EXPECT_EQ(result.lambda, LambdaSpec({}, c.lambda));
    EXPECT_EQ(result.certificate.verdict, Verdict::Cantorval);
    EXPECT_EQ(result.certificate.measure, c.measure);
    EXPECT_EQ(*result.certificate.measure * result.series.sum(), 3);
  }
}

TEST(FromKSequence, RejectsHypothesisViolations) {
  EXPECT_THROW(from_k_sequence(KSequenceSpec("", "1")), DomainError);
}

TEST(Multigeometric, Examples) {
  const auto f1 = multigeometric_form(KSequenceSpec("", "01"));
  EXPECT_EQ(f1.epsilons, (std::vector<int>{1, 2}));
  EXPECT_EQ(f1.m, 2u);
  EXPECT_EQ(f1.measure, q(8, 5));
  const auto f2 = multigeometric_form(KSequenceSpec("", "001"));
  EXPECT_EQ(f2.epsilons, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(f2.measure, q(13, 7));
  const auto f3 = multigeometric_form(KSequenceSpec("", "011"));
  EXPECT_EQ(f3.epsilons, (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(f3.measure, q(26, 17));
  EXPECT_THROW(multigeometric_form(KSequenceSpec("011", "001")), DomainError);
}

TEST(EMeasure, Examples) {
  EXPECT_EQ(e_measure_diff(KSequenceSpec("", "01")), 3);
  EXPECT_EQ(e_measure_diff(KSequenceSpec("", "001")), 3);
  EXPECT_EQ(q(15, 8) * q(8, 5), 3);
}

// For a ratio sequence satisfying the exact relations with k0 = 0, the
// normalized series is x_1/3^{j-1} off the k-indices and twice that on them.
TEST(XFormLaw, ExactRelationsGiveTwoLevelTerms) {
  oracle::Random rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t len = rng.index(2, 7);
    std::string period = "0" + rng.bits(len - 1);
    if (period.find('1') == std::string::npos) period.back() = '1';
    const std::string prefix = rng.index(0, 1) ? "0" + rng.bits(rng.index(0, 3)) : "";
    const KSequenceSpec kspec(prefix, period);
    const LambdaSpec lambda = from_k_sequence(kspec).lambda;
    const SeriesSpec x = lambda_to_series(lambda);
    const auto view = KIndexView(lambda, 0);
    std::size_t next = 1;
    for (std::size_t j = 1; j <= 20; ++j) {
      const bool is_k = view.k(next) == j;
      if (is_k) ++next;
      EXPECT_EQ(x.term(j), (is_k ? 2 : 1) * x.term(1) / pow(q(3), j - 1));
    }
  }
}

TEST(Subsums, Examples) {
  const SeriesSpec ex1({}, {q(1), q(2, 3)}, q(1, 9));
  EXPECT_EQ(subsums_outer(ex1, 0), IntervalUnion{ClosedInterval(q(0), ex1.sum())});
  const auto s2 = subsums_outer(ex1, 2);
  ASSERT_EQ(s2.size(), 4u);
  const Rational lefts[] = {q(0), q(2, 3), q(1), q(5, 3)};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(s2[i].lo, lefts[i]);
    EXPECT_EQ(s2[i].length(), q(5, 24));
  }
  EXPECT_EQ(subsums_outer(geometric(q(1), q(1, 3)), 1),
            (IntervalUnion{ClosedInterval(q(0), q(1, 2)), ClosedInterval(q(1), q(3, 2))}));
  EXPECT_THROW(subsums_outer(geometric(q(1, 2), q(1, 2)), 2), DomainError);
}

TEST(Subsums, ScaledCantorAndTranslationIdentity) {
  oracle::Random rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    const LambdaSpec spec = rng.spec(2, 3);
    const SeriesSpec base = lambda_to_series(spec);
    // Rescale the series so S != 1.
    const Rational scale = make_rational(static_cast<long>(rng.index(1, 9)), static_cast<long>(rng.index(1, 9)));
    std::vector<Rational> prefix, block;
    for (const auto& v : base.prefix()) prefix.push_back(v * scale);
    for (const auto& v : base.block()) block.push_back(v * scale);
    const SeriesSpec s(prefix, block, base.ratio());
    const LambdaSpec back = series_to_lambda(s);
    for (std::size_t n = 0; n <= 7; ++n) {
      const IntervalUnion e = subsums_outer(s, n);
      EXPECT_EQ(e, build_C_n(back, n).scaled(s.sum()));
      EXPECT_EQ(minkowski_sum(e, e), minkowski_diff(e, e).translated(s.sum()));
    }
  }
}
