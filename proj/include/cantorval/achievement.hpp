#ifndef CANTORVAL_ACHIEVEMENT_HPP
#define CANTORVAL_ACHIEVEMENT_HPP

/// \file
/// Achievement sets E(x) = { sum_{j in A} x_j : A subset of N } of positive
/// series, and their correspondence with central Cantor sets:
/// for a fast convergent series (x_n > r_n = sum_{j>n} x_j) E(x) = S * C(lambda)
/// with lambda_j = r_j / r_{j-1}, r_0 = S.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cantorval/budget.hpp"
#include "cantorval/cantor.hpp"
#include "cantorval/classifier.hpp"
#include "cantorval/interval.hpp"
#include "cantorval/lambda.hpp"
#include "cantorval/sequence.hpp"

namespace cantorval {

/// Eventually multigeometric series: the prefix terms, then
/// x_{|prefix| + (n-1) m + j} = block[j-1] * ratio^{n-1}, m = |block|.
class SeriesSpec {
 public:
  SeriesSpec(std::vector<Rational> prefix, std::vector<Rational> block, Rational ratio)
      : prefix_(std::move(prefix)), block_(std::move(block)), ratio_(std::move(ratio)) {
    if (block_.empty()) throw ParseError("series block must be nonempty");
    if (sgn(ratio_) <= 0 || ratio_ >= 1)
      throw ParseError("series ratio " + to_string(ratio_) + " is not strictly between 0 and 1");
    // Terms through two full blocks; later steps repeat these scaled by ratio.
    const std::size_t horizon = prefix_.size() + block_.size() + 1;
    for (std::size_t j = 1; j <= horizon; ++j) {
      const Rational x = term(j);
      if (sgn(x) <= 0) throw ParseError("series term x_" + std::to_string(j) + " = " + to_string(x) + " is not positive");
      if (j > 1 && term(j - 1) < x)
        throw ParseError("series terms must be nonincreasing: x_" + std::to_string(j) + " = " + to_string(x) +
                         " exceeds x_" + std::to_string(j - 1));
    }
    Rational block_sum(0);
    for (const auto& b : block_) block_sum += b;
    block_sum_ = block_sum;
    sum_ = block_sum / (1 - ratio_);
    for (const auto& p : prefix_) sum_ += p;
  }

  const std::vector<Rational>& prefix() const { return prefix_; }
  const std::vector<Rational>& block() const { return block_; }
  const Rational& ratio() const { return ratio_; }

  /// x_j, j >= 1.
  Rational term(std::size_t j) const {
    if (j == 0) throw DomainError("series index is 1-based");
    if (j <= prefix_.size()) return prefix_[j - 1];
    const std::size_t idx = j - prefix_.size() - 1;
    return block_[idx % block_.size()] * pow(ratio_, idx / block_.size());
  }

  /// S = sum of all terms.
  const Rational& sum() const { return sum_; }

  /// r_n = sum_{j > n} x_j, with r_0 = S.
  Rational remainder(std::size_t n) const {
    const Rational tail_blocks = block_sum_ / (1 - ratio_);
    if (n <= prefix_.size()) {
      Rational r = tail_blocks;
      for (std::size_t j = n; j < prefix_.size(); ++j) r += prefix_[j];
      return r;
    }
    const std::size_t idx = n - prefix_.size();
    const std::size_t a = idx / block_.size();
    const std::size_t b = idx % block_.size();
    Rational rest(0);
    for (std::size_t j = b; j < block_.size(); ++j) rest += block_[j];
    return pow(ratio_, a) * (rest + ratio_ * tail_blocks);
  }

  /// Indices 1..n cover the prefix and one block; x_n - r_n repeats scaled by ratio afterwards.
  std::size_t period_horizon() const { return prefix_.size() + block_.size(); }

 private:
  std::vector<Rational> prefix_;
  std::vector<Rational> block_;
  Rational ratio_;
  Rational block_sum_;
  Rational sum_;
};

/// x_n > r_n for every n.
inline bool is_fast_convergent(const SeriesSpec& series) {
  for (std::size_t n = 1; n <= series.period_horizon(); ++n)
    if (!(series.term(n) > series.remainder(n))) return false;
  return true;
}

enum class KakeyaVerdict { CantorSet, FiniteIntervalUnion, Inconclusive };

inline std::string to_string(KakeyaVerdict v) {
  switch (v) {
    case KakeyaVerdict::CantorSet: return "CantorSet";
    case KakeyaVerdict::FiniteIntervalUnion: return "FiniteIntervalUnion";
    case KakeyaVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

/// CantorSet when fast convergent; FiniteIntervalUnion when x_n <= r_n for
/// almost all n (decided on one block past the prefix); otherwise Inconclusive.
inline KakeyaVerdict kakeya_classify(const SeriesSpec& series) {
  if (is_fast_convergent(series)) return KakeyaVerdict::CantorSet;
  for (std::size_t n = series.prefix().size() + 1; n <= series.period_horizon(); ++n)
    if (series.term(n) > series.remainder(n)) return KakeyaVerdict::Inconclusive;
  return KakeyaVerdict::FiniteIntervalUnion;
}

/// x_1 = 1 - lambda_1, x_j = d_{j-1} (1 - lambda_j). Sum 1, and E(x) = C(lambda).
inline SeriesSpec lambda_to_series(const LambdaSpec& spec) {
  const std::size_t p = spec.prefix().size();
  const std::size_t m = spec.period().size();
  const auto dn = d_table(spec, p + m);
  std::vector<Rational> prefix, block;
  for (std::size_t j = 1; j <= p; ++j) prefix.push_back(dn[j - 1] * (1 - spec.at(j)));
  Rational q(1);
  for (std::size_t j = p + 1; j <= p + m; ++j) {
    block.push_back(dn[j - 1] * (1 - spec.at(j)));
    q *= spec.at(j);
  }
  return SeriesSpec(std::move(prefix), std::move(block), std::move(q));
}

/// lambda_j = r_j / r_{j-1}; E(x) = S * C(lambda).
inline LambdaSpec series_to_lambda(const SeriesSpec& series) {
  if (!is_fast_convergent(series))
    throw DomainError("series is not fast convergent (need x_n > sum_{j>n} x_j for every n)");
  const std::size_t p = series.prefix().size();
  const std::size_t m = series.block().size();
  std::vector<Rational> prefix, period;
  for (std::size_t j = 1; j <= p; ++j) prefix.push_back(series.remainder(j) / series.remainder(j - 1));
  for (std::size_t j = p + 1; j <= p + m; ++j) period.push_back(series.remainder(j) / series.remainder(j - 1));
  return LambdaSpec(std::move(prefix), std::move(period)).canonical();
}

/// Outer approximation of E(x) at depth n: the union over A subset {1..n} of
/// [sum_A x, sum_A x + r_n].
inline IntervalUnion subsums_outer(const SeriesSpec& series, std::size_t n, const DepthBudget& budget = {}) {
  if (!is_fast_convergent(series))
    throw DomainError("subsums_outer: series is not fast convergent (need x_n > sum_{j>n} x_j for every n)");
  budget.require(2, n, "subsums_outer");
  std::vector<Rational> sums{Rational(0)};
  for (std::size_t j = 1; j <= n; ++j) {
    const Rational x = series.term(j);
    const std::size_t count = sums.size();
    sums.reserve(2 * count);
    for (std::size_t i = 0; i < count; ++i) sums.push_back(sums[i] + x);
  }
  const Rational r = series.remainder(n);
  std::vector<ClosedInterval> parts;
  parts.reserve(sums.size());
  for (const auto& s : sums) parts.emplace_back(s, s + r);
  return normalize(std::move(parts));
}

/// Membership pattern of an index sequence k_1 < k_2 < ...: bit j is 1 iff
/// j is some k_n. Requires k_1 > 1 and infinitely many indices both in and
/// out of the sequence.
class KSequenceSpec {
 public:
  KSequenceSpec(std::string_view prefix_bits, std::string_view period_bits)
      : bits_(to_bits(prefix_bits, "prefix_bits"), to_bits(period_bits, "period_bits")) {
    if (bits_.at(1) != 0) throw DomainError("k-sequence hypothesis violated: k_1 > 1 required, but 1 is a k-index");
    bool one = false, zero = false;
    for (auto b : bits_.period()) (b ? one : zero) = true;
    if (!one) throw DomainError("k-sequence hypothesis violated: the period needs a 1 (infinitely many k-indices)");
    if (!zero)
      throw DomainError("k-sequence hypothesis violated: the period needs a 0 (infinitely many indices outside k)");
  }

  bool is_k(std::size_t j) const { return bits_.at(j) != 0; }
  std::string prefix_bits() const { return str(bits_.prefix()); }
  std::string period_bits() const { return str(bits_.period()); }

  std::size_t prefix_size() const { return bits_.prefix().size(); }
  std::size_t period_size() const { return bits_.period().size(); }

  /// Same pattern with the shortest period and shortest prefix.
  KSequenceSpec canonical() const {
    const auto c = bits_.canonical();
    return KSequenceSpec(str(c.prefix()), str(c.period()));
  }

  /// First `count` k-indices.
  std::vector<std::size_t> k_indices(std::size_t count) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 1; out.size() < count; ++j)
      if (is_k(j)) out.push_back(j);
    return out;
  }

  friend bool operator==(const KSequenceSpec& a, const KSequenceSpec& b) { return a.bits_ == b.bits_; }

 private:
  static std::vector<std::uint8_t> to_bits(std::string_view text, const char* where) {
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != '0' && text[i] != '1')
        throw ParseError(std::string(where) + "[" + std::to_string(i) + "] = '" + text[i] + "' is not a bit");
      out.push_back(text[i] == '1');
    }
    return out;
  }
  static std::string str(const std::vector<std::uint8_t>& bits) {
    std::string s;
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
  }

  EventuallyPeriodic<std::uint8_t> bits_;
};

/// x_j = 2 / 3^{j-1} at k-indices and 1 / 3^{j-1} elsewhere.
inline SeriesSpec k_sequence_series(const KSequenceSpec& kspec) {
  const std::size_t p = kspec.prefix_size();
  const std::size_t m = kspec.period_size();
  auto x = [&](std::size_t j) -> Rational { return Rational(kspec.is_k(j) ? 2 : 1) / pow(Rational(3), j - 1); };
  std::vector<Rational> prefix, block;
  for (std::size_t j = 1; j <= p; ++j) prefix.push_back(x(j));
  for (std::size_t j = p + 1; j <= p + m; ++j) block.push_back(x(j));
  return SeriesSpec(std::move(prefix), std::move(block), Rational(1) / pow(Rational(3), m));
}

struct KSequenceResult {
  SeriesSpec series;
  LambdaSpec lambda;
  TrichotomyCertificate certificate;
};

/// The series generated by a k-sequence, its ratio sequence and the
/// Cantorval certificate of C(lambda) - C(lambda). The expected properties
/// (exact relations hold, lambda_1 > 1/3, ratios below 1/3 exactly at the
/// k-indices, measure 3/S) are checked, not assumed.
inline KSequenceResult from_k_sequence(const KSequenceSpec& kspec, const ClassifyOptions& options = {}) {
  SeriesSpec series = k_sequence_series(kspec);
  LambdaSpec lambda = series_to_lambda(series);
  TrichotomyCertificate cert = classify(lambda, options);

  auto fail = [](const std::string& what) { throw std::logic_error("from_k_sequence: " + what); };
  if (!cert.relation_residuals || !all_zero(*cert.relation_residuals)) fail("consecutive-ratio relations do not hold");
  if (cert.verdict != Verdict::Cantorval) fail("verdict is " + to_string(cert.verdict) + ", expected Cantorval");
  if (!cert.k0 || *cert.k0 != 0) fail("start index is not 0");
  const std::size_t horizon = kspec.prefix_size() + 2 * kspec.period_size();
  for (std::size_t j = 1; j <= horizon; ++j)
    if (below_third(lambda.at(j)) != kspec.is_k(j)) fail("ratio below 1/3 at j=" + std::to_string(j) + " mismatch");
  if (!cert.measure || *cert.measure != Rational(3) / series.sum())
    fail("measure differs from 3/S");
  return {std::move(series), std::move(lambda), std::move(cert)};
}

struct MultigeometricForm {
  std::vector<int> epsilons;  // 1 or 2 per position of the period
  std::size_t m = 0;
  Rational measure;           // |C(lambda) - C(lambda)|
};

/// For a purely periodic k pattern of period m:
/// x = (eps_1, eps_2/3, ..., eps_m/3^{m-1}; 1/3^m) and
/// |C - C| = (3^m - 1) / (3^{m-1} (x_1 + ... + x_m)).
inline MultigeometricForm multigeometric_form(const KSequenceSpec& kspec) {
  const KSequenceSpec c = kspec.canonical();
  if (c.prefix_size() != 0)
    throw DomainError("multigeometric form requires a purely periodic k pattern (arithmetic progressions of one difference)");
  MultigeometricForm out;
  out.m = c.period_size();
  Rational block_sum(0);
  for (std::size_t j = 1; j <= out.m; ++j) {
    out.epsilons.push_back(c.is_k(j) ? 2 : 1);
    block_sum += Rational(out.epsilons.back()) / pow(Rational(3), j - 1);
  }
  out.measure = (pow(Rational(3), out.m) - 1) / (pow(Rational(3), out.m - 1) * block_sum);
  const Rational check = cantorval_measure(series_to_lambda(k_sequence_series(c)));
  if (check != out.measure)
    throw std::logic_error("multigeometric_form: closed form " + to_string(out.measure) + " disagrees with " +
                           to_string(check));
  return out;
}

/// |E(x) - E(x)| for the series generated by kspec, computed as S * |C - C|
/// and cross-checked against 2S - sum_n x_{k_n}. Both must equal 3.
inline Rational e_measure_diff(const KSequenceSpec& kspec) {
  const SeriesSpec series = k_sequence_series(kspec);
  const Rational S = series.sum();
  const Rational via_c = S * cantorval_measure(series_to_lambda(series));
  Rational k_terms(0);
  for (std::size_t j = 1; j <= kspec.prefix_size(); ++j)
    if (kspec.is_k(j)) k_terms += series.term(j);
  Rational block_k(0);
  for (std::size_t j = kspec.prefix_size() + 1; j <= series.period_horizon(); ++j)
    if (kspec.is_k(j)) block_k += series.term(j);
  k_terms += block_k / (1 - series.ratio());
  const Rational via_gaps = 2 * S - k_terms;
  if (via_c != via_gaps || via_c != 3)
    throw std::logic_error("e_measure_diff: S*|C-C| = " + to_string(via_c) + ", 2S - sum x_k = " + to_string(via_gaps));
  return via_c;
}

}  // namespace cantorval

#endif  // CANTORVAL_ACHIEVEMENT_HPP
