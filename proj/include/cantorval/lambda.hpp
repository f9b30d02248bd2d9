#ifndef CANTORVAL_LAMBDA_HPP
#define CANTORVAL_LAMBDA_HPP

#include <string>
#include <utility>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"
#include "cantorval/sequence.hpp"

namespace cantorval {

inline const Rational& one_third() {
  static const Rational v(1, 3);
  return v;
}

inline const Rational& one_half() {
  static const Rational v(1, 2);
  return v;
}

/// True for ratios at which the three children of a difference interval
/// leave two gaps (ratio < 1/3); false when they overlap.
inline bool below_third(const Rational& ratio) { return ratio < one_third(); }

/// An eventually periodic ratio sequence with every entry in the open
/// interval (0, 1/2). Entries are validated on construction.
class LambdaSpec {
 public:
  LambdaSpec(std::vector<Rational> prefix, std::vector<Rational> period)
      : seq_(std::move(prefix), std::move(period)) {
    validate(seq_.prefix(), "prefix");
    validate(seq_.period(), "period");
  }

  static LambdaSpec constant(const Rational& ratio) { return LambdaSpec({}, {ratio}); }

  /// The n-th ratio, n >= 1.
  const Rational& at(std::size_t n) const { return seq_.at(n); }

  const std::vector<Rational>& prefix() const { return seq_.prefix(); }
  const std::vector<Rational>& period() const { return seq_.period(); }

  LambdaSpec canonical() const {
    auto c = seq_.canonical();
    return LambdaSpec(c.prefix(), c.period());
  }

  friend bool operator==(const LambdaSpec& a, const LambdaSpec& b) { return a.seq_ == b.seq_; }

 private:
  static void validate(const std::vector<Rational>& entries, const char* where) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const Rational& v = entries[i];
      if (sgn(v) <= 0 || !(v < one_half()))
        throw ParseError(std::string("lambda ") + where + "[" + std::to_string(i) + "] = " + to_string(v) +
                         " is not strictly between 0 and 1/2");
    }
  }

  EventuallyPeriodic<Rational> seq_;
};

inline const Rational& lambda_at(const LambdaSpec& spec, std::size_t n) { return spec.at(n); }

/// d_n = lambda_1 * ... * lambda_n, with d_0 = 1. Each basic interval of
/// depth n has this length.
inline Rational d(const LambdaSpec& spec, std::size_t n) {
  Rational product(1);
  for (std::size_t j = 1; j <= n; ++j) product *= spec.at(j);
  return product;
}

/// d_0, ..., d_n.
inline std::vector<Rational> d_table(const LambdaSpec& spec, std::size_t n) {
  std::vector<Rational> table;
  table.reserve(n + 1);
  table.emplace_back(1);
  for (std::size_t j = 1; j <= n; ++j) table.push_back(table.back() * spec.at(j));
  return table;
}

}  // namespace cantorval

#endif  // CANTORVAL_LAMBDA_HPP
