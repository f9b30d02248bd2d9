#ifndef CANTORVAL_CANTOR_HPP
#define CANTORVAL_CANTOR_HPP

/// \file
/// Finite-depth stages C_n of the central Cantor set. Each interval I_t of
/// depth n keeps its two end pieces of length d_{n+1}; the basic interval
/// addressed by t in {0,1}^n starts at sum_r t_r (d_{r-1} - d_r).

#include <vector>

#include "cantorval/budget.hpp"
#include "cantorval/interval.hpp"
#include "cantorval/lambda.hpp"
#include "cantorval/sequence.hpp"

namespace cantorval {

inline ClosedInterval interval_I(const LambdaSpec& spec, const BinaryCode& t) {
  const auto dn = d_table(spec, t.size());
  Rational left(0);
  for (std::size_t r = 1; r <= t.size(); ++r)
    if (t.digit(r) == 1) left += dn[r - 1] - dn[r];
  return {left, left + dn[t.size()]};
}

/// Union of the 2^n basic intervals of depth n, in left-to-right order.
inline IntervalUnion build_C_n(const LambdaSpec& spec, std::size_t n, const DepthBudget& budget = {}) {
  budget.require(2, n, "build_C_n");
  const auto dn = d_table(spec, n);
  std::vector<Rational> lefts{Rational(0)};
  for (std::size_t r = 1; r <= n; ++r) {
    const Rational step = dn[r - 1] - dn[r];
    std::vector<Rational> next;
    next.reserve(lefts.size() * 2);
    for (const auto& l : lefts) {
      next.push_back(l);
      next.push_back(l + step);
    }
    lefts = std::move(next);
  }
  MonotoneMerger merger;
  for (const auto& l : lefts) merger.push(l, l + dn[n]);
  return std::move(merger).finish();
}

}  // namespace cantorval

#endif  // CANTORVAL_CANTOR_HPP
