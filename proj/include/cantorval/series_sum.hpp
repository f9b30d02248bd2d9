#ifndef CANTORVAL_SERIES_SUM_HPP
#define CANTORVAL_SERIES_SUM_HPP

#include <stdexcept>

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"

namespace cantorval {

/// Exact value of sum_{n >= first} term(n) for a series whose terms repeat
/// geometrically with a period: term(n + period) = ratio * term(n) for all
/// n >= tail_start. Terms before tail_start are summed directly; the tail is
///   (term(tail_start) + ... + term(tail_start + period - 1)) / (1 - ratio).
template <class Term>
Rational eventually_geometric_sum(Term&& term, std::size_t first, std::size_t tail_start, std::size_t period,
                                  const Rational& ratio) {
  if (period == 0) throw std::logic_error("eventually_geometric_sum: zero period");
  if (sgn(ratio) < 0 || ratio >= 1) throw DivergenceError("series divergent under this spec: tail ratio " +
                                                        to_string(ratio) + " is not below 1");
  if (tail_start < first) tail_start = first;
  Rational head(0);
  for (std::size_t n = first; n < tail_start; ++n) head += term(n);
  Rational block(0);
  for (std::size_t n = tail_start; n < tail_start + period; ++n) block += term(n);
  // The periodic structure is a claim about the caller's term function.
  if (term(tail_start + period) != ratio * term(tail_start))
    throw std::logic_error("eventually_geometric_sum: terms do not repeat with the stated ratio");
  return head + block / (1 - ratio);
}

}  // namespace cantorval

#endif  // CANTORVAL_SERIES_SUM_HPP
