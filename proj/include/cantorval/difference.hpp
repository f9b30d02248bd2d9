#ifndef CANTORVAL_DIFFERENCE_HPP
#define CANTORVAL_DIFFERENCE_HPP

/// \file
/// Ternary-coded geometry of C_n - C_n.
///
/// J_s = I_t - I_p with s_r = t_r - p_r + 1 has length 2 d_n and center
///   c(J_s) = -1 + d_n + sum_r s_r (d_{r-1} - d_r).
/// Its children J_{s0}, J_{s1}, J_{s2} share the left end, the center and the
/// right end of J_s respectively. When lambda_{n+1} < 1/3 they leave two open
/// gaps G_s^0, G_s^1 of length d_n - 3 d_{n+1}; otherwise they overlap in
/// Z_s^0, Z_s^1 of length 3 d_{n+1} - d_n.

#include <compare>
#include <string>
#include <vector>

#include "cantorval/budget.hpp"
#include "cantorval/interval.hpp"
#include "cantorval/lambda.hpp"
#include "cantorval/sequence.hpp"

namespace cantorval {

inline Rational center_J(const LambdaSpec& spec, const TernaryCode& s) {
  const auto dn = d_table(spec, s.size());
  Rational c = dn[s.size()] - 1;
  for (std::size_t r = 1; r <= s.size(); ++r)
    if (s.digit(r) != 0) c += static_cast<unsigned long>(s.digit(r)) * (dn[r - 1] - dn[r]);
  return c;
}

inline ClosedInterval interval_J(const LambdaSpec& spec, const TernaryCode& s) {
  const Rational c = center_J(spec, s);
  const Rational radius = d(spec, s.size());
  return {c - radius, c + radius};
}

/// Centers of all 3^n intervals J_s of depth n, sorted and without repeats.
/// Built level by level: the children of a sorted center list are three
/// shifted copies of it, merged in linear time.
inline std::vector<Rational> sorted_J_centers(const LambdaSpec& spec, std::size_t n,
                                              const DepthBudget& budget = {}) {
  budget.require(3, n, "J-interval enumeration");
  const auto dn = d_table(spec, n);
  std::vector<Rational> centers{Rational(0)};
  std::vector<Rational> next;
  for (std::size_t r = 1; r <= n; ++r) {
    const Rational step = dn[r - 1] - dn[r];
    std::vector<Rational> lower, upper;
    lower.reserve(centers.size());
    upper.reserve(centers.size());
    for (const auto& c : centers) {
      lower.push_back(c - step);
      upper.push_back(c + step);
    }
    const std::vector<Rational>* runs[3] = {&lower, &centers, &upper};
    std::size_t pos[3] = {0, 0, 0};
    next.clear();
    next.reserve(centers.size() * 3);
    while (true) {
      int pick = -1;
      for (int k = 0; k < 3; ++k) {
        if (pos[k] == runs[k]->size()) continue;
        if (pick < 0 || (*runs[k])[pos[k]] < (*runs[pick])[pos[pick]]) pick = k;
      }
      if (pick < 0) break;
      const Rational& v = (*runs[pick])[pos[pick]++];
      if (next.empty() || next.back() != v) next.push_back(v);
    }
    centers.swap(next);
  }
  return centers;
}

/// C_n - C_n as the union of all J_s, |s| = n.
inline IntervalUnion build_diff_n(const LambdaSpec& spec, std::size_t n, const DepthBudget& budget = {}) {
  const auto centers = sorted_J_centers(spec, n, budget);
  const Rational radius = d(spec, n);
  MonotoneMerger merger;
  for (const auto& c : centers) merger.push(c - radius, c + radius);
  return std::move(merger).finish();
}

/// Address of the gap G_s^side.
struct GapId {
  TernaryCode code;
  int side = 0;

  friend auto operator<=>(const GapId&, const GapId&) = default;
  friend bool operator==(const GapId&, const GapId&) = default;
};

inline void require_side(int side) {
  if (side != 0 && side != 1) throw DomainError("gap/overlap side must be 0 or 1");
}

/// G_s^side: side 0 lies between J_{s0} and J_{s1}, side 1 between J_{s1} and J_{s2}.
inline OpenInterval gap(const LambdaSpec& spec, const TernaryCode& s, int side) {
  require_side(side);
  const std::size_t n = s.size();
  if (!below_third(spec.at(n + 1)))
    throw DomainError("no gap at this node: lambda_" + std::to_string(n + 1) + " = " + to_string(spec.at(n + 1)) +
                      " is not below 1/3");
  const Rational dn = d(spec, n);
  const Rational child = dn * spec.at(n + 1);
  const Rational c = center_J(spec, s);
  if (side == 0) return {c - dn + 2 * child, c - child};
  return {c + child, c + dn - 2 * child};
}

inline OpenInterval gap(const LambdaSpec& spec, const GapId& id) { return gap(spec, id.code, id.side); }

/// Z_s^side: side 0 = [l(J_{s1}), r(J_{s0})], side 1 = [l(J_{s2}), r(J_{s1})].
/// A ratio of exactly 1/3 gives a single point.
inline ClosedInterval overlap(const LambdaSpec& spec, const TernaryCode& s, int side) {
  require_side(side);
  const std::size_t n = s.size();
  if (below_third(spec.at(n + 1)))
    throw DomainError("no overlap at this node: lambda_" + std::to_string(n + 1) + " = " +
                      to_string(spec.at(n + 1)) + " is below 1/3");
  const Rational dn = d(spec, n);
  const Rational child = dn * spec.at(n + 1);
  const Rational c = center_J(spec, s);
  if (side == 0) return {c - child, c - dn + 2 * child};
  return {c + dn - 2 * child, c + child};
}

}  // namespace cantorval

#endif  // CANTORVAL_DIFFERENCE_HPP
