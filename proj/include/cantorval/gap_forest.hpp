#ifndef CANTORVAL_GAP_FOREST_HPP
#define CANTORVAL_GAP_FOREST_HPP

/// \file
/// Persistent gap families of C(lambda) - C(lambda).
///
/// Past a start index k0 with lambda_{k0+1} > 1/3, gaps can only open at the
/// positions k_1 < k_2 < ... where lambda < 1/3. Rooted at a code t, the family
/// at level n holds the outermost gaps of J_t that appear at depth k_n, plus,
/// for every family gap of an earlier level, the two new gaps nearest to it.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cantorval/budget.hpp"
#include "cantorval/difference.hpp"
#include "cantorval/lambda.hpp"
#include "cantorval/series_sum.hpp"

namespace cantorval {

/// The index sequence k_0 = k0 < k_1 < k_2 < ... of positions past k0 whose
/// ratio is below 1/3. Requires lambda_{k0+1} > 1/3 and a period holding
/// ratios of both kinds (infinitely many of each).
class KIndexView {
 public:
  KIndexView(const LambdaSpec& spec, std::size_t k0) : k0_(k0) {
    require_mixed_period(spec);
    if (!(spec.at(k0 + 1) > one_third()))
      throw DomainError("k0 = " + std::to_string(k0) + " requires lambda_" + std::to_string(k0 + 1) +
                        " > 1/3 strictly, got " + to_string(spec.at(k0 + 1)));
    period_length_ = spec.period().size();
    boundary_ = std::max(k0_, spec.prefix().size());
    for (std::size_t j = k0_ + 1; j <= boundary_; ++j)
      if (below_third(spec.at(j))) head_.push_back(j);
    for (std::size_t j = boundary_ + 1; j <= boundary_ + period_length_; ++j)
      if (below_third(spec.at(j))) cycle_.push_back(j);
  }

  /// Smallest k0 with lambda_{k0+1} > 1/3.
  static KIndexView least(const LambdaSpec& spec) {
    require_mixed_period(spec);
    const std::size_t horizon = spec.prefix().size() + spec.period().size();
    for (std::size_t k0 = 0; k0 < horizon; ++k0)
      if (spec.at(k0 + 1) > one_third()) return KIndexView(spec, k0);
    throw DomainError("no start index k0 with lambda_{k0+1} > 1/3 exists for this spec");
  }

  static void require_mixed_period(const LambdaSpec& spec) {
    bool small = false, large = false;
    for (const auto& v : spec.period()) (below_third(v) ? small : large) = true;
    if (!small || !large)
      throw DomainError(
          "assumption violated: need infinitely many ratios below 1/3 and infinitely many at or above 1/3, "
          "so the period must contain both kinds");
  }

  std::size_t k0() const { return k0_; }

  /// k_n for n >= 0 (k_0 = k0).
  std::size_t k(std::size_t n) const {
    if (n == 0) return k0_;
    if (n <= head_.size()) return head_[n - 1];
    const std::size_t idx = n - head_.size() - 1;
    return cycle_[idx % cycle_.size()] + (idx / cycle_.size()) * period_length_;
  }

  /// The unique m >= 1 with k_{m-1} <= length < k_m.
  std::size_t level_of(std::size_t length) const {
    if (length < k0_) throw DomainError("code length below k0 has no level");
    std::size_t m = 1;
    while (k(m) <= length) ++m;
    return m;
  }

  /// From this index on, k_{n+P} = k_n + L with P = per_period(), L = period_length().
  std::size_t tail_start() const { return head_.size() + 1; }
  std::size_t per_period() const { return cycle_.size(); }
  std::size_t period_length() const { return period_length_; }

 private:
  std::size_t k0_;
  std::size_t period_length_ = 0;
  std::size_t boundary_ = 0;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> cycle_;
};

inline std::vector<std::size_t> k_indices(const LambdaSpec& spec, std::size_t k0, std::size_t count) {
  const KIndexView view(spec, k0);
  std::vector<std::size_t> out;
  out.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) out.push_back(view.k(n));
  return out;
}

/// Product of one full period of ratios.
inline Rational period_product(const LambdaSpec& spec) {
  Rational q(1);
  for (const auto& v : spec.period()) q *= v;
  return q;
}

/// Extreme codes p(n), q(n) in {0,1,2}^{k_n - 1}: the codes whose left gap
/// (resp. right gap) is the innermost family gap on the left (resp. right).
inline std::pair<TernaryCode, TernaryCode> pq_codes(const KIndexView& view, const TernaryCode& t, std::size_t n) {
  const std::size_t k = t.size();
  const std::size_t m = view.level_of(k);
  if (n < m) throw DomainError("pq_codes: level " + std::to_string(n) + " precedes first level " + std::to_string(m));
  TernaryCode p = t.extended(0, view.k(m) - k - 1);
  TernaryCode q = t.extended(2, view.k(m) - k - 1);
  for (std::size_t l = m + 1; l <= n; ++l) {
    p.append(1).append(0, view.k(l) - view.k(l - 1) - 1);
    q.append(1).append(2, view.k(l) - view.k(l - 1) - 1);
  }
  return {p, q};
}

/// sum_{l=m}^{n} (d_{k_l - 1} - d_{k_l}): the distance from l(J_t) to r(G_{p(n)}^0),
/// and from l(G_{q(n)}^1) to r(J_t).
inline Rational extreme_gap_offset(const LambdaSpec& spec, const KIndexView& view, std::size_t m, std::size_t n) {
  Rational total(0);
  for (std::size_t l = m; l <= n; ++l) total += d(spec, view.k(l) - 1) - d(spec, view.k(l));
  return total;
}

/// The open interval (lim r(G_{p(n)}^0), lim l(G_{q(n)}^1)) inside J_t that
/// no family gap reaches. Endpoints are exact limits.
inline OpenInterval family_free_core(const LambdaSpec& spec, const KIndexView& view, const TernaryCode& t) {
  const std::size_t m = view.level_of(t.size());
  const Rational offset = eventually_geometric_sum(
      [&](std::size_t l) -> Rational { return d(spec, view.k(l) - 1) - d(spec, view.k(l)); }, m,
      std::max(m, view.tail_start()), view.per_period(), period_product(spec));
  const ClosedInterval jt = interval_J(spec, t);
  return {jt.lo + offset, jt.hi - offset};
}

struct GapFamily {
  TernaryCode root;
  std::size_t first_level = 1;
  std::map<std::size_t, std::set<GapId>> levels;

  std::size_t size() const {
    std::size_t total = 0;
    for (const auto& [level, gaps] : levels) total += gaps.size();
    return total;
  }

  bool contains(const GapId& id) const {
    for (const auto& [level, gaps] : levels)
      if (gaps.count(id)) return true;
    return false;
  }
};

/// Levels first_level..upto of the family rooted at t (|t| >= k0).
inline GapFamily gap_family(const KIndexView& view, const TernaryCode& t, std::size_t upto,
                            const DepthBudget& budget = {}) {
  const std::size_t k = t.size();
  if (k < view.k0()) throw DomainError("gap family root must have length >= k0");
  GapFamily family;
  family.root = t;
  const std::size_t m = view.level_of(k);
  family.first_level = m;
  if (upto < m) return family;
  budget.require(3, upto - m + 1, "gap_family");

  for (std::size_t n = m; n <= upto; ++n) {
    const std::size_t kn = view.k(n);
    std::set<GapId> level;
    level.insert(GapId{t.extended(0, kn - k - 1), 0});
    level.insert(GapId{t.extended(2, kn - k - 1), 1});
    for (std::size_t l = m; l < n; ++l) {
      const std::size_t pad = kn - view.k(l) - 1;
      for (const auto& g : family.levels.at(l)) {
        level.insert(GapId{g.code.extended(static_cast<std::uint8_t>(g.side + 1)).append(0, pad), 0});
        level.insert(GapId{g.code.extended(static_cast<std::uint8_t>(g.side)).append(2, pad), 1});
      }
    }
    family.levels.emplace(n, std::move(level));
  }
  return family;
}

/// Exact measure of the union of the family rooted at the empty code with
/// k0 = 0: sum_{n>=1} 2 * 3^{n-1} (d_{k_n - 1} - 3 d_{k_n}), closed-form tail.
inline Rational gap_union_measure(const LambdaSpec& spec) {
  const KIndexView view(spec, 0);
  const Rational ratio = pow(Rational(3), view.per_period()) * period_product(spec);
  return eventually_geometric_sum(
      [&](std::size_t n) -> Rational {
        const std::size_t kn = view.k(n);
        return Rational(2 * pow(Rational(3), n - 1) * (d(spec, kn - 1) - 3 * d(spec, kn)));
      },
      1, view.tail_start(), view.per_period(), ratio);
}

struct PartialGapMeasure {
  Rational partial_sum;
  Rational error_bound;
};

/// First `terms` terms of the gap-union series and the exact size of what remains.
inline PartialGapMeasure gap_union_measure_partial(const LambdaSpec& spec, std::size_t terms) {
  const KIndexView view(spec, 0);
  Rational partial(0);
  for (std::size_t n = 1; n <= terms; ++n) {
    const std::size_t kn = view.k(n);
    partial += 2 * pow(Rational(3), n - 1) * (d(spec, kn - 1) - 3 * d(spec, kn));
  }
  return {partial, gap_union_measure(spec) - partial};
}

}  // namespace cantorval

#endif  // CANTORVAL_GAP_FOREST_HPP
