#ifndef CANTORVAL_CLASSIFIER_HPP
#define CANTORVAL_CLASSIFIER_HPP

/// \file
/// Decides whether C(lambda) - C(lambda) is the full interval [-1,1], a
/// finite union of intervals, a Cantor set or a Cantorval, and records the
/// evidence in a certificate that can be re-checked from scratch.
///
/// Rules, in order:
///   full-interval          every ratio >= 1/3
///   finite-union           only finitely many ratios < 1/3; the set equals
///                          C_K - C_K where K is the last such index
///   kraft-generalized      only finitely many ratios >= 1/3; past the last
///                          one every J splits into three disjoint children
///   exact-gap-coverage     mixed period, and the quadratic relations between
///                          consecutive ratios all hold exactly
///   undecided              anything else; an empirical depth report is attached

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cantorval/budget.hpp"
#include "cantorval/difference.hpp"
#include "cantorval/gap_forest.hpp"
#include "cantorval/interval.hpp"
#include "cantorval/lambda.hpp"

namespace cantorval {

enum class Verdict { FullInterval, FiniteIntervalUnion, CantorSet, Cantorval, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FullInterval: return "FullInterval";
    case Verdict::FiniteIntervalUnion: return "FiniteIntervalUnion";
    case Verdict::CantorSet: return "CantorSet";
    case Verdict::Cantorval: return "Cantorval";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

inline Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::FullInterval, Verdict::FiniteIntervalUnion, Verdict::CantorSet, Verdict::Cantorval,
                    Verdict::Unknown})
    if (to_string(v) == s) return v;
  throw ParseError("unknown verdict \"" + s + "\"");
}

namespace rules {
inline constexpr const char* kFullInterval = "full-interval";
inline constexpr const char* kFiniteUnion = "finite-union";
inline constexpr const char* kKraftGeneralized = "kraft-generalized";
inline constexpr const char* kExactGapCoverage = "exact-gap-coverage";
inline constexpr const char* kUndecided = "undecided";
}  // namespace rules

/// lhs - rhs of the relation between lambda_r and lambda_{r+1}:
///   both >= 1/3 or both < 1/3:  3 a b = 4 a - 1
///   a >= 1/3, b < 1/3:          3 a b = 5 a - 2
///   a < 1/3, b >= 1/3:          6 a b = 7 a - 1
struct RelationResidual {
  std::size_t index = 0;
  std::string case_tag;
  Rational residual;

  friend bool operator==(const RelationResidual& a, const RelationResidual& b) {
    return a.index == b.index && a.case_tag == b.case_tag && a.residual == b.residual;
  }
};

struct DepthRow {
  std::size_t depth = 0;
  Rational measure;
  std::size_t parts = 0;
  std::size_t gap_count = 0;
  Rational largest_gap;   // 0 when there are no gaps
  Rational largest_part;
  bool stable = false;    // identical to the previous depth
};

struct DepthReport {
  std::vector<DepthRow> rows;
};

struct TrichotomyCertificate {
  LambdaSpec spec;
  Verdict verdict = Verdict::Unknown;
  std::string rule;
  std::optional<Rational> measure;
  std::optional<std::size_t> k0;
  std::optional<std::vector<RelationResidual>> relation_residuals;
  std::optional<std::size_t> stabilization_depth;
  std::optional<IntervalUnion> finite_union;
  std::optional<DepthReport> depth_report;
  std::size_t depth = 0;  // depth used for empirical evidence and re-verification
};

struct ClassifyOptions {
  std::size_t depth = 8;
  DepthBudget budget{};
};

/// Residuals of the consecutive-ratio relations for r from k0+1 through the
/// end of the first full period past max(k0, |prefix|). Ratio pairs repeat
/// with the period from there on, so these cover every r > k0.
inline std::vector<RelationResidual> check_ratio_relations(const LambdaSpec& spec, const KIndexView& view) {
  const std::size_t last = std::max(view.k0(), spec.prefix().size()) + spec.period().size();
  std::vector<RelationResidual> out;
  for (std::size_t r = view.k0() + 1; r <= last; ++r) {
    const Rational& a = spec.at(r);
    const Rational& b = spec.at(r + 1);
    const bool a_small = below_third(a);
    const bool b_small = below_third(b);
    RelationResidual res;
    res.index = r;
    if (a_small == b_small) {
      res.case_tag = a_small ? "<,<" : ">=,>=";
      res.residual = 3 * a * b - (4 * a - 1);
    } else if (!a_small) {
      res.case_tag = ">=,<";
      res.residual = 3 * a * b - (5 * a - 2);
    } else {
      res.case_tag = "<,>=";
      res.residual = 6 * a * b - (7 * a - 1);
    }
    out.push_back(std::move(res));
  }
  return out;
}

inline std::vector<RelationResidual> check_ratio_relations(const LambdaSpec& spec) {
  return check_ratio_relations(spec, KIndexView::least(spec));
}

inline bool all_zero(const std::vector<RelationResidual>& residuals) {
  return std::all_of(residuals.begin(), residuals.end(), [](const RelationResidual& r) { return sgn(r.residual) == 0; });
}

/// delta_n = (3 d_{k_n} + d_{k_n - 1}) / 2.
inline Rational delta(const LambdaSpec& spec, const KIndexView& view, std::size_t n) {
  if (n == 0) throw DomainError("delta is indexed from 1");
  const std::size_t kn = view.k(n);
  return (3 * d(spec, kn) + d(spec, kn - 1)) / 2;
}

inline Rational delta(const LambdaSpec& spec, std::size_t n) { return delta(spec, KIndexView::least(spec), n); }

/// Lines of the linear system linking d and delta that fail for levels 1..upto:
///   3 d_r - d_{r-1} = delta_n   for k_{n-1} < r < k_n
///   4 d_{k_n} = delta_n + delta_{n+1}
///   d_{k_n - 1} - d_{k_n} = delta_n - delta_{n+1}
inline std::vector<std::string> delta_system_violations(const LambdaSpec& spec, const KIndexView& view,
                                                        std::size_t upto) {
  std::vector<std::string> out;
  for (std::size_t n = 1; n <= upto; ++n) {
    const Rational dn = delta(spec, view, n);
    const Rational dn1 = delta(spec, view, n + 1);
    for (std::size_t r = view.k(n - 1) + 1; r < view.k(n); ++r)
      if (3 * d(spec, r) - d(spec, r - 1) != dn)
        out.push_back("3d_r - d_{r-1} != delta_n at n=" + std::to_string(n) + ", r=" + std::to_string(r));
    const std::size_t kn = view.k(n);
    if (4 * d(spec, kn) != dn + dn1) out.push_back("4d_{k_n} != delta_n + delta_{n+1} at n=" + std::to_string(n));
    if (d(spec, kn - 1) - d(spec, kn) != dn - dn1)
      out.push_back("d_{k_n-1} - d_{k_n} != delta_n - delta_{n+1} at n=" + std::to_string(n));
  }
  return out;
}

/// Exact measure of C - C when the consecutive-ratio relations hold and
/// lambda_1 > 1/3: 2 minus the measure of the gap family at the empty root.
inline Rational cantorval_measure(const LambdaSpec& spec) {
  const KIndexView view(spec, 0);
  const auto residuals = check_ratio_relations(spec, view);
  for (const auto& r : residuals)
    if (sgn(r.residual) != 0)
      throw DomainError("cantorval_measure: relation " + r.case_tag + " fails at r=" + std::to_string(r.index) +
                        " (residual " + to_string(r.residual) + ")");
  return 2 - gap_union_measure(spec);
}

/// Largest depth whose 3^depth enumeration fits in the budget.
inline std::size_t max_affordable_depth(const DepthBudget& budget, unsigned base = 3) {
  std::size_t depth = 0;
  std::uint64_t count = 1;
  while (count * base <= budget.max_parts) {
    count *= base;
    ++depth;
  }
  return depth;
}

/// Measure, gap count, largest gap and largest part of C_n - C_n for n = 1..depth.
/// Evidence only; no verdict is drawn from it.
inline DepthReport finite_depth_report(const LambdaSpec& spec, std::size_t depth, const DepthBudget& budget = {}) {
  budget.require(3, depth, "finite_depth_report");
  DepthReport report;
  const ClosedInterval hull{Rational(-1), Rational(1)};
  IntervalUnion previous{hull};
  for (std::size_t n = 1; n <= depth; ++n) {
    IntervalUnion current = build_diff_n(spec, n, budget);
    DepthRow row;
    row.depth = n;
    row.measure = current.measure();
    row.parts = current.size();
    const auto gaps = complement_gaps(current, hull);
    row.gap_count = gaps.size();
    row.largest_gap = 0;
    for (const auto& g : gaps) row.largest_gap = std::max<Rational>(row.largest_gap, g.length());
    row.largest_part = 0;
    for (const auto& p : current.parts()) row.largest_part = std::max<Rational>(row.largest_part, p.length());
    row.stable = current == previous;
    report.rows.push_back(std::move(row));
    previous = std::move(current);
  }
  return report;
}

inline TrichotomyCertificate classify(const LambdaSpec& spec, const ClassifyOptions& options = {}) {
  TrichotomyCertificate cert{spec};
  cert.depth = options.depth;

  const auto& prefix = spec.prefix();
  const auto& period = spec.period();
  const bool period_all_large = std::none_of(period.begin(), period.end(), below_third);
  const bool period_all_small = std::all_of(period.begin(), period.end(), below_third);

  if (period_all_large) {
    std::size_t last_small = 0;
    for (std::size_t j = 1; j <= prefix.size(); ++j)
      if (below_third(prefix[j - 1])) last_small = j;
    if (last_small == 0) {
      cert.verdict = Verdict::FullInterval;
      cert.rule = rules::kFullInterval;
      cert.measure = Rational(2);
      return cert;
    }
    cert.verdict = Verdict::FiniteIntervalUnion;
    cert.rule = rules::kFiniteUnion;
    cert.stabilization_depth = last_small;
    cert.finite_union = build_diff_n(spec, last_small, options.budget);
    cert.measure = cert.finite_union->measure();
    return cert;
  }

  if (period_all_small) {
    cert.verdict = Verdict::CantorSet;
    cert.rule = rules::kKraftGeneralized;
    cert.measure = Rational(0);
    return cert;
  }

  std::optional<KIndexView> view;
  try {
    view = KIndexView::least(spec);
  } catch (const DomainError&) {
    view.reset();
  }
  if (view) {
    cert.k0 = view->k0();
    cert.relation_residuals = check_ratio_relations(spec, *view);
    if (all_zero(*cert.relation_residuals)) {
      cert.verdict = Verdict::Cantorval;
      cert.rule = rules::kExactGapCoverage;
      if (view->k0() == 0) cert.measure = cantorval_measure(spec);
      return cert;
    }
  }
  cert.verdict = Verdict::Unknown;
  cert.rule = rules::kUndecided;
  cert.depth = std::min(options.depth, max_affordable_depth(options.budget));
  cert.depth_report = finite_depth_report(spec, cert.depth, options.budget);
  return cert;
}

/// Outcome of checking the gap-coverage alignment at levels 1..levels.
struct CoverageReport {
  std::size_t family_gaps = 0;
  std::size_t covered_gaps = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// For k0 = 0 and the empty root: every gap G_s^i with |s| = k_n - 1 outside
/// the family must sit inside some J_u, |u| = k_n, with
///   l(G) - l(J_u) = r(J_u) - r(G) = delta_{n+1},
/// and every family gap must miss C_{k_n} - C_{k_n} entirely. The witness
/// J_u is found by searching all depth-k_n intervals for a matching center.
inline CoverageReport check_gap_coverage(const LambdaSpec& spec, std::size_t levels, const DepthBudget& budget = {}) {
  const KIndexView view(spec, 0);
  const GapFamily family = gap_family(view, TernaryCode{}, levels, budget);
  CoverageReport report;
  for (std::size_t n = 1; n <= levels; ++n) {
    const std::size_t kn = view.k(n);
    budget.require(3, kn, "check_gap_coverage");
    const auto centers = sorted_J_centers(spec, kn, budget);
    const Rational radius = d(spec, kn);
    const Rational next_delta = delta(spec, view, n + 1);
    const IntervalUnion diff = [&] {
      MonotoneMerger merger;
      for (const auto& c : centers) merger.push(c - radius, c + radius);
      return std::move(merger).finish();
    }();
    const auto& family_level = family.levels.at(n);

    const auto dn = d_table(spec, kn);
    const Rational child = dn[kn];
    const Rational parent = dn[kn - 1];
    // Walk all parents s of length k_n - 1, carrying c(J_s).
    std::vector<std::uint8_t> path;
    auto visit = [&](const Rational& c) {
      for (int side = 0; side < 2; ++side) {
        const OpenInterval g = side == 0 ? OpenInterval(c - parent + 2 * child, c - child)
                                         : OpenInterval(c + child, c + parent - 2 * child);
        const GapId id{TernaryCode(path), side};
        if (family_level.count(id)) {
          ++report.family_gaps;
          if (diff.intersects(g))
            report.violations.push_back("family gap " + id.code.str() + "^" + std::to_string(side) +
                                        " meets C_k - C_k at k=" + std::to_string(kn));
          continue;
        }
        const Rational gc = g.center();
        const auto it = std::lower_bound(centers.begin(), centers.end(), gc);
        if (it == centers.end() || *it != gc) {
          report.violations.push_back("gap " + id.code.str() + "^" + std::to_string(side) +
                                      " has no centered witness at depth " + std::to_string(kn));
          continue;
        }
        const Rational left_offset = g.lo - (*it - radius);
        const Rational right_offset = (*it + radius) - g.hi;
        if (left_offset != next_delta || right_offset != next_delta) {
          report.violations.push_back("gap " + id.code.str() + "^" + std::to_string(side) + " offset " +
                                      to_string(left_offset) + " != delta " + to_string(next_delta));
          continue;
        }
        ++report.covered_gaps;
      }
    };
    auto walk = [&](auto&& self, std::size_t depth, const Rational& c) -> void {
      if (depth + 1 == kn) {
        visit(c);
        return;
      }
      const Rational step = dn[depth] - dn[depth + 1];
      path.push_back(0);
      self(self, depth + 1, c - step);
      path.back() = 1;
      self(self, depth + 1, c);
      path.back() = 2;
      self(self, depth + 1, c + step);
      path.pop_back();
    };
    walk(walk, 0, Rational(0));
  }
  return report;
}

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
  }
};

namespace detail {
inline std::string optional_str(const std::optional<Rational>& q) { return q ? to_string(*q) : "absent"; }
}  // namespace detail

/// Recomputes every claim of the certificate and runs the invariant suites
/// up to the certificate's depth (capped by the budget).
inline VerifyReport verify_certificate(const TrichotomyCertificate& cert, const DepthBudget& budget = {}) {
  VerifyReport report;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  const LambdaSpec& spec = cert.spec;

  // Shape invariants of the claim itself.
  switch (cert.verdict) {
    case Verdict::Cantorval:
      add("cantorval measure in (0,2)",
          !cert.measure || (sgn(*cert.measure) > 0 && *cert.measure < 2) ,
          "measure " + detail::optional_str(cert.measure));
      if (cert.k0 && *cert.k0 == 0) add("cantorval measure present", cert.measure.has_value());
      break;
    case Verdict::FullInterval:
      add("full interval measure is 2", cert.measure && *cert.measure == 2, detail::optional_str(cert.measure));
      break;
    case Verdict::CantorSet:
      add("cantor set measure is 0", cert.measure && sgn(*cert.measure) == 0, detail::optional_str(cert.measure));
      break;
    default:
      break;
  }

  // Fresh classification must agree field by field.
  const TrichotomyCertificate fresh = classify(spec, ClassifyOptions{cert.depth, budget});
  add("verdict", fresh.verdict == cert.verdict, "claimed " + to_string(cert.verdict) + ", recomputed " +
                                                     to_string(fresh.verdict));
  add("rule", fresh.rule == cert.rule, "claimed " + cert.rule + ", recomputed " + fresh.rule);
  {
    const bool same = fresh.measure == cert.measure;
    std::string detail = "claimed " + detail::optional_str(cert.measure) + ", recomputed " +
                         detail::optional_str(fresh.measure);
    if (!same && fresh.measure && cert.measure)
      detail += ", residual " + to_string(Rational(*cert.measure - *fresh.measure));
    add("measure", same, detail);
  }
  add("k0", fresh.k0 == cert.k0);
  add("relation residuals", fresh.relation_residuals == cert.relation_residuals);
  add("stabilization depth", fresh.stabilization_depth == cert.stabilization_depth);
  add("finite union", fresh.finite_union == cert.finite_union);

  // Invariant suites at finite depth.
  const std::size_t depth = std::min(cert.depth, max_affordable_depth(budget));
  const std::size_t oracle_depth = std::min(depth, max_affordable_depth(budget, 4));
  std::vector<IntervalUnion> diffs;
  for (std::size_t n = 0; n <= depth; ++n) diffs.push_back(build_diff_n(spec, n, budget));
  for (std::size_t n = 0; n <= oracle_depth; ++n) {
    const IntervalUnion cn = build_C_n(spec, n, budget);
    add("oracle equivalence n=" + std::to_string(n), minkowski_diff(cn, cn) == diffs[n]);
  }
  for (std::size_t n = 0; n < depth; ++n) {
    add("nesting n=" + std::to_string(n), diffs[n + 1].is_subset_of(diffs[n]));
    add("measure nonincreasing n=" + std::to_string(n), diffs[n + 1].measure() <= diffs[n].measure());
  }
  if (cert.measure)
    for (std::size_t n = 0; n <= depth; ++n)
      if (diffs[n].measure() < *cert.measure)
        add("measure bound n=" + std::to_string(n), false,
            "depth measure " + to_string(diffs[n].measure()) + " below claimed " + to_string(*cert.measure));

  const IntervalUnion full{ClosedInterval{Rational(-1), Rational(1)}};
  if (cert.verdict == Verdict::FullInterval)
    for (std::size_t n = 0; n <= depth; ++n) add("full interval n=" + std::to_string(n), diffs[n] == full);

  if (cert.verdict == Verdict::FiniteIntervalUnion && cert.stabilization_depth && cert.finite_union)
    for (std::size_t n = *cert.stabilization_depth; n <= depth; ++n)
      add("stabilized n=" + std::to_string(n), diffs[n] == *cert.finite_union);

  if (cert.verdict == Verdict::Cantorval && cert.k0 && *cert.k0 == 0) {
    const KIndexView view(spec, 0);
    Rational partial(2);
    for (std::size_t l = 1; view.k(l) <= depth; ++l) {
      const std::size_t kl = view.k(l);
      partial -= 2 * pow(Rational(3), l - 1) * (d(spec, kl - 1) - 3 * d(spec, kl));
      add("partial measure at depth k_" + std::to_string(l), diffs[kl].measure() == partial,
          "depth " + to_string(diffs[kl].measure()) + " vs formula " + to_string(partial));
    }
    std::size_t levels = 0;
    while (view.k(levels + 1) <= depth) ++levels;
    if (levels > 0) {
      const CoverageReport cov = check_gap_coverage(spec, levels, budget);
      add("gap coverage alignment", cov.ok(), cov.ok() ? "" : cov.violations.front());
    }
  }
  return report;
}

}  // namespace cantorval

#endif  // CANTORVAL_CLASSIFIER_HPP
