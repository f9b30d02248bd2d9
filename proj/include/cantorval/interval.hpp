#ifndef CANTORVAL_INTERVAL_HPP
#define CANTORVAL_INTERVAL_HPP

/// \file
/// Exact set algebra over finite unions of closed rational intervals.
///
/// An IntervalUnion is always canonical: parts sorted by left endpoint and
/// strictly separated (parts[k].hi < parts[k+1].lo). Touching or overlapping
/// inputs are merged on construction, so two unions are equal as point sets
/// iff they compare equal.

#include <algorithm>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"

namespace cantorval {

struct ClosedInterval {
  Rational lo;
  Rational hi;

  ClosedInterval() = default;
  ClosedInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (hi < lo) throw DomainError("closed interval with hi < lo");
  }

  Rational length() const { return hi - lo; }
  Rational center() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const ClosedInterval& other) const { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const ClosedInterval& a, const ClosedInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// Gaps have strictly positive length.
struct OpenInterval {
  Rational lo;
  Rational hi;

  OpenInterval() = default;
  OpenInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw DomainError("open interval must have lo < hi");
  }

  Rational length() const { return hi - lo; }
  Rational center() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }

  friend bool operator==(const OpenInterval& a, const OpenInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

inline bool intersects(const ClosedInterval& a, const OpenInterval& g) {
  return a.lo < g.hi && g.lo < a.hi;
}

inline bool intersects(const OpenInterval& a, const OpenInterval& b) {
  return a.lo < b.hi && b.lo < a.hi;
}

class IntervalUnion;
IntervalUnion normalize(std::vector<ClosedInterval> intervals);

/// Accepts intervals in nondecreasing order of left endpoint and merges
/// as it goes. Out-of-order input is a programming error.
class MonotoneMerger {
 public:
  void push(const Rational& lo, const Rational& hi) {
    if (parts_.empty()) {
      parts_.emplace_back(lo, hi);
      return;
    }
    ClosedInterval& last = parts_.back();
    if (lo < last.lo) throw std::logic_error("MonotoneMerger: left endpoints out of order");
    if (lo <= last.hi) {
      if (last.hi < hi) last.hi = hi;
    } else {
      parts_.emplace_back(lo, hi);
    }
  }
  void push(const ClosedInterval& iv) { push(iv.lo, iv.hi); }

  IntervalUnion finish() &&;

 private:
  std::vector<ClosedInterval> parts_;
};

class IntervalUnion {
 public:
  IntervalUnion() = default;
  IntervalUnion(std::initializer_list<ClosedInterval> parts);

  const std::vector<ClosedInterval>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  const ClosedInterval& operator[](std::size_t i) const { return parts_[i]; }

  Rational measure() const {
    Rational total(0);
    for (const auto& p : parts_) total += p.length();
    return total;
  }

  /// Smallest closed interval containing the union; the union must be nonempty.
  ClosedInterval hull() const {
    if (parts_.empty()) throw DomainError("hull of an empty union");
    return {parts_.front().lo, parts_.back().hi};
  }

  bool contains(const Rational& x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const Rational& v, const ClosedInterval& p) { return v < p.lo; });
    if (it == parts_.begin()) return false;
    return std::prev(it)->contains(x);
  }

  bool intersects(const OpenInterval& g) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), g.lo,
                               [](const ClosedInterval& p, const Rational& v) { return p.hi <= v; });
    return it != parts_.end() && it->lo < g.hi;
  }

  /// Point-set inclusion of this union in `other`.
  bool is_subset_of(const IntervalUnion& other) const {
    std::size_t j = 0;
    for (const auto& p : parts_) {
      while (j < other.parts_.size() && other.parts_[j].hi < p.lo) ++j;
      if (j == other.parts_.size() || !other.parts_[j].contains(p)) return false;
    }
    return true;
  }

  IntervalUnion translated(const Rational& offset) const {
    IntervalUnion out;
    out.parts_.reserve(parts_.size());
    for (const auto& p : parts_) out.parts_.emplace_back(p.lo + offset, p.hi + offset);
    return out;
  }

  /// Image under x -> factor * x for factor > 0.
  IntervalUnion scaled(const Rational& factor) const {
    if (sgn(factor) <= 0) throw DomainError("scale factor must be positive");
    IntervalUnion out;
    out.parts_.reserve(parts_.size());
    for (const auto& p : parts_) out.parts_.emplace_back(p.lo * factor, p.hi * factor);
    return out;
  }

  /// Image under x -> center2 - x, i.e. reflection about center2 / 2.
  IntervalUnion reflected(const Rational& center2 = Rational(0)) const {
    IntervalUnion out;
    out.parts_.reserve(parts_.size());
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
      out.parts_.emplace_back(center2 - it->hi, center2 - it->lo);
    return out;
  }

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.parts_ == b.parts_;
  }

 private:
  friend IntervalUnion normalize(std::vector<ClosedInterval> intervals);
  friend class MonotoneMerger;

  std::vector<ClosedInterval> parts_;
};

inline IntervalUnion MonotoneMerger::finish() && {
  IntervalUnion out;
  out.parts_ = std::move(parts_);
  return out;
}

inline IntervalUnion normalize(std::vector<ClosedInterval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; });
  MonotoneMerger merger;
  for (const auto& iv : intervals) merger.push(iv);
  return std::move(merger).finish();
}

inline IntervalUnion::IntervalUnion(std::initializer_list<ClosedInterval> parts)
    : IntervalUnion(normalize(std::vector<ClosedInterval>(parts))) {}

/// A - B = {a - b}. Pairwise over parts, then normalized. This is the
/// brute-force reference the difference engine is checked against.
inline IntervalUnion minkowski_diff(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.empty() || b.empty()) throw DomainError("Minkowski difference of an empty union is undefined");
  std::vector<ClosedInterval> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a.parts())
    for (const auto& q : b.parts()) out.emplace_back(p.lo - q.hi, p.hi - q.lo);
  return normalize(std::move(out));
}

inline IntervalUnion minkowski_sum(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.empty() || b.empty()) throw DomainError("Minkowski sum of an empty union is undefined");
  std::vector<ClosedInterval> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a.parts())
    for (const auto& q : b.parts()) out.emplace_back(p.lo + q.lo, p.hi + q.hi);
  return normalize(std::move(out));
}

inline Rational measure(const IntervalUnion& a) { return a.measure(); }

/// Open components of hull \ a, left to right. Requires a within hull.
inline std::vector<OpenInterval> complement_gaps(const IntervalUnion& a, const ClosedInterval& hull) {
  std::vector<OpenInterval> gaps;
  Rational cursor = hull.lo;
  for (const auto& p : a.parts()) {
    if (p.lo < hull.lo || hull.hi < p.hi) throw DomainError("complement_gaps: union not inside hull");
    if (cursor < p.lo) gaps.emplace_back(cursor, p.lo);
    cursor = p.hi;
  }
  if (cursor < hull.hi) gaps.emplace_back(cursor, hull.hi);
  return gaps;
}

}  // namespace cantorval

#endif  // CANTORVAL_INTERVAL_HPP
