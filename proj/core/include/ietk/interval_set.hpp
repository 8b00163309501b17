#ifndef IETK_INTERVAL_SET_HPP
#define IETK_INTERVAL_SET_HPP

#include <vector>

#include "ietk/exact.hpp"

namespace ietk {

/// Half-open interval [lo, hi) with exact endpoints, lo < hi.
struct Interval {
  ExactNumber lo, hi;
  ExactNumber length() const { return hi - lo; }
};

/// Sorted union of pairwise disjoint, non-adjacent half-open intervals.
/// Measure, union, intersection and difference are all exact.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Normalizes an arbitrary collection: drops empty intervals, sorts,
  /// merges overlapping and adjacent ones.
  static IntervalSet from(std::vector<Interval> raw);

  static IntervalSet single(ExactNumber lo, ExactNumber hi);

  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  const std::vector<Interval>& intervals() const { return parts_; }

  ExactNumber measure() const;

  bool contains(const ExactNumber& x) const;
  /// Set containment (every point of this lies in o).
  bool subset_of(const IntervalSet& o) const;

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet subtract(const IntervalSet& o) const;

  bool operator==(const IntervalSet& o) const;

 private:
  std::vector<Interval> parts_;  // normalized
};

}  // namespace ietk

#endif
