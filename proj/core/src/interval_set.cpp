#include "ietk/interval_set.hpp"

#include <algorithm>

namespace ietk {

IntervalSet IntervalSet::from(std::vector<Interval> raw) {
  std::erase_if(raw, [](const Interval& iv) { return !(iv.lo < iv.hi); });
  std::sort(raw.begin(), raw.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  IntervalSet s;
  for (auto& iv : raw) {
    if (!s.parts_.empty() && iv.lo <= s.parts_.back().hi) {
      if (s.parts_.back().hi < iv.hi) s.parts_.back().hi = iv.hi;
    } else {
      s.parts_.push_back(std::move(iv));
    }
  }
  return s;
}

IntervalSet IntervalSet::single(ExactNumber lo, ExactNumber hi) {
  return from({Interval{std::move(lo), std::move(hi)}});
}

namespace {
// Balanced summation: a left-to-right fold lets the running denominator grow
// with every term, which is quadratic in the number of parts.
ExactNumber sum_lengths(const std::vector<Interval>& parts, std::size_t lo,
                        std::size_t hi) {
  if (hi - lo == 1) return parts[lo].hi - parts[lo].lo;
  const std::size_t mid = lo + (hi - lo) / 2;
  return sum_lengths(parts, lo, mid) + sum_lengths(parts, mid, hi);
}
}  // namespace

ExactNumber IntervalSet::measure() const {
  if (parts_.empty()) return ExactNumber(0);
  return sum_lengths(parts_, 0, parts_.size());
}

bool IntervalSet::contains(const ExactNumber& x) const {
  auto it = std::upper_bound(
      parts_.begin(), parts_.end(), x,
      [](const ExactNumber& v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return x < it->hi;
}

bool IntervalSet::subset_of(const IntervalSet& o) const {
  for (const auto& iv : parts_) {
    auto it = std::upper_bound(
        o.parts_.begin(), o.parts_.end(), iv.lo,
        [](const ExactNumber& v, const Interval& j) { return v < j.lo; });
    if (it == o.parts_.begin()) return false;
    --it;
    if (iv.lo < it->lo || it->hi < iv.hi) return false;
  }
  return true;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return from(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < o.parts_.size()) {
    const Interval& x = parts_[i];
    const Interval& y = o.parts_[j];
    ExactNumber lo = max(x.lo, y.lo);
    ExactNumber hi = min(x.hi, y.hi);
    if (lo < hi) out.push_back({lo, hi});
    if (x.hi < y.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return from(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& o) const {
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& iv : parts_) {
    ExactNumber cur = iv.lo;
    while (j < o.parts_.size() && o.parts_[j].hi <= cur) ++j;
    std::size_t jj = j;
    while (jj < o.parts_.size() && o.parts_[jj].lo < iv.hi) {
      if (cur < o.parts_[jj].lo) out.push_back({cur, o.parts_[jj].lo});
      cur = max(cur, o.parts_[jj].hi);
      ++jj;
    }
    if (cur < iv.hi) out.push_back({cur, iv.hi});
  }
  return from(std::move(out));
}

bool IntervalSet::operator==(const IntervalSet& o) const {
  if (parts_.size() != o.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].lo != o.parts_[i].lo || parts_[i].hi != o.parts_[i].hi)
      return false;
  }
  return true;
}

}  // namespace ietk
