#include <doctest.h>

#include "ietk/interval_set.hpp"
#include "ietk/rng.hpp"

using namespace ietk;

namespace {

IntervalSet rnd_set(SplitMix64& rng, int max_parts) {
  std::vector<Interval> raw;
  const int k = static_cast<int>(rng.below(max_parts + 1));
  for (int i = 0; i < k; ++i) {
    ExactNumber lo = ExactNumber::rational(static_cast<long>(rng.below(200)), 100);
    ExactNumber hi = lo + ExactNumber::rational(1 + static_cast<long>(rng.below(60)), 100);
    raw.push_back({lo, hi});
  }
  return IntervalSet::from(std::move(raw));
}

}  // namespace

TEST_CASE("normalization merges and sorts") {
  IntervalSet s = IntervalSet::from({{ExactNumber(3), ExactNumber(4)},
                                     {ExactNumber(1), ExactNumber(2)},
                                     {ExactNumber(2), ExactNumber(3)},
                                     {ExactNumber(5), ExactNumber(5)}});
  REQUIRE(s.size() == 1);  // adjacent pieces merge, empty piece dropped
  CHECK(s.intervals()[0].lo == ExactNumber(1));
  CHECK(s.intervals()[0].hi == ExactNumber(4));
  CHECK(s.measure() == ExactNumber(3));
}

TEST_CASE("half-open membership") {
  IntervalSet s = IntervalSet::single(ExactNumber(0), ExactNumber(1));
  CHECK(s.contains(ExactNumber(0)));
  CHECK(s.contains(ExactNumber::rational(1, 2)));
  CHECK_FALSE(s.contains(ExactNumber(1)));
}

TEST_CASE("boolean algebra identities on random sets") {
  SplitMix64 rng(7);
  for (int i = 0; i < 400; ++i) {
    IntervalSet a = rnd_set(rng, 6), b = rnd_set(rng, 6);
    IntervalSet u = a.unite(b), n = a.intersect(b);
    // inclusion-exclusion
    CHECK(u.measure() + n.measure() == a.measure() + b.measure());
    // difference partitions the union
    CHECK(a.subtract(b).measure() + b.measure() == u.measure());
    CHECK(n.subset_of(a));
    CHECK(n.subset_of(b));
    CHECK(a.subset_of(u));
    CHECK(a.subtract(a).empty());
    CHECK(a.unite(a) == a);
    CHECK(a.intersect(a) == a);
    // de Morgan inside a bounding box
    IntervalSet box = IntervalSet::single(ExactNumber(-1), ExactNumber(4));
    CHECK(box.subtract(u) == box.subtract(a).intersect(box.subtract(b)));
  }
}

TEST_CASE("measure is a balanced sum over many parts") {
  std::vector<Interval> raw;
  ExactNumber total;
  for (long i = 1; i <= 4000; ++i) {
    ExactNumber lo = ExactNumber(3 * i);
    ExactNumber len = ExactNumber::rational(1, i);
    raw.push_back({lo, lo + len});
    total += len;
  }
  // (the fold order must not change the exact value)
  CHECK(IntervalSet::from(std::move(raw)).measure() == total);
}
