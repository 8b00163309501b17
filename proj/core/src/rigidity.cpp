#include "ietk/rigidity.hpp"

#include <algorithm>

#include "ietk/rotations.hpp"

namespace ietk {

namespace {

// Threshold below which a candidate tower is re-verified floor by floor
// inside the search itself.
constexpr long kExplicitCap = 20000;

bool explicit_conditions_hold(const Iet& t, const Interval& j, const Int& n) {
  const long h = n.convert_to<long>();
  std::vector<Interval> floors{j};
  Interval cur = j;
  for (long i = 1; i < h; ++i) {
    auto img = t.push_forward_continuous(cur);
    if (!img) return false;  // condition (2) fails
    cur = *img;
    floors.push_back(cur);
  }
  std::sort(floors.begin(), floors.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < floors.size(); ++i)
    if (floors[i].lo < floors[i - 1].hi) return false;  // condition (1) fails
  return true;
}

}  // namespace

std::optional<RigidityTower> find_tower(const Iet& t, const ExactNumber& eps,
                                        long n_max, const Int& min_height) {
  if (!(eps.sign() > 0) || !(eps < ExactNumber(1)))
    throw InvalidParamsError("eps must lie in (0,1)");
  if (t.d() < 2) throw InvalidParamsError("towers need d >= 2");

  const ExactNumber cover_floor = (ExactNumber(1) - eps) * t.total();
  const ExactNumber overlap_floor = ExactNumber(1) - eps;

  RvMatrix m(t.d());
  Iet cur = t;
  for (long depth = 0; depth <= n_max; ++depth) {
    // The towers over the base intervals of R^depth(T) tile the domain; the
    // exact partition identity certifies disjointness and continuity of the
    // floors without walking them.
    ExactNumber tiled;
    for (int j = 1; j <= cur.d(); ++j)
      tiled += ExactNumber(m.column_sum(j)) * cur.lengths()[j - 1];
    if (tiled == t.total()) {
      for (int j = 1; j <= cur.d(); ++j) {
        const Int height = m.column_sum(j);
        if (height < min_height) continue;
        const Interval base{cur.breakpoints()[j - 1], cur.breakpoints()[j]};
        const ExactNumber len = base.length();
        const ExactNumber cover = ExactNumber(height) * len;
        if (!(cover > cover_floor)) continue;
        // T^N on the base is the induced map, so T^N(J) is the j-th image
        // interval of R^depth(T).
        const ExactNumber img_lo = cur.image_left(cur.permutation()(j));
        const ExactNumber ov_lo = max(img_lo, base.lo);
        const ExactNumber ov_hi = min(img_lo + len, base.hi);
        const ExactNumber ov =
            ov_lo < ov_hi ? (ov_hi - ov_lo) / len : ExactNumber(0);
        if (!(ov > overlap_floor)) continue;
        if (height <= kExplicitCap &&
            !explicit_conditions_hold(t, base, height))
          continue;
        return RigidityTower{base, height, cover, ov, eps, depth, j};
      }
    }
    if (depth == n_max) break;
    RvStepResult step = [&] {
      try {
        return rv_step(cur);
      } catch (const NotInGeneralPositionError&) {
        throw NotInGeneralPositionError(static_cast<int>(depth + 1));
      }
    }();
    m = m * step.matrix;
    cur = std::move(step.induced);
  }
  return std::nullopt;
}

bool verify_tower(const Iet& t, const RigidityTower& tw) {
  const long h = tw.n.convert_to<long>();
  const Interval& j = tw.j_interval;
  if (!explicit_conditions_hold(t, j, tw.n)) return false;
  // Cover: U_{i=1}^{N} T^i(J).  The floors below the top are intervals
  // (continuity was just re-established); the top image may split.
  std::vector<Interval> parts;
  Interval cur = j;
  for (long i = 1; i < h; ++i) {
    cur = *t.push_forward_continuous(cur);
    parts.push_back(cur);
  }
  const IntervalSet top = t.push_forward(IntervalSet::single(cur.lo, cur.hi));
  for (const auto& iv : top.intervals()) parts.push_back(iv);
  const IntervalSet cover = IntervalSet::from(std::move(parts));
  if (!(cover.measure() > (ExactNumber(1) - tw.eps) * t.total())) return false;
  const IntervalSet base = IntervalSet::single(j.lo, j.hi);
  const ExactNumber ov = top.intersect(base).measure() / j.length();
  if (!(ov > ExactNumber(1) - tw.eps)) return false;
  return ov == tw.overlap;
}

ExactNumber block_union_measure(const Iet& t, const ExactNumber& x,
                                const Int& start, const Int& end,
                                const ExactNumber& radius) {
  if (start < 1 || end < start) throw InvalidParamsError("need 1 <= start <= end");
  if (!(radius.sign() > 0)) throw InvalidParamsError("radius must be > 0");
  const bool rotation = t.d() == 2 && t.permutation()(1) == 2;
  if (rotation) {
    // The orbit slice {T^i x : start <= i <= end} is a translate of
    // {i*alpha mod total : 0 <= i <= end-start}; the union measure is the
    // sum over the gap multiset of min(gap, 2*radius), independent of x.
    const ExactNumber alpha = t.lengths()[1] / t.total();
    const ExactNumber diam = radius + radius;
    const Int count = end - start;
    if (count == 0) return min(diam, t.total());
    GapMultiset gm = three_gaps(alpha, count);
    ExactNumber measure;
    for (const auto& [gap, c] : gm.gaps)
      measure += min(gap * t.total(), diam) * ExactNumber(c);
    return measure;
  }
  if (end > 200000)
    throw InvalidParamsError("block too long for direct enumeration");
  std::vector<Interval> parts;
  ExactNumber p = x;
  const long s = start.convert_to<long>(), e = end.convert_to<long>();
  for (long i = 1; i <= e; ++i) {
    p = t.apply(p);
    if (i < s) continue;
    IntervalSet b = domain_ball(t.total(), p, radius, Metric::Circle);
    for (const auto& iv : b.intervals()) parts.push_back(iv);
  }
  return IntervalSet::from(std::move(parts)).measure();
}

RigidSequenceReport rigid_sequence(const Iet& t, const ExactNumber& x,
                                   int j_max, long n_search) {
  if (j_max < 1) throw InvalidParamsError("j_max must be >= 1");
  RigidSequenceReport rep{{}, TargetSequence::explicit_list({ExactNumber(1)}),
                          {}, {}};
  ExactNumber eps = ExactNumber::rational(1, 3);
  Int prev = 1;  // N_0
  for (int j = 1; j <= j_max; ++j) {
    auto tw = find_tower(t, eps, n_search, prev + 1);
    if (!tw) throw TowerNotFoundError(j);
    rep.n.push_back(tw->n);
    rep.towers.push_back(std::move(*tw));
    prev = rep.n.back();
    eps /= ExactNumber(3);
  }
  rep.seq = TargetSequence::rigid(rep.n);

  Int pow2 = 2, pow3 = 3;
  Int prev_start = 1;  // 2^{j-1} N_{j-1}
  for (int j = 1; j <= j_max; ++j) {
    const Int nj = rep.n[j - 1];
    const Int block_end = pow2 * nj - 1;  // radius constant on [start, end]
    const ExactNumber radius = ExactNumber(1) / ExactNumber(pow2 * nj);
    BlockReport br;
    br.j = j;
    br.n_j = nj;
    br.measure = block_union_measure(t, x, prev_start, block_end, radius);
    br.bound = ExactNumber(nj) / ExactNumber(pow2 * nj) +
               ExactNumber(pow2 * nj) / ExactNumber(pow3 * nj);
    br.below = br.measure < br.bound;
    rep.blocks.push_back(std::move(br));
    prev_start = pow2 * nj;
    pow2 *= 2;
    pow3 *= 3;
  }
  return rep;
}

}  // namespace ietk
