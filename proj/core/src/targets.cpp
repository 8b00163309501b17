#include "ietk/targets.hpp"

#include <algorithm>

namespace ietk {

TargetSequence TargetSequence::harmonic(ExactNumber c) {
  if (!(c.sign() > 0)) throw InvalidParamsError("c must be > 0");
  TargetSequence s;
  s.family_ = Family::Harmonic;
  s.c_ = std::move(c);
  return s;
}

TargetSequence TargetSequence::power(ExactNumber c, long s) {
  if (!(c.sign() > 0)) throw InvalidParamsError("c must be > 0");
  if (s < 1) throw InvalidParamsError("exponent must be >= 1");
  TargetSequence t;
  t.family_ = Family::Power;
  t.c_ = std::move(c);
  t.s_ = s;
  return t;
}

TargetSequence TargetSequence::log_harmonic(ExactNumber c) {
  if (!(c.sign() > 0)) throw InvalidParamsError("c must be > 0");
  TargetSequence s;
  s.family_ = Family::LogHarmonic;
  s.c_ = std::move(c);
  return s;
}

TargetSequence TargetSequence::blocked(TargetSequence base, long r) {
  if (r < 2) throw InvalidParamsError("block ratio must be >= 2");
  TargetSequence s;
  s.family_ = Family::Blocked;
  s.r_ = r;
  s.base_ = std::make_shared<TargetSequence>(std::move(base));
  return s;
}

TargetSequence TargetSequence::rigid(std::vector<Int> n) {
  if (n.empty()) throw InvalidParamsError("rigid sequence needs N_1");
  Int prev = 1;  // N_0
  for (const Int& v : n) {
    if (v < prev) throw InvalidParamsError("N_j must be increasing");
    prev = v;
  }
  TargetSequence s;
  s.family_ = Family::Rigid;
  s.n_ = std::move(n);
  return s;
}

TargetSequence TargetSequence::explicit_list(std::vector<ExactNumber> values) {
  for (const auto& v : values)
    if (!(v.sign() > 0)) throw InvalidParamsError("radii must be > 0");
  TargetSequence s;
  s.family_ = Family::Explicit;
  s.values_ = std::move(values);
  return s;
}

Enclosure TargetSequence::eval_enclosure(const Int& i) const {
  if (i < 1) throw OutOfRangeError("index must be >= 1");
  switch (family_) {
    case Family::Harmonic: {
      ExactNumber v = c_ / ExactNumber(i);
      return {v, v};
    }
    case Family::Power: {
      Int p = 1;
      for (long k = 0; k < s_; ++k) p *= i;
      ExactNumber v = c_ / ExactNumber(p);
      return {v, v};
    }
    case Family::LogHarmonic: {
      Enclosure ln = log_nat(Int(i + 1), 32);
      const ExactNumber ie(i);
      return {c_ / (ie * ln.hi), c_ / (ie * ln.lo)};
    }
    case Family::Blocked: {
      Int pw = 1;  // r^{k-1} <= i < r^k
      while (pw <= i) pw *= r_;
      return base_->eval_enclosure(pw);
    }
    case Family::Rigid: {
      Int scale = 2;  // blocks [2^{j-1}N_{j-1}, 2^j N_j), N_0 = 1
      for (std::size_t j = 0; j < n_.size(); ++j) {
        Int hi = scale * n_[j];
        if (i < hi) {
          ExactNumber v = ExactNumber(1) / ExactNumber(hi);
          return {v, v};
        }
        scale *= 2;
      }
      throw OutOfRangeError("index beyond the last rigid block");
    }
    case Family::Explicit: {
      if (i > Int(values_.size()))
        throw OutOfRangeError("index beyond the explicit list");
      const ExactNumber& v = values_[i.convert_to<std::size_t>() - 1];
      return {v, v};
    }
  }
  throw InvalidParamsError("unknown family");
}

std::optional<int> is_two_standard(const TargetSequence& seq, int r_max,
                                   int horizon) {
  if (r_max < 2 || horizon < 2)
    throw InvalidParamsError("need r_max >= 2 and horizon >= 2");
  for (int r = 2; r <= r_max; ++r) {
    std::vector<Enclosure> s;
    bool evaluable = true;
    Int power = r;  // r^i
    Int prefac = 1;  // r^{i-1}
    for (int i = 1; i <= horizon; ++i) {
      try {
        Enclosure a = seq.eval_enclosure(power);
        s.push_back({a.lo * ExactNumber(prefac), a.hi * ExactNumber(prefac)});
      } catch (const OutOfRangeError&) {
        evaluable = false;
        break;
      }
      power *= r;
      prefac *= r;
    }
    if (!evaluable) continue;
    int last_violation = 0;  // transitions are certified or count against
    for (int i = 1; i < horizon; ++i)
      if (!(s[i].hi <= s[i - 1].lo)) last_violation = i;
    if (last_violation + 1 <= horizon / 2) return r;
  }
  return std::nullopt;
}

IntervalSet domain_ball(const ExactNumber& total, const ExactNumber& c,
                        const ExactNumber& r, Metric metric) {
  const ExactNumber lo = c - r, hi = c + r;
  if (metric == Metric::Interval)
    return IntervalSet::single(max(lo, ExactNumber(0)), min(hi, total));
  if (r + r >= total) return IntervalSet::single(ExactNumber(0), total);
  std::vector<Interval> parts;
  if (lo.sign() < 0) {
    parts.push_back({ExactNumber(0), hi});
    parts.push_back({lo + total, total});
  } else if (total < hi) {
    parts.push_back({lo, total});
    parts.push_back({ExactNumber(0), hi - total});
  } else {
    parts.push_back({lo, hi});
  }
  return IntervalSet::from(std::move(parts));
}

IntervalSet hit_union(const Iet& t, const ExactNumber& x,
                      const TargetSequence& seq, long n, long m,
                      Metric metric) {
  if (n < 1 || m < n) throw InvalidParamsError("need 1 <= n <= m");
  std::vector<Interval> parts;
  ExactNumber p = x;
  for (long i = 1; i <= m; ++i) {
    p = t.apply(p);
    if (i < n) continue;
    IntervalSet b = domain_ball(t.total(), p, seq.eval(Int(i)), metric);
    for (const auto& iv : b.intervals()) parts.push_back(iv);
  }
  return IntervalSet::from(std::move(parts));
}

ExperimentResult limsup_profile(const Iet& t, const ExactNumber& x,
                                const TargetSequence& seq,
                                const std::vector<std::pair<long, long>>& checkpoints,
                                int grid, Metric metric) {
  ExperimentResult res;
  for (auto [n, m] : checkpoints) {
    IntervalSet u = hit_union(t, x, seq, n, m, metric);
    long covered = 0;
    for (int g = 0; g < grid; ++g)
      if (u.contains(t.total() * ExactNumber::rational(g, grid))) ++covered;
    res.rows.push_back(
        {n, m, u.measure(), ExactNumber::rational(covered, grid)});
  }
  // Self-check: for a fixed N the union can only grow with M.
  for (std::size_t i = 1; i < res.rows.size(); ++i) {
    const auto& a = res.rows[i - 1];
    const auto& b = res.rows[i];
    if (a.n == b.n && a.m <= b.m && b.measure < a.measure)
      throw Error("limsup_profile monotonicity self-check failed");
  }
  return res;
}

namespace {
ExactNumber point_distance(const ExactNumber& a, const ExactNumber& b,
                           const ExactNumber& total, Metric metric) {
  ExactNumber d = (a - b).abs();
  if (metric == Metric::Circle) d = min(d, total - d);
  return d;
}
}  // namespace

std::optional<long> first_hit(const Iet& t, const ExactNumber& x,
                              const ExactNumber& y, const TargetSequence& seq,
                              long n, long m, Metric metric) {
  if (n < 1 || m < n) throw InvalidParamsError("need 1 <= n <= m");
  if (y.sign() < 0 || !(y < t.total()))
    throw OutOfDomainError("target outside the domain");
  ExactNumber p = x;
  for (long i = 1; i <= m; ++i) {
    p = t.apply(p);
    if (i < n) continue;
    if (point_distance(p, y, t.total(), metric) < seq.eval(Int(i))) return i;
  }
  return std::nullopt;
}

std::optional<long> hitting_time(const Iet& t, const ExactNumber& x,
                                 const ExactNumber& y, const ExactNumber& r,
                                 long cap, Metric metric) {
  if (!(r.sign() > 0)) throw InvalidParamsError("radius must be > 0");
  if (y.sign() < 0 || !(y < t.total()))
    throw OutOfDomainError("target outside the domain");
  ExactNumber p = x;
  for (long i = 1; i <= cap; ++i) {
    p = t.apply(p);
    if (point_distance(p, y, t.total(), metric) < r) return i;
  }
  return std::nullopt;
}

Enclosure hitting_exponent(long tau, const ExactNumber& r, int bits) {
  if (tau < 1) throw InvalidParamsError("tau must be >= 1");
  if (!(r.sign() > 0) || !(r < ExactNumber(1)))
    throw InvalidParamsError("r must lie in (0,1)");
  Enclosure num = log_nat(Int(tau), bits);
  Enclosure den = log_rational(ExactNumber(1) / r, bits);  // -log r > 0
  return num / den;
}

int separated_count(std::vector<ExactNumber> points, const ExactNumber& delta) {
  if (!(delta.sign() > 0)) throw InvalidParamsError("delta must be > 0");
  if (points.empty()) return 0;
  std::sort(points.begin(), points.end(),
            [](const ExactNumber& a, const ExactNumber& b) { return a < b; });
  int count = 1;
  ExactNumber last = points.front();
  for (const auto& p : points)
    if (p - last >= delta) {
      ++count;
      last = p;
    }
  return count;
}

SeparatedReport check_separated_bound(const std::vector<ExactNumber>& points,
                                      const IntervalSet& s,
                                      const ExactNumber& e,
                                      const ExactNumber& delta) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw InvalidParamsError("need at least one point");
  if (!(e.sign() > 0) || !(delta.sign() > 0))
    throw InvalidParamsError("e and delta must be > 0");
  const ExactNumber sep = e / ExactNumber(n);
  std::vector<ExactNumber> sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const ExactNumber& a, const ExactNumber& b) { return a < b; });
  for (int i = 1; i < n; ++i)
    if (sorted[i] - sorted[i - 1] < sep)
      throw PreconditionViolatedError("points are not e/n separated");
  if (!(delta < sep / ExactNumber(2)))
    throw PreconditionViolatedError("delta must be below e/(2n)");

  std::vector<Interval> balls;
  for (const auto& z : sorted) balls.push_back({z - delta, z + delta});
  const IntervalSet covered = IntervalSet::from(std::move(balls)).subtract(s);

  const ExactNumber eps = s.measure();
  const ExactNumber t(static_cast<long long>(s.size()));
  SeparatedReport rep;
  rep.lhs = covered.measure();
  rep.rhs = (ExactNumber(n) - ExactNumber(2) * t - ExactNumber(n) * eps / e) *
            delta;
  rep.holds = rep.lhs > rep.rhs;
  return rep;
}

SeparatedReport check_separated_preimage_bound(const Iet& t,
                                               const ExactNumber& y,
                                               const ExactNumber& delta,
                                               const IntervalSet& s,
                                               long r, long k,
                                               const ExactNumber& e) {
  if (r < 2 || k < 0) throw InvalidParamsError("need r >= 2 and k >= 0");
  if (!(e.sign() > 0) || !(delta.sign() > 0))
    throw InvalidParamsError("e and delta must be > 0");
  long rk = 1;
  for (long i = 0; i < k; ++i) rk *= r;
  const long rk1 = rk * r;
  if (t.min_gap(rk1) * ExactNumber(rk1) <= e)
    throw PreconditionViolatedError("e_T(r^{k+1}) must exceed e/r^{k+1}");
  if (Int(s.size()) > Int(rk))
    throw PreconditionViolatedError("S must be a union of at most r^k intervals");
  if (!(delta * ExactNumber(2 * rk1) < e))
    throw PreconditionViolatedError("delta must be below e/(2 r^{k+1})");

  IntervalSet cur = domain_ball(t.total(), y, delta, Metric::Interval);
  IntervalSet uni;
  const Iet inv = t.inverse();
  for (long i = 1; i <= rk1; ++i) {
    cur = inv.push_forward(cur);
    if (i >= rk) uni = uni.unite(cur);
  }
  const ExactNumber eps = s.measure();
  SeparatedReport rep;
  rep.lhs = uni.subtract(s).measure();
  rep.rhs = (ExactNumber::rational(rk1 - rk, 2) - ExactNumber(2 * rk) -
             eps / e * ExactNumber(rk1)) *
            delta / ExactNumber(4);
  rep.holds = rep.lhs > rep.rhs;
  return rep;
}

}  // namespace ietk
