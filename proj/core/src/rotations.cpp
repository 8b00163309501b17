#include "ietk/rotations.hpp"

#include <map>

namespace ietk {

ContinuedFraction cf_expand(const ExactNumber& alpha, int n) {
  if (!(alpha.sign() > 0) || !(alpha < ExactNumber(1)))
    throw InvalidParamsError("alpha must lie in (0,1)");
  if (n < 0) throw InvalidParamsError("n must be >= 0");
  ContinuedFraction cf;
  // a_0 = 0 with the usual seed convergents.
  cf.a.push_back(0);
  cf.p.push_back(0);
  cf.q.push_back(1);
  Int pm1 = 1, qm1 = 0;  // p_{-1}, q_{-1}
  ExactNumber x = alpha;
  std::vector<ExactNumber> states;  // fractional parts, for period detection
  for (int k = 1; k <= n; ++k) {
    if (x.is_zero()) {
      cf.terminated = true;
      break;
    }
    if (!alpha.is_rational()) {
      for (std::size_t s = 0; s < states.size(); ++s) {
        if (states[s] == x) {
          cf.period = {static_cast<int>(s) + 1,
                       static_cast<int>(states.size() - s)};
          break;
        }
      }
      if (cf.period) {
        // Extend by cycling the detected period instead of re-deriving.
        const auto [start, len] = *cf.period;
        while (static_cast<int>(cf.a.size()) <= n) {
          const int src = start + ((static_cast<int>(cf.a.size()) - start) % len);
          Int ak = cf.a[src];
          Int pk = ak * cf.p.back() + pm1;
          Int qk = ak * cf.q.back() + qm1;
          pm1 = cf.p.back();
          qm1 = cf.q.back();
          cf.a.push_back(std::move(ak));
          cf.p.push_back(std::move(pk));
          cf.q.push_back(std::move(qk));
        }
        return cf;
      }
      states.push_back(x);
    }
    const ExactNumber y = ExactNumber(1) / x;
    Int ak = y.floor();
    x = y - ExactNumber(ak);
    Int pk = ak * cf.p.back() + pm1;
    Int qk = ak * cf.q.back() + qm1;
    pm1 = cf.p.back();
    qm1 = cf.q.back();
    cf.a.push_back(std::move(ak));
    cf.p.push_back(std::move(pk));
    cf.q.push_back(std::move(qk));
  }
  return cf;
}

Iet rotation_iet(const ExactNumber& alpha) {
  if (!(alpha.sign() > 0) || !(alpha < ExactNumber(1)))
    throw InvalidParamsError("alpha must lie in (0,1)");
  return Iet({ExactNumber(1) - alpha, alpha}, Permutation({2, 1}));
}

Int GapMultiset::total_count() const {
  Int s = 0;
  for (const auto& [g, c] : gaps) s += c;
  return s;
}

GapMultiset three_gaps(const ExactNumber& alpha, const Int& n) {
  if (!(alpha.sign() > 0) || !(alpha < ExactNumber(1)))
    throw InvalidParamsError("alpha must lie in (0,1)");
  if (n < 1) throw InvalidParamsError("n must be >= 1");

  // Points repeat once every q steps for alpha = p/q.
  Int m = n;
  if (alpha.is_rational() && m > alpha.rational_den() - 1)
    m = alpha.rational_den() - 1;

  // theta_j = |q_j alpha - p_j|, strictly decreasing; computed lazily.
  std::vector<ExactNumber> theta{ExactNumber(1), alpha};
  Int tp_prev = 1, tq_prev = 0, tp = 0, tq = 1;  // convergents p_{-1}.. etc.
  ExactNumber cf_x = alpha;
  auto extend_theta = [&]() {
    const ExactNumber y = ExactNumber(1) / cf_x;
    const Int ak = y.floor();
    cf_x = y - ExactNumber(ak);
    const Int pk = ak * tp + tp_prev;
    const Int qk = ak * tq + tq_prev;
    tp_prev = tp;
    tq_prev = tq;
    tp = pk;
    tq = qk;
    theta.push_back((ExactNumber(qk) * alpha - ExactNumber(pk)).abs());
  };

  // Each of the next insertions splits a currently-largest gap V into
  // (V - eta, eta) where eta is the largest theta_j strictly below V; all
  // equal largest gaps are consumed before the split value changes, so the
  // splits batch by count.
  std::map<ExactNumber, Int, std::greater<ExactNumber>> gaps{
      {ExactNumber(1), Int(1)}};
  std::size_t idx = 0;  // theta is decreasing, V never grows: pointer only advances
  while (m > 0) {
    auto it = gaps.begin();
    const ExactNumber v = it->first;
    while (theta[idx] >= v) {
      ++idx;
      if (idx == theta.size()) extend_theta();
    }
    const ExactNumber eta = theta[idx];
    const Int t = std::min(it->second, m);
    if ((it->second -= t) == 0) gaps.erase(it);
    gaps[v - eta] += t;
    gaps[eta] += t;
    m -= t;
  }

  GapMultiset out;
  for (auto rit = gaps.rbegin(); rit != gaps.rend(); ++rit)
    out.gaps.emplace_back(rit->first, rit->second);
  return out;
}

KurzweilReport kurzweil_exponent(const ExactNumber& alpha, int n) {
  if (n < 1) throw InvalidParamsError("n must be >= 1");
  const ContinuedFraction cf = cf_expand(alpha, n);
  KurzweilReport rep{{ExactNumber(0), ExactNumber(0)}, 0, cf.terminated};
  for (int k = 1; k < cf.size(); ++k) {
    rep.max_quotient = std::max(rep.max_quotient, cf.a[k]);
    if (cf.q[k] == 1) continue;
    Enclosure lq = log_nat(cf.q[k], 24);
    const ExactNumber kk(k);
    rep.exponent.lo = max(rep.exponent.lo, lq.lo / kk);
    rep.exponent.hi = max(rep.exponent.hi, lq.hi / kk);
  }
  return rep;
}

}  // namespace ietk
