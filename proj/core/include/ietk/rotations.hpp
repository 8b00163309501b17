#ifndef IETK_ROTATIONS_HPP
#define IETK_ROTATIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ietk/dyadic_log.hpp"
#include "ietk/iet.hpp"

namespace ietk {

/// Continued fraction expansion [a_0; a_1, a_2, ...] with convergents
/// p_k/q_k aligned index-for-index with the quotients.
struct ContinuedFraction {
  std::vector<Int> a;
  std::vector<Int> p, q;
  bool terminated = false;  // rational input, expansion exhausted
  /// For quadratic irrationals: index where the periodic part begins and
  /// its length, when detected within the computed range.
  std::optional<std::pair<int, int>> period;

  int size() const { return static_cast<int>(a.size()); }
};

/// First n partial quotients (plus a_0) of alpha in (0,1), exact; rationals
/// terminate early and are flagged, quadratics get period detection.
ContinuedFraction cf_expand(const ExactNumber& alpha, int n);

/// The rotation x -> x + alpha mod 1 as the 2-IET with lengths
/// (1-alpha, alpha) and permutation (2 1).
Iet rotation_iet(const ExactNumber& alpha);

/// Multiset of circle gap lengths cut by {j*alpha mod 1 : 0 <= j <= n},
/// sorted ascending; at most three distinct values (three-distance
/// theorem).  Counts are exact, so n may be astronomically large: the gap
/// multiset is evolved by batched largest-gap splitting, costing roughly
/// the sum of the partial quotients rather than n.  For rational alpha the
/// point set saturates at the denominator and n is clamped there.
struct GapMultiset {
  std::vector<std::pair<ExactNumber, Int>> gaps;  // (length, count) ascending

  const ExactNumber& smallest() const { return gaps.front().first; }
  Int total_count() const;
};
GapMultiset three_gaps(const ExactNumber& alpha, const Int& n);

/// Finite-horizon growth exponent max_{1<=k<=n} log(q_k)/k as a certified
/// enclosure, plus the largest partial quotient seen (badly-approximable
/// certificate) and the rational-termination flag.
struct KurzweilReport {
  Enclosure exponent;
  Int max_quotient;
  bool terminated;
};
KurzweilReport kurzweil_exponent(const ExactNumber& alpha, int n);

}  // namespace ietk

#endif
