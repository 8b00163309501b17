#ifndef IETK_TARGETS_HPP
#define IETK_TARGETS_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ietk/dyadic_log.hpp"
#include "ietk/iet.hpp"

namespace ietk {

/// Radius sequence a_1, a_2, ... from a small family algebra.  All
/// families except LogHarmonic evaluate to exact rationals/quadratics;
/// LogHarmonic radii are transcendental and evaluate to certified
/// enclosures (eval returns the upper endpoint).
class TargetSequence {
 public:
  enum class Family { Harmonic, Power, LogHarmonic, Blocked, Rigid, Explicit };

  static TargetSequence harmonic(ExactNumber c);          // a_i = c/i
  static TargetSequence power(ExactNumber c, long s);     // a_i = c/i^s
  static TargetSequence log_harmonic(ExactNumber c);      // a_i = c/(i ln(i+1))
  /// b_i = a_{r^k} for r^{k-1} <= i < r^k.
  static TargetSequence blocked(TargetSequence base, long r);
  /// a_i = 1/(2^j N_j) on the block 2^{j-1}N_{j-1} <= i < 2^j N_j, N_0 = 1.
  static TargetSequence rigid(std::vector<Int> n);
  static TargetSequence explicit_list(std::vector<ExactNumber> values);

  Family family() const { return family_; }
  const ExactNumber& c() const { return c_; }
  long s() const { return s_; }
  long r() const { return r_; }
  const TargetSequence& base() const { return *base_; }
  const std::vector<Int>& rigid_n() const { return n_; }
  const std::vector<ExactNumber>& values() const { return values_; }

  ExactNumber eval(const Int& i) const { return eval_enclosure(i).hi; }
  Enclosure eval_enclosure(const Int& i) const;

 private:
  TargetSequence() = default;

  Family family_ = Family::Explicit;
  ExactNumber c_;
  long s_ = 1;
  long r_ = 2;
  std::shared_ptr<const TargetSequence> base_;
  std::vector<Int> n_;
  std::vector<ExactNumber> values_;
};

inline ExactNumber eval_sequence(const TargetSequence& seq, const Int& i) {
  return seq.eval(i);
}

/// Smallest r in [2, r_max] such that r^{i-1} a_{r^i} is certifiably
/// non-increasing on [i_0, horizon] for some i_0 <= horizon/2.  A finite
/// horizon verdict only.
std::optional<int> is_two_standard(const TargetSequence& seq, int r_max,
                                   int horizon);

/// Open ball about c of radius r inside [0, total): truncated in interval
/// mode, wrapped in circle mode.
IntervalSet domain_ball(const ExactNumber& total, const ExactNumber& c,
                        const ExactNumber& r, Metric metric);

/// Exact union of the orbit balls B(T^i x, a_i) for n <= i <= m.
IntervalSet hit_union(const Iet& t, const ExactNumber& x,
                      const TargetSequence& seq, long n, long m,
                      Metric metric = Metric::Interval);

struct ExperimentResult {
  struct Row {
    long n, m;
    ExactNumber measure;
    ExactNumber hit_fraction;  // fraction of a uniform target grid covered
  };
  std::vector<Row> rows;
};

/// Measures of hit_union over a checkpoint schedule, with a covered-target
/// fraction on a uniform grid of y values.
ExperimentResult limsup_profile(const Iet& t, const ExactNumber& x,
                                const TargetSequence& seq,
                                const std::vector<std::pair<long, long>>& checkpoints,
                                int grid = 64, Metric metric = Metric::Interval);

/// Least i in [n, m] with |T^i x - y| < a_i (strict), if any.
std::optional<long> first_hit(const Iet& t, const ExactNumber& x,
                              const ExactNumber& y, const TargetSequence& seq,
                              long n, long m, Metric metric = Metric::Interval);

/// tau_r(x,y): least n in [1, cap] with |T^n x - y| < r; nullopt when the
/// orbit stays away through the cap (censored observation).
std::optional<long> hitting_time(const Iet& t, const ExactNumber& x,
                                 const ExactNumber& y, const ExactNumber& r,
                                 long cap, Metric metric = Metric::Interval);

/// Certified enclosure of log(tau) / (-log r) for rational r in (0,1).
Enclosure hitting_exponent(long tau, const ExactNumber& r, int bits = 24);

/// Maximum number of points that are pairwise >= delta apart (greedy sweep
/// after sorting, optimal in one dimension).
int separated_count(std::vector<ExactNumber> points, const ExactNumber& delta);

struct SeparatedReport {
  ExactNumber lhs, rhs;
  bool holds;
};

/// Separation lemma checker on the real line: points z_i pairwise e/n
/// separated, S a union of t intervals of measure eps, delta < e/(2n);
/// verifies lambda(U B(z_i,delta) \ S) > (n - 2t - n*eps/e) * delta.
/// Balls are not truncated (the statement lives on R).
SeparatedReport check_separated_bound(const std::vector<ExactNumber>& points,
                                      const IntervalSet& s,
                                      const ExactNumber& e,
                                      const ExactNumber& delta);

/// Preimage variant: with e_T(r^{k+1}) > e/r^{k+1}, S a union of at most
/// r^k intervals of measure eps, and delta < e/(2 r^{k+1}), verifies
///   lambda(U_{i=r^k}^{r^{k+1}} T^{-i} B(y,delta) \ S)
///     > (1/4)((1/2)(r^{k+1}-r^k) - 2 r^k - (eps/e) r^{k+1}) delta.
SeparatedReport check_separated_preimage_bound(const Iet& t,
                                               const ExactNumber& y,
                                               const ExactNumber& delta,
                                               const IntervalSet& s,
                                               long r, long k,
                                               const ExactNumber& e);

}  // namespace ietk

#endif
