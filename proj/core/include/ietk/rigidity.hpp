#ifndef IETK_RIGIDITY_HPP
#define IETK_RIGIDITY_HPP

#include <optional>
#include <vector>

#include "ietk/rauzy.hpp"
#include "ietk/targets.hpp"

namespace ietk {

/// Almost-periodicity certificate: an interval J and time N with the tower
/// J, TJ, ..., T^{N-1}J disjoint and continuous, covering all but eps of
/// the space, and with T^N J overlapping J in all but an eps fraction.
struct RigidityTower {
  Interval j_interval;
  Int n;               // return time N
  ExactNumber cover;   // measure of U_{i=1}^{N} T^i(J)
  ExactNumber overlap; // lambda(T^N J intersect J) / lambda(J)
  ExactNumber eps;
  long depth;          // induction depth of the candidate
  int column;          // which base interval of R^depth(T)
};

/// Searches candidates J = I_j^{(n)} over induction depths n <= n_max with
/// N the j-th column sum of M(T,n).  Cover and overlap are computed through
/// the first-return structure (cover = N*lambda(J) once the tower is
/// disjoint, T^N J read off the induced map), so enormous N costs nothing;
/// towers of modest height are additionally re-verified by explicit
/// pushing.  min_height filters candidates (used to force increasing N_j).
std::optional<RigidityTower> find_tower(const Iet& t, const ExactNumber& eps,
                                        long n_max,
                                        const Int& min_height = Int(1));

/// Explicit re-verification of all four tower conditions by independent
/// interval pushing: floors disjoint, T continuous on each floor below the
/// top, cover > (1-eps)*total, overlap > 1-eps.  Cost is linear in N.
bool verify_tower(const Iet& t, const RigidityTower& tw);

/// Exact measure of U_{i=start}^{end} B(T^i x, radius).  For 2-interval
/// rotations the orbit-translation structure reduces this to the three-gap
/// multiset (so astronomically long blocks are exact and cheap); other IETs
/// fall back to direct enumeration, which requires end to be moderate.
ExactNumber block_union_measure(const Iet& t, const ExactNumber& x,
                                const Int& start, const Int& end,
                                const ExactNumber& radius);

struct BlockReport {
  int j;
  Int n_j;
  ExactNumber measure;  // lambda of the block union of orbit balls
  ExactNumber bound;    // N_j/(2^j N_j) + 2^j N_j/(3^j N_j) = 2^-j + (2/3)^j
  bool below;
};

struct RigidSequenceReport {
  std::vector<Int> n;  // N_1 < N_2 < ...
  TargetSequence seq;  // the rigid radius sequence
  std::vector<RigidityTower> towers;
  std::vector<BlockReport> blocks;
};

/// The staged construction: towers at eps_j = 3^-j with increasing N_j,
/// the rigid target sequence a_i = 1/(2^j N_j), and for each stage the
/// exact block union measure against its closed-form bound.  Throws
/// TowerNotFoundError with the failing stage.
RigidSequenceReport rigid_sequence(const Iet& t, const ExactNumber& x,
                                   int j_max, long n_search);

}  // namespace ietk

#endif
