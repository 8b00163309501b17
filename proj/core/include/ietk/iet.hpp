#ifndef IETK_IET_HPP
#define IETK_IET_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ietk/exact.hpp"
#include "ietk/interval_set.hpp"

namespace ietk {

/// Distance convention for gaps and balls.  Interval is the plain metric on
/// [0, total) with balls truncated at the edges; Circle identifies the
/// endpoints (used by the rotation oracle).
enum class Metric { Interval, Circle };

/// A bijection of {1,...,d}, stored as the image list (pi(1),...,pi(d)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int d);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j - 1]; }  // 1-based
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  /// pi({1..k}) != {1..k} for every k < d.
  bool is_irreducible() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

class Iet;

/// Return-time table of a first-return map: the exchanged sub-intervals of
/// J in domain order, each with its return time.
struct InducedMap {
  std::vector<Interval> pieces;
  std::vector<long> return_times;
};

/// Interval exchange transformation on [0, total) where total = sum of the
/// lengths.  Immutable after construction; all operations are pure.
class Iet {
 public:
  Iet(std::vector<ExactNumber> lengths, Permutation perm);

  int d() const { return perm_.size(); }
  const std::vector<ExactNumber>& lengths() const { return lengths_; }
  const Permutation& permutation() const { return perm_; }
  const ExactNumber& total() const { return total_; }

  /// Domain breakpoints beta_0 = 0 < beta_1 < ... < beta_d = total.
  const std::vector<ExactNumber>& breakpoints() const { return breaks_; }
  /// Left endpoints of the image intervals, indexed by image position 1..d
  /// (entry 0 unused alignment: image_left(p) for p in 1..d).
  ExactNumber image_left(int pos) const { return img_breaks_[pos - 1]; }

  /// Index j (1-based) with x in I_j.  Throws OutOfDomainError.
  int interval_index(const ExactNumber& x) const;
  /// Translation applied on I_j.
  ExactNumber translation(int j) const { return shifts_[j - 1]; }

  ExactNumber apply(const ExactNumber& x) const;
  ExactNumber apply_inverse(const ExactNumber& y) const;
  ExactNumber iterate(ExactNumber x, long n) const;  // n may be negative

  Iet inverse() const;

  /// Exact image of an interval: split at breakpoints, translate the pieces.
  IntervalSet push_forward(const IntervalSet& s) const;
  IntervalSet push_backward(const IntervalSet& s) const;
  /// Image of a single interval on which T is continuous; nullopt if the
  /// interval straddles a breakpoint in its interior.
  std::optional<Interval> push_forward_continuous(const Interval& iv) const;

  /// Candidate discontinuities of T^n: backward orbit of the breakpoints,
  /// union over 0 <= k < n, sorted with duplicates merged.  Points where
  /// T^n happens to be continuous are retained.
  std::vector<ExactNumber> discontinuities(long n) const;

  /// e_T(n): smallest gap between consecutive candidate discontinuities of
  /// T^n.  In interval mode 0 and total are adjoined as virtual
  /// discontinuities; in circle mode 0 is adjoined and the wrap gap counts.
  /// For d = 1 there are no discontinuities and the result is total.
  ExactNumber min_gap(long n, Metric metric = Metric::Interval) const;

  /// First-return map to J = [u, v), re-based to [0, v-u), together with
  /// the return-time table.  Throws CapExceededError if some part of J does
  /// not return within cap applications of T.
  std::pair<Iet, InducedMap> induce(const ExactNumber& u, const ExactNumber& v,
                                    long cap) const;

  /// Maximal sub-intervals of the domain on which T, T^2, ..., T^n all act
  /// continuously, each with its translation vector (t_1,...,t_n) where
  /// T^m(x) = x + t_m on the piece.
  struct OrbitPiece {
    Interval piece;
    std::vector<ExactNumber> shifts;
  };
  std::vector<OrbitPiece> continuity_pieces(long n) const;

  bool operator==(const Iet& o) const;

 private:
  void check_domain(const ExactNumber& x) const;

  std::vector<ExactNumber> lengths_;
  Permutation perm_;
  ExactNumber total_;
  std::vector<ExactNumber> breaks_;      // beta_0..beta_d
  std::vector<ExactNumber> img_breaks_;  // image left endpoints by position
  std::vector<ExactNumber> shifts_;      // translation per interval
};

/// Machine-word orbit iterator for rational IETs whose lengths share a
/// common denominator Q that fits (together with the numerators) in 64
/// bits.  One step is a linear scan over at most d breakpoints plus one
/// addition; no allocation.
class FastOrbit {
 public:
  /// Returns nullopt if the IET (or x) is not rational with a small enough
  /// common denominator.
  static std::optional<FastOrbit> create(const Iet& t, const ExactNumber& x);

  std::int64_t position_num() const { return pos_; }
  std::int64_t denominator() const { return q_; }
  ExactNumber position() const {
    return ExactNumber::rational(Int(pos_), Int(q_));
  }

  void step() {
    int j = 0;
    while (pos_ >= brk_[j]) ++j;
    pos_ += shift_[j];
  }
  void step(long n) {
    for (long i = 0; i < n; ++i) step();
  }

 private:
  std::int64_t pos_ = 0, q_ = 1;
  std::vector<std::int64_t> brk_;    // beta_1..beta_d scaled by q
  std::vector<std::int64_t> shift_;  // translation per interval scaled by q
};

}  // namespace ietk

#endif
