#ifndef IETK_RAUZY_HPP
#define IETK_RAUZY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ietk/iet.hpp"

namespace ietk {

enum class RvStep { A, B };

inline char rv_letter(RvStep s) { return s == RvStep::A ? 'a' : 'b'; }

/// d x d nonnegative integer matrix; products of induction generators are
/// unimodular.  Indices are 1-based to match the usual notation.
class RvMatrix {
 public:
  explicit RvMatrix(int d);  // identity

  int d() const { return d_; }
  Int& at(int i, int j) { return m_[(i - 1) * d_ + (j - 1)]; }
  const Int& at(int i, int j) const { return m_[(i - 1) * d_ + (j - 1)]; }

  RvMatrix operator*(const RvMatrix& o) const;
  /// M * v over exact scalars.
  std::vector<ExactNumber> apply(const std::vector<ExactNumber>& v) const;

  Int column_sum(int j) const;
  Int max_column_sum() const;
  /// Index of a column attaining the maximal sum (smallest such index).
  int argmax_column() const;
  bool is_positive() const;
  Int det() const;

  bool operator==(const RvMatrix& o) const { return d_ == o.d_ && m_ == o.m_; }

 private:
  int d_;
  std::vector<Int> m_;  // row-major
};

/// Permutation update of one induction step (the combinatorial part only).
Permutation rv_step_permutation(const Permutation& pi, RvStep s);

/// Single-step generator for the given combinatorics: the matrix M with
/// L(T) = M * L(R(T)), paired with the updated permutation.
std::pair<Permutation, RvMatrix> rv_generator(const Permutation& pi, RvStep s);

struct RvStepResult {
  RvStep step;
  Iet induced;
  RvMatrix matrix;
};

/// One step of Rauzy-Veech induction: classifies the step by comparing the
/// rightmost discontinuities of T and T^{-1}, and returns the induced map on
/// [0, delta_max) together with the generator matrix.  Throws
/// NotInGeneralPositionError when the two discontinuities coincide and
/// ReducibleError for reducible combinatorics.
RvStepResult rv_step(const Iet& t);

struct RvRecord {
  std::vector<RvStep> steps;
  RvMatrix matrix;     // accumulated product
  Iet induced;         // R^n(T)
  ExactNumber interval_length;  // lambda(I^{(n)})
};

/// n steps of induction with the accumulated matrix product.  A failure at
/// depth k raises NotInGeneralPositionError carrying k.
RvRecord rv_path(const Iet& t, long n);

/// Rokhlin tower over the j-th interval of R^n(T): base I_j^{(n)}, height
/// equal to the j-th column sum of M(T,n), and the floors T^i(base).
struct Tower {
  Interval base;
  long height;
  IntervalSet floors;
};
Tower tower(const Iet& t, long n, int j);

/// All column-sum ratios strictly between 1/nu and nu.  Throws
/// ZeroColumnError on a zero column sum.
bool is_balanced(const RvMatrix& m, const ExactNumber& nu);

/// Closure of pi under both permutation updates (breadth-first), sorted.
std::vector<Permutation> rauzy_class(const Permutation& pi);

/// IET with the permutation of T and lengths given by the normalized i-th
/// column of M(T, n+k); when M(R^n(T), k) is positive this replays the first
/// n induction steps of T.  Throws NotPositiveError otherwise.
Iet iet_from_column(const Iet& t, long n, long k, int i);

/// Searches induction depths n0 (while the maximal column sum stays at most
/// 2^{i+1}) for one where M(T,n0) is nu-balanced, the maximal column sum
/// lies in [2^i, 2^{i+1}], and consecutive short orbits of the induced map
/// are e*lambda(I^{(n0)})/(20 nu^2 d) separated.  The separation quantifier
/// over all starting points is discharged exactly on the continuity pieces
/// of the iterates, where each iterate is a single translation.
std::optional<long> is_i_good(const Iet& t, const ExactNumber& nu,
                              const ExactNumber& e, int i);

/// Self-similar IET of a closed induction loop: lengths are the Perron
/// eigenvector of the accumulated matrix, normalized to total length 1.
/// Exact when the Perron root lies in a degree <= 2 factor of the
/// characteristic polynomial; otherwise DegreeTooHighError.
Iet perron_iet(const Permutation& pi, const std::vector<RvStep>& loop);

}  // namespace ietk

#endif
