#include "ietk/rauzy.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ietk {

RvMatrix::RvMatrix(int d) : d_(d), m_(d * d, Int(0)) {
  if (d < 1) throw InvalidParamsError("matrix dimension must be positive");
  for (int i = 1; i <= d; ++i) at(i, i) = 1;
}

RvMatrix RvMatrix::operator*(const RvMatrix& o) const {
  if (d_ != o.d_) throw InvalidParamsError("matrix dimension mismatch");
  RvMatrix r(d_);
  for (int i = 1; i <= d_; ++i)
    for (int j = 1; j <= d_; ++j) {
      Int s = 0;
      for (int k = 1; k <= d_; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

std::vector<ExactNumber> RvMatrix::apply(
    const std::vector<ExactNumber>& v) const {
  if (static_cast<int>(v.size()) != d_)
    throw InvalidParamsError("vector dimension mismatch");
  std::vector<ExactNumber> r(d_);
  for (int i = 1; i <= d_; ++i) {
    ExactNumber s;
    for (int j = 1; j <= d_; ++j) s += ExactNumber(at(i, j)) * v[j - 1];
    r[i - 1] = s;
  }
  return r;
}

Int RvMatrix::column_sum(int j) const {
  Int s = 0;
  for (int i = 1; i <= d_; ++i) s += at(i, j);
  return s;
}

Int RvMatrix::max_column_sum() const {
  Int best = column_sum(1);
  for (int j = 2; j <= d_; ++j) best = std::max(best, column_sum(j));
  return best;
}

int RvMatrix::argmax_column() const {
  int arg = 1;
  Int best = column_sum(1);
  for (int j = 2; j <= d_; ++j) {
    Int s = column_sum(j);
    if (s > best) {
      best = s;
      arg = j;
    }
  }
  return arg;
}

bool RvMatrix::is_positive() const {
  for (const Int& v : m_)
    if (v <= 0) return false;
  return true;
}

Int RvMatrix::det() const {
  // Fraction-free Gaussian elimination (Bareiss).
  std::vector<Int> a = m_;
  auto e = [&](int i, int j) -> Int& { return a[i * d_ + j]; };
  Int denom = 1;
  int sign = 1;
  for (int c = 0; c < d_ - 1; ++c) {
    int piv = -1;
    for (int r = c; r < d_; ++r)
      if (e(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < d_; ++j) std::swap(e(piv, j), e(c, j));
      sign = -sign;
    }
    for (int r = c + 1; r < d_; ++r) {
      for (int j = c + 1; j < d_; ++j)
        e(r, j) = (e(r, j) * e(c, c) - e(r, c) * e(c, j)) / denom;
      e(r, c) = 0;
    }
    denom = e(c, c);
  }
  return sign > 0 ? e(d_ - 1, d_ - 1) : Int(-e(d_ - 1, d_ - 1));
}

Permutation rv_step_permutation(const Permutation& pi, RvStep s) {
  const int d = pi.size();
  if (d < 2) throw InvalidParamsError("induction needs d >= 2");
  if (!pi.is_irreducible()) throw ReducibleError();
  std::vector<int> im(d);
  if (s == RvStep::A) {
    const int k = pi.inverse()(d);
    for (int j = 1; j <= k; ++j) im[j - 1] = pi(j);
    im[k] = pi(d);
    for (int j = k + 2; j <= d; ++j) im[j - 1] = pi(j - 1);
  } else {
    const int pd = pi(d);
    for (int j = 1; j <= d; ++j) {
      const int v = pi(j);
      if (v <= pd) {
        im[j - 1] = v;
      } else if (v < d) {
        im[j - 1] = v + 1;
      } else {
        im[j - 1] = pd + 1;
      }
    }
  }
  return Permutation(std::move(im));
}

std::pair<Permutation, RvMatrix> rv_generator(const Permutation& pi, RvStep s) {
  const int d = pi.size();
  Permutation next = rv_step_permutation(pi, s);
  RvMatrix m(d);
  const int k = pi.inverse()(d);
  if (s == RvStep::A) {
    // Columns j <= k stay e_j; column k+1 has ones in rows k and d; columns
    // j > k+1 become e_{j-1}.
    for (int j = 1; j <= d; ++j)
      for (int i = 1; i <= d; ++i) m.at(i, j) = 0;
    for (int j = 1; j <= k; ++j) m.at(j, j) = 1;
    m.at(k, k + 1) = 1;
    m.at(d, k + 1) = 1;
    for (int j = k + 2; j <= d; ++j) m.at(j - 1, j) = 1;
  } else {
    m.at(d, k) = 1;  // identity plus E_{d,k}
  }
  return {std::move(next), std::move(m)};
}

RvStepResult rv_step(const Iet& t) {
  const int d = t.d();
  if (d < 2) throw InvalidParamsError("induction needs d >= 2");
  const Permutation& pi = t.permutation();
  if (!pi.is_irreducible()) throw ReducibleError();
  const int k = pi.inverse()(d);
  const ExactNumber& ld = t.lengths()[d - 1];
  const ExactNumber& lk = t.lengths()[k - 1];
  // delta+ = total - l_d (rightmost discontinuity of T), delta- = total - l_k
  // (rightmost discontinuity of T^{-1}); step a when delta+ is the larger,
  // i.e. l_d < l_k.
  const auto cmp = ld.compare(lk);
  if (cmp == std::strong_ordering::equal) throw NotInGeneralPositionError(0);
  const RvStep s = cmp == std::strong_ordering::less ? RvStep::A : RvStep::B;

  std::vector<ExactNumber> lens(d);
  if (s == RvStep::A) {
    for (int j = 1; j < k; ++j) lens[j - 1] = t.lengths()[j - 1];
    lens[k - 1] = lk - ld;
    lens[k] = ld;
    for (int j = k + 2; j <= d; ++j) lens[j - 1] = t.lengths()[j - 2];
  } else {
    for (int j = 1; j < d; ++j) lens[j - 1] = t.lengths()[j - 1];
    lens[d - 1] = ld - lk;
  }
  auto [next_pi, m] = rv_generator(pi, s);
  return {s, Iet(std::move(lens), std::move(next_pi)), std::move(m)};
}

RvRecord rv_path(const Iet& t, long n) {
  if (n < 0) throw InvalidParamsError("n must be >= 0");
  RvRecord rec{{}, RvMatrix(t.d()), t, t.total()};
  for (long k = 1; k <= n; ++k) {
    RvStepResult step = [&] {
      try {
        return rv_step(rec.induced);
      } catch (const NotInGeneralPositionError&) {
        throw NotInGeneralPositionError(static_cast<int>(k));
      }
    }();
    rec.steps.push_back(step.step);
    rec.matrix = rec.matrix * step.matrix;
    rec.induced = std::move(step.induced);
  }
  rec.interval_length = rec.induced.total();
  return rec;
}

Tower tower(const Iet& t, long n, int j) {
  RvRecord rec = rv_path(t, n);
  if (j < 1 || j > t.d()) throw OutOfRangeError("column index out of range");
  Tower tw;
  tw.base = {rec.induced.breakpoints()[j - 1], rec.induced.breakpoints()[j]};
  tw.height = rec.matrix.column_sum(j).convert_to<long>();
  std::vector<Interval> floors{tw.base};
  Interval cur = tw.base;
  for (long i = 1; i < tw.height; ++i) {
    auto img = t.push_forward_continuous(cur);
    if (!img)
      throw PreconditionViolatedError("tower floor hit a discontinuity");
    cur = *img;
    floors.push_back(cur);
  }
  tw.floors = IntervalSet::from(std::move(floors));
  return tw;
}

bool is_balanced(const RvMatrix& m, const ExactNumber& nu) {
  if (!(ExactNumber(1) < nu)) throw InvalidParamsError("nu must be > 1");
  Int lo = m.column_sum(1), hi = lo;
  for (int j = 1; j <= m.d(); ++j) {
    Int s = m.column_sum(j);
    if (s == 0) throw ZeroColumnError();
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return ExactNumber(hi) < nu * ExactNumber(lo);
}

std::vector<Permutation> rauzy_class(const Permutation& pi) {
  if (!pi.is_irreducible()) throw ReducibleError();
  std::set<Permutation> seen{pi};
  std::deque<Permutation> queue{pi};
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (RvStep s : {RvStep::A, RvStep::B}) {
      Permutation next = rv_step_permutation(cur, s);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

Iet iet_from_column(const Iet& t, long n, long k, int i) {
  if (i < 1 || i > t.d()) throw OutOfRangeError("column index out of range");
  RvRecord head = rv_path(t, n);
  RvRecord tail = rv_path(head.induced, k);
  if (!tail.matrix.is_positive()) throw NotPositiveError();
  RvMatrix full = head.matrix * tail.matrix;
  const ExactNumber sum(full.column_sum(i));
  std::vector<ExactNumber> lens(t.d());
  for (int r = 1; r <= t.d(); ++r)
    lens[r - 1] = ExactNumber(full.at(r, i)) / sum;
  return Iet(std::move(lens), t.permutation());
}

std::optional<long> is_i_good(const Iet& t, const ExactNumber& nu,
                              const ExactNumber& e, int i) {
  if (!(ExactNumber(1) < nu)) throw InvalidParamsError("nu must be > 1");
  if (!(e.sign() > 0)) throw InvalidParamsError("e must be > 0");
  if (i < 0) throw InvalidParamsError("i must be >= 0");
  const int d = t.d();
  const ExactNumber denom = ExactNumber(20) * nu * nu * ExactNumber(d);
  const long big_k = denom.ceil().convert_to<long>();
  const Int lo = Int(1) << i, hi = Int(1) << (i + 1);

  RvMatrix m(d);
  Iet cur = t;
  for (long n0 = 1;; ++n0) {
    RvStepResult step = [&] {
      try {
        return rv_step(cur);
      } catch (const NotInGeneralPositionError&) {
        throw NotInGeneralPositionError(static_cast<int>(n0));
      }
    }();
    m = m * step.matrix;
    cur = std::move(step.induced);
    const Int cmax = m.max_column_sum();
    if (cmax > hi) return std::nullopt;
    if (cmax < lo || !is_balanced(m, nu)) continue;
    // Separation of {T_{n0}x, ..., T_{n0}^K x}, checked exactly on the
    // continuity pieces of the iterates, where each T_{n0}^m is a single
    // translation.
    const ExactNumber delta = e * cur.total() / denom;
    bool ok = true;
    for (const auto& piece : cur.continuity_pieces(big_k)) {
      for (std::size_t a = 0; a + 1 < piece.shifts.size() && ok; ++a)
        for (std::size_t b = a + 1; b < piece.shifts.size(); ++b)
          if ((piece.shifts[a] - piece.shifts[b]).abs() < delta) {
            ok = false;
            break;
          }
      if (!ok) break;
    }
    if (ok) return n0;
  }
}

namespace {

// Characteristic polynomial of an integer matrix (monic, coefficients for
// x^0..x^d) by the Faddeev-LeVerrier recurrence; all divisions are exact.
std::vector<Int> char_poly(const RvMatrix& m) {
  const int d = m.d();
  std::vector<Int> c(d + 1, Int(0));
  c[d] = 1;
  RvMatrix n(d);  // identity: M^0 term
  std::vector<Int> work(d * d, Int(0));
  auto w = [&](int i, int j) -> Int& { return work[(i - 1) * d + (j - 1)]; };
  for (int k = 1; k <= d; ++k) {
    // work = M * N
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        Int s = 0;
        for (int l = 1; l <= d; ++l) s += m.at(i, l) * n.at(l, j);
        w(i, j) = s;
      }
    Int tr = 0;
    for (int i = 1; i <= d; ++i) tr += w(i, i);
    Int ck = -tr / k;
    c[d - k] = ck;
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) n.at(i, j) = w(i, j) + (i == j ? ck : 0);
  }
  return c;
}

// Divides p (coefficients x^0..) by the monic factor q in place; returns
// true and the quotient iff the division is exact over the integers.
bool try_divide(const std::vector<Int>& p, const std::vector<Int>& q,
                std::vector<Int>& quot) {
  const int dp = static_cast<int>(p.size()) - 1;
  const int dq = static_cast<int>(q.size()) - 1;
  if (dp < dq) return false;
  std::vector<Int> r = p;
  quot.assign(dp - dq + 1, Int(0));
  for (int k = dp - dq; k >= 0; --k) {
    Int coef = r[k + dq];
    quot[k] = coef;
    for (int j = 0; j <= dq; ++j) r[k + j] -= coef * q[j];
  }
  for (const Int& v : r)
    if (v != 0) return false;
  return true;
}

Int cauchy_bound(const std::vector<Int>& p) {
  Int b = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    b = std::max(b, Int(boost::multiprecision::abs(p[i])));
  return b + 1;
}

}  // namespace

Iet perron_iet(const Permutation& pi, const std::vector<RvStep>& loop) {
  if (loop.empty()) throw NotALoopError();
  const int d = pi.size();
  RvMatrix m(d);
  Permutation cur = pi;
  for (RvStep s : loop) {
    auto [next, gen] = rv_generator(cur, s);
    m = m * gen;
    cur = std::move(next);
  }
  if (!(cur == pi)) throw NotALoopError();
  if (!m.is_positive()) throw NotPositiveError();

  // Split the characteristic polynomial into monic integer factors of degree
  // <= 2 (plus whatever refuses to split).  Because the matrix is unimodular
  // every factor has constant term dividing +-1, so the search space for
  // linear and quadratic factors is tiny.
  std::vector<Int> rest = char_poly(m);
  std::vector<ExactNumber> real_roots;
  bool changed = true;
  while (rest.size() > 1 && changed) {
    changed = false;
    for (Int r : {Int(1), Int(-1)}) {  // rational roots divide the +-1 constant
      std::vector<Int> quot;
      if (try_divide(rest, {Int(-r), Int(1)}, quot)) {
        real_roots.push_back(ExactNumber(r));
        rest = std::move(quot);
        changed = true;
        break;
      }
    }
    if (changed || rest.size() <= 3) continue;
    const Int ub = cauchy_bound(rest);
    for (Int v : {Int(1), Int(-1)}) {
      for (Int u = -ub; u <= ub && !changed; ++u) {
        std::vector<Int> quot;
        if (try_divide(rest, {v, u, Int(1)}, quot)) {
          Int disc = u * u - 4 * v;
          if (disc > 0) {
            // roots (-u +- sqrt(disc)) / 2
            real_roots.push_back(ExactNumber::quadratic(-u, 1, 2, disc));
            real_roots.push_back(ExactNumber::quadratic(-u, -1, 2, disc));
          } else if (disc == 0) {
            real_roots.push_back(ExactNumber::rational(-u, 2));
          }
          rest = std::move(quot);
          changed = true;
        }
      }
      if (changed) break;
    }
  }
  if (rest.size() == 3) {
    Int a1 = rest[1], a0 = rest[0];
    Int disc = a1 * a1 - 4 * a0;
    if (disc > 0) {
      real_roots.push_back(ExactNumber::quadratic(-a1, 1, 2, disc));
      real_roots.push_back(ExactNumber::quadratic(-a1, -1, 2, disc));
    } else if (disc == 0) {
      real_roots.push_back(ExactNumber::rational(-a1, 2));
    }
    rest = {Int(1)};
  } else if (rest.size() == 2) {
    real_roots.push_back(ExactNumber(Int(-rest[0])));
    rest = {Int(1)};
  }
  // The Perron root of a positive matrix is its largest real eigenvalue, so
  // if an unfactored block of degree >= 3 remains we cannot certify which
  // factor holds it.
  if (rest.size() > 1) throw DegreeTooHighError();
  if (real_roots.empty()) throw DegreeTooHighError();
  ExactNumber lambda = real_roots[0];
  for (const auto& r : real_roots) lambda = max(lambda, r);

  // Kernel of (M - lambda I) by Gaussian elimination over the field of
  // lambda; the Perron eigenvalue is simple so the kernel is a line.
  std::vector<std::vector<ExactNumber>> a(d, std::vector<ExactNumber>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      a[i][j] = ExactNumber(m.at(i + 1, j + 1));
      if (i == j) a[i][j] -= lambda;
    }
  std::vector<int> pivot_col(d, -1);
  int rank = 0;
  for (int col = 0; col < d && rank < d; ++col) {
    int piv = -1;
    for (int r = rank; r < d; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    const ExactNumber inv = ExactNumber(1) / a[rank][col];
    for (int j = col; j < d; ++j) a[rank][j] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const ExactNumber f = a[r][col];
      for (int j = col; j < d; ++j) a[r][j] -= f * a[rank][j];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank >= d) throw DegreeTooHighError();  // lambda not an eigenvalue
  // Free column: first column that is not a pivot.
  std::vector<bool> is_pivot(d, false);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<ExactNumber> v(d);
  v[free_col] = ExactNumber(1);
  for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][free_col];

  int sgn = 0;
  for (const auto& x : v)
    if (x.sign() != 0) {
      sgn = x.sign();
      break;
    }
  if (sgn < 0)
    for (auto& x : v) x = -x;
  ExactNumber sum;
  for (const auto& x : v) {
    if (!(x.sign() > 0))
      throw DegreeTooHighError();  // not the Perron direction
    sum += x;
  }
  for (auto& x : v) x /= sum;
  return Iet(std::move(v), pi);
}

}  // namespace ietk
