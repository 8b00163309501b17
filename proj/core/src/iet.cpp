#include "ietk/iet.hpp"

#include <algorithm>
#include <set>

namespace ietk {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int d = static_cast<int>(images_.size());
  if (d == 0) throw InvalidParamsError("empty permutation");
  std::vector<bool> seen(d, false);
  for (int v : images_) {
    if (v < 1 || v > d || seen[v - 1])
      throw InvalidParamsError("permutation images are not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> im(d);
  for (int i = 0; i < d; ++i) im[i] = i + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int j = 1; j <= size(); ++j) inv[images_[j - 1] - 1] = j;
  return Permutation(std::move(inv));
}

bool Permutation::is_irreducible() const {
  int maxv = 0;
  for (int k = 1; k < size(); ++k) {
    maxv = std::max(maxv, images_[k - 1]);
    if (maxv == k) return false;
  }
  return true;
}

Iet::Iet(std::vector<ExactNumber> lengths, Permutation perm)
    : lengths_(std::move(lengths)), perm_(std::move(perm)) {
  const int d = perm_.size();
  if (static_cast<int>(lengths_.size()) != d)
    throw InvalidParamsError("length vector size does not match permutation");
  for (const auto& l : lengths_)
    if (!(l.sign() > 0)) throw InvalidParamsError("lengths must be positive");

  breaks_.resize(d + 1);
  breaks_[0] = ExactNumber(0);
  for (int j = 1; j <= d; ++j) breaks_[j] = breaks_[j - 1] + lengths_[j - 1];
  total_ = breaks_[d];

  const Permutation inv = perm_.inverse();
  img_breaks_.resize(d);
  ExactNumber acc(0);
  for (int p = 1; p <= d; ++p) {
    img_breaks_[p - 1] = acc;
    acc += lengths_[inv(p) - 1];
  }
  shifts_.resize(d);
  for (int j = 1; j <= d; ++j)
    shifts_[j - 1] = img_breaks_[perm_(j) - 1] - breaks_[j - 1];
}

void Iet::check_domain(const ExactNumber& x) const {
  if (x.sign() < 0 || !(x < total_))
    throw OutOfDomainError("point " + x.str() + " outside [0, " +
                           total_.str() + ")");
}

int Iet::interval_index(const ExactNumber& x) const {
  check_domain(x);
  // First breakpoint strictly above x.
  int lo = 1, hi = d();
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (x < breaks_[mid]) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

ExactNumber Iet::apply(const ExactNumber& x) const {
  return x + shifts_[interval_index(x) - 1];
}

ExactNumber Iet::apply_inverse(const ExactNumber& y) const {
  check_domain(y);
  // Image position: last p with img_breaks_[p-1] <= y.
  int lo = 1, hi = d();
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    if (y < img_breaks_[mid - 1]) {
      hi = mid - 1;
    } else {
      lo = mid;
    }
  }
  const int j = perm_.inverse()(lo);
  return y - shifts_[j - 1];
}

ExactNumber Iet::iterate(ExactNumber x, long n) const {
  for (; n > 0; --n) x = apply(x);
  for (; n < 0; ++n) x = apply_inverse(x);
  return x;
}

Iet Iet::inverse() const {
  const Permutation inv = perm_.inverse();
  std::vector<ExactNumber> lens(d());
  for (int p = 1; p <= d(); ++p) lens[p - 1] = lengths_[inv(p) - 1];
  return Iet(std::move(lens), inv);
}

std::optional<Interval> Iet::push_forward_continuous(const Interval& iv) const {
  const int j = interval_index(iv.lo);
  if (breaks_[j] < iv.hi) return std::nullopt;
  return Interval{iv.lo + shifts_[j - 1], iv.hi + shifts_[j - 1]};
}

IntervalSet Iet::push_forward(const IntervalSet& s) const {
  std::vector<Interval> out;
  for (const auto& iv : s.intervals()) {
    ExactNumber cur = iv.lo;
    while (cur < iv.hi) {
      const int j = interval_index(cur);
      const ExactNumber stop = min(iv.hi, breaks_[j]);
      out.push_back({cur + shifts_[j - 1], stop + shifts_[j - 1]});
      cur = stop;
    }
  }
  return IntervalSet::from(std::move(out));
}

IntervalSet Iet::push_backward(const IntervalSet& s) const {
  return inverse().push_forward(s);
}

std::vector<ExactNumber> Iet::discontinuities(long n) const {
  if (n < 1) throw InvalidParamsError("n must be >= 1");
  std::set<ExactNumber> acc;
  std::vector<ExactNumber> layer(breaks_.begin() + 1, breaks_.end() - 1);
  for (const auto& b : layer) acc.insert(b);
  const Iet inv = inverse();
  for (long k = 1; k < n; ++k) {
    for (auto& p : layer) p = inv.apply(p);
    for (const auto& p : layer) acc.insert(p);
  }
  return {acc.begin(), acc.end()};
}

ExactNumber Iet::min_gap(long n, Metric metric) const {
  std::vector<ExactNumber> pts = discontinuities(n);
  if (metric == Metric::Interval) {
    pts.insert(pts.begin(), ExactNumber(0));
    pts.push_back(total_);
  } else {
    if (pts.empty() || pts.front().sign() != 0)
      pts.insert(pts.begin(), ExactNumber(0));
  }
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) return total_;
  ExactNumber best = pts[1] - pts[0];
  for (std::size_t i = 2; i < pts.size(); ++i)
    best = min(best, pts[i] - pts[i - 1]);
  if (metric == Metric::Circle)
    best = min(best, pts.front() + total_ - pts.back());
  return best;
}

namespace {
struct SweepPiece {
  ExactNumber dom_lo, dom_hi;  // sub-interval of J
  ExactNumber img_lo;          // left endpoint of its current image
  long time;
};
}  // namespace

std::pair<Iet, InducedMap> Iet::induce(const ExactNumber& u,
                                       const ExactNumber& v, long cap) const {
  if (u.sign() < 0 || !(u < v) || total_ < v)
    throw InvalidParamsError("induction interval must satisfy 0 <= u < v <= total");

  std::vector<SweepPiece> pending{{u, v, u, 0}};
  std::vector<SweepPiece> done;

  while (!pending.empty()) {
    SweepPiece p = std::move(pending.back());
    pending.pop_back();
    if (p.time >= cap)
      throw CapExceededError("first return not resolved within cap");

    // Split the image at the breakpoints of T, translate each part.
    ExactNumber cur = p.img_lo;
    const ExactNumber img_hi = p.img_lo + (p.dom_hi - p.dom_lo);
    while (cur < img_hi) {
      const int j = interval_index(cur);
      const ExactNumber stop = min(img_hi, breaks_[j]);
      SweepPiece q;
      q.dom_lo = p.dom_lo + (cur - p.img_lo);
      q.dom_hi = p.dom_lo + (stop - p.img_lo);
      q.img_lo = cur + shifts_[j - 1];
      q.time = p.time + 1;
      cur = stop;

      // Classify against J = [u, v), splitting at u and v if straddled.
      const ExactNumber q_hi = q.img_lo + (q.dom_hi - q.dom_lo);
      std::vector<ExactNumber> cuts{q.img_lo};
      if (q.img_lo < u && u < q_hi) cuts.push_back(u);
      if (q.img_lo < v && v < q_hi) cuts.push_back(v);
      cuts.push_back(q_hi);
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        SweepPiece part;
        part.dom_lo = q.dom_lo + (cuts[c] - q.img_lo);
        part.dom_hi = q.dom_lo + (cuts[c + 1] - q.img_lo);
        part.img_lo = cuts[c];
        part.time = q.time;
        if (u <= part.img_lo && part.img_lo < v) {
          done.push_back(std::move(part));
        } else {
          pending.push_back(std::move(part));
        }
      }
    }
  }

  std::sort(done.begin(), done.end(),
            [](const SweepPiece& x, const SweepPiece& y) {
              return x.dom_lo < y.dom_lo;
            });
  // Merge adjacent pieces with the same return time whose images are also
  // adjacent (the sweep may have cut at a point where T^return is in fact
  // continuous).
  std::vector<SweepPiece> merged;
  for (auto& p : done) {
    if (!merged.empty() && merged.back().time == p.time &&
        merged.back().dom_hi == p.dom_lo &&
        merged.back().img_lo + (merged.back().dom_hi - merged.back().dom_lo) ==
            p.img_lo) {
      merged.back().dom_hi = p.dom_hi;
    } else {
      merged.push_back(std::move(p));
    }
  }

  const int m = static_cast<int>(merged.size());
  std::vector<ExactNumber> lens(m);
  std::vector<std::pair<ExactNumber, int>> by_img;
  for (int i = 0; i < m; ++i) {
    lens[i] = merged[i].dom_hi - merged[i].dom_lo;
    by_img.emplace_back(merged[i].img_lo, i);
  }
  std::sort(by_img.begin(), by_img.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<int> images(m);
  for (int pos = 0; pos < m; ++pos) images[by_img[pos].second] = pos + 1;

  InducedMap table;
  for (int i = 0; i < m; ++i) {
    table.pieces.push_back({merged[i].dom_lo, merged[i].dom_hi});
    table.return_times.push_back(merged[i].time);
  }
  return {Iet(std::move(lens), Permutation(std::move(images))),
          std::move(table)};
}

std::vector<Iet::OrbitPiece> Iet::continuity_pieces(long n) const {
  std::vector<ExactNumber> cuts = discontinuities(n);
  cuts.insert(cuts.begin(), ExactNumber(0));
  cuts.push_back(total_);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<OrbitPiece> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    OrbitPiece op;
    op.piece = {cuts[i], cuts[i + 1]};
    ExactNumber y = cuts[i];
    for (long m = 1; m <= n; ++m) {
      y = apply(y);
      op.shifts.push_back(y - cuts[i]);
    }
    out.push_back(std::move(op));
  }
  return out;
}

bool Iet::operator==(const Iet& o) const {
  if (!(perm_ == o.perm_)) return false;
  for (int i = 0; i < d(); ++i)
    if (lengths_[i] != o.lengths_[i]) return false;
  return true;
}

std::optional<FastOrbit> FastOrbit::create(const Iet& t, const ExactNumber& x) {
  if (!x.is_rational()) return std::nullopt;
  Int q = x.rational_den();
  for (const auto& l : t.lengths()) {
    if (!l.is_rational()) return std::nullopt;
    q = boost::multiprecision::lcm(q, l.rational_den());
  }
  const Int scaled_total = t.total().rational_num() *
                           (q / t.total().rational_den());
  const Int limit = Int(1) << 62;
  if (scaled_total >= limit) return std::nullopt;

  FastOrbit fo;
  fo.q_ = q.convert_to<std::int64_t>();
  fo.pos_ = (x.rational_num() * (q / x.rational_den()))
                .convert_to<std::int64_t>();
  for (int j = 1; j <= t.d(); ++j) {
    const ExactNumber& b = t.breakpoints()[j];
    fo.brk_.push_back(
        (b.rational_num() * (q / b.rational_den())).convert_to<std::int64_t>());
    const ExactNumber& s = t.translation(j);
    Int num = s.rational_num() * (q / s.rational_den());
    if (boost::multiprecision::abs(num) >= limit) return std::nullopt;
    fo.shift_.push_back(num.convert_to<std::int64_t>());
  }
  return fo;
}

}  // namespace ietk
