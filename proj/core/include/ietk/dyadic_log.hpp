#ifndef IETK_DYADIC_LOG_HPP
#define IETK_DYADIC_LOG_HPP

#include "ietk/exact.hpp"

namespace ietk {

/// Certified rational enclosure lo <= value <= hi.
struct Enclosure {
  ExactNumber lo, hi;

  ExactNumber width() const { return hi - lo; }
  Enclosure operator+(const Enclosure& o) const { return {lo + o.lo, hi + o.hi}; }
  Enclosure operator-(const Enclosure& o) const { return {lo - o.hi, hi - o.lo}; }
  /// Quotient, valid when both enclosures are positive.
  Enclosure operator/(const Enclosure& o) const { return {lo / o.hi, hi / o.lo}; }
  bool contains(const ExactNumber& x) const { return lo <= x && x <= hi; }
};

/// ln 2 with error below 2^-bits, via the atanh(1/3) series with an exact
/// tail bound; endpoints rounded outward to dyadics to keep them small.
Enclosure log2_enclosure(int bits);

/// Natural log of a positive rational, same contract.  Computed as
/// k*ln2 + ln(m) with m in [1,2) reduced through atanh((m-1)/(m+1)).
Enclosure log_rational(const ExactNumber& x, int bits);

/// Natural log of a positive integer.
Enclosure log_nat(const Int& n, int bits);

}  // namespace ietk

#endif
