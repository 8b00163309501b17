#include "ietk/dyadic_log.hpp"

namespace ietk {

namespace {

ExactNumber pow2(int bits) { return ExactNumber(Int(1) << bits); }

// Round the endpoints outward to multiples of 2^-bits so repeated
// arithmetic on enclosures keeps small denominators.
Enclosure round_out(const Enclosure& e, int bits) {
  const ExactNumber scale = pow2(bits);
  return {ExactNumber((e.lo * scale).floor()) / scale,
          ExactNumber((e.hi * scale).ceil()) / scale};
}

// atanh(z) for rational z in (0, 1/2): series sum z^(2j+1)/(2j+1) with the
// geometric tail bound z^(2m+1)/((2m+1)(1-z^2)).
Enclosure atanh_enclosure(const ExactNumber& z, int bits) {
  const ExactNumber target = ExactNumber(1) / pow2(bits);
  const ExactNumber z2 = z * z;
  const ExactNumber tail_factor = ExactNumber(1) / (ExactNumber(1) - z2);
  ExactNumber term = z;  // z^(2j+1)
  ExactNumber sum;
  long j = 0;
  for (;;) {
    sum += term / ExactNumber(2 * j + 1);
    term *= z2;
    ++j;
    const ExactNumber tail = term / ExactNumber(2 * j + 1) * tail_factor;
    if (tail < target) return round_out({sum, sum + tail}, bits + 1);
  }
}

}  // namespace

Enclosure log2_enclosure(int bits) {
  // ln 2 = 2 atanh(1/3)
  Enclosure a = atanh_enclosure(ExactNumber::rational(1, 3), bits + 1);
  return {a.lo + a.lo, a.hi + a.hi};
}

Enclosure log_rational(const ExactNumber& x, int bits) {
  if (!x.is_rational() || !(x.sign() > 0))
    throw InvalidParamsError("log requires a positive rational");
  if (x < ExactNumber(1)) {
    Enclosure e = log_rational(ExactNumber(1) / x, bits);
    return {-e.hi, -e.lo};
  }
  // x = 2^k * m with m in [1,2)
  long k = 0;
  ExactNumber m = x;
  const ExactNumber two(2);
  while (m >= two) {
    m /= two;
    ++k;
  }
  Enclosure result{ExactNumber(0), ExactNumber(0)};
  if (k > 0) {
    Enclosure l2 = log2_enclosure(bits + 8);
    result = {l2.lo * ExactNumber(k), l2.hi * ExactNumber(k)};
  }
  if (m != ExactNumber(1)) {
    const ExactNumber z = (m - ExactNumber(1)) / (m + ExactNumber(1));
    Enclosure a = atanh_enclosure(z, bits + 2);
    result = result + Enclosure{a.lo + a.lo, a.hi + a.hi};
  }
  return round_out(result, bits);
}

Enclosure log_nat(const Int& n, int bits) {
  if (n <= 0) throw InvalidParamsError("log requires a positive integer");
  return log_rational(ExactNumber(n), bits);
}

}  // namespace ietk
