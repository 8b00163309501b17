#ifndef IETK_EXACT_HPP
#define IETK_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>

#include "ietk/errors.hpp"

namespace ietk {

using Int = boost::multiprecision::cpp_int;

/// Exact element of Q or of a real quadratic field Q(sqrt(D)).
///
/// The value is (a + b*sqrt(D))/c with integer a, b, c > 0.  A rational is
/// stored with b = 0, D = 0.  Quadratic values keep D squarefree and
/// gcd(a, b, c) = 1; rationals keep gcd(a, c) = 1.  Comparisons are exact:
/// quadratic signs are certified by the conjugate trick (compare a^2 with
/// b^2 D), never by floating point.  Values with different nonzero D never
/// mix; operations on them throw MixedFieldError.
class ExactNumber {
 public:
  ExactNumber() : a_(0), b_(0), c_(1), d_(0) {}
  ExactNumber(long long v) : a_(v), b_(0), c_(1), d_(0) {}  // NOLINT
  ExactNumber(const Int& v) : a_(v), b_(0), c_(1), d_(0) {}  // NOLINT

  static ExactNumber rational(Int num, Int den);
  /// (a + b*sqrt(D))/c.  D > 0; square factors of D are folded into b.
  static ExactNumber quadratic(Int a, Int b, Int c, Int D);

  /// Parses "p/q", "p", or "(a+b*sqrt(D))/c".
  static ExactNumber parse(const std::string& text);

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_integer() const { return d_ == 0 && c_ == 1; }

  const Int& rational_num() const { return a_; }
  const Int& rational_den() const { return c_; }
  const Int& quad_a() const { return a_; }
  const Int& quad_b() const { return b_; }
  const Int& quad_c() const { return c_; }
  const Int& quad_d() const { return d_; }

  int sign() const;

  ExactNumber operator-() const;
  ExactNumber operator+(const ExactNumber& o) const;
  ExactNumber operator-(const ExactNumber& o) const;
  ExactNumber operator*(const ExactNumber& o) const;
  ExactNumber operator/(const ExactNumber& o) const;
  ExactNumber& operator+=(const ExactNumber& o) { return *this = *this + o; }
  ExactNumber& operator-=(const ExactNumber& o) { return *this = *this - o; }
  ExactNumber& operator*=(const ExactNumber& o) { return *this = *this * o; }
  ExactNumber& operator/=(const ExactNumber& o) { return *this = *this / o; }

  ExactNumber abs() const { return sign() < 0 ? -*this : *this; }

  /// Exact three-way comparison; throws MixedFieldError on distinct D.
  std::strong_ordering compare(const ExactNumber& o) const;

  bool operator==(const ExactNumber& o) const {
    return compare(o) == std::strong_ordering::equal;
  }
  bool operator!=(const ExactNumber& o) const { return !(*this == o); }
  bool operator<(const ExactNumber& o) const {
    return compare(o) == std::strong_ordering::less;
  }
  bool operator>(const ExactNumber& o) const { return o < *this; }
  bool operator<=(const ExactNumber& o) const { return !(o < *this); }
  bool operator>=(const ExactNumber& o) const { return !(*this < o); }

  Int floor() const;
  Int ceil() const;

  /// Approximate double value; for display only, never for decisions.
  double to_double() const;

  std::string str() const;

 private:
  void normalize();

  Int a_, b_, c_, d_;
};

inline ExactNumber min(const ExactNumber& x, const ExactNumber& y) {
  return y < x ? y : x;
}
inline ExactNumber max(const ExactNumber& x, const ExactNumber& y) {
  return x < y ? y : x;
}

std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

}  // namespace ietk

#endif
