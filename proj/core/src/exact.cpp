#include "ietk/exact.hpp"

#include <cmath>
#include <ostream>
#include <regex>

namespace ietk {

namespace {

Int gcd(Int x, Int y) { return boost::multiprecision::gcd(x, y); }

// Floored (not truncated) quotient.
Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace

void ExactNumber::normalize() {
  if (c_ == 0) throw DivisionByZeroError();
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (b_ == 0) d_ = 0;
  if (d_ == 0) {
    b_ = 0;
    Int g = gcd(boost::multiprecision::abs(a_), c_);
    if (g > 1) {
      a_ /= g;
      c_ /= g;
    }
  } else {
    Int g = gcd(gcd(boost::multiprecision::abs(a_),
                    boost::multiprecision::abs(b_)),
                c_);
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
  }
}

ExactNumber ExactNumber::rational(Int num, Int den) {
  ExactNumber x;
  x.a_ = std::move(num);
  x.b_ = 0;
  x.c_ = std::move(den);
  x.d_ = 0;
  x.normalize();
  return x;
}

ExactNumber ExactNumber::quadratic(Int a, Int b, Int c, Int D) {
  if (D <= 0) throw InvalidParamsError("sqrt argument must be positive");
  // Fold square factors of D into b so that D ends up squarefree.
  for (Int p = 2; p * p <= D; ++p) {
    while (D % (p * p) == 0) {
      D /= p * p;
      b *= p;
    }
  }
  ExactNumber x;
  if (D == 1) {  // perfect square collapsed to a rational
    x.a_ = a + b;
    x.b_ = 0;
    x.c_ = std::move(c);
    x.d_ = 0;
  } else {
    x.a_ = std::move(a);
    x.b_ = std::move(b);
    x.c_ = std::move(c);
    x.d_ = std::move(D);
  }
  x.normalize();
  return x;
}

int ExactNumber::sign() const {
  if (b_ == 0) return a_ == 0 ? 0 : (a_ < 0 ? -1 : 1);
  if (a_ == 0) return b_ < 0 ? -1 : 1;
  // a and b nonzero: sign of a + b*sqrt(D), certified by comparing squares.
  if (a_ > 0 && b_ > 0) return 1;
  if (a_ < 0 && b_ < 0) return -1;
  Int lhs = a_ * a_, rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;  // impossible for squarefree D > 1, kept for safety
  if (a_ > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

ExactNumber ExactNumber::operator-() const {
  ExactNumber x(*this);
  x.a_ = -x.a_;
  x.b_ = -x.b_;
  return x;
}

namespace {
// Common field tag for a binary operation; rationals embed anywhere.
Int joint_field(const ExactNumber& x, const ExactNumber& y) {
  if (x.quad_d() == 0) return y.quad_d();
  if (y.quad_d() == 0) return x.quad_d();
  if (x.quad_d() != y.quad_d()) throw MixedFieldError();
  return x.quad_d();
}
}  // namespace

ExactNumber ExactNumber::operator+(const ExactNumber& o) const {
  Int D = joint_field(*this, o);
  ExactNumber r;
  r.a_ = a_ * o.c_ + o.a_ * c_;
  r.b_ = b_ * o.c_ + o.b_ * c_;
  r.c_ = c_ * o.c_;
  r.d_ = D;
  r.normalize();
  return r;
}

ExactNumber ExactNumber::operator-(const ExactNumber& o) const {
  return *this + (-o);
}

ExactNumber ExactNumber::operator*(const ExactNumber& o) const {
  Int D = joint_field(*this, o);
  ExactNumber r;
  r.a_ = a_ * o.a_ + b_ * o.b_ * D;
  r.b_ = a_ * o.b_ + b_ * o.a_;
  r.c_ = c_ * o.c_;
  r.d_ = D;
  r.normalize();
  return r;
}

ExactNumber ExactNumber::operator/(const ExactNumber& o) const {
  if (o.is_zero()) throw DivisionByZeroError();
  Int D = joint_field(*this, o);
  // 1/((a+b*sqrt(D))/c) = c*(a-b*sqrt(D))/(a^2-b^2 D)
  Int norm = o.a_ * o.a_ - o.b_ * o.b_ * D;
  ExactNumber inv;
  inv.a_ = o.c_ * o.a_;
  inv.b_ = -o.c_ * o.b_;
  inv.c_ = norm;
  inv.d_ = D;
  inv.normalize();
  return *this * inv;
}

std::strong_ordering ExactNumber::compare(const ExactNumber& o) const {
  int s = (*this - o).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Int ExactNumber::floor() const {
  if (d_ == 0) return floor_div(a_, c_);
  // Bracket b*sqrt(D) between consecutive integers via integer sqrt.
  Int t = boost::multiprecision::sqrt(Int(b_ * b_ * d_));
  Int s = b_ >= 0 ? t : -t - 1;
  Int q = floor_div(a_ + s, c_);
  while (*this < ExactNumber(q)) --q;
  while (ExactNumber(q + 1) <= *this) ++q;
  return q;
}

Int ExactNumber::ceil() const { return -((-*this).floor()); }

double ExactNumber::to_double() const {
  // Scale the fractional part through an exact floor so that huge internal
  // numerators/denominators cannot overflow the conversion.
  const Int ip = floor();
  const ExactNumber frac = *this - ExactNumber(ip);
  const Int scaled = (frac * ExactNumber(Int(1) << 53)).floor();
  return ip.convert_to<double>() +
         scaled.convert_to<double>() / 9007199254740992.0;
}

std::string ExactNumber::str() const {
  if (d_ == 0) return a_.str() + "/" + c_.str();
  std::string s = "(" + a_.str();
  s += (b_ < 0) ? "-" : "+";
  s += Int(boost::multiprecision::abs(b_)).str();
  s += "*sqrt(" + d_.str() + "))/" + c_.str();
  return s;
}

ExactNumber ExactNumber::parse(const std::string& text) {
  static const std::regex quad_re(
      R"(^\s*\(\s*(-?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*(?:/\s*(-?\d+)\s*)?$)");
  static const std::regex rat_re(R"(^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$)");
  std::smatch m;
  if (std::regex_match(text, m, quad_re)) {
    Int a(m[1].str());
    Int b(m[3].str());
    if (m[2].str() == "-") b = -b;
    Int D(m[4].str());
    Int c = m[5].matched ? Int(m[5].str()) : Int(1);
    return quadratic(a, b, c, D);
  }
  if (std::regex_match(text, m, rat_re)) {
    Int num(m[1].str());
    Int den = m[2].matched ? Int(m[2].str()) : Int(1);
    return rational(num, den);
  }
  throw ParseError("bad number literal: '" + text + "'");
}

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) {
  return os << x.str();
}

}  // namespace ietk
