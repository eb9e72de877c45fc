#include "subconv/real.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <sstream>

namespace subconv {

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(bits * 0.30103) + 4;
}

unsigned current_precision_bits() {
  return static_cast<unsigned>(Real::default_precision() / 0.30103);
}

PrecisionScope::PrecisionScope(unsigned bits) : prev_digits_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(prev_digits_); }

Real pi_value() { return boost::math::constants::pi<Real>(); }

Cx operator/(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real abs(const Cx& a) {
  using boost::multiprecision::sqrt;
  return sqrt(a.re * a.re + a.im * a.im);
}

Cx expi(const Real& theta) {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  return {cos(theta), sin(theta)};
}

Cx e_of(const Real& frac) { return expi(2 * pi_value() * frac); }

Cx exp(const Cx& z) {
  using boost::multiprecision::exp;
  Real m = exp(z.re);
  Cx u = expi(z.im);
  return {m * u.re, m * u.im};
}

Cx log(const Cx& z) {
  using boost::multiprecision::atan2;
  using boost::multiprecision::log;
  return {log(abs(z)), atan2(z.im, z.re)};
}

Cx sqrt(const Cx& z) {
  Cx l = log(z);
  return exp(Cx{l.re / 2, l.im / 2});
}

Cx pow(const Cx& z, const Cx& w) { return exp(w * log(z)); }

Cx e_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("e_rational: zero denominator");
  long long r = num % den;
  if (r < 0) r += std::llabs(den);
  return e_of(Real(r) / Real(std::llabs(den)));
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream ss;
  ss.precision(digits);
  ss << x;
  return ss.str();
}

}  // namespace subconv
