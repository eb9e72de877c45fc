#pragma once

// Arbitrary-precision scalar layer.  Everything numeric in this project runs
// on MPFR floats (via Boost.Multiprecision) so that working precision can be
// raised wherever cancellation demands it (Bessel series, decade ratio tests).

#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <stdexcept>
#include <string>

namespace subconv {

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

// Precision is managed in bits; boost exposes decimal digits.
unsigned bits_to_digits10(unsigned bits);
unsigned current_precision_bits();

// RAII scope: new Reals constructed inside pick up `bits` of precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned prev_digits_;
};

Real pi_value();  // at current working precision

// Minimal complex type over Real.  std::complex<Real> is not guaranteed to
// work with user-defined scalars, and we only need a handful of operations.
struct Cx {
  Real re{0}, im{0};

  Cx() = default;
  Cx(Real r) : re(std::move(r)) {}
  Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Cx(int r) : re(r) {}
  Cx(double r) : re(r) {}

  Cx operator-() const { return {-re, -im}; }
  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
};

inline Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cx operator*(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cx operator*(const Real& s, const Cx& a) { return {s * a.re, s * a.im}; }
inline Cx operator*(const Cx& a, const Real& s) { return {a.re * s, a.im * s}; }
Cx operator/(const Cx& a, const Cx& b);
inline Cx operator/(const Cx& a, const Real& s) { return {a.re / s, a.im / s}; }

inline Cx conj(const Cx& a) { return {a.re, -a.im}; }
Real abs(const Cx& a);
inline Real norm_sq(const Cx& a) { return a.re * a.re + a.im * a.im; }

Cx expi(const Real& theta);          // e^{i theta}, theta in radians
Cx e_of(const Real& frac);           // e(frac) = e^{2 pi i frac}
Cx exp(const Cx& z);
Cx log(const Cx& z);                 // principal branch
Cx sqrt(const Cx& z);                // principal branch
Cx pow(const Cx& z, const Cx& w);    // exp(w log z), principal

// e(num/den) with exact residue reduction first, so the argument handed to
// sin/cos is always in [0, 2 pi).
Cx e_rational(long long num, long long den);

std::string to_string(const Real& x, int digits = 20);

}  // namespace subconv
