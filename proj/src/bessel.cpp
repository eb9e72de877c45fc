#include "subconv/bessel.hpp"

#include "subconv/gauss_legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace subconv::bessel {

namespace {

// log2 of the largest ascending-series term, in doubles; sizes the working
// precision needed to absorb the cancellation.
double series_peak_log2(int nu, double x) {
  if (x <= 0) return 0;
  double m = (-nu + std::sqrt(double(nu) * nu + x * x)) / 2;
  if (m < 1) m = 1;
  double ln_term = (2 * m + nu) * std::log(x / 2) - std::lgamma(m + 1) - std::lgamma(m + nu + 1);
  return std::max(0.0, ln_term / std::log(2.0));
}

}  // namespace

Real besselJ_series(const BesselQuery& q) {
  if (q.k < 2) throw std::invalid_argument("besselJ: k >= 2 required");
  if (q.x < 0) throw std::invalid_argument("besselJ: x >= 0 required");
  if (q.x > 10000) throw std::invalid_argument("besselJ_series: series regime guard x <= 1e4");
  const int nu = q.k - 1;
  double xd = static_cast<double>(q.x);
  unsigned work = q.precision_bits + 64 + static_cast<unsigned>(series_peak_log2(nu, xd)) + 2 * nu / 3;
  PrecisionScope scope(work);
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;

  Real x = q.x;
  if (x == 0) return Real(0);
  Real half = x / 2;
  Real term = 1;
  for (int i = 1; i <= nu; ++i) term *= half / i;  // (x/2)^nu / nu!
  Real q2 = -half * half;
  Real sum = term;
  Real cutoff = pow(Real(2), -static_cast<long>(work - 32));
  double m_peak = (-nu + std::sqrt(double(nu) * nu + xd * xd)) / 2;
  for (int m = 1; m < 1000000; ++m) {
    term *= q2 / (Real(m) * Real(m + nu));
    sum += term;
    if (m > m_peak && abs(term) < cutoff) break;
  }
  return sum;
}

Real besselJ_series(int k, const Real& x, unsigned precision_bits) {
  return besselJ_series({k, x, precision_bits});
}

Real besselJ_integral(const BesselQuery& q) {
  if (q.k < 2) throw std::invalid_argument("besselJ: k >= 2 required");
  if (q.x < 0) throw std::invalid_argument("besselJ: x >= 0 required");
  PrecisionScope scope(q.precision_bits + 32);
  using boost::multiprecision::abs;
  using boost::multiprecision::cos;
  using boost::multiprecision::pow;
  using boost::multiprecision::sin;

  const Real pi = pi_value();
  const int nu = q.k - 1;
  // x sin tau - nu tau sweeps about (x + nu) radians over [0, pi]
  double cycles = (static_cast<double>(q.x) + nu) / (2 * 3.141592653589793);
  int panels = 8;
  while (panels < cycles * 1.5) panels *= 2;
  const GLRule& rule = gauss_legendre(24, q.precision_bits + 32);
  Real tol = pow(Real(2), -static_cast<long>(q.precision_bits));

  auto evaluate = [&](int n_panels) {
    Real total = 0;
    for (int p = 0; p < n_panels; ++p) {
      Real lo = pi * p / n_panels, hi = pi * (p + 1) / n_panels;
      Real mid = (lo + hi) / 2, half = (hi - lo) / 2;
      for (size_t i = 0; i < rule.nodes.size(); ++i) {
        Real tau = mid + half * rule.nodes[i];
        total += rule.weights[i] * half * cos(nu * tau - q.x * sin(tau));
      }
    }
    return total / pi;  // even integrand: (1/2pi) * 2 * int_0^pi
  };

  Real prev = evaluate(panels);
  for (int level = 0; level < 12; ++level) {
    panels *= 2;
    Real cur = evaluate(panels);
    if (abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw std::runtime_error("besselJ_integral: refinement budget exhausted");
}

Real besselJ_integral(int k, const Real& x, unsigned precision_bits) {
  return besselJ_integral({k, x, precision_bits});
}

LangerLeading langer_leading(const BesselQuery& q, const Real& delta) {
  if (q.k < 2) throw std::invalid_argument("langer_leading: k >= 2 required");
  const int nu = q.k - 1;
  if (!(q.x >= nu * (1 + delta)))
    throw std::invalid_argument("langer_leading: turning-point proximity, need x >= (k-1)(1+delta)");
  PrecisionScope scope(q.precision_bits + 32);
  using boost::multiprecision::atan;
  using boost::multiprecision::cos;
  using boost::multiprecision::sqrt;

  Real w = sqrt(q.x * q.x / (Real(nu) * nu) - 1);
  Real phase = nu * (w - atan(w));
  LangerLeading out;
  out.value = sqrt(2 / (pi_value() * nu * w)) * cos(phase - pi_value() / 4);
  out.expansion_parameter = 1 / phase;
  return out;
}

SmallArgReport small_arg_envelope(const BesselQuery& q, const Real& eps) {
  if (q.k < 2) throw std::invalid_argument("small_arg_envelope: k >= 2 required");
  if (eps <= 0) throw std::invalid_argument("small_arg_envelope: eps > 0 required");
  const int nu = q.k - 1;
  using boost::multiprecision::abs;
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  if (q.x > 0 && !(log(q.x) <= (1 - eps) * log(Real(nu))))
    throw std::invalid_argument("small_arg_envelope: regime guard x <= (k-1)^{1-eps}");

  PrecisionScope scope(q.precision_bits + 32);
  SmallArgReport rep;
  rep.value = besselJ_series(q);
  Real e = exp(Real(1));
  rep.envelope = q.x == 0 ? Real(0) : pow(q.x * e / (2 * nu), nu);
  rep.pass = abs(rep.value) <= rep.envelope || rep.value == 0;
  rep.paper_envelope = exp(Real(-nu));
  rep.paper_envelope_holds = abs(rep.value) <= rep.paper_envelope;
  return rep;
}

PiecewiseCheb j_cache(int k, const Real& zlo, const Real& zhi, unsigned precision_bits,
                      double seg_width, int order) {
  auto f = [k, precision_bits](const Real& z) {
    return Cx{besselJ_integral(k, z, precision_bits)};
  };
  return PiecewiseCheb::build(f, zlo, zhi, Real(seg_width), order);
}

}  // namespace subconv::bessel
