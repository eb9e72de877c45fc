#include "subconv/delta_symbol.hpp"

#include "subconv/modular.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace subconv::delta_symbol {

using boost::multiprecision::abs;
using boost::multiprecision::cos;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

// The per-q x-kernel is the finite Fourier series
//   g_q(x) = profile(0) + 2 sum_{m >= 1} profile(m) cos(2 pi m x/(qQ)),
//   profile(m) = c_q rho_q(m) - sum_{l <= lmax} w(m/(lq))/(lq).
// Integrated over one x-period [-qQ/2, qQ/2] against e(n x/(qQ)), the
// orthogonality of the characters returns profile(n) = (qQ) Delta_q(n),
// exact for |n| <= 2L where rho_q = 1.  A uniform x-grid with more nodes
// than the top frequency performs that quadrature exactly (trapezoid rule on
// a periodic trigonometric polynomial).  All tail management happens in
// m-space: blocks with l qQ >= 2L vanish at every integer that matters and
// are dropped, and the constant part rides a smooth plateau rho_q whose edge
// width sets how concentrated g_q is in x.

namespace {

Real s_profile(const DeltaExpansion& e, long q, const Real& u, long lmax) {
  Real total = 0;
  for (long l = 1; l <= lmax; ++l) {
    Real v = u / (l * q);
    if (v <= e.Q || v >= 2 * e.Q) continue;
    total += e.w_scale * e.w.value(v) / (l * q);
  }
  return total;
}

}  // namespace

DeltaExpansion build_expansion(long L, unsigned precision_bits) {
  if (L < 4) throw std::invalid_argument("build_expansion: L >= 4 required");
  DeltaExpansion e;
  PrecisionScope scope(precision_bits + 32);
  e.L = L;
  e.bits = precision_bits;
  e.Q = 2 * sqrt(Real(L));
  e.qmax = static_cast<int>(static_cast<double>(2 * e.Q));
  e.w = SmoothBump::window(e.Q, 2 * e.Q, 8);
  e.g_model = SmoothBump::plateau(Real(-19) / 5, Real(-2), Real(2), Real(19) / 5, 2);
  e.x_cut = Real(2.5 * std::log(static_cast<double>(L)));

  // comb normalization sum_m w(m) = 1
  Real comb = 0;
  for (long m = 1; m <= static_cast<long>(static_cast<double>(2 * e.Q)) + 1; ++m)
    comb += e.w.value(Real(m));
  if (comb == 0) throw std::logic_error("build_expansion: empty detector comb");
  e.w_scale = 1 / comb;

  e.cq.assign(e.qmax + 1, Real(0));
  e.profile.resize(e.qmax + 1);

  for (long q = 1; q <= e.qmax; ++q) {
    for (long l = 1; l * q <= 2 * static_cast<long>(static_cast<double>(e.Q)) + 1; ++l) {
      Real v = Real(l * q);
      if (v <= e.Q || v >= 2 * e.Q) continue;
      e.cq[q] += e.w_scale * e.w.value(v) / (l * q);
    }
    double qQ = static_cast<double>(q * e.Q);
    long lmax = static_cast<long>(2.0 * L / qQ) + 1;
    Real rho_core = Real(2 * L);
    Real rho_end = rho_core + 3 * q * e.Q;
    SmoothBump rho = SmoothBump::plateau(-rho_end, -rho_core, rho_core, rho_end, 4);
    long m_max = static_cast<long>(static_cast<double>(rho_end)) + 1;
    long block_end = static_cast<long>(2.0 * lmax * qQ) + 2;
    if (block_end > m_max) m_max = block_end;

    std::vector<Real>& prof = e.profile[q];
    prof.assign(m_max + 1, Real(0));
    for (long m = 0; m <= m_max; ++m) {
      Real u = Real(m);
      prof[m] = e.cq[q] * rho.value(u) - s_profile(e, q, u, lmax);
    }
  }
  return e;
}

namespace {

// x-quadrature of g_q(x) e(n x/(qQ)) over one period on the uniform midpoint
// grid, exact for trigonometric polynomials below the grid's Nyquist
// frequency.  With `taper` the smooth window (= 1 on [-x_eff, x_eff], gone by
// 2 x_eff) replaces the full period: the effective-support variant.
Real period_integral(const std::vector<Real>& prof, long n, const Real& qQ, bool taper,
                     const Real& x_eff) {
  const long m_max = static_cast<long>(prof.size()) - 1;
  long nodes = m_max + std::labs(n) + 9;
  Real pi = pi_value();
  SmoothBump win = SmoothBump::plateau(-2 * x_eff, -x_eff, x_eff, 2 * x_eff, 2);
  Real total = 0;
  for (long j = 0; j < nodes; ++j) {
    Real x = qQ * (Real(2 * j + 1) / (2 * nodes) - Real(1) / 2);  // midpoints
    Real wgt = 1;
    if (taper && abs(x) > x_eff) {
      if (abs(x) >= 2 * x_eff) continue;
      wgt = win.value(x);
    }
    // kernel value via the cosine recurrence
    Real phi = 2 * pi * x / qQ;
    Real c1 = cos(phi), c_prev = 1, c_cur = c1;
    Real kernel = prof[0];
    for (long m = 1; m <= m_max; ++m) {
      kernel += 2 * prof[m] * c_cur;
      Real c_next = 2 * c1 * c_cur - c_prev;
      c_prev = c_cur;
      c_cur = c_next;
    }
    total += wgt * kernel * cos(phi * n);
  }
  return total * qQ / nodes;
}

Real eval_impl(long n, const DeltaExpansion& e, bool taper, const Real& x_eff,
               unsigned precision_bits) {
  if (std::labs(n) > 2 * e.L)
    throw std::invalid_argument("delta_eval: |n| <= 2L contract violated");
  PrecisionScope scope(precision_bits + 16);
  Real total = 0;
  for (long q = 1; q <= e.qmax; ++q) {
    if (modular::ramanujan_sum(q, n) == 0) continue;  // a-sum vanishes exactly

    // literal a-sum over units mod q
    Cx asum{Real(0), Real(0)};
    if (q == 1) {
      asum = Cx{Real(1)};
    } else {
      for (long a = 1; a < q; ++a)
        if (std::gcd(a, q) == 1) asum += e_rational(n * a, q);
    }
    Real qQ = q * e.Q;
    Real xint = period_integral(e.profile[q], n, qQ, taper, x_eff);
    total += asum.re * xint / qQ;
  }
  return total;
}

}  // namespace

Real delta_eval(long n, const DeltaExpansion& e, unsigned precision_bits) {
  return eval_impl(n, e, false, e.x_cut, precision_bits);
}

Real delta_eval_truncated(long n, const DeltaExpansion& e, const Real& cut,
                          unsigned precision_bits) {
  return eval_impl(n, e, true, cut, precision_bits);
}

bool GPropertyReport::pass(double slack) const {
  Real s(slack);
  return max_h_b2 <= s && max_h_b4 <= s && max_decay_b2 <= s && max_decay_b4 <= s;
}

GPropertyReport g_property_report(const DeltaExpansion& e, int x_samples) {
  PrecisionScope scope(96);
  GPropertyReport rep;
  long qmax = static_cast<long>(static_cast<double>(e.Q));
  for (long q = 1; q <= qmax; ++q) {
    for (int i = 0; i <= x_samples; ++i) {
      Real x = Real(2) * i / x_samples;
      Real g = e.g_model.value(x);
      Real h = abs(g - 1);
      Real base = Real(q) / e.Q + x;
      Real f2 = h * q * e.Q / (base * base);
      Real f4 = h * q * e.Q / (base * base * base * base);
      if (f2 > rep.max_h_b2) rep.max_h_b2 = f2;
      if (f4 > rep.max_h_b4) rep.max_h_b4 = f4;
    }
  }
  for (int i = 0; i <= x_samples; ++i) {
    Real x2 = 1 + Real(19) * i / x_samples;  // [1, 20]
    Real d2 = abs(e.g_model.value(x2)) * x2 * x2;
    if (d2 > rep.max_decay_b2) rep.max_decay_b2 = d2;
    Real x4 = 4 + Real(16) * i / x_samples;  // [4, 20]
    Real d4 = abs(e.g_model.value(x4)) * pow(x4, 4);
    if (d4 > rep.max_decay_b4) rep.max_decay_b4 = d4;
  }
  return rep;
}

}  // namespace subconv::delta_symbol
