#include "subconv/oscillatory.hpp"

#include "subconv/bessel.hpp"
#include "subconv/gauss_legendre.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <stdexcept>

namespace subconv::osc {

using boost::multiprecision::abs;
using boost::multiprecision::asin;
using boost::multiprecision::cos;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

// ---------------------------------------------------------------- quad_osc

namespace {

double phase_cycles_estimate(const OscillatorySpec& spec) {
  const int samples = 129;
  double rad = 0;
  double a = static_cast<double>(spec.a), b = static_cast<double>(spec.b);
  double h = (b - a) / samples;
  for (int i = 0; i < samples; ++i) {
    Real x = spec.a + (spec.b - spec.a) * (2 * i + 1) / (2 * samples);
    rad += std::abs(static_cast<double>(spec.phase(x, 1))) * h;
  }
  return rad / (2 * 3.141592653589793) + static_cast<double>(spec.amplitude_cycles);
}

}  // namespace

Cx quad_osc(const OscillatorySpec& spec, unsigned precision_bits, QuadReport* report) {
  if (!(spec.b > spec.a)) throw std::invalid_argument("quad_osc: empty interval");
  PrecisionScope scope(precision_bits + 48);

  double cycles = phase_cycles_estimate(spec);
  long panels = 4;
  while (panels < cycles) panels *= 2;
  const GLRule& rule = gauss_legendre(24, precision_bits + 48);
  Real tol = pow(Real(2), -static_cast<long>(precision_bits));

  auto evaluate = [&](long n_panels) {
    Cx total{Real(0), Real(0)};
    for (long p = 0; p < n_panels; ++p) {
      Real lo = spec.a + (spec.b - spec.a) * p / n_panels;
      Real hi = spec.a + (spec.b - spec.a) * (p + 1) / n_panels;
      Real mid = (lo + hi) / 2, half = (hi - lo) / 2;
      for (size_t i = 0; i < rule.nodes.size(); ++i) {
        Real x = mid + half * rule.nodes[i];
        Cx g = spec.amplitude(x);
        if (g.re == 0 && g.im == 0) continue;
        total += (rule.weights[i] * half) * (g * expi(spec.phase(x, 0)));
      }
    }
    return total;
  };

  Cx prev = evaluate(panels);
  Cx cur = prev;
  Real gap = 0;
  for (int level = 0; level < 11; ++level) {
    panels *= 2;
    cur = evaluate(panels);
    gap = abs(cur - prev);
    if (gap <= tol) {
      if (report) {
        report->panels = panels;
        report->gap = gap;
      }
      return cur;
    }
    prev = cur;
    if (panels * 24L > 6000000L) break;
  }
  throw RefinementError(cur, gap);
}

Real total_variation(const std::function<Cx(const Real&)>& g, const Real& a, const Real& b) {
  PrecisionScope scope(current_precision_bits() < 128 ? 128 : current_precision_bits());
  long n = 4096;
  Real prev = -1;
  for (int round = 0; round < 6; ++round) {
    Real tv = 0;
    Cx last = g(a);
    for (long i = 1; i <= n; ++i) {
      Cx cur = g(a + (b - a) * i / n);
      tv += abs(cur - last);
      last = cur;
    }
    if (prev >= 0 && abs(tv - prev) <= Real("1e-6") * (1 + tv)) return tv;
    prev = tv;
    n *= 2;
  }
  return prev;
}

Real derivative_bound(const OscillatorySpec& spec, int order) {
  if (order < 1) throw std::invalid_argument("derivative_bound: order >= 1");
  PrecisionScope scope(current_precision_bits() < 128 ? 128 : current_precision_bits());
  const int grid = 4097;
  Real min_abs = -1;
  int sign_seen = 0;
  for (int i = 0; i <= grid; ++i) {
    Real x = spec.a + (spec.b - spec.a) * i / grid;
    Real d = spec.phase(x, order);
    int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (s == 0) throw std::invalid_argument("derivative_bound: derivative vanishes on grid");
    if (sign_seen == 0) sign_seen = s;
    if (s != sign_seen)
      throw std::invalid_argument("derivative_bound: derivative changes sign, bound inapplicable");
    Real a = abs(d);
    if (min_abs < 0 || a < min_abs) min_abs = a;
  }
  Real var = total_variation(spec.amplitude, spec.a, spec.b);
  return var / pow(min_abs, Real(1) / order);
}

IbpReport ibp_decay_check(const OscillatorySpec& spec, int j, unsigned precision_bits) {
  const int grid = 1024;
  Real slope = -1;
  for (int i = 0; i <= grid; ++i) {
    Real x = spec.a + (spec.b - spec.a) * i / grid;
    Real d = spec.phase(x, 1);
    if (d <= 0) throw std::invalid_argument("ibp_decay_check: needs f' > 0 on the interval");
    if (slope < 0 || d < slope) slope = d;
  }
  IbpReport rep;
  rep.slope = slope;
  rep.envelope = pow(slope, -j);
  rep.magnitude = abs(quad_osc(spec, precision_bits));
  return rep;
}

StatPhase stat_phase_leading(const OscillatorySpec& spec, unsigned precision_bits) {
  PrecisionScope scope(precision_bits + 32);
  const int grid = 64;
  // bracket stationary points by sign change of f'
  int found = 0;
  Real lo = spec.a, hi = spec.b;
  Real prev_x = spec.a + (spec.b - spec.a) / (2 * grid);
  Real prev_d = spec.phase(prev_x, 1);
  for (int i = 1; i < grid; ++i) {
    Real x = spec.a + (spec.b - spec.a) * (2 * i + 1) / (2 * grid);
    Real d = spec.phase(x, 1);
    if ((prev_d > 0) != (d > 0)) {
      ++found;
      lo = prev_x;
      hi = x;
    }
    prev_x = x;
    prev_d = d;
  }
  if (found == 0)
    throw NoStationaryPoint("stat_phase_leading: f' keeps its sign; use derivative_bound");
  if (found > 1)
    throw MultipleStationaryPoints("stat_phase_leading: multiple stationary points");

  // safeguarded Newton
  Real x0 = (lo + hi) / 2;
  Real flo = spec.phase(lo, 1);
  Real step_tol = (spec.b - spec.a) * pow(Real(2), -static_cast<long>(precision_bits));
  for (int it = 0; it < 120; ++it) {
    Real d1 = spec.phase(x0, 1);
    Real d2 = spec.phase(x0, 2);
    if ((flo > 0) != (d1 > 0)) hi = x0; else lo = x0;
    Real step = d1 / d2;
    Real next = x0 - step;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    Real moved = abs(next - x0);
    x0 = next;
    if (moved < step_tol) break;
  }

  Real fpp = spec.phase(x0, 2);
  if (!(fpp > 0))
    throw std::invalid_argument("stat_phase_leading: needs f''(x0) > 0");
  if (!spec.amplitude_deriv)
    throw std::invalid_argument("stat_phase_leading: amplitude_deriv required");

  Cx g0 = spec.amplitude_deriv(x0, 0);
  Cx gpp = spec.amplitude_deriv(x0, 2);
  Real pi = pi_value();
  Cx prefactor = expi(spec.phase(x0, 0)) * expi(pi / 4) * sqrt(2 * pi / fpp);
  StatPhase out;
  out.value = prefactor * g0;
  out.error_estimate = sqrt(2 * pi) * abs(gpp) / (2 * pow(fpp, Real(3) / 2));
  out.x0 = x0;
  return out;
}

bool validate_schedule(const OscillatorySpec& spec, int max_order, double slack) {
  const int grid = 257;
  for (int j = 1; j <= max_order; ++j) {
    Real phase_cap = Real(slack) * spec.Y / pow(spec.Q, j);
    for (int i = 1; i < grid; ++i) {
      Real x = spec.a + (spec.b - spec.a) * i / grid;
      if (abs(spec.phase(x, j)) > phase_cap) return false;
      if (j <= 2 && spec.amplitude_deriv) {
        Real amp_cap = Real(slack) * spec.X / pow(spec.U, j);
        if (abs(spec.amplitude_deriv(x, j)) > amp_cap) return false;
      }
    }
  }
  return true;
}

// -------------------------------------------------------------- solve_tau0

Tau0Result solve_tau0(const Real& A, const Real& B, int k, unsigned precision_bits) {
  if (!(A > 0) || !(B > 0)) throw std::invalid_argument("solve_tau0: A, B > 0 required");
  if (A > B) throw std::invalid_argument("solve_tau0: regime A <= B required");
  if (k < 2) throw std::invalid_argument("solve_tau0: k >= 2 required");
  PrecisionScope scope(precision_bits + 32);

  Real pi = pi_value();
  Real rho = (4 * pi / 3) * A / (pow(B, Real(2) / 3) * pow(Real(k - 1), Real(1) / 3));
  Real R = rho * rho * rho;  // tau^3 / sqrt(1 - tau^2) target

  Tau0Result out;
  out.seed = rho - rho * rho * rho / 6 - pow(rho, 5) / 72;
  Real tau = out.seed;
  if (!(tau > 0)) tau = Real(1) / 1000;
  if (!(tau < 1)) tau = 1 - Real(1) / 1000;

  // safeguarded Newton on g(tau) = tau^3 - R sqrt(1 - tau^2); g(0) < 0 < g(1)
  Real lo = 0, hi = 1;
  for (int it = 0; it < 200; ++it) {
    Real s = sqrt(1 - tau * tau);
    Real g = tau * tau * tau - R * s;
    if (g > 0) hi = tau; else lo = tau;
    Real dg = 3 * tau * tau + R * tau / s;
    Real next = tau - g / dg;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    Real moved = abs(next - tau);
    tau = next;
    if (moved < pow(Real(2), -static_cast<long>(precision_bits))) break;
  }
  if (!(tau > 0 && tau < 1)) throw std::runtime_error("solve_tau0: no root located in (0,1)");
  out.tau0 = tau;
  // residual of f'(tau) with f in e(.)-units
  Real fp = Real(k - 1) / (2 * pi * sqrt(1 - tau * tau)) -
            32 * pi * pi * A * A * A / (27 * B * B * tau * tau * tau);
  out.residual = abs(fp);
  return out;
}

// ------------------------------------------------------------ scale params

Real ScaleParams::k_eps() const {
  Real l = log(Real(k));
  return l * l;
}

Real ScaleParams::T() const { return pow(Real(k), 1 - eta); }

Real ScaleParams::Q() const { return 2 * sqrt(k_eps() * N / T()); }

void ScaleParams::validate() const {
  if (k < 2) throw std::invalid_argument("ScaleParams: k >= 2");
  if (!(eta > 0 && eta < 1)) throw std::invalid_argument("ScaleParams: eta in (0,1)");
  Real t = T();
  // operative window of the method: sqrt(k) < T < k
  if (!(t > sqrt(Real(k)) && t < Real(k)))
    throw std::invalid_argument("ScaleParams: T must satisfy sqrt(k) < T < k");
  if (!(N * r * r <= pow(Real(k), 3) * k_eps()))
    throw std::invalid_argument("ScaleParams: N r^2 <= k^{3+eps} violated");
  if (C > Q()) throw std::invalid_argument("ScaleParams: C <= Q violated");
  if (!(n1 >= 1 && q1 >= 1 && r >= 1)) throw std::invalid_argument("ScaleParams: n1, q1, r >= 1");
}

CutoffSet cutoffs(const ScaleParams& scale, const Real& q, const Real& x) {
  CutoffSet cs;
  Real ke = scale.k_eps();
  Real t = scale.T();
  Real km1 = Real(scale.k - 1);
  Real first = pow(q * t, 3) * scale.r / scale.N;
  Real second = pow(t, Real(3) / 2) * sqrt(scale.N) * scale.r * pow(abs(x), 3);
  cs.N0 = ke * (first > second ? first : second);
  cs.M = q * q * km1 * km1 / (scale.N * ke);
  Real m_first = km1 * km1 * q * q / scale.N;
  Real m_second = t * x * x;
  cs.M0 = ke * (m_first > m_second ? m_first : m_second);
  cs.N2 = ke * scale.C * pow(scale.N, Real(1) / 3) * pow(scale.r, Real(2) / 3) * scale.n1 /
          (scale.q1 * pow(cs.N0, Real(2) / 3));
  return cs;
}

// ---------------------------------------------------------- paper integrals

Cx z_integral(const ScaleParams& scale, const Real& q, const Real& n1, const Real& n2,
              const Real& x, const Real& t, int sign, unsigned precision_bits) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("z_integral: sign must be +-1");
  if (n2 < 0) throw std::invalid_argument("z_integral: n2 >= 0 expected");
  PrecisionScope scope(precision_bits + 48);

  SmoothBump V = SmoothBump::window(Real(1), Real(2));
  Real pi = pi_value();
  Real lin = 2 * pi * scale.N * x / (q * scale.Q());
  Real cube = sign * 2 * pi * 3 * pow(scale.N * n1 * n1 * n2, Real(1) / 3) /
              (q * pow(scale.r, Real(1) / 3));

  OscillatorySpec spec;
  spec.a = 1;
  spec.b = 2;
  spec.amplitude = [V](const Real& z) { return Cx{V.value(z)}; };
  spec.phase = [t, lin, cube](const Real& z, int order) -> Real {
    switch (order) {
      case 0: return t * log(z) + lin * z + cube * pow(z, Real(1) / 3);
      case 1: return t / z + lin + cube * pow(z, Real(-2) / 3) / 3;
      case 2: return -t / (z * z) - cube * 2 * pow(z, Real(-5) / 3) / 9;
      case 3: return 2 * t / (z * z * z) + cube * 10 * pow(z, Real(-8) / 3) / 27;
      case 4: return -6 * t / (z * z * z * z) - cube * 80 * pow(z, Real(-11) / 3) / 81;
      default: throw std::invalid_argument("z_integral phase: order > 4");
    }
  };
  return quad_osc(spec, precision_bits);
}

Cx m_side_integral(const ScaleParams& scale, const Real& q, const Real& m, const Real& x,
                   const Real& t, unsigned precision_bits) {
  PrecisionScope scope(precision_bits + 48);
  Real pi = pi_value();
  Real Bm = 4 * pi * sqrt(m * scale.N) / q;
  Real lin = -2 * pi * scale.N * x / (q * scale.Q());

  SmoothBump U = SmoothBump::plateau(Real(1) / 2, Real(1), Real(2), Real(5) / 2);
  Real zlo = Bm * sqrt(Real(1) / 2) * Real(999) / 1000;
  Real zhi = Bm * sqrt(Real(5) / 2) * Real(1001) / 1000;
  PiecewiseCheb jc = bessel::j_cache(scale.k, zlo, zhi, precision_bits + 16);

  OscillatorySpec spec;
  spec.a = Real(1) / 2;
  spec.b = Real(5) / 2;
  spec.amplitude = [U, jc, Bm](const Real& y) -> Cx {
    Real u = U.value(y);
    if (u == 0) return Cx{Real(0)};
    return u * jc.eval(Bm * sqrt(y));
  };
  spec.phase = [t, lin](const Real& y, int order) -> Real {
    switch (order) {
      case 0: return -t * log(y) + lin * y;
      case 1: return -t / y + lin;
      case 2: return t / (y * y);
      case 3: return -2 * t / (y * y * y);
      case 4: return 6 * t / (y * y * y * y);
      default: throw std::invalid_argument("m_side_integral phase: order > 4");
    }
  };
  spec.amplitude_cycles = Bm * (sqrt(Real(5) / 2) - sqrt(Real(1) / 2)) / (2 * pi) + 1;
  return quad_osc(spec, precision_bits);
}

// ------------------------------------------------------------ y integrals

PhaseGeometry PhaseGeometry::from_scales(const Real& N, const Real& N0, const Real& w,
                                         const Real& q, const Real& r, const Real& m,
                                         const Real& qp, const Real& mp, int k) {
  PhaseGeometry g;
  Real pi = pi_value();
  g.A = 3 * pow(N * N0 * w, Real(1) / 3) / (q * pow(r, Real(1) / 3));
  g.B = 4 * pi * sqrt(m * N) / q;
  g.Ap = 3 * pow(N * N0 * w, Real(1) / 3) / (qp * pow(r, Real(1) / 3));
  g.Bp = 4 * pi * sqrt(mp * N) / qp;
  g.k = k;
  return g;
}

Real PhaseGeometry::f(const Real& tau) const {
  Real pi = pi_value();
  return Real(k - 1) * asin(tau) / (2 * pi) + 16 * pi * pi * A * A * A / (27 * B * B * tau * tau);
}

Real PhaseGeometry::f_deriv(const Real& tau, int order) const {
  Real pi = pi_value();
  Real c = 16 * pi * pi * A * A * A / (27 * B * B);
  if (order == 1)
    return Real(k - 1) / (2 * pi * sqrt(1 - tau * tau)) - 2 * c / (tau * tau * tau);
  if (order == 2)
    return Real(k - 1) * tau / (2 * pi * pow(1 - tau * tau, Real(3) / 2)) + 6 * c / pow(tau, 4);
  throw std::invalid_argument("PhaseGeometry::f_deriv: order 1 or 2");
}

void PhaseGeometry::validate() const {
  if (!(A > 0 && B > 0 && Ap > 0 && Bp > 0))
    throw std::invalid_argument("PhaseGeometry: positive A, B required");
  if (k < 2) throw std::invalid_argument("PhaseGeometry: k >= 2");
}

namespace {

struct YWindow {
  SmoothBump U, V;
  Real lo, hi;
};

YWindow y_window(const Real& u) {
  YWindow w{SmoothBump::plateau(Real(1) / 2, Real(1), Real(2), Real(5) / 2),
            SmoothBump::window(Real(1), Real(2)), Real(0), Real(0)};
  Real lo = 1 - u, hi = 2 - u;
  if (lo < Real(1) / 2) lo = Real(1) / 2;
  if (hi > Real(5) / 2) hi = Real(5) / 2;
  w.lo = lo;
  w.hi = hi;
  return w;
}

Cx y_amplitude(const YWindow& w, const Real& u, const Real& t, const Real& y) {
  Real a = w.U.value(y) * w.V.value(y + u);
  if (a == 0) return Cx{Real(0)};
  Cx tw = (t == 0 || u == 0) ? Cx{Real(1)} : expi(t * log(1 + u / y));
  return a * tw;
}

}  // namespace

Cx y_integral(const YIntegralSpec& spec, unsigned precision_bits,
              const PiecewiseCheb* bessel_cache) {
  spec.geom.validate();
  const Real A = spec.primed ? spec.geom.Ap : spec.geom.A;
  const Real B = spec.primed ? spec.geom.Bp : spec.geom.B;
  const int k = spec.geom.k;
  PrecisionScope scope(precision_bits + 48);
  Real pi = pi_value();

  YWindow win = y_window(spec.u);
  if (!(win.hi > win.lo)) return Cx{Real(0)};

  PiecewiseCheb local;
  const PiecewiseCheb* jc = bessel_cache;
  if (!jc) {
    Real zlo = B * sqrt(win.lo) * Real(999) / 1000;
    Real zhi = B * sqrt(win.hi) * Real(1001) / 1000;
    local = bessel::j_cache(k, zlo, zhi, precision_bits + 16);
    jc = &local;
  }

  OscillatorySpec q;
  q.a = win.lo;
  q.b = win.hi;
  Real u = spec.u, t = spec.t;
  Real coeff = spec.sign * 2 * pi * A;
  q.amplitude = [win, u, t, jc, B](const Real& y) -> Cx {
    Cx a = y_amplitude(win, u, t, y);
    if (a.re == 0 && a.im == 0) return a;
    return a * jc->eval(B * sqrt(y));
  };
  q.phase = [coeff, u](const Real& y, int order) -> Real {
    switch (order) {
      case 0: return coeff * pow(y + u, Real(1) / 3);
      case 1: return coeff * pow(y + u, Real(-2) / 3) / 3;
      case 2: return -coeff * 2 * pow(y + u, Real(-5) / 3) / 9;
      case 3: return coeff * 10 * pow(y + u, Real(-8) / 3) / 27;
      case 4: return -coeff * 80 * pow(y + u, Real(-11) / 3) / 81;
      default: throw std::invalid_argument("y_integral phase: order > 4");
    }
  };
  q.amplitude_cycles = B * (sqrt(win.hi) - sqrt(win.lo)) / (2 * pi) + 1;
  return quad_osc(q, precision_bits);
}

Cx y_integral_expansion(const YIntegralSpec& spec, unsigned precision_bits) {
  spec.geom.validate();
  const Real A = spec.primed ? spec.geom.Ap : spec.geom.A;
  const Real B = spec.primed ? spec.geom.Bp : spec.geom.B;
  const int k = spec.geom.k;
  PrecisionScope scope(precision_bits + 32);
  Real pi = pi_value();

  // regime: B of size k (the C >> k^{1+eps} block), up to the k^eps slack
  Real ke = log(Real(k)) * log(Real(k));
  if (!(B >= Real(k - 1) / ke && B <= Real(k - 1) * ke))
    throw std::invalid_argument("y_integral_expansion: regime B ~ k violated");

  if (spec.sign == -1) {
    YIntegralSpec flipped = spec;
    flipped.sign = +1;
    flipped.t = -spec.t;
    return conj(y_integral_expansion(flipped, precision_bits));
  }

  PhaseGeometry g = spec.geom;
  if (spec.primed) {
    g.A = A;
    g.B = B;
  }
  Tau0Result tau = solve_tau0(A, B, k, precision_bits);
  Real tau0 = tau.tau0;

  // stationary point of the inner y-phase, in the y^3 substituted variable
  Real y0 = pow(4 * pi * A / (3 * B * tau0), 2);
  YWindow win = y_window(spec.u);
  Cx amp = y_amplitude(win, spec.u, spec.t, y0 * y0 * y0);
  if (amp.re == 0 && amp.im == 0) return Cx{Real(0)};

  // psi = 2 pi f is the radian tau-phase
  Real psi_pp = 2 * pi * g.f_deriv(tau0, 2);
  Real c2 = 512 * sqrt(Real(2)) * pow(pi, 4) / 81;
  Real magnitude = c2 * sqrt(2 * pi / psi_pp) * pow(A, Real(9) / 2) /
                   (pow(B, 5) * pow(tau0, 5) * sqrt(1 - tau0 * tau0));
  return magnitude * amp * expi(2 * pi * g.f(tau0));
}

Cx w_integral(const WIntegralSpec& spec, unsigned precision_bits) {
  spec.geom.validate();
  PrecisionScope scope(precision_bits + 48);
  Real pi = pi_value();

  // shared Bessel caches for both y-integrals
  YWindow win = y_window(spec.u);
  YWindow winp = y_window(spec.up);
  Real zlo = spec.geom.B * sqrt(win.lo) * Real(999) / 1000;
  Real zhi = spec.geom.B * sqrt(win.hi) * Real(1001) / 1000;
  PiecewiseCheb jc = bessel::j_cache(spec.geom.k, zlo, zhi, precision_bits + 16);
  PiecewiseCheb jcp;
  bool same_b = spec.geom.Bp == spec.geom.B && spec.up == spec.u;
  if (!same_b) {
    Real zlop = spec.geom.Bp * sqrt(winp.lo) * Real(999) / 1000;
    Real zhip = spec.geom.Bp * sqrt(winp.hi) * Real(1001) / 1000;
    jcp = bessel::j_cache(spec.geom.k, zlop, zhip, precision_bits + 16);
  }
  const PiecewiseCheb* jcp_ptr = same_b ? &jc : &jcp;

  SmoothBump W = SmoothBump::window(Real(1), Real(2));

  auto inner_pair = [&](const Real& w) -> Cx {
    Real wc = pow(w, Real(1) / 3);
    YIntegralSpec ys;
    ys.geom = spec.geom;
    ys.geom.A = spec.geom.A * wc;
    ys.geom.Ap = spec.geom.Ap * wc;
    ys.t = spec.t;
    ys.u = spec.u;
    ys.sign = spec.sign;
    Cx I = y_integral(ys, precision_bits, &jc);
    YIntegralSpec ysp = ys;
    ysp.t = spec.tp;
    ysp.u = spec.up;
    ysp.primed = true;
    Cx Ip = y_integral(ysp, precision_bits, jcp_ptr);
    return I * conj(Ip);
  };

  // cache the slow amplitude on a Chebyshev grid sized to its own oscillation
  double f_cycles;
  try {
    Real fhi = spec.geom.f(solve_tau0(spec.geom.A * pow(Real(2), Real(1) / 3), spec.geom.B,
                                      spec.geom.k, 64).tau0);
    Real flo = spec.geom.f(solve_tau0(spec.geom.A, spec.geom.B, spec.geom.k, 64).tau0);
    f_cycles = std::abs(static_cast<double>(fhi - flo)) * 2 + 4;
  } catch (const std::exception&) {
    f_cycles = static_cast<double>(spec.geom.A + spec.geom.Ap) / 3 + 4;
  }
  int nseg = static_cast<int>(f_cycles / spec.amp_cycles_per_seg) + 1;
  Real seg_width = Real(1) / nseg;

  PiecewiseCheb amp = PiecewiseCheb::build(
      [&](const Real& w) -> Cx { return W.value(w) * inner_pair(w); }, Real(1), Real(2),
      seg_width, spec.amp_order);

  OscillatorySpec q;
  q.a = 1;
  q.b = 2;
  q.amplitude = [&amp](const Real& w) { return amp.eval(w); };
  Real rate = -2 * pi * spec.freq;
  q.phase = [rate](const Real& w, int order) -> Real {
    if (order == 0) return rate * w;
    if (order == 1) return rate;
    return Real(0);
  };
  q.amplitude_cycles = Real(f_cycles);
  return quad_osc(q, precision_bits);
}

SeparationReport separation_cutoff_check(const ScaleParams& scale, const Real& q,
                                         unsigned precision_bits) {
  scale.validate();
  PrecisionScope scope(precision_bits + 48);
  Real pi = pi_value();
  SeparationReport rep;

  // x-integral: int W(x) e(N x (z-y)/(q Q)) dx with the unit-core window of
  // the delta expansion
  SmoothBump W = SmoothBump::plateau(Real(-8), Real(-4), Real(4), Real(8));
  auto x_integral = [&](const Real& dz) {
    Real rate = 2 * pi * scale.N * dz / (q * scale.Q());
    OscillatorySpec s;
    s.a = -8;
    s.b = 8;
    s.amplitude = [W](const Real& x) { return Cx{W.value(x)}; };
    s.phase = [rate](const Real& x, int order) -> Real {
      if (order == 0) return rate * x;
      if (order == 1) return rate;
      return Real(0);
    };
    return abs(quad_osc(s, precision_bits));
  };
  rep.x_threshold = scale.k_eps() * q / (scale.Q() * scale.T());
  rep.x_at_equal = x_integral(Real(0));
  rep.x_ratio = x_integral(10 * rep.x_threshold) / x_integral(rep.x_threshold / 10);

  // t-integral: T int V(s) e^{i s T log(z/y)} ds, z = y + dz at y = 3/2.
  // The t-block window spans [T, 4T]: one decade then sweeps enough radians
  // for the full 1e-4 drop.
  SmoothBump V = SmoothBump::window(Real(1), Real(4), 2);
  auto t_integral = [&](const Real& dz) {
    Real rate = scale.T() * log((Real(3) / 2 + dz) / (Real(3) / 2));
    OscillatorySpec s;
    s.a = 1;
    s.b = 4;
    s.amplitude = [V](const Real& x) { return Cx{V.value(x)}; };
    s.phase = [rate](const Real& x, int order) -> Real {
      if (order == 0) return rate * x;
      if (order == 1) return rate;
      return Real(0);
    };
    return abs(quad_osc(s, precision_bits));
  };
  rep.t_threshold = scale.k_eps() / scale.T();
  rep.t_ratio = t_integral(10 * rep.t_threshold) / t_integral(rep.t_threshold / 10);
  return rep;
}

}  // namespace subconv::osc
