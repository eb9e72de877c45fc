#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subconv/oscillatory.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <random>

using namespace subconv;
using namespace subconv::osc;
using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

namespace {

PrecisionScope ambient(200);

double d(const Real& x) { return static_cast<double>(x); }

OscillatorySpec bump_spec(const SmoothBump& g, std::function<Real(const Real&, int)> phase) {
  OscillatorySpec s;
  s.a = g.lo();
  s.b = g.hi();
  s.amplitude = [g](const Real& x) { return Cx{g.value(x)}; };
  s.amplitude_deriv = [g](const Real& x, int order) { return Cx{g.derivative(x, order)}; };
  s.phase = std::move(phase);
  return s;
}

std::function<Real(const Real&, int)> linear_phase(const Real& rate) {
  return [rate](const Real&, int order) -> Real {
    if (order == 0) throw std::logic_error("value form unused");
    return order == 1 ? rate : Real(0);
  };
}

std::function<Real(const Real&, int)> linear_phase_full(const Real& rate) {
  return [rate](const Real& x, int order) -> Real {
    if (order == 0) return rate * x;
    return order == 1 ? rate : Real(0);
  };
}

std::function<Real(const Real&, int)> quadratic_phase(const Real& scale, const Real& center) {
  return [scale, center](const Real& x, int order) -> Real {
    switch (order) {
      case 0: return scale * (x - center) * (x - center);
      case 1: return 2 * scale * (x - center);
      case 2: return 2 * scale;
      default: return Real(0);
    }
  };
}

}  // namespace

TEST_CASE("quad_osc: zero phase returns the bump mass") {
  SmoothBump g = SmoothBump::window(Real(0), Real(3));
  auto spec = bump_spec(g, quadratic_phase(Real(0), Real(0)));
  Cx v = quad_osc(spec, 80);
  Real mass = g.mass(96);
  CHECK(d(abs(v - Cx{mass})) < 1e-22);
}

TEST_CASE("quad_osc: gaussian times e^{ix} has a closed form") {
  OscillatorySpec s;
  s.a = -20;
  s.b = 20;
  s.amplitude = [](const Real& x) { return Cx{exp(-x * x)}; };
  s.phase = linear_phase_full(Real(1));
  Cx v = quad_osc(s, 96);
  Real pi = pi_value();
  Real expected = sqrt(pi) * exp(Real(-1) / 4);
  CHECK(d(abs(v.re - expected)) < 1e-25);
  CHECK(d(abs(v.im)) < 1e-25);
}

TEST_CASE("quad_osc: zero amplitude") {
  OscillatorySpec s;
  s.a = 0;
  s.b = 1;
  s.amplitude = [](const Real&) { return Cx{Real(0)}; };
  s.phase = linear_phase_full(Real(1000));
  CHECK(d(abs(quad_osc(s, 64))) == 0.0);
}

TEST_CASE("derivative bound formulas") {
  SmoothBump g = SmoothBump::window(Real(0), Real(1));
  Real B = 50;
  auto s = bump_spec(g, linear_phase_full(B));
  Real bound = derivative_bound(s, 1);
  CHECK(d(abs(bound - g.variation() / B)) < 1e-25);

  // f = x^2 on [1,2]: min f'' = 2, bound = Var/sqrt(2)
  SmoothBump g2 = SmoothBump::window(Real(1), Real(2));
  auto s2 = bump_spec(g2, quadratic_phase(Real(1), Real(0)));
  Real bound2 = derivative_bound(s2, 2);
  CHECK(d(abs(bound2 - g2.variation() / sqrt(Real(2)))) < 1e-25);

  // sign change rejected
  auto s3 = bump_spec(g, quadratic_phase(Real(1), Real(1) / 2));
  CHECK_THROWS_AS(derivative_bound(s3, 1), std::invalid_argument);
}

TEST_CASE("oracle never exceeds the first-derivative bound on random non-stationary specs") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> rate(5.0, 400.0), width(0.5, 2.0), start(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    double a = start(rng), w = width(rng), B = rate(rng);
    SmoothBump g = SmoothBump::window(Real(a), Real(a + w));
    auto s = bump_spec(g, linear_phase_full(Real(B)));
    Real bound = derivative_bound(s, 1);
    Cx v = quad_osc(s, 64);
    CHECK(d(abs(v)) <= d(bound) * (1 + 1e-12));
  }
}

TEST_CASE("ibp decay") {
  SmoothBump g = SmoothBump::window(Real(0), Real(1));
  auto s = bump_spec(g, linear_phase_full(Real(1000)));
  auto rep = ibp_decay_check(s, 2, 96);
  CHECK(d(rep.magnitude) <= 10 * d(rep.envelope));
  CHECK(d(rep.envelope) == doctest::Approx(1e-6));

  auto s2 = bump_spec(g, linear_phase_full(Real(2000)));
  auto rep2 = ibp_decay_check(s2, 2, 96);
  CHECK(d(rep2.magnitude) <= 0.5 * d(rep.magnitude));

  OscillatorySpec zero = s;
  zero.amplitude = [](const Real&) { return Cx{Real(0)}; };
  auto rep3 = ibp_decay_check(zero, 2, 64);
  CHECK(d(rep3.magnitude) == 0.0);
}

TEST_CASE("stationary phase leading term") {
  SmoothBump g = SmoothBump::window(Real(-1), Real(1));
  auto s = bump_spec(g, quadratic_phase(Real(1), Real(0)));
  auto sp = stat_phase_leading(s, 96);
  Real pi = pi_value();
  Cx fresnel = sqrt(pi) * expi(pi / 4) * g.value(Real(0));
  CHECK(d(abs(sp.value - fresnel)) < 1e-20);

  // translation invariance of the magnitude
  SmoothBump g_shift = SmoothBump::window(Real(2), Real(4));
  auto s_shift = bump_spec(g_shift, quadratic_phase(Real(1), Real(3)));
  auto sp_shift = stat_phase_leading(s_shift, 96);
  CHECK(d(abs(abs(sp_shift.value) - abs(sp.value)))
        < 1e-15);

  // strong phase: oracle within 1e-2 relative
  SmoothBump g15 = SmoothBump::window(Real(1), Real(2));
  auto s_big = bump_spec(g15, quadratic_phase(Real(10000), Real(3) / 2));
  auto sp_big = stat_phase_leading(s_big, 96);
  Cx oracle = quad_osc(s_big, 96);
  CHECK(d(abs(sp_big.value - oracle) / abs(oracle)) < 1e-2);
  // and within the predicted n=1 order (slack 10)
  CHECK(d(abs(sp_big.value - oracle)) <= 10 * d(sp_big.error_estimate));
}

TEST_CASE("stationary phase error channels") {
  SmoothBump g = SmoothBump::window(Real(0), Real(1));
  auto s_none = bump_spec(g, linear_phase_full(Real(10)));
  CHECK_THROWS_AS(stat_phase_leading(s_none, 64), NoStationaryPoint);

  // two stationary points: f' = (x-1/4)(x-3/4) scaled
  OscillatorySpec s_two = bump_spec(g, [](const Real& x, int order) -> Real {
    switch (order) {
      case 0: return 100 * (x * x * x / 3 - x * x / 2 + Real(3) / 16 * x);
      case 1: return 100 * (x - Real(1) / 4) * (x - Real(3) / 4);
      case 2: return 100 * (2 * x - 1);
      default: return Real(200);
    }
  });
  CHECK_THROWS_AS(stat_phase_leading(s_two, 64), MultipleStationaryPoints);
}

TEST_CASE("quadrupled phase scale halves the leading-term discrepancy") {
  SmoothBump g = SmoothBump::window(Real(1), Real(2));
  auto discrepancy = [&](double Y) {
    auto s = bump_spec(g, quadratic_phase(Real(Y), Real(3) / 2));
    auto sp = stat_phase_leading(s, 96);
    Cx oracle = quad_osc(s, 96);
    return d(abs(sp.value - oracle));
  };
  double d1 = discrepancy(400), d2 = discrepancy(1600);
  CHECK(d2 * 2 <= d1);
}

TEST_CASE("BKY schedule validation") {
  SmoothBump g = SmoothBump::window(Real(1), Real(2));
  auto s = bump_spec(g, quadratic_phase(Real(900), Real(3) / 2));
  s.X = 1;
  s.U = Real(1) / 4;  // bump derivative scale
  s.Y = 900;
  s.Q = 1;
  CHECK(validate_schedule(s, 2, 30.0));
  s.Y = Real(1) / 1000;  // claimed phase scale far too small
  CHECK_FALSE(validate_schedule(s, 2, 30.0));
}

TEST_CASE("solve_tau0") {
  // residual on a parameter grid
  for (int k : {21, 51, 101}) {
    for (double bb : {0.7, 1.4, 3.0}) {
      for (double aa : {0.01, 0.05, 0.2}) {
        Real B = Real(bb) * (k - 1);
        Real A = Real(aa) * B;
        auto r = solve_tau0(A, B, k, 128);
        CHECK(d(r.residual) < 1e-12);
        CHECK(d(r.tau0) > 0);
        CHECK(d(r.tau0) < 1);
      }
    }
  }

  // A -> 0: tau0 -> 0 monotonically
  Real prev = 1;
  for (double aa : {0.2, 0.1, 0.05, 0.025}) {
    auto r = solve_tau0(Real(aa) * 100, Real(100), 51, 96);
    CHECK(d(r.tau0) < d(prev));
    prev = r.tau0;
  }

  // seed quality for small h: relative gap <= 1e-2 when h <= 0.1
  {
    // h = A/(B^{2/3} (k-1)^{1/3}); pick A to make h = 0.1
    int k = 51;
    Real B = 120;
    Real h = Real(1) / 10;
    Real A = h * pow(B, Real(2) / 3) * pow(Real(k - 1), Real(1) / 3);
    auto r = solve_tau0(A, B, k, 96);
    CHECK(d(abs(r.seed - r.tau0) / r.tau0) < 1e-2);
  }

  CHECK_THROWS_AS(solve_tau0(Real(10), Real(5), 51), std::invalid_argument);
}

TEST_CASE("scale params and cutoffs") {
  ScaleParams sc;
  sc.k = 51;
  sc.eta = Real(1) / 4;  // T = 51^{3/4} ~ 19.1
  sc.N = 300000;
  sc.r = 1;
  sc.C = 30;
  CHECK_NOTHROW(sc.validate());

  auto cs = cutoffs(sc, Real(30), Real(0));
  // x = 0: max degenerates to the first branch
  Real expect_n0 = sc.k_eps() * pow(Real(30) * sc.T(), 3) / sc.N;
  CHECK(d(abs(cs.N0 - expect_n0) / expect_n0) < 1e-12);
  Real expect_m0 = sc.k_eps() * Real(50) * 50 * 30 * 30 / sc.N;
  CHECK(d(abs(cs.M0 - expect_m0) / expect_m0) < 1e-12);
  CHECK(d(cs.M / cs.M0) <= 1.0);

  auto cs2 = cutoffs(sc, Real(30), Real(2));
  CHECK(d(cs2.M / cs2.M0) <= 1.0);
  CHECK(d(cs2.N0) >= d(cs.N0));

  ScaleParams bad = sc;
  bad.eta = Real(9) / 10;  // T below sqrt(k)
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("z integral basics") {
  ScaleParams sc;
  sc.k = 51;
  sc.eta = Real(1) / 4;
  sc.N = 300000;
  sc.C = 30;

  // conjugate symmetry at t = 0, x = 0
  Cx plus = z_integral(sc, Real(30), Real(1), Real(800), Real(0), Real(0), +1, 72);
  Cx minus = z_integral(sc, Real(30), Real(1), Real(800), Real(0), Real(0), -1, 72);
  CHECK(d(abs(plus - conj(minus))) < 1e-18);
}

TEST_CASE("y integral in the A << B regime obeys the 1/B envelope") {
  PhaseGeometry geom;
  geom.A = 10;
  geom.B = 40;
  geom.Ap = 10;
  geom.Bp = 40;
  geom.k = 12;
  YIntegralSpec ys;
  ys.geom = geom;
  Cx v = y_integral(ys, 80);
  CHECK(d(abs(v)) <= 10.0 / 40.0);

  // amplitude identically zero outside the window: u pushing support away
  ys.u = Real(3);
  CHECK(d(abs(y_integral(ys, 64))) == 0.0);
}

TEST_CASE("y integral expansion phase matches the geometry phase") {
  PhaseGeometry geom;
  geom.A = 14;
  geom.B = 60;
  geom.Ap = 14;
  geom.Bp = 60;
  geom.k = 21;
  auto t0 = solve_tau0(geom.A, geom.B, geom.k, 96);
  CHECK(d(abs(geom.f_deriv(t0.tau0, 1))) < 1e-12);
  // definitional: f at tau0 from the same expression
  Real pi = pi_value();
  Real f_manual = Real(20) * boost::multiprecision::asin(t0.tau0) / (2 * pi) +
                  16 * pi * pi * pow(geom.A, 3) / (27 * geom.B * geom.B * t0.tau0 * t0.tau0);
  CHECK(d(abs(geom.f(t0.tau0) - f_manual)) < 1e-25);
}

TEST_CASE("separation cutoff decade") {
  ScaleParams sc;
  sc.k = 51;
  sc.eta = Real(1) / 4;
  sc.N = 300000;
  sc.C = 30;
  auto rep = separation_cutoff_check(sc, Real(30), 80);
  CHECK(d(rep.x_ratio) <= 1e-4);
  CHECK(d(rep.t_ratio) <= 1e-4);
  // z = y: the x-integral equals the window mass
  SmoothBump W = SmoothBump::plateau(Real(-8), Real(-4), Real(4), Real(8));
  CHECK(d(abs(rep.x_at_equal - W.mass(96))) < 1e-20);
}
