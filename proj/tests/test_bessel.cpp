#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subconv/bessel.hpp"

#include <boost/multiprecision/mpfr.hpp>

using namespace subconv;
using namespace subconv::bessel;
using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::pow;

namespace {
double d(const Real& x) { return static_cast<double>(x); }
}

TEST_CASE("series vanishes at the origin and rejects the regime guard") {
  CHECK(d(besselJ_series(2, Real(0))) == 0.0);
  CHECK(d(besselJ_integral(2, Real(0))) == doctest::Approx(0.0).epsilon(1e-30));
  CHECK_THROWS_AS(besselJ_series(12, Real(20001)), std::invalid_argument);
  CHECK_THROWS_AS(besselJ_series(1, Real(1)), std::invalid_argument);
}

TEST_CASE("dual backend agreement at spec points") {
  // J_11(20)
  Real s = besselJ_series(12, Real(20));
  Real i = besselJ_integral(12, Real(20));
  CHECK(d(abs(s - i)) < 1e-12);

  // k=51, x=120
  s = besselJ_series(51, Real(120));
  i = besselJ_integral(51, Real(120));
  CHECK(d(abs(s - i)) < 1e-10);

  // classical value check: J_0 is out of range (k>=2), use J_1(1) ~ 0.4400505857
  s = besselJ_series(2, Real(1));
  CHECK(d(s) == doctest::Approx(0.44005058574493355).epsilon(1e-12));
}

TEST_CASE("J_11(1) positive and under the factorial envelope") {
  Real v = besselJ_series(12, Real(1));
  CHECK(d(v) > 0);
  Real env = pow(exp(Real(1)) / (2 * 11), 11);
  CHECK(abs(v) <= env);
}

TEST_CASE("langer leading term error shrinks with k and with x") {
  auto rel_err = [](int k, double mult) {
    Real x = Real(mult) * (k - 1);
    Real truth = besselJ_series(k, x);
    auto lang = langer_leading({k, x, 128});
    return d(abs(lang.value - truth) / abs(truth));
  };
  double e51 = rel_err(51, 2.0);
  CHECK(e51 < 1e-1);
  double e201 = rel_err(201, 2.0);
  CHECK(e201 < e51);
  double e51_far = rel_err(51, 10.0);
  CHECK(e51_far < e51);
}

TEST_CASE("langer rejects the turning-point neighbourhood") {
  CHECK_THROWS_AS(langer_leading({51, Real(51), 128}), std::invalid_argument);
}

TEST_CASE("small-argument envelope") {
  auto rep = small_arg_envelope({101, Real(50), 128});
  CHECK(rep.pass);

  rep = small_arg_envelope({12, Real(1), 128});
  CHECK(rep.pass);
  // the value itself sits more than ten orders of magnitude below unit scale
  CHECK(d(abs(rep.value)) < 1e-10);
  CHECK(rep.paper_envelope_holds);

  rep = small_arg_envelope({12, Real(0), 128});
  CHECK(rep.pass);
  CHECK(d(rep.value) == 0.0);

  CHECK_THROWS_AS(small_arg_envelope({12, Real(10), 128}), std::invalid_argument);
}

TEST_CASE("j_cache matches the series backend") {
  auto cache = j_cache(12, Real(5), Real(80), 96);
  for (double z : {5.5, 17.2, 40.0, 63.9, 79.5}) {
    Real truth = besselJ_series(12, Real(z));
    CHECK(d(abs(cache.eval(Real(z)).re - truth)) < 1e-18);
  }
  CHECK(d(cache.max_tail()) < 1e-14);
}
