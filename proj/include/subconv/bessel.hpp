#pragma once

// J_{k-1} by two independent backends (ascending series / oscillatory
// integral representation), the transition-region leading asymptotic, and
// the small-argument envelope.  The series carries enough working precision
// to absorb its own cancellation, which reaches e^x bits at large argument.

#include "subconv/cheb.hpp"
#include "subconv/real.hpp"

namespace subconv::bessel {

struct BesselQuery {
  int k{2};          // weight, order is k-1
  Real x{0};
  unsigned precision_bits{128};
};

// Oracle of record.  Guard: x <= 1e4 (series regime).
Real besselJ_series(const BesselQuery& q);
Real besselJ_series(int k, const Real& x, unsigned precision_bits = 128);

// (1/2pi) int_{-pi}^{pi} e(((k-1) tau - x sin tau)/2pi) d tau by composite
// Gauss-Legendre, panels doubled until two refinements agree.
Real besselJ_integral(const BesselQuery& q);
Real besselJ_integral(int k, const Real& x, unsigned precision_bits = 128);

struct LangerLeading {
  Real value;
  Real expansion_parameter;  // 1 / ((k-1)(w - atan w)); error is O of this
};

// j = 0 term sqrt(2/(pi (k-1) w)) cos((k-1)(w - atan w) - pi/4) with
// w = sqrt(x^2/(k-1)^2 - 1).  Requires x >= (k-1)(1 + delta), delta >= 0.1.
LangerLeading langer_leading(const BesselQuery& q, const Real& delta = Real(1) / 10);

struct SmallArgReport {
  Real value;               // J_{k-1}(x) from the series oracle
  Real envelope;            // (x e / (2(k-1)))^{k-1}
  bool pass;                // |value| <= envelope
  Real paper_envelope;      // e^{-(k-1)}
  bool paper_envelope_holds;
};

// Requires x <= (k-1)^{1-eps} for the declared eps > 0.
SmallArgReport small_arg_envelope(const BesselQuery& q, const Real& eps = Real(1) / 10);

// Piecewise-Chebyshev cache of z -> J_{k-1}(z) on [zlo, zhi], built from the
// integral backend and spot-checked against the series where the series
// regime allows.  Used to amortize Bessel factors inside y-integrals.
// seg_width/order trade build cost against the Chebyshev tail.
PiecewiseCheb j_cache(int k, const Real& zlo, const Real& zhi, unsigned precision_bits,
                      double seg_width = 6.0, int order = 40);

}  // namespace subconv::bessel
