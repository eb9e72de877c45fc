#pragma once

// The exponential-integral engine: adaptive oscillatory quadrature (oracle of
// record for every integral claim), derivative/IBP bounds, the stationary
// phase leading term, the stationary-point solver of the tau-phase, and the
// paper-specific z/y/w integrals with their cutoff verifiers.
//
// Conventions: phases are stored in RADIANS.  Displays written with e(f)
// enter here as 2*pi*f.

#include "subconv/cheb.hpp"
#include "subconv/real.hpp"
#include "subconv/smooth_bump.hpp"

#include <functional>
#include <optional>

namespace subconv::osc {

struct OscillatorySpec {
  std::function<Cx(const Real&)> amplitude;               // g, possibly complex
  std::function<Cx(const Real&, int)> amplitude_deriv;    // optional, orders 0..2
  std::function<Real(const Real&, int)> phase;            // f(x, order), radians
  Real a, b;
  // BKY schedule (X, Y, U, Q)
  Real X{1}, Y{1}, U{1}, Q{1};
  // extra oscillation (in cycles) carried by the amplitude, e.g. a Bessel
  // factor; sizes the initial panel count
  Real amplitude_cycles{0};
};

struct QuadReport {
  long panels{0};
  Real gap{0};
};

struct RefinementError : std::runtime_error {
  Cx best;
  Real gap;
  RefinementError(Cx b, Real g)
      : std::runtime_error("quad_osc: refinement budget exhausted"), best(b), gap(g) {}
};

// integral of g(x) exp(i f(x)) over [a,b]; composite Gauss-Legendre, panels
// doubled until successive levels agree to 2^{-precision} absolute.
Cx quad_osc(const OscillatorySpec& spec, unsigned precision_bits, QuadReport* report = nullptr);

// Total variation of a (possibly complex) amplitude by grid refinement.
Real total_variation(const std::function<Cx(const Real&)>& g, const Real& a, const Real& b);

// Var(g) / min |f^{(r)}|^{1/r}; the r-th derivative must keep its sign on
// [a,b] (checked by dense sampling), otherwise std::invalid_argument.
Real derivative_bound(const OscillatorySpec& spec, int order);

struct IbpReport {
  Real magnitude;   // |quad_osc|
  Real slope;       // min f' on the support (the B of the lemma)
  Real envelope;    // slope^{-j}
};

// For specs with f' >= B > 0 on the (interior) support of g: observed
// magnitude against the B^{-j} envelope.
IbpReport ibp_decay_check(const OscillatorySpec& spec, int j, unsigned precision_bits);

struct NoStationaryPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MultipleStationaryPoints : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StatPhase {
  Cx value;
  Real error_estimate;  // scale of the n=1 correction term
  Real x0;
};

// Leading term e^{i f(x0)} sqrt(2 pi) e^{i pi/4} g(x0) / sqrt(f''(x0)).
// Requires a unique interior stationary point with f''(x0) > 0.
StatPhase stat_phase_leading(const OscillatorySpec& spec, unsigned precision_bits);

// Sampled check of the BKY schedule: |g^(j)| <= slack * X/U^j and
// |f^(j)| <= slack * Y/Q^j for j = 1..max_order.
bool validate_schedule(const OscillatorySpec& spec, int max_order, double slack);

struct Tau0Result {
  Real tau0;
  Real seed;       // truncated odd-power series value
  Real residual;   // |f'(tau0)| with f in e(.)-units
};

// Root of tau^3 / sqrt(1 - tau^2) = (4 pi / 3)^3 A^3 / (B^2 (k-1)) in (0,1):
// Newton from the series seed in h = A / (B^{2/3} (k-1)^{1/3}).  Requires
// A <= B; throws if no root lands in (0,1).
Tau0Result solve_tau0(const Real& A, const Real& B, int k, unsigned precision_bits = 128);

// -------------------------------------------------------------------------
// paper-specific scales and integrals

struct ScaleParams {
  int k{51};
  Real eta{Real(1) / 5};  // T = k^{1-eta}
  Real N{100000};
  Real r{1};
  Real C{1};   // dyadic modulus block
  Real M1{1};  // dyadic m block
  Real n1{1}, q1{1};

  Real k_eps() const;  // log^2 k
  Real T() const;      // k^{1-eta}
  Real Q() const;      // 2 sqrt(k_eps N / T)
  void validate() const;
};

struct CutoffSet {
  Real N0, M, M0, N2;
};

CutoffSet cutoffs(const ScaleParams& scale, const Real& q, const Real& x);

// z-side transform after the GL(3) summation formula:
//   int V(z) z^{it} e(N x z/(q Q) + sign*3 (N n1^2 n2 z)^{1/3}/(q r^{1/3})) dz
Cx z_integral(const ScaleParams& scale, const Real& q, const Real& n1, const Real& n2,
              const Real& x, const Real& t, int sign, unsigned precision_bits);

// m-side transform after the GL(2) summation formula (drives the M0 cutoff):
//   int U(y) y^{-it} e(-N x y/(q Q)) J_{k-1}(4 pi sqrt(m N y)/q) dy
Cx m_side_integral(const ScaleParams& scale, const Real& q, const Real& m, const Real& x,
                   const Real& t, unsigned precision_bits);

struct PhaseGeometry {
  Real A, B;    // A = 3 (N N0 w)^{1/3} / (q r^{1/3}),  B = 4 pi sqrt(m N) / q
  Real Ap, Bp;  // primed pair
  int k{51};

  static PhaseGeometry from_scales(const Real& N, const Real& N0, const Real& w, const Real& q,
                                   const Real& r, const Real& m, const Real& qp, const Real& mp,
                                   int k);
  // tau-phase in e(.)-units: (k-1) asin(tau)/(2 pi) + 16 pi^2 A^3/(27 B^2 tau^2)
  Real f(const Real& tau) const;
  Real f_deriv(const Real& tau, int order) const;  // order 1 or 2
  void validate() const;                           // A, B > 0
};

struct YIntegralSpec {
  PhaseGeometry geom;
  Real t{0}, u{0};
  int sign{+1};
  bool primed{false};  // use (Ap, Bp) instead of (A, B)
};

// I_pm = int U(y) V(y+u) (1+u/y)^{it} e(sign * A (y+u)^{1/3} in e-units) J_{k-1}(B sqrt y) dy.
// A shared Bessel cache may be supplied; otherwise one is built on the fly.
Cx y_integral(const YIntegralSpec& spec, unsigned precision_bits,
              const PiecewiseCheb* bessel_cache = nullptr);

// Closed-form double-stationary-phase value with all constants carried
// explicitly; amplitude evaluated at the stationary point.  Zero when the
// stationary point leaves the amplitude support.
Cx y_integral_expansion(const YIntegralSpec& spec, unsigned precision_bits);

struct WIntegralSpec {
  PhaseGeometry geom;  // A interpreted at w = 1; A(w) = A w^{1/3}
  Real t{0}, u{0};     // unprimed y-integral displacements
  Real tp{0}, up{0};   // primed y-integral displacements
  int sign{+1};
  Real freq{0};        // N0 n2 / (q1 q2 q2' r n1), cycles per unit w
  int amp_order{40};   // Chebyshev order of the cached amplitude
  double amp_cycles_per_seg{2.5};
};

// frak J = int W(w) I(m, N0 w, q) conj(I(m', N0 w, q')) e(-freq w) dw over
// w in [1, 2]; the slowly-built amplitude is cached on a piecewise Chebyshev
// grid, then integrated against the n2-frequency.
Cx w_integral(const WIntegralSpec& spec, unsigned precision_bits);

struct SeparationReport {
  Real x_threshold;      // k_eps q / (Q T)
  Real x_ratio;          // |I(10x threshold)| / |I(0.1x threshold)|
  Real t_threshold;      // k_eps / T
  Real t_ratio;
  Real x_at_equal;       // integral at z = y (equals the window mass)
};

SeparationReport separation_cutoff_check(const ScaleParams& scale, const Real& q,
                                         unsigned precision_bits);

}  // namespace subconv::osc
