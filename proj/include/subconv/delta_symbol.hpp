#pragma once

// Numerically exact realization of the delta-symbol expansion over moduli
// q <= 2Q, Q = 2 sqrt(L).
//
// Two cooperating weights:
//  * the detector weight w: an even smooth bump on [Q, 2Q] with unit comb
//    mass sum_m w(m) = 1.  The divisor-pairing identity
//      delta(n) = sum_q sum*_a e(na/q) Delta_q(n),
//      Delta_q(n) = sum_l (w(lq) - w(|n|/(lq))) / (lq)
//    is exact for all |n| <= 2L, and delta_eval realizes Delta_q through a
//    genuine x-quadrature against the e(nx/qQ) kernel.
//  * the model weight g(q, x): the flat-unit-core profile carrying the
//    g = 1 + h shape and the |x|^{-B} decay that the downstream analysis
//    uses; g_property_report tabulates those envelopes.

#include "subconv/cheb.hpp"
#include "subconv/real.hpp"
#include "subconv/smooth_bump.hpp"

#include <vector>

namespace subconv::delta_symbol {

struct DeltaExpansion {
  long L{0};
  Real Q;           // 2 sqrt(L)
  int qmax{0};      // floor(2Q)
  SmoothBump w = SmoothBump::window(Real(1), Real(2));        // detector weight
  Real w_scale{1};  // comb normalization
  SmoothBump g_model = SmoothBump::plateau(Real(-4), Real(-2), Real(2), Real(4));
  Real x_cut{8};
  unsigned bits{128};

  std::vector<Real> cq;                     // c_q = sum_l w(lq)/(lq)
  std::vector<std::vector<Real>> profile;   // per q: integer samples of the m-profile
};

// Instantiate the construction at range parameter L >= 4.
DeltaExpansion build_expansion(long L, unsigned precision_bits = 128);

// Evaluate the expansion at integer n, |n| <= 2L; the result approximates
// delta(n) to quadrature accuracy (default target far below 1e-6).
Real delta_eval(long n, const DeltaExpansion& exp, unsigned precision_bits = 128);

// Same evaluation with the x-integration truncated at |x| <= cut instead of
// the built-in cut; used for the effective-support check.
Real delta_eval_truncated(long n, const DeltaExpansion& exp, const Real& cut,
                          unsigned precision_bits = 128);

struct GPropertyReport {
  Real max_h_b2{0}, max_h_b4{0};     // max |h| q Q / (q/Q + |x|)^B over the h-grid
  Real max_decay_b2{0}, max_decay_b4{0};  // max |g| |x|^B over the decay grids
  bool pass(double slack = 10.0) const;
};

// h-grid: q = 1..Q, |x| <= 2.  decay grids: |x| in [1, 20] for B=2 and
// [4, 20] for B=4 (the profile's transition zone sits between the two).
GPropertyReport g_property_report(const DeltaExpansion& exp, int x_samples = 161);

}  // namespace subconv::delta_symbol
