#pragma once

// Compactly supported C-infinity weights with exact derivative evaluation.
//
// Two shapes cover every weight in the artifact:
//   window:  exp(1 - 1/(1-t^2)) mapped onto [a, b]          (V of Lemma 3.1)
//   plateau: smooth 0->1 edge, flat core, smooth 1->0 edge  (U, W)
// Edges use the standard partition h(u) = exp(-1/u); every derivative is
// available through integer-coefficient polynomial recurrences, so the
// derivative-bound schedule is honest rather than finite-differenced.

#include "subconv/real.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <vector>

namespace subconv {

class SmoothBump {
 public:
  // sharpness s >= 1 selects exp(s(1 - 1/(1-t^2))): larger s buys faster
  // Fourier decay, which the decade ratio tests need at desk scale
  static SmoothBump window(const Real& a, const Real& b, int sharpness = 1);
  static SmoothBump plateau(const Real& a, const Real& a1, const Real& b1, const Real& b,
                            int sharpness = 1);

  Real value(const Real& x) const;
  Real derivative(const Real& x, int order) const;  // order >= 0
  // Sampled sup of |d^j bump| over the support (1025-point grid, cached).
  Real derivative_bound(int order) const;
  Real variation() const;  // exact total variation (2 * peak)

  const Real& lo() const { return a_; }
  const Real& hi() const { return b_; }
  bool is_plateau() const { return plateau_; }
  const Real& core_lo() const { return a1_; }
  const Real& core_hi() const { return b1_; }

  // integral over the support at the given precision
  Real mass(unsigned bits) const;

 private:
  SmoothBump() = default;
  bool plateau_ = false;
  int sharp_ = 1;
  Real a_, a1_, b1_, b_;
  mutable std::map<int, Real> bound_cache_;
};

}  // namespace subconv
