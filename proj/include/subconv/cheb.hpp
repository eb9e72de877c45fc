#pragma once

// Piecewise Chebyshev interpolation, used to cache expensive smooth factors
// (Bessel kernels, y-integral amplitudes) inside oscillatory quadratures.
// Each segment carries its own tail estimate so callers can certify accuracy.

#include "subconv/real.hpp"

#include <functional>
#include <vector>

namespace subconv {

struct ChebSegment {
  Real a, b;
  std::vector<Real> coeff_re, coeff_im;
  Real tail;  // max |coeff| over the trailing quarter, a truncation proxy
};

class PiecewiseCheb {
 public:
  // Interpolates f on [a,b] with ceil((b-a)/seg_width) segments of the given
  // order.  f may be complex-valued.
  static PiecewiseCheb build(const std::function<Cx(const Real&)>& f, const Real& a,
                             const Real& b, const Real& seg_width, int order);

  Cx eval(const Real& x) const;
  Real max_tail() const;
  const std::vector<ChebSegment>& segments() const { return segs_; }

 private:
  std::vector<ChebSegment> segs_;
  Real a_{0}, b_{0}, inv_width_{0};
};

}  // namespace subconv
