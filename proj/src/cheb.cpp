#include "subconv/cheb.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <stdexcept>

namespace subconv {

PiecewiseCheb PiecewiseCheb::build(const std::function<Cx(const Real&)>& f, const Real& a,
                                   const Real& b, const Real& seg_width, int order) {
  using boost::multiprecision::abs;
  using boost::multiprecision::ceil;
  using boost::multiprecision::cos;
  if (!(b > a)) throw std::invalid_argument("PiecewiseCheb: empty interval");

  PiecewiseCheb out;
  out.a_ = a;
  out.b_ = b;
  int nseg = static_cast<int>(static_cast<long>(ceil((b - a) / seg_width)));
  if (nseg < 1) nseg = 1;
  out.inv_width_ = Real(nseg) / (b - a);
  Real pi = pi_value();

  for (int s = 0; s < nseg; ++s) {
    ChebSegment seg;
    seg.a = a + (b - a) * s / nseg;
    seg.b = a + (b - a) * (s + 1) / nseg;
    Real mid = (seg.a + seg.b) / 2, half = (seg.b - seg.a) / 2;

    std::vector<Cx> vals(order);
    std::vector<Real> cosines(order);
    for (int j = 0; j < order; ++j) {
      Real t = cos(pi * (j + Real(1) / 2) / order);
      cosines[j] = t;
      vals[j] = f(mid + half * t);
    }
    seg.coeff_re.resize(order);
    seg.coeff_im.resize(order);
    for (int k = 0; k < order; ++k) {
      Cx acc{Real(0), Real(0)};
      for (int j = 0; j < order; ++j) {
        Real ck = cos(pi * k * (j + Real(1) / 2) / order);
        acc += vals[j] * ck;
      }
      Real scale = (k == 0 ? Real(1) : Real(2)) / order;
      seg.coeff_re[k] = acc.re * scale;
      seg.coeff_im[k] = acc.im * scale;
    }
    seg.tail = 0;
    for (int k = order - order / 4; k < order; ++k) {
      Real m = abs(Cx{seg.coeff_re[k], seg.coeff_im[k]});
      if (m > seg.tail) seg.tail = m;
    }
    out.segs_.push_back(std::move(seg));
  }
  return out;
}

Cx PiecewiseCheb::eval(const Real& x) const {
  using boost::multiprecision::floor;
  if (segs_.empty()) throw std::logic_error("PiecewiseCheb: empty");
  long idx = static_cast<long>(static_cast<long long>(floor((x - a_) * inv_width_)));
  if (idx < 0) idx = 0;
  if (idx >= static_cast<long>(segs_.size())) idx = segs_.size() - 1;
  const ChebSegment& s = segs_[idx];
  Real t = (2 * x - s.a - s.b) / (s.b - s.a);

  // Clenshaw on both components.
  Real br1 = 0, br2 = 0, bi1 = 0, bi2 = 0;
  Real two_t = 2 * t;
  for (int k = static_cast<int>(s.coeff_re.size()) - 1; k >= 1; --k) {
    Real nr = two_t * br1 - br2 + s.coeff_re[k];
    br2 = br1;
    br1 = nr;
    Real ni = two_t * bi1 - bi2 + s.coeff_im[k];
    bi2 = bi1;
    bi1 = ni;
  }
  return {t * br1 - br2 + s.coeff_re[0], t * bi1 - bi2 + s.coeff_im[0]};
}

Real PiecewiseCheb::max_tail() const {
  Real m = 0;
  for (const auto& s : segs_)
    if (s.tail > m) m = s.tail;
  return m;
}

}  // namespace subconv
