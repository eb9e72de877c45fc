#include "subconv/smooth_bump.hpp"

#include "subconv/gauss_legendre.hpp"

#include <stdexcept>

namespace subconv {

namespace {

using Poly = std::vector<boost::multiprecision::cpp_int>;  // coeff of v^i

Poly poly_derivative(const Poly& p) {
  Poly d(p.size() > 1 ? p.size() - 1 : 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<int>(i);
  return d;
}

Real poly_eval(const Poly& p, const Real& v) {
  Real acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * v + Real(p[i]);
  return acc;
}

// d^j/du^j exp(-s/u) = exp(-s/u) R_j(1/u),  R_{j+1} = v^2 (s R_j - R_j').
const Poly& edge_poly(int s, int j) {
  static std::map<int, std::vector<Poly>> tables;
  auto& table = tables[s];
  if (table.empty()) table.push_back(Poly{1});
  while (static_cast<int>(table.size()) <= j) {
    const Poly& p = table.back();
    Poly dp = poly_derivative(p);
    Poly next(std::max(p.size(), dp.size()) + 2);
    for (size_t i = 0; i < p.size(); ++i) next[i + 2] += s * p[i];
    for (size_t i = 0; i < dp.size(); ++i) next[i + 2] -= dp[i];
    table.push_back(std::move(next));
  }
  return table[j];
}

Real h_deriv(int s, const Real& u, int j) {  // d^j exp(-s/u), u > 0
  using boost::multiprecision::exp;
  if (u <= 0) return 0;
  Real e = exp(-Real(s) / u);
  if (e == 0) return 0;
  return e * poly_eval(edge_poly(s, j), 1 / u);
}

// Smooth step from the h-partition: s(u) = h(u)/(h(u) + h(1-u)); derivatives
// solved triangularly from h = s * (h + h(1-.)).
std::vector<Real> step_derivs(int sharp, const Real& u, int max_order) {
  std::vector<Real> s(max_order + 1, Real(0));
  if (u <= 0) return s;
  if (u >= 1) {
    s[0] = 1;
    return s;
  }
  std::vector<Real> hn(max_order + 1), den(max_order + 1);
  for (int j = 0; j <= max_order; ++j) {
    hn[j] = h_deriv(sharp, u, j);
    Real refl = h_deriv(sharp, 1 - u, j);
    den[j] = hn[j] + (j % 2 ? -refl : refl);
  }
  std::vector<std::vector<Real>> C(max_order + 1, std::vector<Real>(max_order + 1, Real(0)));
  for (int n = 0; n <= max_order; ++n) {
    C[n][0] = 1;
    for (int k = 1; k <= n; ++k) C[n][k] = C[n - 1][k - 1] + (k <= n - 1 ? C[n - 1][k] : Real(0));
  }
  for (int j = 0; j <= max_order; ++j) {
    Real acc = hn[j];
    for (int i = 0; i < j; ++i) acc -= C[j][i] * s[i] * den[j - i];
    s[j] = acc / den[0];
  }
  return s;
}

// d^j exp(s(1 - 1/(1-t^2))) = eta_s(t) P_j(t) / (1-t^2)^{2j},
// P_{j+1} = P_j' (1-t^2)^2 + P_j (4j t (1-t^2) - 2s t).
const Poly& window_poly(int s, int j) {
  static std::map<int, std::vector<Poly>> tables;
  auto& table = tables[s];
  if (table.empty()) table.push_back(Poly{1});
  while (static_cast<int>(table.size()) <= j) {
    int n = static_cast<int>(table.size()) - 1;
    const Poly& p = table.back();
    Poly dp = poly_derivative(p);
    Poly next(std::max(dp.size() + 4, p.size() + 3));
    for (size_t i = 0; i < dp.size(); ++i) {
      next[i] += dp[i];
      next[i + 2] -= 2 * dp[i];
      next[i + 4] += dp[i];
    }
    for (size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i] * (4 * n);
      next[i + 1] -= p[i] * (2 * s);
      next[i + 3] -= p[i] * (4 * n);
    }
    table.push_back(std::move(next));
  }
  return table[j];
}

Real eta_deriv(int s, const Real& t, int j) {
  using boost::multiprecision::abs;
  using boost::multiprecision::exp;
  using boost::multiprecision::pow;
  if (abs(t) >= 1) return 0;
  Real one_m = 1 - t * t;
  Real e = exp(s * (1 - 1 / one_m));
  if (e == 0) return 0;
  return e * poly_eval(window_poly(s, j), t) / pow(one_m, 2 * j);
}

}  // namespace

SmoothBump SmoothBump::window(const Real& a, const Real& b, int sharpness) {
  if (!(b > a)) throw std::invalid_argument("SmoothBump: empty support");
  if (sharpness < 1) throw std::invalid_argument("SmoothBump: sharpness >= 1");
  SmoothBump s;
  s.plateau_ = false;
  s.sharp_ = sharpness;
  s.a_ = a;
  s.b_ = b;
  s.a1_ = s.b1_ = (a + b) / 2;
  return s;
}

SmoothBump SmoothBump::plateau(const Real& a, const Real& a1, const Real& b1, const Real& b,
                               int sharpness) {
  if (!(a < a1 && a1 <= b1 && b1 < b)) throw std::invalid_argument("SmoothBump: bad plateau knots");
  if (sharpness < 1) throw std::invalid_argument("SmoothBump: sharpness >= 1");
  SmoothBump s;
  s.plateau_ = true;
  s.sharp_ = sharpness;
  s.a_ = a;
  s.a1_ = a1;
  s.b1_ = b1;
  s.b_ = b;
  return s;
}

Real SmoothBump::value(const Real& x) const { return derivative(x, 0); }

Real SmoothBump::derivative(const Real& x, int order) const {
  if (x <= a_ || x >= b_) return 0;
  using boost::multiprecision::pow;
  if (!plateau_) {
    Real half = (b_ - a_) / 2, mid = (a_ + b_) / 2;
    Real t = (x - mid) / half;
    Real d = eta_deriv(sharp_, t, order);
    return order == 0 ? d : d / pow(half, order);
  }
  if (x >= a1_ && x <= b1_) return order == 0 ? Real(1) : Real(0);
  if (x < a1_) {
    Real w = a1_ - a_;
    auto s = step_derivs(sharp_, (x - a_) / w, order);
    return order == 0 ? s[0] : s[order] / pow(w, order);
  }
  Real w = b_ - b1_;
  auto s = step_derivs(sharp_, (b_ - x) / w, order);
  Real v = order == 0 ? s[0] : s[order] / pow(w, order);
  return order % 2 ? -v : v;
}

Real SmoothBump::derivative_bound(int order) const {
  auto it = bound_cache_.find(order);
  if (it != bound_cache_.end()) return it->second;
  PrecisionScope scope(128);
  using boost::multiprecision::abs;
  const int grid = 1025;
  Real m = 0;
  for (int i = 1; i < grid; ++i) {
    Real x = a_ + (b_ - a_) * i / grid;
    Real v = abs(derivative(x, order));
    if (v > m) m = v;
  }
  bound_cache_[order] = m;
  return m;
}

Real SmoothBump::variation() const { return Real(2); }  // peak value is 1 for both shapes

Real SmoothBump::mass(unsigned bits) const {
  PrecisionScope scope(bits + 24);
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;
  const GLRule& rule = gauss_legendre(32, bits + 24);
  Real tol = pow(Real(2), -static_cast<long>(bits));

  auto evaluate = [&](int panels) {
    Real total = 0;
    for (int p = 0; p < panels; ++p) {
      Real lo = a_ + (b_ - a_) * p / panels;
      Real hi = a_ + (b_ - a_) * (p + 1) / panels;
      Real mid = (lo + hi) / 2, half = (hi - lo) / 2;
      for (size_t i = 0; i < rule.nodes.size(); ++i)
        total += rule.weights[i] * half * value(mid + half * rule.nodes[i]);
    }
    return total;
  };
  int panels = 8;
  Real prev = evaluate(panels);
  for (int level = 0; level < 10; ++level) {
    panels *= 2;
    Real cur = evaluate(panels);
    if (abs(cur - prev) <= tol) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace subconv
