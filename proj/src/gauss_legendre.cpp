#include "subconv/gauss_legendre.hpp"

#include <boost/math/constants/constants.hpp>

#include <map>
#include <utility>

namespace subconv {

namespace {

// P_n(x) and P_n'(x) by recurrence.
std::pair<Real, Real> legendre(int n, const Real& x) {
  Real p0 = 1, p1 = x;
  for (int k = 2; k <= n; ++k) {
    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  Real dp = n * (x * p1 - p0) / (x * x - 1);
  return {p1, dp};
}

}  // namespace

const GLRule& gauss_legendre(int order, unsigned bits) {
  static std::map<std::pair<int, unsigned>, GLRule> cache;
  auto key = std::make_pair(order, bits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  PrecisionScope scope(bits + 16);
  using boost::multiprecision::abs;
  using boost::multiprecision::cos;
  using boost::multiprecision::pow;

  GLRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  Real pi = pi_value();
  Real tol = pow(Real(2), -static_cast<int>(bits) - 4);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    Real x = cos(pi * (4 * i + 3) / (4 * order + 2));
    for (int iter = 0; iter < 200; ++iter) {
      auto [p, dp] = legendre(order, x);
      Real dx = p / dp;
      x -= dx;
      if (abs(dx) < tol) break;
    }
    auto [p, dp] = legendre(order, x);
    Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) {
    auto [p, dp] = legendre(order, Real(0));
    rule.nodes[order / 2] = 0;
    rule.weights[order / 2] = 2 / (dp * dp);
  }
  return cache.emplace(key, std::move(rule)).first->second;
}

}  // namespace subconv
