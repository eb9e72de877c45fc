#pragma once

// Gauss-Legendre nodes/weights at arbitrary precision, cached per (order, bits).

#include "subconv/real.hpp"

#include <vector>

namespace subconv {

struct GLRule {
  std::vector<Real> nodes;    // on [-1, 1]
  std::vector<Real> weights;
};

// Nodes via Newton iteration on P_n with the three-term recurrence.
const GLRule& gauss_legendre(int order, unsigned bits);

}  // namespace subconv
