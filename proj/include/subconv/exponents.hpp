#pragma once

// Exact-rational bookkeeping of the k-exponent ledger and the min-max
// optimization that balances it.  Every contribution is an affine form
// c0 + c_theta*theta + c_eta*eta, recorded relative to the trivial bound
// N^{1/2} k^{3/2}, so a negative optimum value means subconvexity.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace subconv::exponents {

using Rational = boost::multiprecision::cpp_rational;

struct ExponentTerm {
  Rational c0, c_theta, c_eta;
  std::string label;

  Rational eval(const Rational& theta, const Rational& eta) const {
    return c0 + c_theta * theta + c_eta * eta;
  }
};

struct Domain {
  Rational theta_lo{0}, theta_hi{Rational(3) / 2};
  Rational eta_lo{0}, eta_hi{1};
};

// One feasible candidate vertex of the lifted LP {(theta,eta,t) : term_i <= t}.
struct MinimaxCandidate {
  Rational theta, eta, value;
  std::vector<int> active;  // indices of binding constraints (-1..-4 = box edges)
};

struct MinimaxResult {
  Rational theta, eta, value;
  bool on_boundary = false;            // optimum sits on the closed box edge
  std::string boundary_note;           // which edge binds, when on_boundary
  std::vector<MinimaxCandidate> certificate;  // all feasible candidates examined
};

// The five contributions of the conclusion display plus the AFE tail.
std::vector<ExponentTerm> paper_terms();

// Minimize max_i term_i(theta,eta) over the closed domain rectangle by exact
// vertex enumeration of the lifted LP.  Throws std::invalid_argument on an
// empty term list.
MinimaxResult minimax(const std::vector<ExponentTerm>& terms, const Domain& dom = {});

Rational main_theorem_exponent();   // 3/2 - 1/51
Rational eisenstein_exponent();     // 1/2 - 1/153

// Ledger export: JSON array of {label, c0, c_theta, c_eta} with rationals as
// num/den integer pairs.
std::string ledger_json();

}  // namespace subconv::exponents
