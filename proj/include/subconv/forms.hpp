#pragma once

// Fourier-coefficient inputs: holomorphic Hecke eigenforms in the
// one-dimensional weights (exact integer q-expansions from eta/Eisenstein
// products) and GL(3) minimal-Eisenstein coefficients lambda(n,r) built from
// Schur polynomials at each prime power; the r=1 triple divisor sum is the
// ground-truth oracle.

#include "subconv/real.hpp"
#include "subconv/smooth_bump.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <iosfwd>
#include <vector>

namespace subconv::forms {

using Int = boost::multiprecision::cpp_int;

struct HolomorphicForm {
  int weight{12};
  std::vector<Int> a;  // a[n] unnormalized, a[0] = 0, a[1] = 1

  long nmax() const { return static_cast<long>(a.size()) - 1; }
  Real lambda(long n) const;           // a(n) / n^{(weight-1)/2}
};

// Normalized eigenform of the given weight (one of 12, 16, 18, 20, 22, 26).
HolomorphicForm eigenform(int weight, long nmax);

// weight-12 case: tau(n)/n^{11/2} from the 24th power of the eta product
inline HolomorphicForm delta_coeffs(long nmax) { return eigenform(12, nmax); }

struct HeckeViolation {
  long m, n;
};
// Exact integer check of a(m) a(n) = sum_{d | (m,n)} d^{weight-1} a(m n/d^2)
// over all pairs with m n <= form.nmax().
std::vector<HeckeViolation> hecke_check(const HolomorphicForm& form);

struct DeligneViolation {
  long n;
};
// Exact integer check of a(n)^2 <= d(n)^2 n^{weight-1}.
std::vector<DeligneViolation> deligne_check(const HolomorphicForm& form, long nmax);

struct EisensteinGL3 {
  std::array<Cx, 3> alpha;  // Langlands parameters, alpha1+alpha2+alpha3 = 0

  static EisensteinGL3 from_alpha(const Cx& a1, const Cx& a2);  // a3 = -a1-a2
  static EisensteinGL3 from_nu(const Cx& nu1, const Cx& nu2);
  void validate() const;
};

// lambda_pi(n, r): multiplicative over primes; at p^a, p^b the two-row Schur
// polynomial s_{(a+b, b, 0)}(p^{alpha_i}) via Jacobi-Trudi in the complete
// homogeneous h_k (stable for coalescing alphas).
Cx gl3_coeff(long n, long r, const EisensteinGL3& form);

// r = 1 oracle: triple divisor sum over d1 d2 d3 = n.
Cx gl3_divisor_sum(long n, const EisensteinGL3& form);

struct RankinSelbergAverage {
  Real sum;       // sum over n1^2 n2 <= x of |lambda(n1,n2)|^2
  double slope;   // OLS slope of log sum vs log x across dyadic x
};
RankinSelbergAverage rankin_selberg_average(const EisensteinGL3& form, double x);

struct DyadicWindow {
  Real N{8};
  long r{1};
  SmoothBump V = SmoothBump::window(Real(1), Real(2));
};

// S_r(N) = sum_n lambda_pi(n,r) lambda_f(n) V(n/N); the coefficient table
// must cover [N, 2N].
Cx sr_sum(const DyadicWindow& window, const HolomorphicForm& f, const EisensteinGL3& pi);

// Coefficient cache rows, CSV schema "n,r,re,im".
struct CoeffRow {
  long n, r;
  Real re, im;
};
void save_coeff_csv(std::ostream& out, const std::vector<CoeffRow>& rows);
std::vector<CoeffRow> load_coeff_csv(std::istream& in);

}  // namespace subconv::forms
