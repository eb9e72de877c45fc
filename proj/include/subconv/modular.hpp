#pragma once

// Exact evaluation of Kloosterman sums and the two character sums of the
// Cauchy-Poisson step, with brute-force enumeration as the oracle of record.

#include "subconv/real.hpp"

#include <cstdint>
#include <vector>

namespace subconv::modular {

using i64 = long long;

i64 gcd_ll(i64 a, i64 b);
// Modular inverse via extended Euclid; throws std::invalid_argument if
// gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);
i64 divisor_count(i64 q);   // d(q), trial division (q <= 1e6 regime)
int mobius(i64 n);
std::vector<i64> divisors(i64 q);
std::vector<i64> units_mod(i64 q);  // residues coprime to q; {0} convention for q=1

struct KloostermanQuery {
  i64 a{0}, b{0};
  i64 q{1};
};

// S(a,b;q) by direct enumeration over units mod q.  Result is real (the
// x <-> -x pairing conjugates terms); the imaginary residue is checked
// against 2^{-precision/2} and the Weil envelope d(q) sqrt(q) sqrt((a,b,q))
// is asserted on every evaluation.
Real kloosterman(const KloostermanQuery& query, unsigned precision_bits = 128);
inline Real kloosterman(i64 a, i64 b, i64 q, unsigned precision_bits = 128) {
  return kloosterman({a, b, q}, precision_bits);
}

// Twisted multiplicativity S(a q2^-1, b q2^-1; q1) * S(a q1^-1, b q1^-1; q2)
// for coprime q1, q2; equals S(a,b;q1 q2).
Real kloosterman_crt(i64 a, i64 b, i64 q1, i64 q2, unsigned precision_bits = 128);

// Ramanujan sum c_q(n) = sum over units a mod q of e(na/q), by enumeration.
// Exact integer.
i64 ramanujan_sum(i64 q, i64 n);

// C_pm(q, r, n1, m) = sum*_{a mod q} S(r a^-1, sign*n2; qr/n1) e(a^-1 m / q),
// literal double sum.  Requires n1 | q r.
Cx char_sum_direct(i64 q, i64 r, i64 n1, i64 m, i64 n2, int sign,
                   unsigned precision_bits = 128);

// Same sum through the Mobius-over-divisors rearrangement
//   sum_{d|q} d mu(q/d) sum*_{alpha mod qr/n1, n1 alpha = -m mod d}
//       e(sign * alpha^-1 n2 / (qr/n1)).
Cx char_sum_factored(i64 q, i64 r, i64 n1, i64 m, i64 n2, int sign,
                     unsigned precision_bits = 128);

struct CharSumParams {
  i64 q1{1}, q2{1}, q2p{1};
  i64 r{1}, n1{1};
  i64 m{1}, mp{1};
  i64 n2{0};
  int sign{+1};

  // Divisibility invariants of the q = q1 q2 decomposition.
  void validate() const;  // throws std::invalid_argument on violation
};

// The Poisson-dual character sum: double Mobius sum over d|q, d'|q' of
// d d' mu(q/d) mu(q'/d') times the count of unit pairs (alpha, alpha') with
//   n1 alpha = -m (d),  n1 alpha' = -m' (d'),
//   sign*(alpha^-1 q2' - alpha'^-1 q2) = -n2 mod q1 q2 q2' r / n1.
// Direct enumeration.  The Mobius weights can make the total negative; the
// envelope bound below is on the absolute value.
i64 frak_C(const CharSumParams& params);

// Envelope of the character-sum lemma:
//   q1^2 r (m,n1)/n1 * sum_{d2 | (q2, n1 q2' -+ m n2)} sum_{d2' | (q2', n1 q2 +- m' n2)} d2 d2'
// with the upper signs for sign = +1.
Real frak_C_envelope(const CharSumParams& params);

}  // namespace subconv::modular
