#include "subconv/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace subconv::modular {

i64 gcd_ll(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

i64 inv_mod(i64 a, i64 m) {
  if (m <= 0) throw std::invalid_argument("inv_mod: modulus must be positive");
  if (m == 1) return 0;
  i64 r = a % m;
  if (r < 0) r += m;
  i64 t = 0, new_t = 1, rr = m, new_r = r;
  while (new_r != 0) {
    i64 q = rr / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(rr -= q * new_r, new_r);
  }
  if (rr != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
  return t < 0 ? t + m : t;
}

i64 divisor_count(i64 q) {
  i64 count = 1;
  for (i64 p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    int e = 0;
    while (q % p == 0) { q /= p; ++e; }
    count *= e + 1;
  }
  if (q > 1) count *= 2;
  return count;
}

int mobius(i64 n) {
  int mu = 1;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<i64> divisors(i64 q) {
  std::vector<i64> d;
  for (i64 i = 1; i * i <= q; ++i) {
    if (q % i) continue;
    d.push_back(i);
    if (i != q / i) d.push_back(q / i);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<i64> units_mod(i64 q) {
  if (q == 1) return {0};
  std::vector<i64> u;
  for (i64 x = 1; x < q; ++x)
    if (std::gcd(x, q) == 1) u.push_back(x);
  return u;
}

Real kloosterman(const KloostermanQuery& query, unsigned precision_bits) {
  if (query.q < 1) throw std::invalid_argument("kloosterman: q must be >= 1");
  const i64 q = query.q;
  // Working precision absorbs the term count, so the residual imaginary part
  // sits far below the 2^{-precision/2} contract.
  PrecisionScope scope(precision_bits + 64);
  Cx sum{Real(0), Real(0)};
  if (q == 1) {
    sum = Cx{Real(1), Real(0)};  // empty-modulus convention S(a,b;1) = 1
  } else {
    for (i64 x = 1; x < q; ++x) {
      if (std::gcd(x, q) != 1) continue;
      i64 xbar = inv_mod(x, q);
      i64 num = (query.a % q) * x + (query.b % q) * xbar;
      sum += e_rational(num, q);
    }
  }
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  Real imag_cap = pow(Real(2), -static_cast<int>(precision_bits) / 2);
  if (abs(sum.im) > imag_cap)
    throw std::logic_error("kloosterman: imaginary residue above tolerance");
  i64 g = gcd_ll(gcd_ll(query.a, query.b), q);
  if (g == 0) g = q;  // a = b = 0
  Real weil = Real(divisor_count(q)) * sqrt(Real(q)) * sqrt(Real(g));
  if (abs(sum.re) > weil * (1 + Real("1e-20")))
    throw std::logic_error("kloosterman: Weil envelope violated");
  return sum.re;
}

Real kloosterman_crt(i64 a, i64 b, i64 q1, i64 q2, unsigned precision_bits) {
  if (q1 < 1 || q2 < 1) throw std::invalid_argument("kloosterman_crt: moduli must be >= 1");
  if (std::gcd(q1, q2) != 1)
    throw std::invalid_argument("kloosterman_crt: moduli must be coprime");
  PrecisionScope scope(precision_bits + 64);
  i64 q2_inv = q1 == 1 ? 0 : inv_mod(q2, q1);
  i64 q1_inv = q2 == 1 ? 0 : inv_mod(q1, q2);
  Real left = kloosterman({a % q1 * q2_inv, b % q1 * q2_inv, q1}, precision_bits);
  Real right = kloosterman({a % q2 * q1_inv, b % q2 * q1_inv, q2}, precision_bits);
  return left * right;
}

i64 ramanujan_sum(i64 q, i64 n) {
  if (q == 1) return 1;
  // exact integer via sum_{d | (q,n)} d mu(q/d)
  i64 g = gcd_ll(n, q);
  if (g == 0) g = q;
  i64 total = 0;
  for (i64 d : divisors(g)) total += d * mobius(q / d);
  return total;
}

Cx char_sum_direct(i64 q, i64 r, i64 n1, i64 m, i64 n2, int sign,
                   unsigned precision_bits) {
  if (q < 1 || r < 1 || n1 < 1) throw std::invalid_argument("char_sum: positive q, r, n1 required");
  if ((q * r) % n1 != 0) throw std::invalid_argument("char_sum: n1 must divide q*r");
  if (sign != 1 && sign != -1) throw std::invalid_argument("char_sum: sign must be +-1");
  const i64 qq = q * r / n1;
  PrecisionScope scope(precision_bits + 64);
  Cx total{Real(0), Real(0)};
  for (i64 a : units_mod(q)) {
    i64 abar = q == 1 ? 0 : inv_mod(a, q);
    // literal inner Kloosterman sum, no shortcuts
    Cx inner{Real(0), Real(0)};
    if (qq == 1) {
      inner = Cx{Real(1), Real(0)};
    } else {
      for (i64 x : units_mod(qq)) {
        i64 xbar = inv_mod(x, qq);
        i64 num = ((r % qq) * (abar % qq)) % qq * x + ((sign * n2) % qq) * xbar;
        inner += e_rational(num, qq);
      }
    }
    total += inner * e_rational(abar * (m % q), q);
  }
  return total;
}

Cx char_sum_factored(i64 q, i64 r, i64 n1, i64 m, i64 n2, int sign,
                     unsigned precision_bits) {
  if (q < 1 || r < 1 || n1 < 1) throw std::invalid_argument("char_sum: positive q, r, n1 required");
  if ((q * r) % n1 != 0) throw std::invalid_argument("char_sum: n1 must divide q*r");
  if (sign != 1 && sign != -1) throw std::invalid_argument("char_sum: sign must be +-1");
  const i64 qq = q * r / n1;
  PrecisionScope scope(precision_bits + 64);
  Cx total{Real(0), Real(0)};
  for (i64 d : divisors(q)) {
    int mu = mobius(q / d);
    if (mu == 0) continue;
    Cx part{Real(0), Real(0)};
    for (i64 alpha : units_mod(qq)) {
      i64 al = qq == 1 ? 1 : alpha;
      if (((n1 % d) * (al % d) + (m % d)) % d != 0) continue;
      i64 albar = qq == 1 ? 0 : inv_mod(al, qq);
      part += e_rational(sign * (n2 % qq) * albar, qq);
    }
    total += Real(d * mu) * part;
  }
  return total;
}

void CharSumParams::validate() const {
  if (q1 < 1 || q2 < 1 || q2p < 1 || r < 1 || n1 < 1 || m < 1 || mp < 1)
    throw std::invalid_argument("CharSumParams: positive parameters required");
  if (sign != 1 && sign != -1) throw std::invalid_argument("CharSumParams: sign must be +-1");
  i64 n1_red = n1 / std::gcd(n1, r);
  if (q1 % n1_red != 0)
    throw std::invalid_argument("CharSumParams: n1/(n1,r) must divide q1");
  i64 core = n1 * r;
  i64 q1_rest = q1;
  for (i64 p = 2; p * p <= q1_rest; ++p)
    while (q1_rest % p == 0) {
      if (core % p != 0)
        throw std::invalid_argument("CharSumParams: q1 must be (n1 r)-smooth");
      q1_rest /= p;
    }
  if (q1_rest > 1 && core % q1_rest != 0)
    throw std::invalid_argument("CharSumParams: q1 must be (n1 r)-smooth");
  if (std::gcd(q2, core) != 1 || std::gcd(q2p, core) != 1)
    throw std::invalid_argument("CharSumParams: q2, q2' must be coprime to n1 r");
  if ((q1 * q2 * r) % n1 != 0)
    throw std::invalid_argument("CharSumParams: n1 must divide q1 q2 r");
}

i64 frak_C(const CharSumParams& p) {
  p.validate();
  const i64 q = p.q1 * p.q2;
  const i64 qp = p.q1 * p.q2p;
  const i64 mod_a = q * p.r / p.n1;        // alpha modulus
  const i64 mod_ap = qp * p.r / p.n1;      // alpha' modulus
  const i64 mod_c = p.q1 * p.q2 * p.q2p * p.r / p.n1;  // congruence modulus
  if ((qp * p.r) % p.n1 != 0)
    throw std::invalid_argument("frak_C: n1 must divide q' r");

  auto units_a = units_mod(mod_a);
  auto units_ap = units_mod(mod_ap);

  i64 total = 0;
  for (i64 d : divisors(q)) {
    int mu_d = mobius(q / d);
    if (mu_d == 0) continue;
    for (i64 dp : divisors(qp)) {
      int mu_dp = mobius(qp / dp);
      if (mu_dp == 0) continue;
      i64 count = 0;
      for (i64 alpha : units_a) {
        i64 al = mod_a == 1 ? 1 : alpha;
        if (((p.n1 % d) * (al % d) + (p.m % d)) % d != 0) continue;
        i64 albar = mod_a == 1 ? 1 : inv_mod(al, mod_a);
        for (i64 alphap : units_ap) {
          i64 alp = mod_ap == 1 ? 1 : alphap;
          if (((p.n1 % dp) * (alp % dp) + (p.mp % dp)) % dp != 0) continue;
          i64 alpbar = mod_ap == 1 ? 1 : inv_mod(alp, mod_ap);
          // sign*(albar q2p) - sign*(alpbar q2) + n2 = 0 mod mod_c
          i64 lhs = (p.sign * (albar % mod_c) * (p.q2p % mod_c)
                     - p.sign * (alpbar % mod_c) * (p.q2 % mod_c) + p.n2) % mod_c;
          if (lhs < 0) lhs += mod_c;
          if (lhs == 0) ++count;
        }
      }
      total += d * mu_d * dp * mu_dp * count;
    }
  }
  return total;
}

Real frak_C_envelope(const CharSumParams& p) {
  p.validate();
  const i64 c1 = p.n1 * p.q2p - p.sign * p.m * p.n2;
  const i64 c2 = p.n1 * p.q2 + p.sign * p.mp * p.n2;
  i64 div_sum = 0;
  for (i64 d2 : divisors(p.q2)) {
    if (c1 % d2 != 0) continue;
    for (i64 d2p : divisors(p.q2p)) {
      if (c2 % d2p != 0) continue;
      div_sum += d2 * d2p;
    }
  }
  return Real(p.q1) * Real(p.q1) * Real(p.r) * Real(gcd_ll(p.m, p.n1)) * Real(div_sum) / Real(p.n1);
}

}  // namespace subconv::modular
