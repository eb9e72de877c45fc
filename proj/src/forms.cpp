#include "subconv/forms.hpp"

#include "subconv/modular.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace subconv::forms {

namespace {

using i128 = __int128_t;

// Euler/Jacobi cube: prod (1-q^n)^3 = sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}.
// Sparse; ~sqrt(2L) terms up to L.
std::vector<long long> jacobi_cube(long L) {
  std::vector<long long> c(L + 1, 0);
  for (long j = 0;; ++j) {
    long e = j * (j + 1) / 2;
    if (e > L) break;
    c[e] = (j % 2 ? -1 : 1) * (2 * j + 1);
  }
  return c;
}

// truncated square of an i128 series, symmetric halving
std::vector<i128> square_i128(const std::vector<i128>& a, long L) {
  std::vector<i128> c(L + 1, 0);
  for (long i = 0; i <= L; ++i) {
    if (a[i] == 0) continue;
    if (2 * i <= L) c[2 * i] += a[i] * a[i];
    long jmax = L - i;
    for (long j = i + 1; j <= jmax; ++j) {
      if (a[j] == 0) continue;
      c[i + j] += 2 * a[i] * a[j];
    }
  }
  return c;
}

// tau(n) for n <= L as i128: Delta = q * (jacobi_cube)^8.
// Intermediate (eta^12) coefficients stay below d(n) n^{5/2} ~ 1e15 at
// L ~ 1.5e5, so products and partial sums sit far inside the i128 range.
std::vector<i128> tau_table(long L) {
  auto j3 = jacobi_cube(L);
  std::vector<i128> j(L + 1, 0);
  for (long i = 0; i <= L; ++i) j[i] = j3[i];
  auto j2 = square_i128(j, L);
  auto j4 = square_i128(j2, L);
  auto j8 = square_i128(j4, L);
  std::vector<i128> tau(L + 1, 0);
  for (long n = 1; n <= L; ++n) tau[n] = j8[n - 1];
  return tau;
}

Int int_from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Int hi = static_cast<unsigned long long>(u >> 64);
  Int out = (hi << 64) + static_cast<unsigned long long>(u);
  return neg ? -out : out;
}

std::vector<Int> mul_trunc(const std::vector<Int>& a, const std::vector<Int>& b, long L) {
  std::vector<Int> c(L + 1);
  for (long i = 0; i <= L && i < static_cast<long>(a.size()); ++i) {
    if (a[i] == 0) continue;
    long jmax = std::min<long>(L - i, static_cast<long>(b.size()) - 1);
    for (long j = 0; j <= jmax; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

std::vector<Int> eisenstein_series(int weight, long L) {
  // E4 = 1 + 240 sum sigma_3 q^n, E6 = 1 - 504 sum sigma_5 q^n
  int power = weight == 4 ? 3 : 5;
  long factor = weight == 4 ? 240 : -504;
  std::vector<Int> sigma(L + 1);
  for (long d = 1; d <= L; ++d) {
    Int dp = Int(d);
    for (int i = 1; i < power; ++i) dp *= d;
    for (long m = d; m <= L; m += d) sigma[m] += dp;
  }
  std::vector<Int> e(L + 1);
  e[0] = 1;
  for (long n = 1; n <= L; ++n) e[n] = factor * sigma[n];
  return e;
}

}  // namespace

Real HolomorphicForm::lambda(long n) const {
  if (n < 1 || n > nmax()) throw std::invalid_argument("lambda: n outside the table");
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  Real norm = pow(Real(n), weight - 1);
  return Real(a[n]) / sqrt(norm);
}

HolomorphicForm eigenform(int weight, long nmax) {
  if (nmax < 1) throw std::invalid_argument("eigenform: nmax >= 1");
  HolomorphicForm f;
  f.weight = weight;
  if (weight == 12) {
    auto tau = tau_table(nmax);
    f.a.resize(nmax + 1);
    for (long n = 1; n <= nmax; ++n) f.a[n] = int_from_i128(tau[n]);
    return f;
  }
  static const std::map<int, std::pair<int, int>> factors = {
      {16, {1, 0}}, {18, {0, 1}}, {20, {2, 0}}, {22, {1, 1}}, {26, {2, 1}}};
  auto it = factors.find(weight);
  if (it == factors.end())
    throw std::invalid_argument("eigenform: weight must be one of 12,16,18,20,22,26");
  if (nmax > 4000)
    throw std::invalid_argument("eigenform: big-integer path capped at nmax = 4000");
  auto tau = tau_table(nmax);
  std::vector<Int> series(nmax + 1);
  for (long n = 1; n <= nmax; ++n) series[n] = int_from_i128(tau[n]);
  auto [e4s, e6s] = it->second;
  if (e4s > 0) {
    auto e4 = eisenstein_series(4, nmax);
    for (int i = 0; i < e4s; ++i) series = mul_trunc(series, e4, nmax);
  }
  if (e6s > 0) {
    auto e6 = eisenstein_series(6, nmax);
    for (int i = 0; i < e6s; ++i) series = mul_trunc(series, e6, nmax);
  }
  f.a = std::move(series);
  return f;
}

std::vector<HeckeViolation> hecke_check(const HolomorphicForm& form) {
  std::vector<HeckeViolation> out;
  const long L = form.nmax();
  for (long m = 2; m * m <= L; ++m) {
    for (long n = m; m * n <= L; ++n) {
      long g = std::gcd(m, n);
      Int rhs = 0;
      for (long d = 1; d <= g; ++d) {
        if (g % d) continue;
        Int dp = 1;
        for (int i = 0; i < form.weight - 1; ++i) dp *= d;
        rhs += dp * form.a[(m / d) * (n / d)];
      }
      if (form.a[m] * form.a[n] != rhs) out.push_back({m, n});
    }
  }
  return out;
}

std::vector<DeligneViolation> deligne_check(const HolomorphicForm& form, long nmax) {
  if (nmax > form.nmax()) throw std::invalid_argument("deligne_check: table too short");
  std::vector<DeligneViolation> out;
  for (long n = 1; n <= nmax; ++n) {
    Int np = 1;
    for (int i = 0; i < form.weight - 1; ++i) np *= n;
    Int dn = modular::divisor_count(n);
    if (form.a[n] * form.a[n] > dn * dn * np) out.push_back({n});
  }
  return out;
}

// ------------------------------------------------------------------- GL(3)

EisensteinGL3 EisensteinGL3::from_alpha(const Cx& a1, const Cx& a2) {
  EisensteinGL3 e;
  e.alpha = {a1, a2, Cx{Real(0)} - a1 - a2};
  return e;
}

EisensteinGL3 EisensteinGL3::from_nu(const Cx& nu1, const Cx& nu2) {
  EisensteinGL3 e;
  e.alpha[0] = Cx{Real(1)} - nu1 - (nu2 + nu2);
  e.alpha[1] = nu2 - nu1;
  e.alpha[2] = (nu1 + nu1) + nu2 - Cx{Real(1)};
  return e;
}

void EisensteinGL3::validate() const {
  Cx s = alpha[0] + alpha[1] + alpha[2];
  if (static_cast<double>(abs(s)) > 1e-20)
    throw std::invalid_argument("EisensteinGL3: alpha must sum to zero");
}

namespace {

struct PrimeBlock {
  std::vector<Cx> x1p, x2p, x3p;  // powers of p^{alpha_i}

  PrimeBlock(long p, const EisensteinGL3& form, int max_pow) {
    using boost::multiprecision::log;
    Real lp = log(Real(p));
    Cx x1 = exp(form.alpha[0] * lp);
    Cx x2 = exp(form.alpha[1] * lp);
    Cx x3 = exp(form.alpha[2] * lp);
    x1p.assign(1, Cx{Real(1)});
    x2p.assign(1, Cx{Real(1)});
    x3p.assign(1, Cx{Real(1)});
    for (int i = 1; i <= max_pow; ++i) {
      x1p.push_back(x1p.back() * x1);
      x2p.push_back(x2p.back() * x2);
      x3p.push_back(x3p.back() * x3);
    }
  }

  Cx h(int kdeg) const {
    if (kdeg < 0) return Cx{Real(0)};
    Cx total{Real(0)};
    for (int i = 0; i <= kdeg; ++i)
      for (int j = 0; j + i <= kdeg; ++j) total += x1p[i] * x2p[j] * x3p[kdeg - i - j];
    return total;
  }

  // s_{(a+b, b, 0)} by Jacobi-Trudi
  Cx schur(int a, int b) const { return h(a + b) * h(b) - h(a + b + 1) * h(b - 1); }
};

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

}  // namespace

Cx gl3_coeff(long n, long r, const EisensteinGL3& form) {
  if (n < 1 || r < 1) throw std::invalid_argument("gl3_coeff: n, r >= 1");
  auto fn = factorize(n);
  auto fr = factorize(r);
  std::map<long, std::pair<int, int>> joint;
  for (auto [p, e] : fn) joint[p].first = e;
  for (auto [p, e] : fr) joint[p].second = e;
  Cx total{Real(1)};
  for (auto& [p, ab] : joint) {
    PrimeBlock block(p, form, ab.first + ab.second + 1);
    total = total * block.schur(ab.first, ab.second);
  }
  return total;
}

Cx gl3_divisor_sum(long n, const EisensteinGL3& form) {
  using boost::multiprecision::log;
  Cx total{Real(0)};
  for (long d1 = 1; d1 <= n; ++d1) {
    if (n % d1) continue;
    long m = n / d1;
    for (long d2 = 1; d2 <= m; ++d2) {
      if (m % d2) continue;
      long d3 = m / d2;
      Cx term = exp(form.alpha[0] * log(Real(d1)) + form.alpha[1] * log(Real(d2)) +
                    form.alpha[2] * log(Real(d3)));
      total += term;
    }
  }
  return total;
}

RankinSelbergAverage rankin_selberg_average(const EisensteinGL3& form, double x) {
  if (x < 1) throw std::invalid_argument("rankin_selberg_average: x >= 1");
  PrecisionScope scope(96);
  const long X = static_cast<long>(x);

  // smallest-prime-factor sieve for fast factorization of n2
  std::vector<int32_t> spf(X + 1, 0);
  for (long i = 2; i <= X; ++i)
    if (!spf[i])
      for (long j = i; j <= X; j += i)
        if (!spf[j]) spf[j] = static_cast<int32_t>(i);

  std::map<std::tuple<long, int, int>, Cx> cache;
  auto block_coeff = [&](long p, int a, int b) -> Cx {
    auto key = std::make_tuple(p, a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    PrimeBlock block(p, form, a + b + 1);
    Cx v = block.schur(a, b);
    cache.emplace(key, v);
    return v;
  };

  // dyadic accumulation: bucket j holds the mass with n1^2 n2 in (X/2^{j+1}, X/2^j]
  const int levels = 8;
  std::vector<Real> bucket(levels + 1, Real(0));
  for (long n1 = 1; static_cast<double>(n1) * n1 <= x; ++n1) {
    auto f1 = factorize(n1);
    for (long n2 = 1; n1 * n1 * n2 <= X; ++n2) {
      // joint factorization
      std::map<long, std::pair<int, int>> joint;
      for (auto [p, e] : f1) joint[p].first = e;
      long m = n2;
      while (m > 1) {
        long p = spf[m];
        int e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        joint[p].second += e;
      }
      Cx lam{Real(1)};
      for (auto& [p, ab] : joint) lam = lam * block_coeff(p, ab.first, ab.second);
      Real mass = norm_sq(lam);
      double key = static_cast<double>(n1) * n1 * n2;
      int level = 0;
      while (level < levels && key <= x / (1 << (level + 1))) ++level;
      bucket[level] += mass;
    }
  }

  RankinSelbergAverage out;
  // cumulative sums at thresholds x / 2^j
  std::vector<Real> cum(levels + 1, Real(0));
  Real running = 0;
  for (int j = levels; j >= 0; --j) {
    running += bucket[j];
    cum[j] = running;
  }
  out.sum = cum[0];

  // OLS slope of log(cum_j) against log(x/2^j), dropping empty buckets
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int pts = 0;
  for (int j = 0; j <= levels; ++j) {
    double xx = std::log(x / std::pow(2.0, j));
    if (!(cum[j] > 0) || x / std::pow(2.0, j) < 2) continue;
    double yy = static_cast<double>(log(cum[j]));
    sx += xx;
    sy += yy;
    sxx += xx * xx;
    sxy += xx * yy;
    ++pts;
  }
  out.slope = (pts * sxy - sx * sy) / (pts * sxx - sx * sx);
  return out;
}

Cx sr_sum(const DyadicWindow& window, const HolomorphicForm& f, const EisensteinGL3& pi) {
  long lo = static_cast<long>(static_cast<double>(window.N * window.V.lo()));
  long hi = static_cast<long>(static_cast<double>(window.N * window.V.hi())) + 1;
  if (hi > f.nmax())
    throw std::invalid_argument("sr_sum: coefficient table does not cover [N, 2N]");
  Cx total{Real(0)};
  for (long n = std::max(1L, lo); n <= hi; ++n) {
    Real v = window.V.value(Real(n) / window.N);
    if (v == 0) continue;
    total += v * f.lambda(n) * gl3_coeff(n, window.r, pi);
  }
  return total;
}

void save_coeff_csv(std::ostream& out, const std::vector<CoeffRow>& rows) {
  out << "n,r,re,im\n";
  for (const auto& row : rows)
    out << row.n << "," << row.r << "," << to_string(row.re, 30) << ","
        << to_string(row.im, 30) << "\n";
}

std::vector<CoeffRow> load_coeff_csv(std::istream& in) {
  std::vector<CoeffRow> rows;
  std::string line;
  if (!std::getline(in, line) || line.rfind("n,r,re,im", 0) != 0)
    throw std::invalid_argument("coeff csv: missing n,r,re,im header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    CoeffRow row;
    std::getline(ss, field, ',');
    row.n = std::stol(field);
    std::getline(ss, field, ',');
    row.r = std::stol(field);
    std::getline(ss, field, ',');
    row.re = Real(field);
    std::getline(ss, field, ',');
    row.im = Real(field);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace subconv::forms
