#include "subconv/exponents.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace subconv::exponents {

namespace {

Rational rat(long num, long den = 1) { return Rational(num) / Rational(den); }

}  // namespace

std::vector<ExponentTerm> paper_terms() {
  // Exponents of S_r(N) / (N^{1/2} k^{3/2}) after the reductions
  // k^{3-theta} < N r^2 <= k^3 and r <= k^theta.
  std::vector<ExponentTerm> t;
  t.push_back({rat(-1, 2), rat(0), rat(3, 2), "error-term"});      // sqrt(N) k^{3/2-1/2+3eta/2}
  t.push_back({rat(0), rat(1, 2), rat(-1, 2), "zero-frequency"});  // r^{1/2} N^{1/2} k^{3/2-eta/2}
  t.push_back({rat(0), rat(2), rat(-1, 2), "small-q"});            // r^{1/2} k^{3-eta/2}
  t.push_back({rat(-1, 6), rat(0), rat(3, 4), "generic-q"});       // N^{1/2} k^{3/2-1/6+3eta/4}
  t.push_back({rat(0), rat(-1, 2), rat(0), "afe-tail"});           // k^{(3-theta)/2}
  return t;
}

namespace {

// Row of the lifted LP: a*theta + b*eta + c*t <= d (or == for term balance).
struct Row {
  Rational a, b, c, d;
};

// Solve the 3x3 exact system given by three rows taken as equalities.
std::optional<std::array<Rational, 3>> solve3(const Row& r0, const Row& r1, const Row& r2) {
  std::array<std::array<Rational, 4>, 3> m = {{{r0.a, r0.b, r0.c, r0.d},
                                               {r1.a, r1.b, r1.c, r1.d},
                                               {r2.a, r2.b, r2.c, r2.d}}};
  for (int col = 0; col < 3; ++col) {
    int piv = -1;
    for (int r = col; r < 3; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[col], m[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return std::array<Rational, 3>{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace

MinimaxResult minimax(const std::vector<ExponentTerm>& terms, const Domain& dom) {
  if (terms.empty()) throw std::invalid_argument("minimax: empty term list");

  // Constraints, in (theta, eta, t):
  //   term i:   c_theta*theta + c_eta*eta - t <= -c0          (index i >= 0)
  //   box:      theta >= lo, theta <= hi, eta >= lo, eta <= hi (indices -1..-4)
  std::vector<Row> rows;
  std::vector<int> ids;
  for (size_t i = 0; i < terms.size(); ++i) {
    rows.push_back({terms[i].c_theta, terms[i].c_eta, rat(-1), -terms[i].c0});
    ids.push_back(static_cast<int>(i));
  }
  rows.push_back({rat(-1), rat(0), rat(0), -dom.theta_lo});  // -theta <= -lo
  ids.push_back(-1);
  rows.push_back({rat(1), rat(0), rat(0), dom.theta_hi});
  ids.push_back(-2);
  rows.push_back({rat(0), rat(-1), rat(0), -dom.eta_lo});
  ids.push_back(-3);
  rows.push_back({rat(0), rat(1), rat(0), dom.eta_hi});
  ids.push_back(-4);

  auto feasible = [&](const Rational& th, const Rational& et, const Rational& t) {
    for (const Row& r : rows)
      if (r.a * th + r.b * et + r.c * t > r.d) return false;
    return true;
  };

  // Every vertex of the lifted polyhedron has three active constraints.
  // Solve each triple exactly, keep the feasible ones, take the best.
  MinimaxResult out;
  bool have = false;
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto sol = solve3(rows[i], rows[j], rows[k]);
        if (!sol) continue;
        const auto& [th, et, tv] = *sol;
        if (!feasible(th, et, tv)) continue;
        MinimaxCandidate cand{th, et, tv, {ids[i], ids[j], ids[k]}};
        out.certificate.push_back(cand);
        bool interior = true;
        for (int id : cand.active)
          if (id < 0) interior = false;
        // Prefer an interior representation of a tied optimum.
        if (!have || tv < out.value || (tv == out.value && interior && out.on_boundary)) {
          have = true;
          out.theta = th;
          out.eta = et;
          out.value = tv;
          out.on_boundary = false;
          out.boundary_note.clear();
          for (int id : cand.active)
            if (id < 0) out.on_boundary = true;
        }
      }
  if (!have) throw std::invalid_argument("minimax: no feasible vertex found");

  if (out.on_boundary) {
    std::ostringstream ss;
    ss << "optimum attained on the domain boundary:";
    if (out.theta == dom.theta_lo) ss << " theta -> " << dom.theta_lo;
    if (out.theta == dom.theta_hi) ss << " theta -> " << dom.theta_hi;
    if (out.eta == dom.eta_lo) ss << " eta -> " << dom.eta_lo;
    if (out.eta == dom.eta_hi) ss << " eta -> " << dom.eta_hi;
    out.boundary_note = ss.str();
  }
  return out;
}

Rational main_theorem_exponent() {
  MinimaxResult r = minimax(paper_terms());
  return Rational(3) / 2 + r.value;
}

Rational eisenstein_exponent() { return main_theorem_exponent() / 3; }

std::string ledger_json() {
  std::ostringstream ss;
  ss << "[";
  bool first = true;
  for (const ExponentTerm& t : paper_terms()) {
    if (!first) ss << ",";
    first = false;
    auto pair = [](const Rational& r) {
      std::ostringstream p;
      p << "{\"num\":" << numerator(r) << ",\"den\":" << denominator(r) << "}";
      return p.str();
    };
    ss << "{\"label\":\"" << t.label << "\",\"c0\":" << pair(t.c0)
       << ",\"c_theta\":" << pair(t.c_theta) << ",\"c_eta\":" << pair(t.c_eta) << "}";
  }
  ss << "]";
  return ss.str();
}

}  // namespace subconv::exponents
