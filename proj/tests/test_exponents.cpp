#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subconv/exponents.hpp"

using namespace subconv::exponents;

TEST_CASE("ledger has the five labelled contributions") {
  auto terms = paper_terms();
  CHECK(terms.size() == 5);

  // zero-frequency term vanishes at the origin
  for (const auto& t : terms)
    if (t.label == "zero-frequency") CHECK(t.eval(0, 0) == 0);

  // error term carries eta coefficient 3/2
  for (const auto& t : terms)
    if (t.label == "error-term") CHECK(t.c_eta == Rational(3) / 2);
}

TEST_CASE("minimax reproduces the optimal exponent pair") {
  auto r = minimax(paper_terms());
  CHECK(r.theta == Rational(2) / 51);
  CHECK(r.eta == Rational(10) / 51);
  CHECK(r.value == Rational(-1) / 51);
  CHECK_FALSE(r.on_boundary);

  // certificate: the returned point is no worse than any feasible vertex
  for (const auto& c : r.certificate) CHECK(r.value <= c.value);
  CHECK(r.certificate.size() >= 3);
}

TEST_CASE("balancing identities hold exactly at the optimum") {
  Rational th = Rational(2) / 51, et = Rational(10) / 51;
  Rational small_q = 2 * th - et / 2;
  Rational generic_q = Rational(-1) / 6 + 3 * et / 4;
  Rational afe = -th / 2;
  CHECK(small_q == generic_q);
  CHECK(generic_q == afe);
  CHECK(afe == Rational(-1) / 51);

  // dominated term: -1/2 + 3 eta/2 = -7/34 < -1/51
  Rational err = Rational(-1) / 2 + 3 * et / 2;
  CHECK(err == Rational(-7) / 34);
  CHECK(err < Rational(-1) / 51);

  // eta* satisfies the balancing line eta = 8 theta/5 + 2/15
  CHECK(et == 8 * th / 5 + Rational(2) / 15);
}

TEST_CASE("headline exponents") {
  CHECK(main_theorem_exponent() == Rational(3) / 2 - Rational(1) / 51);
  CHECK(eisenstein_exponent() == Rational(1) / 2 - Rational(1) / 153);
  CHECK(3 * eisenstein_exponent() == main_theorem_exponent());
  CHECK(eisenstein_exponent() < Rational(1) / 2);
}

TEST_CASE("two-term symmetric toy problem") {
  std::vector<ExponentTerm> t;
  t.push_back({0, 0, 1, "up"});    // eta
  t[0].c0 = -1;                    // eta - 1
  t.push_back({0, 0, -1, "down"}); // -eta
  auto r = minimax(t);
  CHECK(r.eta == Rational(1) / 2);
  CHECK(r.value == Rational(-1) / 2);
}

TEST_CASE("single decreasing term reports the binding boundary") {
  std::vector<ExponentTerm> t;
  t.push_back({0, 0, -1, "down"});  // -eta, minimized at eta -> 1
  auto r = minimax(t);
  CHECK(r.on_boundary);
  CHECK(r.eta == 1);
  CHECK(r.value == -1);
  CHECK(r.boundary_note.find("eta") != std::string::npos);
}

TEST_CASE("perturbing the generic-q constant toward zero worsens the optimum") {
  auto base = minimax(paper_terms()).value;
  auto terms = paper_terms();
  for (auto& t : terms)
    if (t.label == "generic-q") t.c0 = Rational(-1) / 12;  // raised toward 0
  auto perturbed = minimax(terms).value;
  CHECK(perturbed > base);
}

TEST_CASE("empty list rejected") {
  CHECK_THROWS_AS(minimax({}), std::invalid_argument);
}

TEST_CASE("ledger json uses integer pairs") {
  auto s = ledger_json();
  CHECK(s.find("\"num\":-1") != std::string::npos);
  CHECK(s.find("\"den\":2") != std::string::npos);
  CHECK(s.find("zero-frequency") != std::string::npos);
}
