#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pqalg/closed_form.hpp"
#include "pqalg/drazin.hpp"
#include "pqalg/error.hpp"
#include "pqalg/models.hpp"

using namespace pqalg;

namespace {

Element random_element(const Presentation& pres, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  Element e(pres);
  for (const Word& w : pres.basis())
    if (rng() % 2 == 0) e.add_term(w, Rational(num(rng), den(rng)));
  return e;
}

Element alpha_pq(const Rational& alpha, const Presentation& pres) {
  return alpha * Element::p(pres) + Element::q(pres);
}

const std::vector<Rational> kAlphas{1, 2, -2, Rational(1, 3), -1};

}  // namespace

TEST_CASE("matrix examples") {
  auto z = matrix_drazin(RationalMatrix(3, 3));
  CHECK(z.inverse.is_zero());
  CHECK(z.index == 1);
  CHECK(z.verified());
  CHECK(matrix_drazin(RationalMatrix()).index == 0);

  auto d = matrix_drazin(RationalMatrix::from_ints({{2, 0}, {0, 0}}));
  CHECK(d.inverse == RationalMatrix::from_rows({{Rational(1, 2), 0}, {0, 0}}));
  CHECK(d.index == 1);

  auto pair = build_example_z3();
  auto m = pair.p + pair.q;
  CHECK(rank(m) == 2);
  CHECK(rank(m * m) == 2);
  auto e = matrix_drazin(m);
  CHECK(e.index == 1);
  CHECK(e.verified());

  auto nil = RationalMatrix::from_ints({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  auto n = matrix_drazin(nil);
  CHECK(n.inverse.is_zero());
  CHECK(n.index == 3);
  CHECK(matrix_drazin(RationalMatrix::identity(2)).index == 0);
  CHECK_THROWS_AS(matrix_drazin(RationalMatrix(2, 3)), PreconditionViolation);
}

TEST_CASE("matrix_drazin agrees with the characteristic polynomial oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-2, 2), size(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = size(rng);
    RationalMatrix a(n, n);
    // strictly upper triangular blocks make nontrivial indices common
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = (trial % 2 == 0 && j <= i && i > 0) ? 0 : entry(rng);
    if (trial % 5 == 0)
      for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(0, j);
    CAPTURE(a.to_string());
    auto r = matrix_drazin(a);
    CHECK(r.inverse == oracle::drazin_by_charpoly(a));
    CHECK(r.verified());
    if (!a.is_zero()) CHECK(r.index == oracle::index_by_minors(a));
    auto back = matrix_drazin(matrix_drazin(r.inverse).inverse);
    CHECK(back.inverse == r.inverse);
  }
}

TEST_CASE("residuals flag a wrong inverse") {
  auto a = RationalMatrix::from_ints({{1, 1}, {0, 0}});
  auto good = matrix_drazin(a);
  CHECK(drazin_residuals(a, good.inverse, good.index).all_zero());
  auto bad = good.inverse;
  bad(0, 0) += 1;
  CHECK_FALSE(drazin_residuals(a, bad, good.index).all_zero());
}

TEST_CASE("algebra_drazin examples") {
  auto f3 = Presentation::family(Family::F3, 2);
  auto p = algebra_drazin(Element::p(f3));
  CHECK(p.inverse == Element::p(f3));
  CHECK(p.index == 1);

  auto pq = Element::word(f3, Word(Letter::P, 2));
  auto r = algebra_drazin(pq);
  CHECK(pq * r.inverse * pq == pq);
  CHECK(r.index <= 2);
  CHECK(r.verified());

  auto zero = algebra_drazin(Element(f3));
  CHECK(zero.inverse.is_zero());
  CHECK(zero.index == 1);

  auto z8 = Presentation::zn(8);
  Element a(z8);
  a.add_term(Word(Letter::P, 2), 3);
  a.add_term(Word(Letter::Q, 2), -1);
  a.add_term(Word(Letter::P, 3), 2);
  a.add_term(Word(Letter::Q, 4), 5);
  auto n = algebra_drazin(a);
  CHECK(n.inverse.is_zero());
  CHECK(n.index <= 4);
  CHECK(n.index >= 2);
}

TEST_CASE("algebra_drazin matches the matrix oracle through represent") {
  std::mt19937_64 rng(17);
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
    for (int m = 2; m <= 4; ++m) {
      auto pres = Presentation::family(f, m);
      auto pair = build_family_pair(f, m);
      CAPTURE(pres.name());
      int bad = 0, bad_double = 0;
      for (int i = 0; i < 200; ++i) {
        auto a = random_element(pres, rng);
        auto r = algebra_drazin(a);
        auto mr = matrix_drazin(represent(a, pair));
        if (!(represent(r.inverse, pair) == mr.inverse) || !r.verified()) ++bad;
        if (i % 20 == 0) {
          auto twice = algebra_drazin(algebra_drazin(r.inverse).inverse);
          if (!(twice.inverse == r.inverse)) ++bad_double;
          if (!(oracle::drazin_by_charpoly(represent(a, pair)) == mr.inverse)) ++bad;
        }
      }
      CHECK(bad == 0);
      CHECK(bad_double == 0);
    }
}

TEST_CASE("closed form for alpha p + q") {
  auto f3 = Presentation::family(Family::F3, 2);
  CHECK(closed_form_drazin_alpha_pq(1, f3).inverse == algebra_drazin(alpha_pq(1, f3)).inverse);

  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
    for (int m = 2; m <= 4; ++m)
      for (const Rational& alpha : kAlphas) {
        auto pres = Presentation::family(f, m);
        CAPTURE(pres.name());
        CAPTURE(to_string(alpha));
        auto cf = closed_form_drazin_alpha_pq(alpha, pres);
        auto al = algebra_drazin(alpha_pq(alpha, pres));
        CHECK(cf.inverse == al.inverse);
        CHECK(cf.verified());
        CHECK(al.index <= (alpha == -1 ? 3 : 2));
        auto pair = build_family_pair(f, m);
        auto mcf = closed_form_drazin_alpha_pq(alpha, pair, m);
        CHECK(mcf.inverse == represent(cf.inverse, pair));
      }
}

TEST_CASE("alpha = -1 witness in F1(3)") {
  auto pres = Presentation::family(Family::F1, 3);
  auto a = alpha_pq(-1, pres);
  auto b = alpha_pq_left_witness(-1, pres, 3);
  CHECK(b * power(a, 4) == power(a, 3));
  CHECK(algebra_drazin(a).index <= 3);

  auto f2 = Presentation::family(Family::F2, 2);
  auto a2 = alpha_pq(-1, f2);
  auto b2 = alpha_pq_left_witness(-1, f2, 2);
  CHECK(b2 * power(a2, 4) == power(a2, 3));
  auto pair = build_family_pair(Family::F2, 2);
  auto m = represent(a2, pair);
  auto mr = matrix_drazin(m);
  CHECK(represent(closed_form_drazin_alpha_pq(-1, f2).inverse, pair) == mr.inverse);
}

TEST_CASE("left and right witnesses") {
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
    for (int m = 2; m <= 4; ++m)
      for (const Rational& alpha : {Rational(1), Rational(2), Rational(-2), Rational(1, 3)}) {
        auto pres = Presentation::family(f, m);
        CAPTURE(pres.name());
        CAPTURE(to_string(alpha));
        auto a = alpha_pq(alpha, pres);
        auto left = alpha_pq_left_witness(alpha, pres, m);
        auto right = alpha_pq_right_witness(alpha, pres, m);
        CHECK(left * power(a, 3) == power(a, 2));
        CHECK(power(a, 3) * right == power(a, 2));
        auto r = drazin_via_left_right(a, right, left, 2, 2);
        CHECK(r.inverse == closed_form_drazin_alpha_pq(alpha, pres).inverse);
      }
  auto pres = Presentation::family(Family::F1, 2);
  auto a = alpha_pq(1, pres);
  CHECK_THROWS_AS(drazin_via_left_right(a, alpha_pq_left_witness(1, pres, 2), alpha_pq_right_witness(1, pres, 2), 2, 2),
                  WitnessInvalid);
  CHECK_THROWS_AS(drazin_via_left_right(a, a, a, 0, 1), ParameterError);
}

TEST_CASE("drazin_via_left_right with trivial and oracle witnesses") {
  auto pres = Presentation::family(Family::F2, 2);
  auto p = Element::p(pres);
  CHECK(drazin_via_left_right(p, p, p, 1, 1).inverse == p);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    auto a = random_element(pres, rng);
    auto r = algebra_drazin(a);
    auto v = drazin_via_left_right(a, r.inverse, r.inverse, r.index, r.index);
    CHECK(v.inverse == r.inverse);
  }
}

TEST_CASE("closed form preconditions") {
  auto f1 = Presentation::family(Family::F1, 2);
  CHECK_THROWS_AS(closed_form_drazin_alpha_pq(0, f1), ParameterError);
  CHECK_THROWS_AS(closed_form_drazin_alpha_pq(1, Presentation::zn(5), 2), HypothesisViolation);
  CHECK_THROWS_AS(closed_form_drazin_alpha_pq(1, Presentation::zn(5)), ParameterError);
  CHECK_THROWS_AS(closed_form_drazin_alpha_pq(1, Presentation::family(Family::F1, 3), 2), HypothesisViolation);
  CHECK_NOTHROW(closed_form_drazin_alpha_pq(1, f1, 3));
  // Z4 kills words of order >= 3, so (pq)^2 = (pq)^3 = 0
  CHECK_NOTHROW(closed_form_drazin_alpha_pq(2, Presentation::zn(4), 3));
  CHECK_THROWS_AS(ClosedFormCoefficients::compute(1, 1, 2), ParameterError);
  CHECK_THROWS_AS(ClosedFormCoefficients::compute(0, 2, 2), ParameterError);
}

TEST_CASE("lambda coefficients") {
  auto c = ClosedFormCoefficients::compute(1, 2, 2);
  CHECK(c.a1 == -2);
  for (int m = 2; m <= 4; ++m)
    for (Rational alpha : {Rational(1), Rational(-2), Rational(3, 2)})
      for (Rational lambda : {Rational(2), Rational(-1), Rational(1, 2)}) {
        auto k = ClosedFormCoefficients::compute(alpha, lambda, m);
        Rational lm1 = lambda - 1;
        CHECK(k.a1 == (alpha + 1) * (m * lm1 + 1 - 2 * lambda) / (alpha * lm1 * lm1));
      }
  CHECK(parity(3) == 1);
  CHECK(parity(4) == 0);
}

TEST_CASE("lambda group inverse") {
  for (int m = 2; m <= 3; ++m)
    for (Rational lambda : {Rational(0), Rational(2), Rational(-1), Rational(1, 2), Rational(3)})
      for (Rational alpha : {Rational(1), Rational(-1), Rational(2)}) {
        LambdaSpec spec{m, lambda};
        auto pair = build_lambda_pair(spec);
        CAPTURE(pair.label);
        CAPTURE(to_string(alpha));
        RationalMatrix a = alpha * pair.p + pair.q;
        auto r = closed_form_group_lambda(alpha, spec, pair);
        const auto& x = r.inverse;
        CHECK(x * a * x == x);
        CHECK(a * x * a == a);
        CHECK(a * x == x * a);
        auto mr = matrix_drazin(a);
        CHECK(mr.index == 1);
        CHECK(x == mr.inverse);
        if (alpha == -1) CHECK(lambda_witness(alpha, spec, pair) * a * a == a);
      }
  LambdaSpec bad{2, 2};
  CHECK_THROWS_AS(closed_form_group_lambda(1, bad, build_family_pair(Family::F3, 2)), HypothesisViolation);
}

TEST_CASE("element power index") {
  auto pres = Presentation::family(Family::F4, 2);
  auto a = Element::word(pres, Word(Letter::Q, 2)) - Element::word(pres, Word(Letter::P, 2));
  auto r = algebra_drazin(a);
  CHECK(element_power_index(a, r.inverse, 10) == r.index);
  CHECK_THROWS_AS(drazin_residuals(a, r.inverse, 0), PreconditionViolation);
}
