#include <doctest.h>

#include <algorithm>
#include <random>

#include "pqalg/error.hpp"
#include "pqalg/models.hpp"
#include "pqalg/structure.hpp"

using namespace pqalg;

namespace {

bool has_check(const RelationReport& r, const std::string& name, bool pass) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.pass == pass;
  return false;
}

Element random_element(const Presentation& pres, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Element e(pres);
  for (const Word& w : pres.basis())
    if (rng() % 3 != 0) e.add_term(w, Rational(num(rng), den(rng)));
  return e;
}

}  // namespace

TEST_CASE("3x3 matrix pair realising Z3") {
  auto pair = build_example_z3();
  CHECK(pair.p == RationalMatrix::from_ints({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(pair.q == RationalMatrix::from_ints({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  CHECK((pair.q * pair.p).is_zero());
  auto report = verify_relations(pair);
  CHECK(report.all_pass());
  CHECK(has_check(report, "ambient identity outside the span", true));
  auto z3 = Presentation::zn(3);
  std::vector<RationalMatrix> images;
  for (const Word& w : z3.basis()) images.push_back(word_image(pair, w));
  CHECK(span_rank(images) == 3);
  images.push_back(RationalMatrix::identity(3));
  CHECK(span_rank(images) == 4);
  auto unit = internal_unit(z3);
  REQUIRE(unit.has_value());
  CHECK(represent(*unit, pair) == RationalMatrix::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
}

TEST_CASE("Zn pairs verify for both unit variants") {
  for (int n = 1; n <= 16; ++n)
    for (AmbientUnit u : {AmbientUnit::Included, AmbientUnit::Excluded}) {
      auto pair = build_zn_pair(n, u);
      CAPTURE(pair.label);
      auto report = verify_relations(pair);
      CHECK(report.all_pass());
      CHECK(pair.contains_ambient_unit == (u == AmbientUnit::Included));
      if (n % 2 == 1) CHECK(verify_relations(build_zn_pair(n, u, ZnVanishing::PQ)).all_pass());
    }
  auto one = build_zn_pair(1, AmbientUnit::Excluded);
  CHECK((one.p * one.q).is_zero());
  CHECK((one.q * one.p).is_zero());
}

TEST_CASE("Z8 pair with the ambient unit") {
  auto pair = build_zn_pair(8, AmbientUnit::Included);
  auto pres = Presentation::zn(8);
  auto unit = internal_unit(pres);
  REQUIRE(unit.has_value());
  CHECK(represent(*unit, pair) == RationalMatrix::identity(pair.size()));
  for (const Word& w : pres.basis()) CHECK_FALSE(word_image(pair, w).is_zero());
  CHECK(word_image(pair, Word(Letter::P, 6)).is_zero());
  CHECK(word_image(pair, Word(Letter::Q, 6)).is_zero());
}

TEST_CASE("family pairs are faithful") {
  CHECK(span_rank({}) == 0);
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
    for (int m = 2; m <= 6; ++m) {
      auto pres = Presentation::family(f, m);
      auto pair = build_family_pair(f, m);
      CAPTURE(pair.label);
      CHECK(verify_relations(pair).all_pass());
      std::vector<RationalMatrix> images;
      for (const Word& w : pres.basis()) images.push_back(word_image(pair, w));
      CHECK(span_rank(images) == pres.dimension());
      CHECK(word_image(pair, Word(Letter::P, 2 * m)) == word_image(pair, Word(Letter::P, 2 * m - 2)));
    }
  auto f1 = build_family_pair(Family::F1, 2);
  auto f4 = build_family_pair(Family::F4, 2);
  auto span_of = [](const ModelPair& pair, const Presentation& pres) {
    std::vector<RationalMatrix> images;
    for (const Word& w : pres.basis()) images.push_back(word_image(pair, w));
    return span_rank(images);
  };
  CHECK(span_of(f1, Presentation::family(Family::F1, 2)) == 5);
  CHECK(span_of(f4, Presentation::family(Family::F4, 2)) == 7);
}

TEST_CASE("F3(3) sum relation fails strictly") {
  auto pair = build_family_pair(Family::F3, 3);
  auto report = verify_relations(pair);
  CHECK(has_check(report, "(qp)^(m-1) + (pq)^(m-1) != (qp)^(m-1)q + (pq)^(m-1)p", true));
  auto W = [&](Letter s, int o) { return word_image(pair, Word(s, o)); };
  CHECK_FALSE(W(Letter::Q, 4) + W(Letter::P, 4) == W(Letter::Q, 5) + W(Letter::P, 5));
}

TEST_CASE("W pairs") {
  auto w3 = build_w_pair(WType::W3);
  auto& p = w3.p;
  auto& q = w3.q;
  CHECK(p * q * p == p);
  CHECK(q * p * q == q);
  CHECK(p + q == p * q + q * p);
  CHECK(verify_relations(w3).all_pass());
  auto w4 = build_w_pair(WType::W4);
  CHECK(w4.size() == 3);
  CHECK(w4.p * w4.q * w4.p == w4.p);
  CHECK(w4.q * w4.p * w4.q == w4.q);
  CHECK_FALSE(w4.p + w4.q == w4.p * w4.q + w4.q * w4.p);
  CHECK(verify_relations(w4).all_pass());
  CHECK(verify_relations(build_z_plus_w_pair(7, ZnVanishing::QP, WType::W3)).all_pass());
  CHECK(verify_relations(build_z_plus_w_pair(6, ZnVanishing::PQ, WType::W4)).all_pass());
}

TEST_CASE("lambda pairs") {
  for (Rational lambda : {Rational(2), Rational(-1), Rational(1, 2), Rational(3)}) {
    auto cell = build_lambda_pair({2, lambda}, AmbientUnit::Included);
    CHECK(cell.p == RationalMatrix::from_ints({{1, 0}, {0, 0}}));
    CHECK(cell.q(0, 0) == lambda);
    CHECK(cell.q(0, 1) == 1);
    CHECK(cell.q(1, 0) == lambda * (1 - lambda));
    CHECK(cell.q(1, 1) == 1 - lambda);
    CHECK(cell.q * cell.q == cell.q);
    CHECK(cell.p * cell.q * cell.p == lambda * cell.p);
  }
  auto zero = build_lambda_pair({2, 0});
  CHECK((zero.p * zero.q * zero.p).is_zero());
  CHECK(zero.label.find("degenerate") != std::string::npos);
  for (int m = 2; m <= 4; ++m)
    for (Rational lambda : {Rational(0), Rational(1, 2), Rational(-1), Rational(3)}) {
      auto pair = build_lambda_pair({m, lambda});
      CAPTURE(pair.label);
      CHECK(verify_relations(pair).all_pass());
      auto top = (pair.p * pair.q).pow(static_cast<unsigned>(m - 1));
      CHECK(lambda * top == top * pair.p * pair.q);
    }
  CHECK_THROWS_AS(build_lambda_pair({2, 1}), ParameterError);
  CHECK_THROWS_AS(build_lambda_pair({1, 2}), ParameterError);
}

TEST_CASE("corrupted pair fails idempotency") {
  auto pair = build_example_z3();
  pair.p(2, 2) = 2;
  auto report = verify_relations(pair);
  CHECK_FALSE(report.all_pass());
  CHECK(has_check(report, "P^2 = P", false));
  auto fails = report.failures();
  CHECK(std::find(fails.begin(), fails.end(), "P^2 = P") != fails.end());
}

TEST_CASE("represent") {
  auto f3 = Presentation::family(Family::F3, 2);
  auto pair = build_family_pair(Family::F3, 2);
  CHECK(represent(Element::p(f3), pair) == pair.p);
  CHECK(represent(Element::q(f3), pair) == pair.q);
  auto pq = Element::word(f3, Word(Letter::P, 2));
  CHECK(represent(pq * pq, pair) == represent(pq, pair));
  CHECK(pair.p * pair.q * pair.p * pair.q == represent(pq, pair));
  CHECK_THROWS_AS(represent(Element::p(Presentation::family(Family::F1, 2)), pair), PresentationMismatch);
}

TEST_CASE("represent is a homomorphism") {
  std::mt19937_64 rng(5);
  std::vector<std::pair<Presentation, ModelPair>> cases;
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
    for (int m = 2; m <= 4; ++m) cases.emplace_back(Presentation::family(f, m), build_family_pair(f, m));
  for (int n : {3, 6, 9}) {
    cases.emplace_back(Presentation::zn(n), build_zn_pair(n, AmbientUnit::Included));
    cases.emplace_back(Presentation::zn(n), build_zn_pair(n, AmbientUnit::Excluded));
  }
  for (const auto& [pres, pair] : cases) {
    CAPTURE(pair.label);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      auto a = random_element(pres, rng), b = random_element(pres, rng);
      auto pa = represent(a, pair), pb = represent(b, pair);
      if (!(represent(a * b, pair) == pa * pb)) ++bad;
      if (!(represent(a + b, pair) == pa + pb)) ++bad;
    }
    CHECK(bad == 0);
  }
}
