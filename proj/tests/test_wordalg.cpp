#include <doctest.h>

#include "pqalg/coupling.hpp"
#include "pqalg/element.hpp"
#include "pqalg/error.hpp"
#include "pqalg/models.hpp"
#include "pqalg/structure.hpp"

using namespace pqalg;

namespace {

const Word P1(Letter::P, 1), Q1(Letter::Q, 1);

std::vector<Presentation> all_presentations() {
  std::vector<Presentation> out;
  for (int n = 1; n <= 16; ++n) {
    out.push_back(Presentation::zn(n, ZnVanishing::QP));
    if (n % 2 == 1) out.push_back(Presentation::zn(n, ZnVanishing::PQ));
  }
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
    for (int m = 2; m <= 8; ++m) out.push_back(Presentation::family(f, m));
  return out;
}

Element term(const Presentation& pres, const Word& w, const Rational& c) {
  Element e(pres);
  e.add_term(w, c);
  return e;
}

// Coordinates of target in the span of family, or nullopt.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<RationalMatrix>& family,
                                                   const RationalMatrix& target) {
  const std::size_t n = target.rows() * target.cols();
  RationalMatrix aug(n, family.size() + 1);
  for (std::size_t j = 0; j < family.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = family[j].data()[i];
  for (std::size_t i = 0; i < n; ++i) aug(i, family.size()) = target.data()[i];
  auto e = rref(aug);
  std::vector<Rational> x(family.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == family.size()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, family.size());
  }
  return x;
}

}  // namespace

TEST_CASE("concat merges equal letters") {
  CHECK(concat(P1, Q1) == Word(Letter::P, 2));
  CHECK(concat(P1, P1) == P1);
  CHECK(concat(Word(Letter::P, 2), Word(Letter::Q, 2)) == Word(Letter::P, 3));
  CHECK(concat(Word(Letter::Q, 2), Word(Letter::Q, 3)) == Word(Letter::Q, 5));
  CHECK(concat(Word(Letter::Q, 2), Word(Letter::P, 2)) == Word(Letter::Q, 3));
  CHECK(Word(Letter::Q, 3).to_string() == "qpq");
  CHECK(Word(Letter::P, 4).last() == Letter::Q);
}

TEST_CASE("contains_power") {
  CHECK(contains_power(Word(Letter::P, 4), Letter::P, 2));
  CHECK_FALSE(contains_power(Word(Letter::P, 3), Letter::P, 2));
  CHECK(contains_power(Word(Letter::Q, 5), Letter::P, 2));  // qpqpq has pqpq
  CHECK_FALSE(contains_power(Word(Letter::Q, 4), Letter::P, 2));
}

TEST_CASE("normal form examples") {
  auto f3 = Presentation::family(Family::F3, 2);
  CHECK(normal_form(Word(Letter::P, 4), f3) == Element::word(f3, Word(Letter::P, 2)));

  auto f1 = Presentation::family(Family::F1, 2);
  Element expect = term(f1, Word(Letter::Q, 2), 1) + term(f1, Word(Letter::P, 2), 1) - term(f1, Word(Letter::Q, 3), 1);
  CHECK(normal_form(Word(Letter::P, 3), f1) == expect);

  auto z3 = Presentation::zn(3);
  CHECK(normal_form(Word(Letter::Q, 2), z3).is_zero());
  CHECK_FALSE(normal_form(Word(Letter::P, 2), z3).is_zero());
  auto z3pq = Presentation::zn(3, ZnVanishing::PQ);
  CHECK(normal_form(Word(Letter::P, 2), z3pq).is_zero());

  // (pq)_1 = p, so p itself vanishes in Z1 with the PQ flag
  CHECK(normal_form(P1, Presentation::zn(1, ZnVanishing::PQ)).is_zero());
  for (const auto& pres : all_presentations()) {
    if (pres.name() == Presentation::zn(1, ZnVanishing::PQ).name()) continue;
    auto p = normal_form(P1, pres);
    CAPTURE(pres.name());
    CHECK(p.coefficient(P1) == 1);
    CHECK(p.coefficients().size() == 1);
  }
}

TEST_CASE("multiply examples") {
  auto f3 = Presentation::family(Family::F3, 2);
  auto p = Element::p(f3), q = Element::q(f3);
  CHECK(p * q == Element::word(f3, Word(Letter::P, 2)));
  auto pq = p * q;
  CHECK(pq * pq == pq);
  CHECK((Element(f3) * p).is_zero());
  CHECK_THROWS_AS(p * Element::p(Presentation::family(Family::F1, 2)), PresentationMismatch);
  CHECK_THROWS_AS(power(p, 0), ParameterError);
}

TEST_CASE("add_term rejects non-basis words") {
  auto z3 = Presentation::zn(3);
  Element e(z3);
  CHECK_THROWS_AS(e.add_term(Word(Letter::Q, 2), 1), ParameterError);
  auto f1 = Presentation::family(Family::F1, 2);
  Element g(f1);
  CHECK_THROWS_AS(g.add_term(Word(Letter::P, 3), 1), ParameterError);
}

TEST_CASE("dimensions") {
  CHECK(dimension(Presentation::family(Family::F1, 2)) == 5);
  CHECK(dimension(Presentation::family(Family::F4, 3)) == 11);
  CHECK(dimension(Presentation::zn(3)) == 3);
  for (int m = 2; m <= 8; ++m) {
    CHECK(dimension(Presentation::family(Family::F1, m)) == 4 * m - 3);
    CHECK(dimension(Presentation::family(Family::F2, m)) == 4 * m - 2);
    CHECK(dimension(Presentation::family(Family::F3, m)) == 4 * m - 2);
    CHECK(dimension(Presentation::family(Family::F4, m)) == 4 * m - 1);
  }
  for (int n = 1; n <= 16; ++n) CHECK(dimension(Presentation::zn(n)) == n);
  CHECK_THROWS_AS(Presentation::family(Family::F1, 1), ParameterError);
  CHECK_THROWS_AS(Presentation::zn(0), ParameterError);
}

TEST_CASE("associativity and idempotency everywhere") {
  for (const auto& pres : all_presentations()) {
    CAPTURE(pres.name());
    StructureTable t = build_structure_table(pres);
    const std::size_t d = t.dimension();
    // the constructor already checks this; redo it through the public API
    std::vector<Element> basis;
    for (const Word& w : pres.basis()) basis.push_back(Element::word(pres, w));
    bool assoc = true;
    for (std::size_t i = 0; i < d && assoc; ++i)
      for (std::size_t j = 0; j < d && assoc; ++j)
        for (std::size_t k = 0; k < d && assoc; ++k)
          assoc = t.multiply(t.product(i, j), basis[k]) == t.multiply(basis[i], t.product(j, k));
    CHECK(assoc);
    auto p = Element::p(pres), q = Element::q(pres);
    CHECK(p * p == p);
    CHECK(q * q == q);
  }
}

TEST_CASE("power collapse and basis soundness in the families") {
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
    for (int m = 2; m <= 8; ++m) {
      auto pres = Presentation::family(f, m);
      CAPTURE(pres.name());
      auto base = normal_form(Word(Letter::P, 2 * m - 2), pres);
      for (int k = 0; k <= 2 * m; ++k) CHECK(normal_form(Word(Letter::P, 2 * (m - 1 + k)), pres) == base);
      for (const Word& w : pres.basis()) CHECK(normal_form(w, pres) == Element::word(pres, w));
      for (int order = 1; order <= 4 * m; ++order)
        for (Letter s : {Letter::P, Letter::Q})
          CHECK_NOTHROW(normal_form(Word(s, order), pres));
    }
}

TEST_CASE("Zn zero propagation") {
  for (int n = 1; n <= 16; ++n)
    for (ZnVanishing v : {ZnVanishing::QP, ZnVanishing::PQ}) {
      if (n % 2 == 0 && v == ZnVanishing::PQ) continue;
      auto pres = Presentation::zn(n, v);
      for (int order = 1; order <= n + 4; ++order)
        for (Letter s : {Letter::P, Letter::Q}) {
          Word w(s, order);
          bool has_vanishing_factor = false;
          for (int o = 1; o <= order; ++o)
            for (Letter t : {Letter::P, Letter::Q}) {
              Word f(t, o);
              bool occurs = o < order || f == w;
              if (occurs && pres.zn_word_vanishes(f)) has_vanishing_factor = true;
            }
          CAPTURE(pres.name());
          CAPTURE(w.to_string());
          CHECK(normal_form(w, pres).is_zero() == has_vanishing_factor);
        }
    }
}

TEST_CASE("Z3 table by hand") {
  auto z3 = Presentation::zn(3);
  auto t = build_structure_table(z3);
  const Word pq(Letter::P, 2);
  auto b = [&](const Word& w) { return Element::word(z3, w); };
  Element zero(z3);
  // basis order p, q, pq
  CHECK(t.product(0, 0) == b(P1));
  CHECK(t.product(0, 1) == b(pq));
  CHECK(t.product(0, 2) == b(pq));
  CHECK(t.product(1, 0) == zero);
  CHECK(t.product(1, 1) == b(Q1));
  CHECK(t.product(1, 2) == zero);
  CHECK(t.product(2, 0) == zero);
  CHECK(t.product(2, 1) == b(pq));
  CHECK(t.product(2, 2) == zero);
}

TEST_CASE("F1(2) table agrees with the matrix model by linear solve") {
  auto pres = Presentation::family(Family::F1, 2);
  auto pair = build_family_pair(Family::F1, 2);
  auto t = build_structure_table(pres);
  std::vector<RationalMatrix> images;
  for (const Word& w : pres.basis()) images.push_back(word_image(pair, w));
  for (std::size_t i = 0; i < t.dimension(); ++i)
    for (std::size_t j = 0; j < t.dimension(); ++j) {
      auto coords = solve_in_span(images, images[i] * images[j]);
      REQUIRE(coords.has_value());
      CHECK(Element::from_dense(pres, *coords) == t.product(i, j));
    }
}

TEST_CASE("row of p in the table is the left multiplication operator") {
  for (const auto& pres : {Presentation::family(Family::F2, 3), Presentation::zn(7)}) {
    auto t = build_structure_table(pres);
    auto lp = t.left_multiplication(Element::p(pres));
    for (std::size_t j = 0; j < t.dimension(); ++j) {
      auto col = t.product(0, j).to_dense();
      for (std::size_t i = 0; i < t.dimension(); ++i) CHECK(lp(i, j) == col[i]);
    }
  }
}

TEST_CASE("unitalization") {
  auto f1 = Presentation::family(Family::F1, 2);
  auto u = unitalize(f1);
  CHECK(u.dimension() == 6);
  auto pq = Element::word(f1, Word(Letter::P, 2));
  std::vector<Rational> e(6);
  e[0] = 1;
  CHECK(u.multiply(e, u.embed(pq)) == u.embed(pq));
  CHECK(u.multiply(u.embed(pq), e) == u.embed(pq));
  CHECK_THROWS_AS(u.project(e), PreconditionViolation);

  auto z3 = Presentation::zn(3);
  auto unit = internal_unit(z3);
  REQUIRE(unit.has_value());
  Element expect = Element::p(z3) + Element::q(z3) - Element::word(z3, Word(Letter::P, 2));
  CHECK(*unit == expect);
  CHECK(*unit * Element::p(z3) == Element::p(z3));
  auto uz = unitalize(z3);
  for (const Word& w : z3.basis()) {
    auto x = Element::word(z3, w);
    CHECK(uz.multiply(uz.embed(*unit), uz.embed(x)) == uz.embed(x));
  }
}

TEST_CASE("internal unit exists exactly when the linear system has a solution") {
  for (const auto& pres : all_presentations()) {
    if (pres.dimension() > 20) continue;
    CAPTURE(pres.name());
    auto t = build_structure_table(pres);
    const std::size_t d = t.dimension();
    // e = sum e_i w_i with L_e = I and R_e = I
    std::vector<RationalMatrix> ops;
    for (const Word& w : pres.basis()) {
      auto x = Element::word(pres, w);
      ops.push_back(block_diagonal({t.left_multiplication(x), t.right_multiplication(x)}));
    }
    auto coords = solve_in_span(ops, RationalMatrix::identity(2 * d));
    auto unit = internal_unit(pres);
    CHECK(unit.has_value() == coords.has_value());
    if (unit && coords) CHECK(*unit == Element::from_dense(pres, *coords));
  }
}

TEST_CASE("radical dimensions of the families") {
  for (int m = 2; m <= 4; ++m) {
    CHECK(radical_dimension(Presentation::family(Family::F1, m)) == static_cast<std::size_t>(4 * m - 6));
    CHECK(radical_dimension(Presentation::family(Family::F2, m)) == static_cast<std::size_t>(4 * m - 5));
    CHECK(radical_dimension(Presentation::family(Family::F3, m)) == static_cast<std::size_t>(4 * m - 5));
    CHECK(radical_dimension(Presentation::family(Family::F4, m)) == static_cast<std::size_t>(4 * m - 4));
  }
}

TEST_CASE("tight coupling witnesses") {
  auto w = tightly_coupled_witness(CouplingCase::PqPowerP, 3, 1);
  CHECK(w.hypothesis.lhs == Word(Letter::P, 5));
  CHECK(w.hypothesis.rhs == Word(Letter::P, 6));
  CHECK(w.verified);

  auto w3 = tightly_coupled_witness(CouplingCase::QpPower, 2, 1);
  CHECK(w3.hypothesis.lhs == Word(Letter::Q, 2));
  CHECK(w3.derived.lhs == Word(Letter::Q, 2));
  CHECK(w3.derived.rhs == Word(Letter::P, 3));  // p * qp
  CHECK(w3.verified);

  CHECK_THROWS_AS(tightly_coupled_witness(CouplingCase::PqPowerP, 3, 3), ParameterError);
  CHECK_THROWS_AS(tightly_coupled_witness(CouplingCase::QpPowerQ, 3, 0), ParameterError);

  for (CouplingCase c : {CouplingCase::PqPowerP, CouplingCase::QpPowerQ, CouplingCase::QpPower})
    for (int m = 2; m <= 6; ++m)
      for (int k = 1; k < m; ++k) {
        auto x = tightly_coupled_witness(c, m, k);
        CAPTURE(coupling_case_name(c));
        CAPTURE(m);
        CAPTURE(k);
        CHECK(x.verified);
        CHECK(std::abs(x.derived.lhs.order - x.derived.rhs.order) == 1);
      }
}

TEST_CASE("word congruence closes under multiplication") {
  WordCongruence c({{Word(Letter::P, 3), Word(Letter::P, 4)}}, 8);
  CHECK(c.equivalent(Word(Letter::P, 3), Word(Letter::P, 4)));
  // left multiplication by q
  CHECK(c.equivalent(Word(Letter::Q, 4), Word(Letter::Q, 5)));
  CHECK_FALSE(c.equivalent(Word(Letter::P, 1), Word(Letter::Q, 1)));
  CHECK(c.representative(Word(Letter::P, 4)) == Word(Letter::P, 3));
}
