#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pqalg/error.hpp"
#include "pqalg/matrix.hpp"
#include "pqalg/polynomial.hpp"
#include "pqalg/rational.hpp"

using namespace pqalg;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+4/2") == 2);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
  CHECK_THROWS_AS(parse_rational("0.5"), ParameterError);
  CHECK_THROWS_AS(parse_rational(""), ParameterError);
  CHECK_THROWS_AS(parse_rational("2/x"), ParameterError);
}

TEST_CASE("polynomial arithmetic and zero multiplicity") {
  Polynomial t2_minus_t3({0, 0, 1, -1});
  CHECK(t2_minus_t3.degree() == 3);
  CHECK(zero_root_multiplicity(t2_minus_t3) == RootMultiplicity::finite(2));
  CHECK(zero_root_multiplicity(Polynomial()).is_infinite());
  CHECK(zero_root_multiplicity(Polynomial::constant(5)) == RootMultiplicity::finite(0));

  Polynomial a({1, 2, 1});  // (1+t)^2
  Polynomial b({-1, 1});    // t-1
  auto d = divide(a * b, b);
  CHECK(d.quotient == a);
  CHECK(d.remainder.is_zero());
  CHECK(gcd(a * b, a) == a);
  CHECK(squarefree_part(a * b) == Polynomial({-1, 0, 1}));
  CHECK(a(Rational(2)) == 9);
  CHECK(a.derivative() == Polynomial({2, 2}));

  CHECK(RootMultiplicity::finite(3) < RootMultiplicity::infinite());
  CHECK(RootMultiplicity::infinite().at_least(100));
}

TEST_CASE("rational roots") {
  // (2t-1)(t+3)^2 (t^2+1)
  Polynomial f = Polynomial({-1, 2}) * Polynomial({3, 1}) * Polynomial({3, 1}) * Polynomial({1, 0, 1});
  auto r = rational_roots(f);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == -3);
  CHECK(r.roots[1] == Rational(1, 2));
  CHECK(r.has_nonlinear_factor);

  auto s = rational_roots(Polynomial({0, 0, -6, 1}));  // t^2 (t-6)
  CHECK(s.roots == std::vector<Rational>{0, 6});
  CHECK_FALSE(s.has_nonlinear_factor);
}

TEST_CASE("rank, rref, inverse, nullspace on fixed matrices") {
  auto m = RationalMatrix::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  auto ns = nullspace(m);
  CHECK(ns.cols() == 1);
  CHECK((m * ns).is_zero());
  CHECK_FALSE(inverse(m).has_value());

  auto g = RationalMatrix::from_ints({{2, 1}, {7, 4}});
  auto gi = inverse(g);
  REQUIRE(gi.has_value());
  CHECK(g * *gi == RationalMatrix::identity(2));

  auto rf = rank_factorization(m);
  CHECK(rf.left.cols() == 2);
  CHECK(rf.left * rf.right == m);
  CHECK(trace(m) == 6);
}

TEST_CASE("random matrices agree with cofactor oracles") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = size(rng);
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = trial % 3 == 0 && j == n - 1 ? Rational(a(i, 0) * 2) : Rational(entry(rng));
    CAPTURE(a.to_string());
    CHECK(characteristic_polynomial(a) == oracle::charpoly_leverrier(a));
    CHECK(rank(a) == oracle::rank_by_minors(a));
    auto inv = inverse(a);
    CHECK(inv.has_value() == (oracle::det_laplace(a) != 0));
    if (inv) CHECK(a * *inv == RationalMatrix::identity(n));
    auto ns = nullspace(a);
    CHECK(ns.cols() == n - rank(a));
    if (ns.cols() > 0) CHECK((a * ns).is_zero());
  }
}

TEST_CASE("span rank counts independent matrices") {
  auto e11 = RationalMatrix::from_ints({{1, 0}, {0, 0}});
  auto e22 = RationalMatrix::from_ints({{0, 0}, {0, 1}});
  auto id = RationalMatrix::identity(2);
  CHECK(span_rank({e11, e22, id}) == 2);
  CHECK(span_rank({e11, id}) == 2);
  CHECK(span_rank({}) == 0);
}

TEST_CASE("block diagonal and powers") {
  auto a = RationalMatrix::from_ints({{0, 1}, {0, 0}});
  auto b = block_diagonal({a, RationalMatrix::from_ints({{3}})});
  CHECK(b.rows() == 3);
  CHECK(b(2, 2) == 3);
  CHECK(b(0, 1) == 1);
  CHECK(a.pow(2).is_zero());
  CHECK(b.pow(3)(2, 2) == 27);
  CHECK(a.pow(0) == RationalMatrix::identity(2));
}
