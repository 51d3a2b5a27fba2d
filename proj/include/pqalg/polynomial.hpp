#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pqalg/rational.hpp"

namespace pqalg {

// Univariate polynomial over Q, coefficients stored from degree 0 upward with
// no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;
  Polynomial shifted(std::size_t k) const;  // multiply by t^k
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

PolynomialDivision divide(const Polynomial& a, const Polynomial& b);
Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic, or zero
Polynomial squarefree_part(const Polynomial& f);

// Multiplicity of 0 as a root; the zero polynomial has infinite multiplicity.
class RootMultiplicity {
 public:
  static RootMultiplicity infinite() { return RootMultiplicity(); }
  static RootMultiplicity finite(std::size_t k) { return RootMultiplicity(k); }

  bool is_infinite() const { return !value_.has_value(); }
  std::size_t value() const { return *value_; }
  bool at_least(std::size_t k) const { return is_infinite() || *value_ >= k; }
  std::string to_string() const;

  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
  friend bool operator<(const RootMultiplicity& a, const RootMultiplicity& b) {
    if (a.is_infinite()) return false;
    return b.is_infinite() || *a.value_ < *b.value_;
  }
  friend bool operator<=(const RootMultiplicity& a, const RootMultiplicity& b) {
    return !(b < a);
  }

 private:
  RootMultiplicity() = default;
  explicit RootMultiplicity(std::size_t k) : value_(k) {}
  std::optional<std::size_t> value_;
};

RootMultiplicity zero_root_multiplicity(const Polynomial& f);

struct RationalRoots {
  std::vector<Rational> roots;  // distinct, ascending
  bool has_nonlinear_factor = false;
};

// Distinct rational roots of a nonzero polynomial; flags leftover factors
// of degree >= 1 without rational roots.
RationalRoots rational_roots(const Polynomial& f);

}  // namespace pqalg
