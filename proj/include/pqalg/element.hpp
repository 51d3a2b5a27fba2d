#pragma once

#include <map>
#include <string>
#include <vector>

#include "pqalg/presentation.hpp"
#include "pqalg/rational.hpp"
#include "pqalg/word.hpp"

namespace pqalg {

// Sparse combination of basis words; zero coefficients are never stored.
class Element {
 public:
  explicit Element(Presentation pres);
  static Element word(const Presentation& pres, Word w);  // normal form of w
  static Element p(const Presentation& pres) { return word(pres, Word(Letter::P, 1)); }
  static Element q(const Presentation& pres) { return word(pres, Word(Letter::Q, 1)); }
  static Element from_dense(const Presentation& pres, const std::vector<Rational>& coords);

  const Presentation& presentation() const { return pres_; }
  const std::map<Word, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(const Word& w) const;
  bool is_zero() const { return coeffs_.empty(); }
  std::vector<Rational> to_dense() const;

  // w must be a basis word of the presentation.
  void add_term(const Word& w, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) {
    return a.pres_ == b.pres_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;
  Rational max_abs_coefficient() const;

 private:
  void require_same(const Element& o) const;

  Presentation pres_;
  std::map<Word, Rational> coeffs_;
};

// Expansion of an arbitrary word in the basis of pres.
Element normal_form(const Word& w, const Presentation& pres);

// Algebra product; throws PresentationMismatch.
Element multiply(const Element& a, const Element& b);
Element power(const Element& a, unsigned k);  // k >= 1

}  // namespace pqalg
