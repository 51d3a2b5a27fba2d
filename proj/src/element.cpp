#include "pqalg/element.hpp"

#include "pqalg/error.hpp"

namespace pqalg {

Element::Element(Presentation pres) : pres_(std::move(pres)) {}

Element Element::word(const Presentation& pres, Word w) { return normal_form(w, pres); }

Element Element::from_dense(const Presentation& pres, const std::vector<Rational>& coords) {
  if (coords.size() != pres.dimension())
    throw PreconditionViolation("dense vector length " + std::to_string(coords.size()) +
                                " does not match dimension of " + pres.name());
  Element e(pres);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!pqalg::is_zero(coords[i])) e.coeffs_.emplace(pres.basis()[i], coords[i]);
  return e;
}

Rational Element::coefficient(const Word& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<Rational> Element::to_dense() const {
  std::vector<Rational> v(pres_.dimension());
  for (const auto& [w, c] : coeffs_) v[*pres_.basis_index(w)] = c;
  return v;
}

void Element::add_term(const Word& w, const Rational& c) {
  if (!pres_.is_basis_word(w))
    throw ParameterError("word " + w.to_string() + " is not a basis word of " + pres_.name());
  if (pqalg::is_zero(c)) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = coeffs_.emplace(w, v);
  if (!inserted) {
    it->second += v;
    if (pqalg::is_zero(it->second)) coeffs_.erase(it);
  }
}

void Element::require_same(const Element& o) const {
  if (!(pres_ == o.pres_))
    throw PresentationMismatch("elements of " + pres_.name() + " and " + o.pres_.name());
}

Element& Element::operator+=(const Element& o) {
  require_same(o);
  for (const auto& [w, c] : o.coeffs_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(o);
  for (const auto& [w, c] : o.coeffs_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (pqalg::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [w, x] : coeffs_) x *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

std::string Element::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : coeffs_) {
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += pqalg::to_string(mag) + "*";
    out += w.to_string();
  }
  return out;
}

Rational Element::max_abs_coefficient() const {
  Rational best = 0;
  for (const auto& [w, c] : coeffs_)
    if (abs(c) > best) best = abs(c);
  return best;
}

Element normal_form(const Word& input, const Presentation& pres) {
  Element out(pres);
  if (pres.is_zn()) {
    if (!pres.zn_word_vanishes(input)) out.add_term(input, 1);
    return out;
  }
  const int m = pres.parameter();
  const Family f = pres.family();
  const bool q_collapse = f == Family::F1 || f == Family::F3;
  Word w = input;
  while (contains_power(w, Letter::P, m) || (q_collapse && contains_power(w, Letter::Q, m))) w.order -= 2;
  if (pres.is_basis_word(w)) {
    out.add_term(w, 1);
    return out;
  }
  if (f == Family::F1 && w == Word(Letter::P, 2 * m - 1)) {
    out.add_term(Word(Letter::Q, 2 * m - 2), 1);
    out.add_term(Word(Letter::P, 2 * m - 2), 1);
    out.add_term(Word(Letter::Q, 2 * m - 1), -1);
    return out;
  }
  if (f == Family::F2 && w == Word(Letter::Q, 2 * m)) {
    out.add_term(Word(Letter::Q, 2 * m - 1), 1);
    out.add_term(Word(Letter::P, 2 * m - 1), 1);
    out.add_term(Word(Letter::P, 2 * m - 2), -1);
    return out;
  }
  throw Error(ErrorCode::Internal, "no normal form for " + input.to_string() + " in " + pres.name());
}

Element multiply(const Element& a, const Element& b) {
  if (!(a.presentation() == b.presentation()))
    throw PresentationMismatch("cannot multiply elements of " + a.presentation().name() + " and " +
                               b.presentation().name());
  Element out(a.presentation());
  for (const auto& [wa, ca] : a.coefficients())
    for (const auto& [wb, cb] : b.coefficients()) {
      Rational c = ca * cb;
      const Element nf = normal_form(concat(wa, wb), a.presentation());
      for (const auto& [w, x] : nf.coefficients()) out.add_term(w, c * x);
    }
  return out;
}

Element power(const Element& a, unsigned k) {
  if (k == 0) throw ParameterError("power exponent must be >= 1; the unit need not lie in the algebra");
  Element r = a;
  for (unsigned i = 1; i < k; ++i) r = multiply(r, a);
  return r;
}

}  // namespace pqalg
