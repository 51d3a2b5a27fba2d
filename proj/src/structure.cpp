#include "pqalg/structure.hpp"

#include "pqalg/error.hpp"

namespace pqalg {

StructureTable::StructureTable(const Presentation& pres) : pres_(pres) {
  const auto& basis = pres_.basis();
  const std::size_t n = basis.size();
  table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table_.push_back(normal_form(concat(basis[i], basis[j]), pres_));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element left(pres_), right(pres_);
        for (const auto& [w, c] : product(i, j).coefficients()) {
          Element t = product(*pres_.basis_index(w), k);
          left += c * t;
        }
        for (const auto& [w, c] : product(j, k).coefficients()) {
          Element t = product(i, *pres_.basis_index(w));
          right += c * t;
        }
        if (!(left == right))
          throw AssociativityViolation("(" + basis[i].to_string() + "*" + basis[j].to_string() + ")*" +
                                       basis[k].to_string() + " = " + left.to_string() + " but " +
                                       basis[i].to_string() + "*(" + basis[j].to_string() + "*" +
                                       basis[k].to_string() + ") = " + right.to_string() + " in " +
                                       pres_.name());
      }
}

Element StructureTable::multiply(const Element& a, const Element& b) const {
  if (!(a.presentation() == pres_) || !(b.presentation() == pres_))
    throw PresentationMismatch("element does not belong to " + pres_.name());
  Element out(pres_);
  for (const auto& [wa, ca] : a.coefficients()) {
    std::size_t i = *pres_.basis_index(wa);
    for (const auto& [wb, cb] : b.coefficients()) {
      std::size_t j = *pres_.basis_index(wb);
      Rational c = ca * cb;
      for (const auto& [w, x] : product(i, j).coefficients()) out.add_term(w, c * x);
    }
  }
  return out;
}

RationalMatrix StructureTable::left_multiplication(const Element& a) const {
  const std::size_t n = dimension();
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Element col = multiply(a, Element::word(pres_, pres_.basis()[j]));
    for (const auto& [w, c] : col.coefficients()) m(*pres_.basis_index(w), j) = c;
  }
  return m;
}

RationalMatrix StructureTable::right_multiplication(const Element& a) const {
  const std::size_t n = dimension();
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Element col = multiply(Element::word(pres_, pres_.basis()[j]), a);
    for (const auto& [w, c] : col.coefficients()) m(*pres_.basis_index(w), j) = c;
  }
  return m;
}

StructureTable build_structure_table(const Presentation& pres) { return StructureTable(pres); }

Unitalization::Unitalization(const Presentation& pres) : pres_(pres), table_(pres) {}

std::vector<Rational> Unitalization::embed(const Element& a, const Rational& unit_coeff) const {
  if (!(a.presentation() == pres_)) throw PresentationMismatch("element does not belong to " + pres_.name());
  std::vector<Rational> v(dimension());
  v[0] = unit_coeff;
  for (const auto& [w, c] : a.coefficients()) v[*pres_.basis_index(w) + 1] = c;
  return v;
}

Element Unitalization::project(const std::vector<Rational>& coords) const {
  if (coords.size() != dimension()) throw PreconditionViolation("coordinate vector has wrong length");
  if (!is_zero(coords[0]))
    throw PreconditionViolation("element has a nonzero unit component and is not in " + pres_.name());
  return Element::from_dense(pres_, std::vector<Rational>(coords.begin() + 1, coords.end()));
}

RationalMatrix Unitalization::left_regular(const Element& a, const Rational& unit_coeff) const {
  const std::size_t n = pres_.dimension();
  RationalMatrix l(n + 1, n + 1);
  std::vector<Rational> col0 = embed(a, unit_coeff);
  for (std::size_t r = 0; r <= n; ++r) l(r, 0) = col0[r];
  RationalMatrix la = table_.left_multiplication(a);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) l(r + 1, c + 1) = la(r, c);
  if (!is_zero(unit_coeff))
    for (std::size_t i = 1; i <= n; ++i) l(i, i) += unit_coeff;
  return l;
}

std::vector<Rational> Unitalization::multiply(const std::vector<Rational>& u,
                                              const std::vector<Rational>& v) const {
  if (u.size() != dimension() || v.size() != dimension())
    throw PreconditionViolation("coordinate vector has wrong length");
  Element a = Element::from_dense(pres_, std::vector<Rational>(u.begin() + 1, u.end()));
  Element b = Element::from_dense(pres_, std::vector<Rational>(v.begin() + 1, v.end()));
  Element ab = table_.multiply(a, b) + u[0] * b + v[0] * a;
  return embed(ab, u[0] * v[0]);
}

Unitalization unitalize(const Presentation& pres) { return Unitalization(pres); }

Element alternating_unit_candidate(const Presentation& pres) {
  Element e(pres);
  for (const Word& w : pres.basis()) e.add_term(w, w.order % 2 == 1 ? 1 : -1);
  return e;
}

std::optional<Element> internal_unit(const Presentation& pres) {
  Element cand = alternating_unit_candidate(pres);
  for (const Word& w : pres.basis()) {
    Element x = Element::word(pres, w);
    if (!(multiply(cand, x) == x) || !(multiply(x, cand) == x)) return std::nullopt;
  }
  return cand;
}

std::size_t radical_dimension(const Presentation& pres) {
  Unitalization u(pres);
  const std::size_t n = u.dimension();
  std::vector<RationalMatrix> reps;
  reps.reserve(n);
  reps.push_back(RationalMatrix::identity(n));
  for (const Word& w : pres.basis()) reps.push_back(u.left_regular(Element::word(pres, w)));
  RationalMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!is_zero(reps[i](r, c))) t += reps[i](r, c) * reps[j](c, r);
      form(i, j) = t;
      form(j, i) = t;
    }
  return n - rank(form);
}

}  // namespace pqalg
