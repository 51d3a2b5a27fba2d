#pragma once

#include <optional>
#include <vector>

#include "pqalg/element.hpp"
#include "pqalg/matrix.hpp"
#include "pqalg/presentation.hpp"

namespace pqalg {

// Products of all ordered basis pairs; associativity is verified on
// construction.
class StructureTable {
 public:
  explicit StructureTable(const Presentation& pres);

  const Presentation& presentation() const { return pres_; }
  std::size_t dimension() const { return pres_.dimension(); }
  const Element& product(std::size_t i, std::size_t j) const { return table_[i * dimension() + j]; }
  Element multiply(const Element& a, const Element& b) const;

  // Matrix of x -> a x (or x a) on the algebra basis, columns = images.
  RationalMatrix left_multiplication(const Element& a) const;
  RationalMatrix right_multiplication(const Element& a) const;

 private:
  Presentation pres_;
  std::vector<Element> table_;
};

StructureTable build_structure_table(const Presentation& pres);

// The algebra with a formal unit e adjoined. Coordinates: index 0 is e,
// index i+1 is basis word i.
class Unitalization {
 public:
  explicit Unitalization(const Presentation& pres);

  const Presentation& presentation() const { return pres_; }
  std::size_t dimension() const { return pres_.dimension() + 1; }
  std::vector<Rational> embed(const Element& a, const Rational& unit_coeff = 0) const;
  // Requires the e-coordinate to vanish.
  Element project(const std::vector<Rational>& coords) const;

  // Left regular representation of s*e + a.
  RationalMatrix left_regular(const Element& a, const Rational& unit_coeff = 0) const;
  std::vector<Rational> multiply(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

 private:
  Presentation pres_;
  StructureTable table_;
};

Unitalization unitalize(const Presentation& pres);

// p + q - pq - qp + ... restricted to the basis, if it is a two-sided unit.
std::optional<Element> internal_unit(const Presentation& pres);
Element alternating_unit_candidate(const Presentation& pres);

// Dimension of the radical of the unitalization, which equals the radical of
// the algebra: kernel of the trace form tr(L_u L_v).
std::size_t radical_dimension(const Presentation& pres);

}  // namespace pqalg
