#pragma once

#include <array>

#include "pqalg/element.hpp"
#include "pqalg/matrix.hpp"

namespace pqalg {

// Largest absolute entry of ab - ba, ab^2 - b and a^{k+1}b - a^k.
struct DrazinResiduals {
  Rational commute;
  Rational outer;
  Rational power;
  bool all_zero() const { return is_zero(commute) && is_zero(outer) && is_zero(power); }
};

template <class T>
struct DrazinResult {
  T inverse;
  int index = 0;
  DrazinResiduals residuals;
  bool minimal = true;  // the power identity fails at index - 1
  bool verified() const { return residuals.all_zero() && minimal; }
};

// Index: least k >= 0 with rank M^k = rank M^{k+1}, except that the zero
// matrix has index 1 and the empty matrix index 0.
DrazinResult<RationalMatrix> matrix_drazin(const RationalMatrix& m);
int matrix_drazin_index(const RationalMatrix& m);

DrazinResiduals drazin_residuals(const RationalMatrix& a, const RationalMatrix& d, int k);
DrazinResiduals drazin_residuals(const Element& a, const Element& d, int k);

// Via the left regular representation of the unitalization. The index is
// that of the unitalization, hence at least 1.
DrazinResult<Element> algebra_drazin(const Element& a);

// Least k >= 1 with a^{k+1} d = a^k, searched up to max_k; -1 if none.
int element_power_index(const Element& a, const Element& d, int max_k);

// Given a^{k1+1} x = a^{k1} and y a^{k2+1} = a^{k2}, rebuild a^D from the
// right witness and check it against the left one. Throws WitnessInvalid.
DrazinResult<Element> drazin_via_left_right(const Element& a, const Element& x, const Element& y, int k1, int k2);

}  // namespace pqalg
