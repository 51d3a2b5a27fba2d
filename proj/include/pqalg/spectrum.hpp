#pragma once

#include <vector>

#include "pqalg/element.hpp"
#include "pqalg/matrix.hpp"

namespace pqalg {

struct Spectrum {
  std::vector<Rational> eigenvalues;  // distinct rational eigenvalues, ascending
  bool has_irrational = false;        // characteristic polynomial has a factor without rational roots
};

Spectrum spectrum_oracle(const RationalMatrix& m);

enum class SpectrumAmbient {
  Unitalization,  // L_a on the algebra with a unit adjoined
  Algebra,        // L_a on the algebra itself; requires an internal unit
};

Spectrum spectrum_oracle(const Element& a, SpectrumAmbient ambient = SpectrumAmbient::Unitalization);

}  // namespace pqalg
