#include "pqalg/spectrum.hpp"

#include "pqalg/error.hpp"
#include "pqalg/structure.hpp"

namespace pqalg {

Spectrum spectrum_oracle(const RationalMatrix& m) {
  if (!m.is_square()) throw ParameterError("spectrum of a non-square matrix");
  Spectrum s;
  if (m.rows() == 0) return s;
  RationalRoots r = rational_roots(characteristic_polynomial(m));
  s.eigenvalues = std::move(r.roots);
  s.has_irrational = r.has_nonlinear_factor;
  return s;
}

Spectrum spectrum_oracle(const Element& a, SpectrumAmbient ambient) {
  const Presentation& pres = a.presentation();
  if (ambient == SpectrumAmbient::Unitalization) return spectrum_oracle(unitalize(pres).left_regular(a));
  if (!internal_unit(pres))
    throw PreconditionViolation(pres.name() + " has no unit, use the unitalization for its spectrum");
  return spectrum_oracle(build_structure_table(pres).left_multiplication(a));
}

}  // namespace pqalg
