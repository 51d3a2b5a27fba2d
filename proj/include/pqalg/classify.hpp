#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pqalg/element.hpp"
#include "pqalg/polynomial.hpp"
#include "pqalg/presentation.hpp"

namespace pqalg {

// Coefficients of A = x1 p + y1 q + x2 pq + y2 qp + ...: x_i multiplies the
// P-started word of order i, y_i the Q-started one.
struct CoefficientProfile {
  std::vector<Rational> x;
  std::vector<Rational> y;

  Rational x_at(std::size_t i) const;  // 1-based, zero past the end
  Rational y_at(std::size_t i) const;
  std::size_t length() const { return std::max(x.size(), y.size()); }
  bool is_zero() const;
  std::size_t max_nonzero_order() const;  // 0 for the zero profile
};

CoefficientProfile profile_of(const Element& a);
// Throws PreconditionViolation if the profile uses words vanishing in pres.
Element element_of(const CoefficientProfile& profile, const Presentation& pres);

struct PsiBundle {
  Polynomial phi00, phi11, phi01, phi10;
  Polynomial phi02, phi12, phi02p, phi12p;
  Polynomial psi, psi1, psi2;
};

PsiBundle psi_bundle(const CoefficientProfile& profile);
RootMultiplicity root_zero_multiplicity(const Polynomial& f);

// With y1 = 0: whether mult0(psi) >= n implies mult0(psi1) >= n and
// mult0(psi2) >= n. Throws PreconditionViolation if y1 != 0.
bool countzero_check(const CoefficientProfile& profile, std::size_t n);

enum class VerdictKind { Zero, Invertible, ProperlyGroupInvertible, DrazinOnly, Nilpotent };
std::string verdict_kind_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Zero;
  std::optional<int> index;        // DrazinOnly and Nilpotent only
  std::vector<Rational> spectrum;  // ascending, distinct
  std::string rule_fired;
  bool decided_by_theorem = true;  // false when the oracle supplied the kind

  bool group_invertible() const {
    return kind == VerdictKind::Zero || kind == VerdictKind::Invertible ||
           kind == VerdictKind::ProperlyGroupInvertible;
  }
};

// Least multiplicity of 0 as a root of psi making a one-sided element of
// Z_m group invertible: the least d with (qp)^d q = 0 when y1 = 0, with
// (pq)^d p = 0 when x1 = 0.
int psi_threshold(int m, ZnVanishing vanishing, bool y1_zero);

Verdict classify_zm(const CoefficientProfile& profile, int m, bool ambient_unit_in_algebra,
                    ZnVanishing vanishing = ZnVanishing::QP);
Verdict classify_zm_w3(const CoefficientProfile& profile, int m, ZnVanishing vanishing = ZnVanishing::QP);
Verdict classify_zm_w4(const CoefficientProfile& profile, int m, ZnVanishing vanishing = ZnVanishing::QP);

// Bound on the Drazin index of non-group-invertible elements of Z_m.
int index_bound(int m, bool nilpotent);

}  // namespace pqalg
