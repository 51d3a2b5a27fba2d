#include "pqalg/drazin.hpp"

#include <algorithm>

#include "pqalg/error.hpp"
#include "pqalg/structure.hpp"

namespace pqalg {

int matrix_drazin_index(const RationalMatrix& m) {
  if (!m.is_square()) throw PreconditionViolation("Drazin inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 0;
  if (m.is_zero()) return 1;
  std::size_t prev = n;
  RationalMatrix pw = m;
  for (int k = 0;; ++k) {
    std::size_t r = rank(pw);
    if (r == prev) return k;
    prev = r;
    pw = pw * m;
  }
}

DrazinResiduals drazin_residuals(const RationalMatrix& a, const RationalMatrix& d, int k) {
  DrazinResiduals res;
  res.commute = (a * d - d * a).max_abs_entry();
  res.outer = (a * d * d - d).max_abs_entry();
  RationalMatrix ak = a.pow(static_cast<unsigned>(k));
  res.power = (ak * a * d - ak).max_abs_entry();
  return res;
}

DrazinResult<RationalMatrix> matrix_drazin(const RationalMatrix& m) {
  const int index = matrix_drazin_index(m);
  const std::size_t n = m.rows();
  DrazinResult<RationalMatrix> out{RationalMatrix(n, n), index, {}, true};
  if (n == 0) return out;
  if (index == 0) {
    out.inverse = *inverse(m);
  } else {
    // Cline: M = B1 C1, C1 B1 = B2 C2, ... until C_k B_k is invertible or
    // empty; then M^D = B1..Bk (C_k B_k)^{-(k+1)} C_k..C1.
    std::vector<RankFactorization> steps;
    RationalMatrix cur = m;
    for (int i = 0; i < index; ++i) {
      steps.push_back(rank_factorization(cur));
      cur = steps.back().right * steps.back().left;
    }
    if (cur.rows() == 0) {
      out.inverse = RationalMatrix(n, n);
    } else {
      auto inv = inverse(cur);
      if (!inv) throw Error(ErrorCode::Internal, "core block not invertible after index steps");
      RationalMatrix core = inv->pow(static_cast<unsigned>(index + 1));
      RationalMatrix lhs = steps.front().left;
      for (std::size_t i = 1; i < steps.size(); ++i) lhs = lhs * steps[i].left;
      RationalMatrix rhs = steps.back().right;
      for (std::size_t i = steps.size() - 1; i-- > 0;) rhs = rhs * steps[i].right;
      out.inverse = lhs * core * rhs;
    }
  }
  out.residuals = drazin_residuals(m, out.inverse, index);
  if (index > 0) {
    RationalMatrix prev = m.pow(static_cast<unsigned>(index - 1));
    out.minimal = !(prev * m * out.inverse == prev);
  }
  return out;
}

DrazinResiduals drazin_residuals(const Element& a, const Element& d, int k) {
  if (k < 1) throw PreconditionViolation("element Drazin index is at least 1");
  DrazinResiduals res;
  res.commute = (a * d - d * a).max_abs_coefficient();
  res.outer = (a * d * d - d).max_abs_coefficient();
  Element ak = power(a, static_cast<unsigned>(k));
  res.power = (ak * a * d - ak).max_abs_coefficient();
  return res;
}

int element_power_index(const Element& a, const Element& d, int max_k) {
  Element ak = a;
  for (int k = 1; k <= max_k; ++k) {
    if (ak * a * d == ak) return k;
    ak = ak * a;
  }
  return -1;
}

DrazinResult<Element> algebra_drazin(const Element& a) {
  const Presentation& pres = a.presentation();
  Unitalization u(pres);
  RationalMatrix l = u.left_regular(a);
  DrazinResult<RationalMatrix> md = matrix_drazin(l);
  std::vector<Rational> col(u.dimension());
  for (std::size_t r = 0; r < u.dimension(); ++r) col[r] = md.inverse(r, 0);
  DrazinResult<Element> out{u.project(col), md.index, {}, true};
  out.residuals = drazin_residuals(a, out.inverse, out.index);
  if (out.index > 1) {
    Element prev = power(a, static_cast<unsigned>(out.index - 1));
    out.minimal = !(prev * a * out.inverse == prev);
  }
  return out;
}

DrazinResult<Element> drazin_via_left_right(const Element& a, const Element& x, const Element& y, int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw ParameterError("witness exponents must be >= 1");
  Element ak1 = power(a, static_cast<unsigned>(k1));
  if (!(ak1 * a * x == ak1))
    throw WitnessInvalid("right witness fails a^" + std::to_string(k1 + 1) + " x = a^" + std::to_string(k1));
  Element ak2 = power(a, static_cast<unsigned>(k2));
  if (!(y * ak2 * a == ak2))
    throw WitnessInvalid("left witness fails y a^" + std::to_string(k2 + 1) + " = a^" + std::to_string(k2));
  const int k = std::max(k1, k2);
  Element ak = power(a, static_cast<unsigned>(k));
  Element from_right = ak * power(x, static_cast<unsigned>(k + 1));
  Element from_left = power(y, static_cast<unsigned>(k + 1)) * ak;
  if (!(from_right == from_left))
    throw WitnessInvalid("a^k x^(k+1) and y^(k+1) a^k disagree");
  DrazinResult<Element> out{from_right, 0, {}, true};
  out.index = element_power_index(a, from_right, k);
  if (out.index < 0) throw WitnessInvalid("reconstructed inverse fails the power identity");
  out.residuals = drazin_residuals(a, from_right, out.index);
  return out;
}

}  // namespace pqalg
