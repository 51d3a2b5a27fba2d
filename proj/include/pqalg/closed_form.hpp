#pragma once

#include <optional>

#include "pqalg/drazin.hpp"
#include "pqalg/element.hpp"
#include "pqalg/matrix.hpp"
#include "pqalg/models.hpp"

namespace pqalg {

// phi(i) = 1 for odd i, 0 for even i.
constexpr int parity(int i) { return i % 2 == 0 ? 0 : 1; }

struct ClosedFormCoefficients {
  Rational alpha;
  Rational lambda;
  int m;
  Rational a1, a2, b1, b2;
  // Throws ParameterError for alpha = 0 or lambda = 1.
  static ClosedFormCoefficients compute(const Rational& alpha, const Rational& lambda, int m);
};

// Left witness W with W a^{k+1} = a^k for a = alpha p + q under
// (pq)^{m-1} = (pq)^m: the element A (k = 2) for alpha != -1, B (k = 3) for
// alpha = -1.
Element alpha_pq_left_witness(const Rational& alpha, const Presentation& pres, int m);
// Right counterpart: a^{k+1} W' = a^k. For alpha = -1 this is B again.
Element alpha_pq_right_witness(const Rational& alpha, const Presentation& pres, int m);

// The hypothesis (pq)^{m-1} = (pq)^m must hold in pres; m defaults to the
// family parameter. Throws ParameterError (alpha = 0) or HypothesisViolation.
DrazinResult<Element> closed_form_drazin_alpha_pq(const Rational& alpha, const Presentation& pres,
                                                  std::optional<int> m = std::nullopt);
DrazinResult<RationalMatrix> closed_form_drazin_alpha_pq(const Rational& alpha, const ModelPair& pair, int m);

// Witness of the group inverse under lambda (pq)^{m-1} = (pq)^m, evaluated in
// a matrix model: A with a1, a2, b1, b2 for alpha != -1, B with the
// 1/(1 - lambda) tail for alpha = -1.
RationalMatrix lambda_witness(const Rational& alpha, const LambdaSpec& spec, const ModelPair& pair);
DrazinResult<RationalMatrix> closed_form_group_lambda(const Rational& alpha, const LambdaSpec& spec,
                                                      const ModelPair& pair);

}  // namespace pqalg
