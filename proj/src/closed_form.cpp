#include "pqalg/closed_form.hpp"

#include <functional>

#include "pqalg/error.hpp"

namespace pqalg {

ClosedFormCoefficients ClosedFormCoefficients::compute(const Rational& alpha, const Rational& lambda, int m) {
  if (is_zero(alpha)) throw ParameterError("alpha must be nonzero");
  if (lambda == 1) throw ParameterError("lambda must differ from 1");
  if (m < 2) throw ParameterError("m must be at least 2");
  ClosedFormCoefficients c{alpha, lambda, m, 0, 0, 0, 0};
  const Rational mm = m;
  const Rational den = alpha * (lambda - 1) * (lambda - 1);
  c.a1 = (alpha + 1) * (mm * (lambda - 1) + 1 - 2 * lambda) / den;
  c.a2 = (mm * (1 + alpha - lambda - alpha * lambda) + (lambda - alpha + 2 * alpha * lambda)) / den;
  c.b1 = (mm * (alpha + 1) * (1 - lambda) + alpha * lambda + 2 * lambda - 1) / den;
  c.b2 = -(mm * (1 + alpha - alpha * lambda - lambda) + lambda * (alpha + 1)) / den;
  return c;
}

namespace {

// Sum over i = 1..2m-3 shared by every witness.
template <class V>
V alternating_sum(const Rational& alpha, int m, const std::function<V(const Word&)>& word, V acc) {
  for (int i = 1; i <= 2 * m - 3; ++i) {
    const int h = i / 2;
    const Rational sign = i % 2 == 1 ? 1 : -1;
    Rational cp = sign * (Rational(h) + Rational(h + parity(i)) / alpha);
    Rational cq = sign * (Rational(h + parity(i)) + Rational(h) / alpha);
    acc += cp * word(Word(Letter::P, i));
    acc += cq * word(Word(Letter::Q, i));
  }
  return acc;
}

template <class V>
V odd_difference_sum(int m, const std::function<V(const Word&)>& word, V acc) {
  for (int i = 1; i <= 2 * m - 3; i += 2) {
    acc += word(Word(Letter::Q, i));
    acc -= word(Word(Letter::P, i));
  }
  return acc;
}

template <class V>
V left_witness(const Rational& alpha, int m, const std::function<V(const Word&)>& word, V zero) {
  if (alpha == -1) return odd_difference_sum<V>(m, word, zero);
  const Rational mm1 = m - 1;
  const Rational s = (1 + alpha) * (1 + alpha);
  V acc = alternating_sum<V>(alpha, m, word, zero);
  acc += Rational(-(mm1 + mm1 / alpha)) * word(Word(Letter::Q, 2 * m - 2));
  acc += Rational(-(mm1 / alpha - alpha / s)) * word(Word(Letter::P, 2 * m - 2));
  acc += Rational(mm1 / alpha + 1 / s) * word(Word(Letter::Q, 2 * m - 1));
  return acc;
}

template <class V>
V right_witness(const Rational& alpha, int m, const std::function<V(const Word&)>& word, V zero) {
  if (alpha == -1) return odd_difference_sum<V>(m, word, zero);
  const Rational mm1 = m - 1;
  const Rational s = (1 + alpha) * (1 + alpha);
  V acc = alternating_sum<V>(alpha, m, word, zero);
  acc += Rational(-(mm1 + mm1 / alpha)) * word(Word(Letter::Q, 2 * m - 2));
  acc += Rational(1 / s + 1 - Rational(m)) * word(Word(Letter::P, 2 * m - 2));
  acc += Rational(mm1 + alpha / s) * word(Word(Letter::P, 2 * m - 1));
  return acc;
}

void require_alpha(const Rational& alpha) {
  if (is_zero(alpha)) throw ParameterError("alpha must be nonzero");
}

}  // namespace

Element alpha_pq_left_witness(const Rational& alpha, const Presentation& pres, int m) {
  require_alpha(alpha);
  std::function<Element(const Word&)> word = [&](const Word& w) { return normal_form(w, pres); };
  return left_witness<Element>(alpha, m, word, Element(pres));
}

Element alpha_pq_right_witness(const Rational& alpha, const Presentation& pres, int m) {
  require_alpha(alpha);
  std::function<Element(const Word&)> word = [&](const Word& w) { return normal_form(w, pres); };
  return right_witness<Element>(alpha, m, word, Element(pres));
}

DrazinResult<Element> closed_form_drazin_alpha_pq(const Rational& alpha, const Presentation& pres,
                                                  std::optional<int> m_opt) {
  require_alpha(alpha);
  if (!m_opt && pres.is_zn()) throw ParameterError("m is required for Zn presentations");
  const int m = m_opt ? *m_opt : pres.parameter();
  if (m < 2) throw ParameterError("m must be at least 2");
  if (!(normal_form(Word(Letter::P, 2 * m), pres) == normal_form(Word(Letter::P, 2 * m - 2), pres)))
    throw HypothesisViolation("(pq)^" + std::to_string(m - 1) + " != (pq)^" + std::to_string(m) + " in " +
                              pres.name());
  Element a = alpha * Element::p(pres) + Element::q(pres);
  Element w = alpha_pq_left_witness(alpha, pres, m);
  const unsigned k = alpha == -1 ? 3 : 2;
  DrazinResult<Element> out{power(w, k + 1) * power(a, k), 0, {}, true};
  out.index = element_power_index(a, out.inverse, static_cast<int>(k));
  if (out.index < 0) {
    out.index = static_cast<int>(k);
    out.minimal = false;
  }
  out.residuals = drazin_residuals(a, out.inverse, out.index);
  return out;
}

DrazinResult<RationalMatrix> closed_form_drazin_alpha_pq(const Rational& alpha, const ModelPair& pair, int m) {
  require_alpha(alpha);
  if (m < 2) throw ParameterError("m must be at least 2");
  RationalMatrix pq = pair.p * pair.q;
  if (!(pq.pow(static_cast<unsigned>(m - 1)) == pq.pow(static_cast<unsigned>(m))))
    throw HypothesisViolation("(PQ)^" + std::to_string(m - 1) + " != (PQ)^" + std::to_string(m) + " in " +
                              pair.label);
  std::function<RationalMatrix(const Word&)> word = [&](const Word& w) { return word_image(pair, w); };
  RationalMatrix a = alpha * pair.p + pair.q;
  RationalMatrix w = left_witness<RationalMatrix>(alpha, m, word, RationalMatrix(pair.size(), pair.size()));
  const unsigned k = alpha == -1 ? 3 : 2;
  DrazinResult<RationalMatrix> out{w.pow(k + 1) * a.pow(k), 0, {}, true};
  out.index = matrix_drazin_index(a);
  out.residuals = drazin_residuals(a, out.inverse, out.index);
  return out;
}

RationalMatrix lambda_witness(const Rational& alpha, const LambdaSpec& spec, const ModelPair& pair) {
  require_alpha(alpha);
  spec.validate();
  const int m = spec.m;
  std::function<RationalMatrix(const Word&)> word = [&](const Word& w) { return word_image(pair, w); };
  RationalMatrix zero(pair.size(), pair.size());
  if (alpha == -1) {
    RationalMatrix acc = odd_difference_sum<RationalMatrix>(m, word, zero);
    acc += Rational(1 / (1 - spec.lambda)) * (word(Word(Letter::Q, 2 * m - 1)) - word(Word(Letter::P, 2 * m - 1)));
    return acc;
  }
  ClosedFormCoefficients c = ClosedFormCoefficients::compute(alpha, spec.lambda, m);
  const Rational mm1 = m - 1;
  RationalMatrix acc = alternating_sum<RationalMatrix>(alpha, m, word, zero);
  acc += Rational(-(mm1 + mm1 / alpha)) * word(Word(Letter::Q, 2 * m - 2));
  acc += c.a1 * word(Word(Letter::P, 2 * m - 2));
  acc += c.a2 * word(Word(Letter::P, 2 * m - 1));
  acc += c.b1 * word(Word(Letter::Q, 2 * m - 1));
  acc += c.b2 * word(Word(Letter::Q, 2 * m));
  return acc;
}

DrazinResult<RationalMatrix> closed_form_group_lambda(const Rational& alpha, const LambdaSpec& spec,
                                                      const ModelPair& pair) {
  require_alpha(alpha);
  spec.validate();
  RationalMatrix pq = pair.p * pair.q;
  RationalMatrix top = pq.pow(static_cast<unsigned>(spec.m - 1));
  if (!(spec.lambda * top == top * pq))
    throw HypothesisViolation("lambda (PQ)^(m-1) != (PQ)^m in " + pair.label);
  RationalMatrix a = alpha * pair.p + pair.q;
  RationalMatrix w = lambda_witness(alpha, spec, pair);
  DrazinResult<RationalMatrix> out{w * w * a, 1, {}, true};
  out.residuals = drazin_residuals(a, out.inverse, 1);
  out.minimal = !(a * out.inverse == RationalMatrix::identity(pair.size()));
  return out;
}

}  // namespace pqalg
