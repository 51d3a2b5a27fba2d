#include "pqalg/coupling.hpp"

#include "pqalg/error.hpp"

namespace pqalg {

WordCongruence::WordCongruence(const std::vector<WordRelation>& relations, int max_order)
    : max_order_(max_order) {
  if (max_order < 1) throw ParameterError("congruence bound must be positive");
  parent_.resize(2 * static_cast<std::size_t>(max_order));
  for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = i;
  for (const auto& r : relations) {
    if (r.lhs.order > max_order || r.rhs.order > max_order)
      throw ParameterError("relation " + r.to_string() + " exceeds the congruence bound");
    unite(index(r.lhs), index(r.rhs));
  }
  const Word letters[] = {Word(Letter::P, 1), Word(Letter::Q, 1)};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int order = 1; order <= max_order_; ++order)
      for (Letter s : {Letter::P, Letter::Q}) {
        Word w(s, order);
        Word r = [&] {
          std::size_t root = find(index(w));
          return Word(root % 2 == 0 ? Letter::P : Letter::Q, static_cast<int>(root / 2) + 1);
        }();
        if (r == w) continue;
        for (const Word& x : letters) {
          Word a = concat(x, w), b = concat(x, r);
          if (a.order <= max_order_ && b.order <= max_order_) changed |= unite(index(a), index(b));
          a = concat(w, x);
          b = concat(r, x);
          if (a.order <= max_order_ && b.order <= max_order_) changed |= unite(index(a), index(b));
        }
      }
  }
}

std::size_t WordCongruence::index(const Word& w) const {
  if (w.order > max_order_) throw ParameterError("word " + w.to_string() + " exceeds the congruence bound");
  return 2 * static_cast<std::size_t>(w.order - 1) + (w.start == Letter::P ? 0 : 1);
}

std::size_t WordCongruence::find(std::size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

// Keeps the smaller index as root, so roots are least words in basis order.
bool WordCongruence::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  return true;
}

bool WordCongruence::equivalent(const Word& a, const Word& b) const { return find(index(a)) == find(index(b)); }

Word WordCongruence::representative(const Word& w) const {
  std::size_t root = find(index(w));
  return Word(root % 2 == 0 ? Letter::P : Letter::Q, static_cast<int>(root / 2) + 1);
}

std::string coupling_case_name(CouplingCase c) {
  switch (c) {
    case CouplingCase::PqPowerP: return "pq-power-p";
    case CouplingCase::QpPowerQ: return "qp-power-q";
    case CouplingCase::QpPower: return "qp-power";
  }
  return "?";
}

CouplingCase parse_coupling_case(const std::string& name) {
  for (CouplingCase c : {CouplingCase::PqPowerP, CouplingCase::QpPowerQ, CouplingCase::QpPower})
    if (coupling_case_name(c) == name) return c;
  throw ParameterError("unknown coupling case '" + name + "'");
}

CouplingWitness tightly_coupled_witness(CouplingCase which, int m, int k) {
  if (k < 1 || k >= m)
    throw ParameterError("tight coupling needs 1 <= k < m, got m=" + std::to_string(m) + " k=" + std::to_string(k));
  const int j = m - k;
  const Word pq_m(Letter::P, 2 * m);
  Word hyp_lhs(Letter::P, 1), der_lhs(Letter::P, 1), der_rhs(Letter::P, 1);
  switch (which) {
    case CouplingCase::PqPowerP:
      hyp_lhs = Word(Letter::P, 2 * j + 1);
      der_lhs = hyp_lhs;
      der_rhs = Word(Letter::P, 2 * j + 2);
      break;
    case CouplingCase::QpPowerQ:
      hyp_lhs = Word(Letter::Q, 2 * j + 1);
      der_lhs = hyp_lhs;
      der_rhs = Word(Letter::P, 2 * j + 2);
      break;
    case CouplingCase::QpPower:
      hyp_lhs = Word(Letter::Q, 2 * j);
      der_lhs = hyp_lhs;
      der_rhs = Word(Letter::P, 2 * j + 1);
      break;
  }
  CouplingWitness w{which, m, k, {hyp_lhs, pq_m}, {der_lhs, der_rhs}, false, der_lhs};
  WordCongruence cong({w.hypothesis}, 2 * m + 2);
  w.verified = cong.equivalent(der_lhs, der_rhs);
  w.normal_form = cong.representative(der_lhs);
  return w;
}

}  // namespace pqalg
