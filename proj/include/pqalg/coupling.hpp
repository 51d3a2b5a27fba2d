#pragma once

#include <string>
#include <vector>

#include "pqalg/word.hpp"

namespace pqalg {

struct WordRelation {
  Word lhs;
  Word rhs;
  std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
};

// Congruence on alternating words of order <= max_order generated by the
// given relations and closed under multiplication by p and q on either side
// (products leaving the bound are dropped, so every derived equality is a
// genuine consequence).
class WordCongruence {
 public:
  WordCongruence(const std::vector<WordRelation>& relations, int max_order);

  int max_order() const { return max_order_; }
  bool equivalent(const Word& a, const Word& b) const;
  // Least word of the class in basis order: the normal form of w.
  Word representative(const Word& w) const;

 private:
  std::size_t index(const Word& w) const;
  std::size_t find(std::size_t i) const;
  bool unite(std::size_t a, std::size_t b);

  int max_order_;
  mutable std::vector<std::size_t> parent_;
};

// Hypotheses that force tight coupling:
//   PqPowerP: (pq)^{m-k} p = (pq)^m
//   QpPowerQ: (qp)^{m-k} q = (pq)^m
//   QpPower:  (qp)^{m-k}   = (pq)^m
enum class CouplingCase { PqPowerP, QpPowerQ, QpPower };

std::string coupling_case_name(CouplingCase c);
CouplingCase parse_coupling_case(const std::string& name);

struct CouplingWitness {
  CouplingCase which;
  int m;
  int k;
  WordRelation hypothesis;
  WordRelation derived;     // neighbour equality, orders differ by one
  bool verified = false;    // derived relation holds in the congruence
  Word normal_form;         // common representative of both sides
};

// Throws ParameterError unless 1 <= k < m.
CouplingWitness tightly_coupled_witness(CouplingCase which, int m, int k);

}  // namespace pqalg
