#include "pqalg/presentation.hpp"

#include <algorithm>

#include "pqalg/error.hpp"

namespace pqalg {

std::string family_name(Family f) {
  switch (f) {
    case Family::Zn: return "Zn";
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::Zn, Family::F1, Family::F2, Family::F3, Family::F4})
    if (family_name(f) == name) return f;
  throw ParameterError("unknown family '" + name + "'");
}

std::string vanishing_name(ZnVanishing v) { return v == ZnVanishing::QP ? "QP" : "PQ"; }

ZnVanishing parse_vanishing(const std::string& name) {
  if (name == "QP") return ZnVanishing::QP;
  if (name == "PQ") return ZnVanishing::PQ;
  throw ParameterError("unknown vanishing flag '" + name + "' (expected QP or PQ)");
}

Presentation Presentation::zn(int n, ZnVanishing vanishing) {
  if (n < 1) throw ParameterError("Zn needs n >= 1, got " + std::to_string(n));
  return Presentation(Family::Zn, n, vanishing);
}

Presentation Presentation::family(Family f, int m) {
  if (f == Family::Zn) throw ParameterError("use Presentation::zn for the Zn family");
  if (m < 2) throw ParameterError(family_name(f) + " needs m >= 2, got " + std::to_string(m));
  return Presentation(f, m, ZnVanishing::QP);
}

Presentation::Presentation(Family f, int param, ZnVanishing v) : family_(f), param_(param), vanishing_(v) {
  // Odd-n flag is meaningless elsewhere; normalise so equality ignores it.
  if (f != Family::Zn || param % 2 == 0) vanishing_ = ZnVanishing::QP;
  std::vector<Word> words;
  int max_order = f == Family::Zn ? zn_k() : (f == Family::F4 ? 2 * param : 2 * param - 1);
  for (int order = 1; order <= max_order; ++order)
    for (Letter l : {Letter::P, Letter::Q}) {
      Word w(l, order);
      if (is_basis_word(w)) words.push_back(w);
    }
  basis_ = std::make_shared<const std::vector<Word>>(std::move(words));
}

int Presentation::zn_k() const {
  if (family_ != Family::Zn) throw PreconditionViolation("zn_k on a non-Zn presentation");
  return param_ % 2 == 0 ? param_ / 2 + 1 : (param_ + 1) / 2;
}

bool Presentation::zn_word_vanishes(const Word& w) const {
  int k = zn_k();
  if (w.order > k) return true;
  if (w.order < k) return false;
  if (param_ % 2 == 0) return true;
  Letter dead = vanishing_ == ZnVanishing::QP ? Letter::Q : Letter::P;
  return w.start == dead;
}

bool Presentation::is_basis_word(const Word& w) const {
  const int m = param_;
  switch (family_) {
    case Family::Zn: return !zn_word_vanishes(w);
    case Family::F1: return w.order <= 2 * m - 1 && !(w.start == Letter::P && w.order == 2 * m - 1);
    case Family::F2:
    case Family::F3: return w.order <= 2 * m - 1;
    case Family::F4: return w.order <= 2 * m - 1 || (w.start == Letter::Q && w.order == 2 * m);
  }
  return false;
}

std::optional<std::size_t> Presentation::basis_index(const Word& w) const {
  const auto& b = *basis_;
  auto it = std::lower_bound(b.begin(), b.end(), w);
  if (it == b.end() || !(*it == w)) return std::nullopt;
  return static_cast<std::size_t>(it - b.begin());
}

std::string Presentation::name() const {
  if (family_ == Family::Zn) {
    std::string s = "Z" + std::to_string(param_);
    if (param_ % 2 == 1) s += vanishing_ == ZnVanishing::QP ? "[(qp)_k=0]" : "[(pq)_k=0]";
    return s;
  }
  return family_name(family_) + "(" + std::to_string(param_) + ")";
}

int dimension(const Presentation& pres) { return static_cast<int>(pres.dimension()); }

}  // namespace pqalg
