#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pqalg/word.hpp"

namespace pqalg {

enum class Family { Zn, F1, F2, F3, F4 };

// For odd n = 2k-1 exactly one order-k word vanishes in Z_n: QP means the
// Q-started word (qp)_k is zero, PQ the P-started word (pq)_k.
enum class ZnVanishing { QP, PQ };

std::string family_name(Family f);
Family parse_family(const std::string& name);  // "Zn", "F1".."F4"
std::string vanishing_name(ZnVanishing v);
ZnVanishing parse_vanishing(const std::string& name);

class Presentation {
 public:
  static Presentation zn(int n, ZnVanishing vanishing = ZnVanishing::QP);
  static Presentation family(Family f, int m);

  Family family() const { return family_; }
  int parameter() const { return param_; }  // n for Zn, m otherwise
  ZnVanishing vanishing() const { return vanishing_; }
  bool is_zn() const { return family_ == Family::Zn; }

  std::size_t dimension() const { return basis_->size(); }
  const std::vector<Word>& basis() const { return *basis_; }
  bool is_basis_word(const Word& w) const;
  std::optional<std::size_t> basis_index(const Word& w) const;

  // Zn only: k with n = 2k-2 or n = 2k-1. Words of order > k vanish, both
  // order-k words vanish for even n, one of them for odd n.
  int zn_k() const;
  bool zn_word_vanishes(const Word& w) const;

  std::string name() const;  // "Z3", "F1(2)"

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.family_ == b.family_ && a.param_ == b.param_ && a.vanishing_ == b.vanishing_;
  }

 private:
  Presentation(Family f, int param, ZnVanishing v);

  Family family_;
  int param_;
  ZnVanishing vanishing_;
  std::shared_ptr<const std::vector<Word>> basis_;
};

int dimension(const Presentation& pres);

}  // namespace pqalg
