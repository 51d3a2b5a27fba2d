#include "pqalg/word.hpp"

#include "pqalg/error.hpp"

namespace pqalg {

char letter_char(Letter l) { return l == Letter::P ? 'P' : 'Q'; }

Word::Word(Letter s, int n) : start(s), order(n) {
  if (n < 1) throw ParameterError("word order must be at least 1, got " + std::to_string(n));
}

std::string Word::to_string() const {
  std::string out;
  Letter l = start;
  for (int i = 0; i < order; ++i) {
    out += l == Letter::P ? 'p' : 'q';
    l = other(l);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  int n = a.last() == b.start ? a.order + b.order - 1 : a.order + b.order;
  return Word(a.start, n);
}

bool contains_power(const Word& w, Letter lead, int k) {
  if (k <= 0) return true;
  // Factor of length 2k starting with lead; one extra letter needed when the
  // word starts with the other letter.
  return w.start == lead ? w.order >= 2 * k : w.order >= 2 * k + 1;
}

}  // namespace pqalg
