#pragma once

#include <cstdint>
#include <string>

namespace pqalg {

enum class Letter : std::uint8_t { P, Q };

constexpr Letter other(Letter l) { return l == Letter::P ? Letter::Q : Letter::P; }
char letter_char(Letter l);  // 'P' or 'Q'

// Alternating product of the idempotents p and q: start letter and number of
// factors. (P,2k) is (pq)^k, (P,2k+1) is (pq)^k p.
struct Word {
  Letter start;
  int order;

  Word(Letter s, int n);

  Letter last() const { return order % 2 == 1 ? start : other(start); }
  std::string to_string() const;  // e.g. "pqp"

  // Basis ordering: by order, P-word first at equal order.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.start < b.start;
  }
  friend bool operator==(const Word& a, const Word& b) = default;
};

// Free idempotent product: equal letters merge at the junction.
Word concat(const Word& a, const Word& b);

// Whether the alternating word (x y)^k occurs as a factor of w, with x = lead.
bool contains_power(const Word& w, Letter lead, int k);

}  // namespace pqalg
