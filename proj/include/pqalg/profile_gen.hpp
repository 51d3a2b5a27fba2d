#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pqalg/classify.hpp"
#include "pqalg/oracle.hpp"

namespace pqalg {

enum class ProfileMode {
  Random,       // independent small rationals
  Zero,
  Nilpotent,    // x1 = y1 = 0
  OneSided,     // exactly one of x1, y1 is zero
  Multiplicity, // one-sided with mult0(psi) pushed to a target near the threshold
  WPartZero,    // direct sums: the W summand of the element vanishes
  WProduct,     // direct sums: x_odd y_odd = x_even y_even
  ZPartZero,    // direct sums: only words vanishing in Z_m carry weight
};

std::string profile_mode_name(ProfileMode m);

// Number of coefficient slots per letter used for a setting: the top order of
// Z_m, plus two more orders for direct sums.
std::size_t profile_length(const ClassifierSetting& s);

class ProfileGenerator {
 public:
  explicit ProfileGenerator(std::uint64_t seed) : rng_(seed) {}

  ProfileMode pick_mode(const ClassifierSetting& s);
  // force_y1_zero picks the vanishing side of one-sided modes.
  CoefficientProfile generate(const ClassifierSetting& s, ProfileMode mode,
                              std::optional<bool> force_y1_zero = std::nullopt);
  CoefficientProfile random(const ClassifierSetting& s) { return generate(s, pick_mode(s)); }

  Element random_element(const Presentation& pres, double density = 0.7);
  Rational small_rational(bool nonzero = false);
  int uniform(int lo, int hi);  // inclusive

 private:
  // Coordinates (x1..xL, y1..yL). Returns a random solution of rows * v = rhs
  // with the given coordinates pinned, or nullopt if inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<std::optional<Rational>>& pinned,
                                             const std::vector<std::vector<Rational>>& rows,
                                             const std::vector<Rational>& rhs);

  std::mt19937_64 rng_;
};

}  // namespace pqalg
