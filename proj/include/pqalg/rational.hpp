#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pqalg {

using Rational = mpq_class;

// Accepts "a" or "a/b" with optional leading sign; throws ParameterError.
Rational parse_rational(std::string_view text);

// Canonical text: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace pqalg
