#include "pqalg/rational.hpp"

#include <cctype>

#include "pqalg/error.hpp"

namespace pqalg {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParameterError("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace pqalg
