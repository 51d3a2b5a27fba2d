#include "pqalg/polynomial.hpp"

#include <algorithm>
#include <set>

#include "pqalg/error.hpp"

namespace pqalg {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && pqalg::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial r = *this;
  Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (pqalg::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (pqalg::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (pqalg::is_zero(coeffs_[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + pqalg::to_string(coeffs_[i]) + ")";
    if (i == 1) out += "t";
    if (i > 1) out += "t^" + std::to_string(i);
  }
  return out;
}

PolynomialDivision divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionViolation("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  std::size_t db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {Polynomial(), a};
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (pqalg::is_zero(rem[i])) continue;
    Rational f = rem[i] / b.leading();
    quot[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.degree() <= 0) return f.monic();
  Polynomial g = gcd(f, f.derivative());
  return divide(f, g).quotient.monic();
}

std::string RootMultiplicity::to_string() const {
  return is_infinite() ? "INFINITE" : std::to_string(*value_);
}

RootMultiplicity zero_root_multiplicity(const Polynomial& f) {
  if (f.is_zero()) return RootMultiplicity::infinite();
  std::size_t k = 0;
  while (pqalg::is_zero(f.coeff(k))) ++k;
  return RootMultiplicity::finite(k);
}

namespace {

// Positive divisors of |n| by trial division; n != 0.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  const mpz_class trial_limit = 100000000;
  for (mpz_class d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (d > trial_limit)
      throw Error(ErrorCode::Internal, "coefficient too large for rational root search");
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

RationalRoots rational_roots(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionViolation("rational_roots of the zero polynomial");
  Polynomial g = squarefree_part(f);
  std::set<Rational> found;
  if (g.degree() >= 1 && pqalg::is_zero(g.coeff(0))) {
    found.insert(Rational(0));
    g = divide(g, Polynomial({Rational(0), Rational(1)})).quotient;
  }
  if (g.degree() >= 1) {
    mpz_class denom_lcm = 1;
    for (const auto& c : g.coefficients()) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : g.coefficients()) {
      Rational scaled = c * denom_lcm;
      ints.push_back(scaled.get_num());
    }
    auto lead_divs = divisors(ints.back());
    auto const_divs = divisors(ints.front());
    for (const auto& a : const_divs) {
      for (const auto& b : lead_divs) {
        for (int sign : {1, -1}) {
          if (g.degree() < 1) break;
          Rational r(mpz_class(a * sign), b);
          r.canonicalize();
          if (found.count(r)) continue;
          if (pqalg::is_zero(g(r))) {
            found.insert(r);
            g = divide(g, Polynomial({-r, Rational(1)})).quotient;
          }
        }
      }
    }
  }
  RationalRoots out;
  out.roots.assign(found.begin(), found.end());
  out.has_nonlinear_factor = g.degree() >= 1;
  return out;
}

}  // namespace pqalg
