#include "pqalg/classify.hpp"

#include <set>

#include "pqalg/error.hpp"
#include "pqalg/oracle.hpp"

namespace pqalg {

Rational CoefficientProfile::x_at(std::size_t i) const { return i >= 1 && i <= x.size() ? x[i - 1] : Rational(0); }
Rational CoefficientProfile::y_at(std::size_t i) const { return i >= 1 && i <= y.size() ? y[i - 1] : Rational(0); }

bool CoefficientProfile::is_zero() const { return max_nonzero_order() == 0; }

std::size_t CoefficientProfile::max_nonzero_order() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i <= length(); ++i)
    if (!pqalg::is_zero(x_at(i)) || !pqalg::is_zero(y_at(i))) best = i;
  return best;
}

CoefficientProfile profile_of(const Element& a) {
  CoefficientProfile p;
  for (const auto& [w, c] : a.coefficients()) {
    auto& v = w.start == Letter::P ? p.x : p.y;
    if (v.size() < static_cast<std::size_t>(w.order)) v.resize(w.order);
    v[w.order - 1] = c;
  }
  std::size_t n = p.length();
  p.x.resize(n);
  p.y.resize(n);
  return p;
}

Element element_of(const CoefficientProfile& profile, const Presentation& pres) {
  Element e(pres);
  for (std::size_t i = 1; i <= profile.length(); ++i)
    for (Letter l : {Letter::P, Letter::Q}) {
      Rational c = l == Letter::P ? profile.x_at(i) : profile.y_at(i);
      if (pqalg::is_zero(c)) continue;
      Word w(l, static_cast<int>(i));
      if (!pres.is_basis_word(w))
        throw PreconditionViolation("profile has a nonzero coefficient on " + w.to_string() +
                                    ", which is not a basis word of " + pres.name());
      e.add_term(w, c);
    }
  return e;
}

PsiBundle psi_bundle(const CoefficientProfile& pr) {
  const std::size_t terms = pr.length() / 2 + 2;
  std::vector<Rational> f00(terms), f11(terms), f01(terms), f10(terms), f02(terms), f12(terms), f02p(terms),
      f12p(terms);
  for (std::size_t j = 0; j < terms; ++j) {
    f00[j] = j == 0 ? pr.x_at(1) : Rational(pr.x_at(2 * j) + pr.x_at(2 * j + 1));
    f11[j] = j == 0 ? pr.y_at(1) : Rational(pr.y_at(2 * j) + pr.y_at(2 * j + 1));
    f01[j] = pr.x_at(2 * j + 1) + pr.x_at(2 * j + 2);
    f10[j] = pr.y_at(2 * j + 1) + pr.y_at(2 * j + 2);
    f02[j] = pr.x_at(2 * j + 1);
    f12[j] = pr.y_at(2 * j + 1);
    f02p[j] = pr.x_at(2 * j + 2);
    f12p[j] = pr.y_at(2 * j + 2);
  }
  PsiBundle b;
  b.phi00 = Polynomial(f00);
  b.phi11 = Polynomial(f11);
  b.phi01 = Polynomial(f01);
  b.phi10 = Polynomial(f10);
  b.phi02 = Polynomial(f02);
  b.phi12 = Polynomial(f12);
  b.phi02p = Polynomial(f02p);
  b.phi12p = Polynomial(f12p);
  b.psi = b.phi00 * b.phi11 - (b.phi01 * b.phi10).shifted(1);
  b.psi1 = b.phi00 * b.phi12 - (b.phi10 * b.phi02p).shifted(1);
  b.psi2 = b.phi00 * b.phi12p - b.phi10 * b.phi02;
  return b;
}

RootMultiplicity root_zero_multiplicity(const Polynomial& f) { return zero_root_multiplicity(f); }

bool countzero_check(const CoefficientProfile& profile, std::size_t n) {
  if (!is_zero(profile.y_at(1))) throw PreconditionViolation("countzero_check needs y1 = 0");
  PsiBundle b = psi_bundle(profile);
  if (!zero_root_multiplicity(b.psi).at_least(n)) return true;
  return zero_root_multiplicity(b.psi1).at_least(n) && zero_root_multiplicity(b.psi2).at_least(n);
}

std::string verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Zero: return "Zero";
    case VerdictKind::Invertible: return "Invertible";
    case VerdictKind::ProperlyGroupInvertible: return "ProperlyGroupInvertible";
    case VerdictKind::DrazinOnly: return "DrazinOnly";
    case VerdictKind::Nilpotent: return "Nilpotent";
  }
  return "?";
}

int psi_threshold(int m, ZnVanishing vanishing, bool y1_zero) {
  Presentation z = Presentation::zn(m, vanishing);
  Letter start = y1_zero ? Letter::Q : Letter::P;
  for (int d = 0;; ++d)
    if (z.zn_word_vanishes(Word(start, 2 * d + 1))) return d;
}

int index_bound(int m, bool nilpotent) {
  if (m < 1) throw ParameterError("index_bound needs m >= 1");
  if (!nilpotent) return (m + 3) / 4;
  static const int extra[] = {0, 1, 1, 2};
  return 2 * (m / 4) + extra[m % 4];
}

namespace {

std::vector<Rational> sorted_set(std::initializer_list<Rational> values) {
  std::set<Rational> s(values);
  return {s.begin(), s.end()};
}

Verdict make(VerdictKind kind, std::vector<Rational> spectrum, std::string rule) {
  Verdict v;
  v.kind = kind;
  v.spectrum = std::move(spectrum);
  v.rule_fired = std::move(rule);
  return v;
}

// Restriction of the profile to words that survive in Z_m.
CoefficientProfile z_part(const CoefficientProfile& pr, const Presentation& z) {
  CoefficientProfile out;
  out.x.resize(pr.length());
  out.y.resize(pr.length());
  for (std::size_t i = 1; i <= pr.length(); ++i) {
    if (z.is_basis_word(Word(Letter::P, static_cast<int>(i)))) out.x[i - 1] = pr.x_at(i);
    if (z.is_basis_word(Word(Letter::Q, static_cast<int>(i)))) out.y[i - 1] = pr.y_at(i);
  }
  return out;
}

// Group invertibility of the Z_m part when exactly one of x1, y1 vanishes.
bool one_sided_psi_test(const CoefficientProfile& pr, int m, ZnVanishing v) {
  const bool y1_zero = is_zero(pr.y_at(1));
  const int thr = psi_threshold(m, v, y1_zero);
  return zero_root_multiplicity(psi_bundle(pr).psi).at_least(static_cast<std::size_t>(thr));
}

struct ParitySums {
  Rational x_odd, x_even, y_odd, y_even;
  Rational total() const { return x_odd + x_even + y_odd + y_even; }
};

ParitySums parity_sums(const CoefficientProfile& pr) {
  ParitySums s;
  for (std::size_t i = 1; i <= pr.length(); ++i) {
    (i % 2 == 1 ? s.x_odd : s.x_even) += pr.x_at(i);
    (i % 2 == 1 ? s.y_odd : s.y_even) += pr.y_at(i);
  }
  return s;
}

Verdict not_group_invertible(const CoefficientProfile& pr, const ClassifierSetting& s, bool nilpotent,
                             std::vector<Rational> spectrum, std::string rule) {
  Verdict v = make(nilpotent ? VerdictKind::Nilpotent : VerdictKind::DrazinOnly, std::move(spectrum), std::move(rule));
  v.index = oracle_index(pr, s);
  return v;
}

}  // namespace

Verdict classify_zm(const CoefficientProfile& pr, int m, bool unit, ZnVanishing vanishing) {
  Presentation z = Presentation::zn(m, vanishing);
  element_of(pr, z);  // horizon check
  const ClassifierSetting setting{unit ? SettingKind::ZmUnit : SettingKind::ZmNoUnit, m, vanishing};
  const std::string tag = unit ? "Thm-wrong2" : "Thm-Zm";
  const Rational x1 = pr.x_at(1), y1 = pr.y_at(1);
  if (pr.is_zero()) return make(VerdictKind::Zero, {Rational(0)}, tag + "-i");
  if (m == 1) {
    const Rational c = z.vanishing() == ZnVanishing::QP ? x1 : y1;
    if (unit) return make(VerdictKind::Invertible, {c}, "Zm-m1");
    return make(VerdictKind::ProperlyGroupInvertible, sorted_set({c, Rational(0)}), "Zm-m1");
  }
  std::vector<Rational> spectrum = unit ? sorted_set({x1, y1}) : sorted_set({x1, y1, Rational(0)});
  const bool x1z = is_zero(x1), y1z = is_zero(y1);
  if (!x1z && !y1z) {
    if (unit) return make(VerdictKind::Invertible, spectrum, tag + "-invertible");
    return make(VerdictKind::ProperlyGroupInvertible, spectrum, tag + "-ii");
  }
  const std::string one_sided = unit ? tag + "-ii" : tag + "-iii";
  if (x1z != y1z) {
    if (one_sided_psi_test(pr, m, z.vanishing())) return make(VerdictKind::ProperlyGroupInvertible, spectrum, one_sided);
    return not_group_invertible(pr, setting, false, spectrum, one_sided + "-fails");
  }
  return not_group_invertible(pr, setting, true, spectrum, tag + "-nilpotent");
}

namespace {

struct DirectSumFacts {
  Rational x1, y1;
  ParitySums sums;
  bool a0_zero;
  bool x1y1_nonzero;
  bool psi_condition;
  std::vector<Rational> spectrum;
};

DirectSumFacts direct_sum_facts(const CoefficientProfile& pr, int m, ZnVanishing vanishing) {
  if (m < 2) throw ParameterError("direct-sum classifiers need m >= 2, got " + std::to_string(m));
  Presentation z = Presentation::zn(m, vanishing);
  CoefficientProfile a0 = z_part(pr, z);
  DirectSumFacts f;
  f.x1 = pr.x_at(1);
  f.y1 = pr.y_at(1);
  f.sums = parity_sums(pr);
  f.a0_zero = a0.is_zero();
  f.x1y1_nonzero = !is_zero(f.x1) && !is_zero(f.y1);
  f.psi_condition = is_zero(f.x1) != is_zero(f.y1) && one_sided_psi_test(a0, m, z.vanishing());
  f.spectrum = sorted_set({Rational(0), f.x1, f.y1, f.sums.total()});
  return f;
}

}  // namespace

Verdict classify_zm_w3(const CoefficientProfile& pr, int m, ZnVanishing vanishing) {
  DirectSumFacts f = direct_sum_facts(pr, m, vanishing);
  const std::string tag = "Thm-ZmW3";
  const ParitySums& s = f.sums;
  const bool w_zero = is_zero(s.x_odd + s.y_even) && is_zero(s.x_even - s.y_even) && is_zero(s.y_odd + s.y_even);
  if (w_zero && f.a0_zero) return make(VerdictKind::Zero, {Rational(0)}, tag + "-i");
  const auto pgi = VerdictKind::ProperlyGroupInvertible;
  if (w_zero) {
    if (f.x1y1_nonzero) return make(pgi, f.spectrum, tag + "-ii-a");
    if (f.psi_condition) return make(pgi, f.spectrum, tag + "-ii-b");
  } else if (!is_zero(s.total())) {
    if (f.a0_zero) return make(pgi, f.spectrum, tag + "-iii-a");
    if (f.x1y1_nonzero) return make(pgi, f.spectrum, tag + "-iii-b");
    if (f.psi_condition) return make(pgi, f.spectrum, tag + "-iii-c");
  }
  const bool nilpotent = is_zero(f.x1) && is_zero(f.y1) && is_zero(s.total());
  return not_group_invertible(pr, {SettingKind::ZmW3, m, vanishing}, nilpotent, f.spectrum, tag + "-none");
}

Verdict classify_zm_w4(const CoefficientProfile& pr, int m, ZnVanishing vanishing) {
  DirectSumFacts f = direct_sum_facts(pr, m, vanishing);
  const std::string tag = "Thm-ZmW4";
  const ParitySums& s = f.sums;
  const bool w_zero = is_zero(s.x_odd) && is_zero(s.x_even) && is_zero(s.y_odd) && is_zero(s.y_even);
  if (w_zero && f.a0_zero) return make(VerdictKind::Zero, {Rational(0)}, tag + "-i");
  const bool product = s.x_odd * s.y_odd == s.x_even * s.y_even;
  const auto pgi = VerdictKind::ProperlyGroupInvertible;
  if (w_zero) {
    if (f.x1y1_nonzero) return make(pgi, f.spectrum, tag + "-ii-a");
    if (f.psi_condition) return make(pgi, f.spectrum, tag + "-ii-b");
  }
  if (!is_zero(s.total()) && product) {
    if (f.a0_zero) return make(pgi, f.spectrum, tag + "-iii-a");
    if (f.x1y1_nonzero) return make(pgi, f.spectrum, tag + "-iii-b");
    if (f.psi_condition) return make(pgi, f.spectrum, tag + "-iii-c");
  }
  // Only sufficient conditions are known here: defer to the rank oracle.
  Verdict v = oracle_verdict(pr, {SettingKind::ZmW4, m, vanishing});
  v.rule_fired = "UNDECIDED-BY-THEOREM";
  v.decided_by_theorem = false;
  return v;
}

}  // namespace pqalg
