#include "pqalg/verify.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "pqalg/closed_form.hpp"
#include "pqalg/coupling.hpp"
#include "pqalg/drazin.hpp"
#include "pqalg/error.hpp"
#include "pqalg/models.hpp"
#include "pqalg/oracle.hpp"
#include "pqalg/profile_gen.hpp"
#include "pqalg/spectrum.hpp"
#include "pqalg/structure.hpp"

namespace pqalg {

std::size_t SuiteResult::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

namespace {

constexpr Family kFamilies[] = {Family::F1, Family::F2, Family::F3, Family::F4};

int expected_dimension(Family f, int m) {
  switch (f) {
    case Family::F1: return 4 * m - 3;
    case Family::F2:
    case Family::F3: return 4 * m - 2;
    default: return 4 * m - 1;
  }
}

int expected_radical(Family f, int m) { return expected_dimension(f, m) - 3; }

void check(SuiteResult& r, std::string name, bool pass, std::string residual = "") {
  if (residual.empty()) residual = pass ? "0" : "1";
  r.checks.push_back({std::move(name), pass, std::move(residual)});
}

std::string counted(std::size_t bad, std::size_t total) { return std::to_string(bad) + "/" + std::to_string(total); }

SuiteResult dims_suite() {
  SuiteResult r{"dims", {}, {}, 0};
  for (Family f : kFamilies)
    for (int m = 2; m <= 8; ++m) {
      Presentation pres = Presentation::family(f, m);
      const int want = expected_dimension(f, m);
      const int got = dimension(pres);
      check(r, "dim " + pres.name() + " = " + std::to_string(want), got == want, std::to_string(got - want));
      if (m > 6) continue;
      ModelPair pair = build_family_pair(f, m);
      std::vector<RationalMatrix> images;
      for (const Word& w : pres.basis()) images.push_back(word_image(pair, w));
      const int rank = static_cast<int>(span_rank(images));
      check(r, "model rank " + pres.name() + " = " + std::to_string(want), rank == want, std::to_string(rank - want));
    }
  return r;
}

SuiteResult radical_suite() {
  SuiteResult r{"radical", {}, {}, 0};
  for (Family f : kFamilies)
    for (int m = 2; m <= 6; ++m) {
      Presentation pres = Presentation::family(f, m);
      const int want = expected_radical(f, m);
      const int got = static_cast<int>(radical_dimension(pres));
      check(r, "radical " + pres.name() + " = " + std::to_string(want), got == want, std::to_string(got - want));
    }
  return r;
}

std::vector<Rational> drazin_alphas() { return {Rational(1), Rational(2), Rational(-2), Rational(1, 3), Rational(-1)}; }

SuiteResult drazin_suite() {
  SuiteResult r{"drazin", {}, {}, 0};
  for (Family f : kFamilies)
    for (int m = 2; m <= 4; ++m) {
      Presentation pres = Presentation::family(f, m);
      for (const Rational& alpha : drazin_alphas()) {
        const std::string tag = pres.name() + " alpha=" + to_string(alpha);
        Element a = alpha * Element::p(pres) + Element::q(pres);
        DrazinResult<Element> cf = closed_form_drazin_alpha_pq(alpha, pres);
        DrazinResult<Element> oracle = algebra_drazin(a);
        const int bound = alpha == -1 ? 3 : 2;
        check(r, "closed form = oracle " + tag, cf.inverse == oracle.inverse,
              to_string((cf.inverse - oracle.inverse).max_abs_coefficient()));
        check(r, "residuals " + tag, cf.residuals.all_zero() && oracle.verified());
        check(r, "index <= " + std::to_string(bound) + " " + tag, oracle.index <= bound && cf.index <= bound,
              std::to_string(oracle.index));
      }
    }
  return r;
}

SuiteResult lambda_suite() {
  SuiteResult r{"lambda", {}, {}, 0};
  const std::vector<Rational> lambdas = {Rational(2), Rational(-1), Rational(1, 2), Rational(3)};
  const std::vector<Rational> alphas = {Rational(1), Rational(-1), Rational(2)};
  for (int m = 2; m <= 3; ++m)
    for (const Rational& lambda : lambdas) {
      LambdaSpec spec{m, lambda};
      ModelPair pair = build_lambda_pair(spec);
      for (const Rational& alpha : alphas) {
        const std::string tag = "m=" + std::to_string(m) + " lambda=" + to_string(lambda) + " alpha=" + to_string(alpha);
        DrazinResult<RationalMatrix> cf = closed_form_group_lambda(alpha, spec, pair);
        DrazinResult<RationalMatrix> oracle = matrix_drazin(alpha * pair.p + pair.q);
        check(r, "group inverse axioms " + tag, cf.residuals.all_zero());
        check(r, "closed form = matrix_drazin " + tag, cf.inverse == oracle.inverse,
              to_string((cf.inverse - oracle.inverse).max_abs_entry()));
        check(r, "index 1 " + tag, oracle.index == 1, std::to_string(oracle.index));
      }
    }
  return r;
}

std::vector<ClassifierSetting> classifier_settings() {
  std::vector<ClassifierSetting> out;
  for (SettingKind k : {SettingKind::ZmNoUnit, SettingKind::ZmUnit, SettingKind::ZmW3, SettingKind::ZmW4})
    for (int m = 3; m <= 12; ++m) out.push_back({k, m, ZnVanishing::QP});
  return out;
}

bool same_set(const std::vector<Rational>& a, const std::vector<Rational>& b) { return a == b; }

SuiteResult classify_suite(const VerifyOptions& opt) {
  SuiteResult r{"classify", {}, {}, 0};
  ProfileGenerator gen(opt.seed);
  for (const ClassifierSetting& s : classifier_settings()) {
    std::size_t decided = 0, disagree = 0, spectrum_bad = 0;
    std::map<std::string, int> rules;
    for (int i = 0; i < opt.profiles_per_setting; ++i) {
      CoefficientProfile p = gen.random(s);
      Verdict t = theorem_verdict(p, s);
      ++rules[t.rule_fired];
      if (!t.decided_by_theorem) continue;
      ++decided;
      Verdict o = oracle_verdict(p, s);
      const bool agree = t.kind == o.kind && (t.group_invertible() || t.index == o.index);
      if (!agree) ++disagree;
      Spectrum sp = spectrum_oracle(represent_profile(p, setting_model(s)));
      if (sp.has_irrational || !same_set(sp.eigenvalues, t.spectrum)) ++spectrum_bad;
    }
    check(r, "agree " + s.name(), disagree == 0 && decided > 0, counted(disagree, decided));
    check(r, "spectrum " + s.name(), spectrum_bad == 0 && decided > 0, counted(spectrum_bad, decided));
    std::ostringstream note;
    note << s.name() << ": decided " << decided << "/" << opt.profiles_per_setting << ";";
    for (const auto& [rule, n] : rules) note << " " << rule << "=" << n;
    r.notes.push_back(note.str());
  }
  return r;
}

SuiteResult index_suite(const VerifyOptions& opt) {
  SuiteResult r{"index", {}, {}, 0};
  ProfileGenerator gen(opt.seed);
  std::map<int, int> max_by_residue;
  for (int m = 3; m <= 12; ++m) {
    ClassifierSetting s{SettingKind::ZmNoUnit, m, ZnVanishing::QP};
    const ModelPair& pair = setting_model(s);
    const int nil_bound = index_bound(m, true), bound = index_bound(m, false);
    std::size_t nil = 0, nonnil = 0, nil_bad = 0, nonnil_bad = 0;
    int nil_max = 0, nonnil_max = 0;
    for (int i = 0; i < opt.profiles_per_setting; ++i) {
      CoefficientProfile p = gen.random(s);
      RationalMatrix a = represent_profile(p, pair);
      const int k = std::max(matrix_drazin_index(a), 1);
      if (a.pow(static_cast<unsigned>(k)).is_zero()) {
        ++nil;
        nil_max = std::max(nil_max, k);
        if (k > nil_bound) ++nil_bad;
      } else {
        ++nonnil;
        nonnil_max = std::max(nonnil_max, k);
        if (k > bound) ++nonnil_bad;
      }
      max_by_residue[m % 4] = std::max(max_by_residue[m % 4], k);
    }
    const std::string tag = "m=" + std::to_string(m);
    check(r, "nilpotent index <= " + std::to_string(nil_bound) + " " + tag, nil_bad == 0, counted(nil_bad, nil));
    check(r, "non-nilpotent index <= " + std::to_string(bound) + " " + tag, nonnil_bad == 0,
          counted(nonnil_bad, nonnil));
    r.notes.push_back(tag + ": max nilpotent index " + std::to_string(nil_max) + ", max other " +
                      std::to_string(nonnil_max));
  }
  for (int res = 0; res < 4; ++res)
    check(r, "index > 1 attained for m = " + std::to_string(res) + " mod 4", max_by_residue[res] > 1,
          std::to_string(max_by_residue[res]));
  return r;
}

SuiteResult countzero_suite(const VerifyOptions& opt) {
  SuiteResult r{"countzero", {}, {}, 0};
  ProfileGenerator gen(opt.seed);
  std::size_t bad = 0, finite = 0;
  for (int i = 0; i < opt.countzero_samples; ++i) {
    ClassifierSetting s{SettingKind::ZmNoUnit, gen.uniform(2, 16), ZnVanishing::QP};
    ProfileMode mode = gen.uniform(0, 1) == 0 ? ProfileMode::OneSided : ProfileMode::Multiplicity;
    CoefficientProfile p = gen.generate(s, mode, true);
    PsiBundle b = psi_bundle(p);
    RootMultiplicity m0 = zero_root_multiplicity(b.psi);
    if (!m0.is_infinite()) ++finite;
    const bool ok = m0 <= zero_root_multiplicity(b.psi1) && m0 <= zero_root_multiplicity(b.psi2) &&
                    countzero_check(p, m0.is_infinite() ? p.length() + 1 : m0.value());
    if (!ok) ++bad;
  }
  check(r, "mult0(psi) <= min(mult0(psi1), mult0(psi2))", bad == 0,
        counted(bad, static_cast<std::size_t>(opt.countzero_samples)));
  r.notes.push_back("profiles with finite mult0(psi): " + std::to_string(finite));
  return r;
}

SuiteResult example1_suite() {
  SuiteResult r{"example1", {}, {}, 0};
  ModelPair pair = build_example_z3();
  check(r, "q1 p1 = 0", (pair.q * pair.p).is_zero());
  RationalMatrix s = pair.p + pair.q;
  check(r, "rank(P1+Q1) = 2", rank(s) == 2, std::to_string(rank(s)));
  check(r, "rank((P1+Q1)^2) = 2", rank(s * s) == 2, std::to_string(rank(s * s)));
  Presentation z3 = Presentation::zn(3, ZnVanishing::QP);
  std::vector<RationalMatrix> images;
  for (const Word& w : z3.basis()) images.push_back(word_image(pair, w));
  const std::size_t base = span_rank(images);
  images.push_back(RationalMatrix::identity(pair.size()));
  check(r, "identity outside the span", span_rank(images) == base + 1);
  auto unit = internal_unit(z3);
  bool unit_ok = unit && represent(*unit, pair) == RationalMatrix::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  check(r, "internal unit = diag(1,1,0)", unit_ok);
  return r;
}

SuiteResult rewrites_suite() {
  SuiteResult r{"rewrites", {}, {}, 0};
  for (CouplingCase c : {CouplingCase::PqPowerP, CouplingCase::QpPowerQ, CouplingCase::QpPower})
    for (int m = 2; m <= 6; ++m)
      for (int k = 1; k < m; ++k) {
        CouplingWitness w = tightly_coupled_witness(c, m, k);
        check(r, coupling_case_name(c) + " m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " +
                     w.derived.to_string(),
              w.verified);
      }
  return r;
}

SuiteResult models_suite() {
  SuiteResult r{"models", {}, {}, 0};
  auto record = [&r](const ModelPair& pair) {
    RelationReport rep = verify_relations(pair);
    std::string residual = std::to_string(rep.failures().size());
    check(r, "relations " + pair.label, rep.all_pass(), residual);
  };
  for (int n = 1; n <= 16; ++n)
    for (AmbientUnit u : {AmbientUnit::Included, AmbientUnit::Excluded}) {
      record(build_zn_pair(n, u, ZnVanishing::QP));
      if (n % 2 == 1) record(build_zn_pair(n, u, ZnVanishing::PQ));
    }
  for (Family f : kFamilies)
    for (int m = 2; m <= 6; ++m) record(build_family_pair(f, m));
  record(build_w_pair(WType::W3));
  record(build_w_pair(WType::W4));
  record(build_example_z3());
  for (int m = 2; m <= 4; ++m)
    for (const Rational& l : {Rational(0), Rational(2), Rational(-1), Rational(1, 2), Rational(3)})
      record(build_lambda_pair({m, l}));
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dims",      "radical",  "drazin",   "lambda", "classify",
                                                 "index",     "countzero", "example1", "rewrites", "models"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  if (name == "dims") r = dims_suite();
  else if (name == "radical") r = radical_suite();
  else if (name == "drazin") r = drazin_suite();
  else if (name == "lambda") r = lambda_suite();
  else if (name == "classify") r = classify_suite(options);
  else if (name == "index") r = index_suite(options);
  else if (name == "countzero") r = countzero_suite(options);
  else if (name == "example1") r = example1_suite();
  else if (name == "rewrites") r = rewrites_suite();
  else if (name == "models") r = models_suite();
  else throw ParameterError("unknown suite '" + name + "'");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace pqalg
