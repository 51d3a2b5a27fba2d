#include "pqalg/serialize.hpp"

#include "pqalg/error.hpp"

namespace pqalg {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParameterError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParameterError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParameterError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Letter parse_letter(const std::string& s) {
  if (s == "P" || s == "p") return Letter::P;
  if (s == "Q" || s == "q") return Letter::Q;
  throw ParameterError("letter must be P or Q, got '" + s + "'");
}

std::string letter_string(Letter l) { return std::string(1, letter_char(l)); }

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational_json(r));
  return out;
}

std::vector<Rational> rational_list_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParameterError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParameterError("rational must be a string \"a/b\" or an integer, got " + j.dump());
}

Json word_json(const Word& w) { return Json{{"start", letter_string(w.start)}, {"order", w.order}}; }

Word word_from_json(const Json& j) {
  int order = int_field(j, "order");
  if (order < 1) throw ParameterError("word order must be >= 1");
  return Word(parse_letter(string_field(j, "start")), order);
}

Json presentation_json(const Presentation& p) {
  Json j;
  j["family"] = family_name(p.family());
  if (p.is_zn()) {
    j["n"] = p.parameter();
    j["vanishing"] = vanishing_name(p.vanishing());
  } else {
    j["m"] = p.parameter();
  }
  return j;
}

Presentation presentation_from_json(const Json& j) {
  Family f = parse_family(string_field(j, "family"));
  if (f == Family::Zn) {
    int n = j.contains("n") ? int_field(j, "n") : int_field(j, "m");
    ZnVanishing v = j.contains("vanishing") ? parse_vanishing(string_field(j, "vanishing")) : ZnVanishing::QP;
    if (n % 2 == 0 && v == ZnVanishing::PQ)
      throw ParameterError("the vanishing flag only applies to odd n, got n = " + std::to_string(n));
    return Presentation::zn(n, v);
  }
  return Presentation::family(f, int_field(j, "m"));
}

Json element_json(const Element& a) {
  Json j = presentation_json(a.presentation());
  Json coeffs = Json::array();
  for (const auto& [w, c] : a.coefficients())
    coeffs.push_back({{"start", letter_string(w.start)},
                      {"order", w.order},
                      {"num", c.get_num().get_str()},
                      {"den", c.get_den().get_str()}});
  j["coeffs"] = coeffs;
  return j;
}

Element element_from_json(const Json& j) {
  Presentation pres = presentation_from_json(j);
  Element e(pres);
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw ParameterError("coeffs must be an array");
  for (const auto& c : coeffs) {
    Word w = word_from_json(c);
    Rational r;
    if (c.contains("value")) {
      r = rational_from_json(c.at("value"));
    } else {
      Rational num = rational_from_json(field(c, "num"));
      Rational den = c.contains("den") ? rational_from_json(c.at("den")) : Rational(1);
      if (is_zero(den)) throw ParameterError("zero denominator in coefficient");
      r = num / den;
    }
    e.add_term(w, r);
  }
  return e;
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParameterError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) rows.push_back(rational_list_from_json(row, "matrix row"));
  for (const auto& row : rows)
    if (row.size() != rows.front().size()) throw ParameterError("matrix rows have different lengths");
  return RationalMatrix::from_rows(rows);
}

Json polynomial_json(const Polynomial& f) { return rational_list(f.coefficients()); }

Json multiplicity_json(const RootMultiplicity& m) {
  if (m.is_infinite()) return "INFINITE";
  return m.value();
}

Json profile_json(const CoefficientProfile& p) { return Json{{"x", rational_list(p.x)}, {"y", rational_list(p.y)}}; }

CoefficientProfile profile_from_json(const Json& j) {
  CoefficientProfile p;
  p.x = rational_list_from_json(field(j, "x"), "x");
  p.y = rational_list_from_json(field(j, "y"), "y");
  return p;
}

Json psi_bundle_json(const PsiBundle& b) {
  return Json{{"phi00", polynomial_json(b.phi00)},   {"phi11", polynomial_json(b.phi11)},
              {"phi01", polynomial_json(b.phi01)},   {"phi10", polynomial_json(b.phi10)},
              {"phi02", polynomial_json(b.phi02)},   {"phi12", polynomial_json(b.phi12)},
              {"phi02p", polynomial_json(b.phi02p)}, {"phi12p", polynomial_json(b.phi12p)},
              {"psi", polynomial_json(b.psi)},       {"psi1", polynomial_json(b.psi1)},
              {"psi2", polynomial_json(b.psi2)},
              {"mult0_psi", multiplicity_json(zero_root_multiplicity(b.psi))}};
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["kind"] = verdict_kind_name(v.kind);
  j["index"] = v.index ? Json(*v.index) : Json(nullptr);
  j["spectrum"] = rational_list(v.spectrum);
  j["rule_fired"] = v.rule_fired;
  j["decided_by_theorem"] = v.decided_by_theorem;
  return j;
}

Json residuals_json(const DrazinResiduals& r) {
  return Json{{"commute", rational_json(r.commute)}, {"outer", rational_json(r.outer)}, {"power", rational_json(r.power)}};
}

Json drazin_json(const DrazinResult<Element>& r) {
  return Json{{"inverse", element_json(r.inverse)},
              {"index", r.index},
              {"residuals", residuals_json(r.residuals)},
              {"minimal", r.minimal},
              {"verified", r.verified()}};
}

Json drazin_json(const DrazinResult<RationalMatrix>& r) {
  return Json{{"inverse", matrix_json(r.inverse)},
              {"index", r.index},
              {"residuals", residuals_json(r.residuals)},
              {"minimal", r.minimal},
              {"verified", r.verified()}};
}

Json closed_form_coefficients_json(const ClosedFormCoefficients& c) {
  return Json{{"alpha", rational_json(c.alpha)}, {"lambda", rational_json(c.lambda)}, {"m", c.m},
              {"a1", rational_json(c.a1)},       {"a2", rational_json(c.a2)},         {"b1", rational_json(c.b1)},
              {"b2", rational_json(c.b2)}};
}

Json relation_report_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  return Json{{"all_pass", r.all_pass()}, {"checks", checks}};
}

Json model_intent_json(const ModelIntent& intent) {
  if (const auto* p = std::get_if<Presentation>(&intent)) return presentation_json(*p);
  if (const auto* l = std::get_if<LambdaSpec>(&intent))
    return Json{{"lambda", rational_json(l->lambda)}, {"m", l->m}};
  if (const auto* w = std::get_if<WType>(&intent)) return Json{{"w", wtype_name(*w)}};
  const auto& zw = std::get<ZPlusW>(intent);
  return Json{{"z", presentation_json(zw.z)}, {"w", wtype_name(zw.w)}};
}

Json model_pair_json(const ModelPair& pair) {
  return Json{{"label", pair.label},
              {"intended", model_intent_json(pair.intended)},
              {"size", pair.size()},
              {"contains_ambient_unit", pair.contains_ambient_unit},
              {"P", matrix_json(pair.p)},
              {"Q", matrix_json(pair.q)},
              {"relations", relation_report_json(verify_relations(pair))}};
}

Json structure_table_json(const StructureTable& t) {
  const auto& basis = t.presentation().basis();
  Json words = Json::array();
  for (const auto& w : basis) words.push_back(w.to_string());
  Json table = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Json cell = Json::object();
      for (const auto& [w, c] : t.product(i, j).coefficients()) cell[w.to_string()] = rational_json(c);
      row.push_back(cell);
    }
    table.push_back(row);
  }
  return Json{{"presentation", presentation_json(t.presentation())},
              {"dimension", t.dimension()},
              {"basis", words},
              {"table", table}};
}

Json spectrum_json(const Spectrum& s) {
  return Json{{"eigenvalues", rational_list(s.eigenvalues)}, {"has_irrational", s.has_irrational}};
}

Json coupling_witness_json(const CouplingWitness& w) {
  return Json{{"case", coupling_case_name(w.which)},
              {"m", w.m},
              {"k", w.k},
              {"hypothesis", w.hypothesis.to_string()},
              {"derived", w.derived.to_string()},
              {"normal_form", w.normal_form.to_string()},
              {"verified", w.verified}};
}

}  // namespace pqalg
