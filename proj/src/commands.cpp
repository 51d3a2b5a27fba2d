#include "pqalg/commands.hpp"

#include <chrono>
#include <sstream>

#include "pqalg/closed_form.hpp"
#include "pqalg/drazin.hpp"
#include "pqalg/error.hpp"
#include "pqalg/models.hpp"
#include "pqalg/oracle.hpp"
#include "pqalg/profile_gen.hpp"
#include "pqalg/structure.hpp"
#include "pqalg/verify.hpp"

namespace pqalg {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(Json& sink, bool enabled) : sink_(sink), enabled_(enabled) {}
  template <class F>
  auto step(const std::string& name, F&& f) {
    auto start = Clock::now();
    auto finish = [&] {
      if (enabled_)
        sink_.push_back({{"step", name}, {"seconds", std::chrono::duration<double>(Clock::now() - start).count()}});
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      finish();
    } else {
      auto r = f();
      finish();
      return r;
    }
  }

 private:
  Json& sink_;
  bool enabled_;
};

void add_check(RunReport& r, const std::string& name, bool pass, const std::string& residual = "") {
  r.checks.push_back({{"name", name}, {"pass", pass}, {"residual", residual.empty() ? (pass ? "0" : "1") : residual}});
}

bool flag(const Json& req, const char* key) { return req.contains(key) && req.at(key).is_boolean() && req.at(key).get<bool>(); }

int int_opt(const Json& req, const char* key, int fallback) {
  if (!req.contains(key) || req.at(key).is_null()) return fallback;
  if (!req.at(key).is_number_integer()) throw ParameterError(std::string("'") + key + "' must be an integer");
  return req.at(key).get<int>();
}

std::string string_opt(const Json& req, const char* key, const std::string& fallback) {
  if (!req.contains(key) || req.at(key).is_null()) return fallback;
  if (!req.at(key).is_string()) throw ParameterError(std::string("'") + key + "' must be a string");
  return req.at(key).get<std::string>();
}

std::uint64_t seed_of(const Json& req) {
  if (!req.contains("seed") || req.at("seed").is_null()) throw ParameterError("random input needs an explicit seed");
  if (!req.at("seed").is_number_unsigned() && !req.at("seed").is_number_integer())
    throw ParameterError("'seed' must be a non-negative integer");
  long long s = req.at("seed").get<long long>();
  if (s < 0) throw ParameterError("'seed' must be a non-negative integer");
  return static_cast<std::uint64_t>(s);
}

Presentation presentation_of(const Json& req) {
  if (!req.contains("family")) throw ParameterError("missing --family");
  Json p{{"family", req.at("family")}};
  for (const char* key : {"n", "m", "vanishing"})
    if (req.contains(key) && !req.at(key).is_null()) p[key] = req.at(key);
  return presentation_from_json(p);
}

// The classifier setting realising the requested presentation. The four
// families are direct sums Z (+) W with the Z summand read off the family.
struct ClassifyTarget {
  Presentation pres;
  ClassifierSetting setting;
};

ClassifyTarget classify_target(const Json& req) {
  Presentation pres = presentation_of(req);
  if (pres.is_zn()) {
    const std::string w = string_opt(req, "w", "");
    SettingKind kind = flag(req, "ambient_unit") ? SettingKind::ZmUnit : SettingKind::ZmNoUnit;
    if (w == "W3") kind = SettingKind::ZmW3;
    else if (w == "W4") kind = SettingKind::ZmW4;
    else if (!w.empty()) throw ParameterError("'w' must be W3 or W4");
    if (!w.empty() && flag(req, "ambient_unit")) throw ParameterError("--ambient-unit does not apply to direct sums");
    return {pres, {kind, pres.parameter(), pres.vanishing()}};
  }
  const int m = pres.parameter();
  switch (pres.family()) {
    case Family::F1: return {pres, {SettingKind::ZmW3, 4 * m - 6, ZnVanishing::QP}};
    case Family::F2: return {pres, {SettingKind::ZmW3, 4 * m - 5, ZnVanishing::PQ}};
    case Family::F3: return {pres, {SettingKind::ZmW4, 4 * m - 6, ZnVanishing::QP}};
    default: return {pres, {SettingKind::ZmW4, 4 * m - 5, ZnVanishing::PQ}};
  }
}

void cmd_classify(RunReport& r, const Json& req, Timer& timer) {
  ClassifyTarget t = classify_target(req);
  CoefficientProfile profile;
  if (flag(req, "zero")) {
    profile = CoefficientProfile{};
  } else if (flag(req, "random")) {
    ProfileGenerator gen(seed_of(req));
    profile = gen.random(t.setting);
    // the setting reaches one order past the F1-F3 bases
    for (std::size_t i = 0; i < profile.length(); ++i) {
      const int o = static_cast<int>(i) + 1;
      if (i < profile.x.size() && !t.pres.is_basis_word(Word(Letter::P, o))) profile.x[i] = 0;
      if (i < profile.y.size() && !t.pres.is_basis_word(Word(Letter::Q, o))) profile.y[i] = 0;
    }
  } else if (req.contains("profile")) {
    profile = profile_from_json(req.at("profile"));
  } else {
    Json p{{"x", req.value("x", Json::array())}, {"y", req.value("y", Json::array())}};
    profile = profile_from_json(p);
  }
  element_of(profile, t.pres);  // every coefficient must sit on a basis word

  Verdict v = timer.step("theorem", [&] { return theorem_verdict(profile, t.setting); });
  Verdict o = timer.step("oracle", [&] { return oracle_verdict(profile, t.setting); });
  r.results["presentation"] = presentation_json(t.pres);
  r.results["setting"] = t.setting.name();
  r.results["profile"] = profile_json(profile);
  r.results["verdict"] = verdict_json(v);
  r.results["oracle"] = verdict_json(o);
  r.results["mult0_psi"] = multiplicity_json(zero_root_multiplicity(psi_bundle(profile).psi));
  const bool agree = v.kind == o.kind && (v.group_invertible() || v.index == o.index);
  add_check(r, "verdict agrees with rank oracle", agree);
  if (v.decided_by_theorem) add_check(r, "spectrum agrees with oracle", v.spectrum == o.spectrum);
}

Rational rational_arg(const Json& req, const char* key) {
  if (!req.contains(key)) throw ParameterError(std::string("missing --") + key);
  return rational_from_json(req.at(key));
}

void cmd_drazin(RunReport& r, const Json& req, Timer& timer) {
  const std::string method = string_opt(req, "method", "both");
  if (method != "oracle" && method != "closed-form" && method != "both")
    throw ParameterError("--method must be oracle, closed-form or both");
  const bool want_oracle = method != "closed-form", want_cf = method != "oracle";

  if (req.contains("lambda") && !req.at("lambda").is_null()) {
    LambdaSpec spec{int_opt(req, "m", 2), rational_arg(req, "lambda")};
    const Rational alpha = req.contains("alpha") ? rational_arg(req, "alpha") : Rational(1);
    ModelPair pair = timer.step("model", [&] { return build_lambda_pair(spec); });
    r.results["model"] = pair.label;
    r.results["element"] = matrix_json(alpha * pair.p + pair.q);
    std::optional<DrazinResult<RationalMatrix>> cf, oracle;
    if (want_cf) {
      cf = timer.step("closed-form", [&] { return closed_form_group_lambda(alpha, spec, pair); });
      r.results["closed_form"] = drazin_json(*cf);
      add_check(r, "closed form satisfies the group-inverse axioms", cf->residuals.all_zero());
    }
    if (want_oracle) {
      oracle = timer.step("oracle", [&] { return matrix_drazin(alpha * pair.p + pair.q); });
      r.results["oracle"] = drazin_json(*oracle);
      add_check(r, "oracle residuals vanish", oracle->verified());
      add_check(r, "index 1", oracle->index == 1, std::to_string(oracle->index));
    }
    if (cf && oracle)
      add_check(r, "closed form = oracle", cf->inverse == oracle->inverse,
                to_string((cf->inverse - oracle->inverse).max_abs_entry()));
    return;
  }

  Presentation pres = presentation_of(req);
  std::optional<Rational> alpha;
  Element a(pres);
  if (req.contains("element") && !req.at("element").is_null()) {
    a = element_from_json(req.at("element"));
    if (!(a.presentation() == pres)) throw ParameterError("element presentation does not match --family");
    if (want_cf) throw ParameterError("the closed forms cover alpha p + q only; use --method oracle with --element");
  } else {
    alpha = rational_arg(req, "alpha");
    if (is_zero(*alpha)) throw ParameterError("alpha must be nonzero");
    a = *alpha * Element::p(pres) + Element::q(pres);
  }
  r.results["element"] = element_json(a);
  std::optional<DrazinResult<Element>> cf, oracle;
  if (want_cf) {
    std::optional<int> hyp_m;
    if (req.contains("hyp_m") && !req.at("hyp_m").is_null()) hyp_m = int_opt(req, "hyp_m", 0);
    cf = timer.step("closed-form", [&] { return closed_form_drazin_alpha_pq(*alpha, pres, hyp_m); });
    r.results["closed_form"] = drazin_json(*cf);
    add_check(r, "closed form residuals vanish", cf->residuals.all_zero());
    const int bound = *alpha == -1 ? 3 : 2;
    add_check(r, "index <= " + std::to_string(bound), cf->index <= bound, std::to_string(cf->index));
  }
  if (want_oracle) {
    oracle = timer.step("oracle", [&] { return algebra_drazin(a); });
    r.results["oracle"] = drazin_json(*oracle);
    add_check(r, "oracle residuals vanish", oracle->verified());
  }
  if (cf && oracle)
    add_check(r, "closed form = oracle", cf->inverse == oracle->inverse,
              to_string((cf->inverse - oracle->inverse).max_abs_coefficient()));
  if (oracle && !pres.is_zn()) {
    ModelPair pair = build_family_pair(pres.family(), pres.parameter());
    DrazinResult<RationalMatrix> md = timer.step("matrix model", [&] { return matrix_drazin(represent(a, pair)); });
    add_check(r, "matrix model agrees", md.inverse == represent(oracle->inverse, pair));
  }
}

void cmd_table(RunReport& r, const Json& req, Timer& timer) {
  Presentation pres = presentation_of(req);
  StructureTable t = timer.step("table", [&] { return build_structure_table(pres); });
  r.results = structure_table_json(t);
  add_check(r, "associative", true);
  add_check(r, "dimension " + std::to_string(t.dimension()), t.dimension() == pres.basis().size());
}

void cmd_models(RunReport& r, const Json& req, Timer& timer) {
  ModelPair pair = timer.step("model", [&]() -> ModelPair {
    if (req.contains("lambda") && !req.at("lambda").is_null())
      return build_lambda_pair({int_opt(req, "m", 2), rational_arg(req, "lambda")},
                               flag(req, "ambient_unit") ? AmbientUnit::Included : AmbientUnit::Excluded);
    const std::string w = string_opt(req, "w", "");
    if ((w == "W3" || w == "W4") && !req.contains("family")) return build_w_pair(w == "W3" ? WType::W3 : WType::W4);
    Presentation pres = presentation_of(req);
    if (flag(req, "example")) {
      if (!(pres == Presentation::zn(3, ZnVanishing::QP))) throw ParameterError("--example needs --family Zn --n 3");
      return build_example_z3();
    }
    if (!pres.is_zn()) return build_family_pair(pres.family(), pres.parameter());
    if (w == "W3" || w == "W4")
      return build_z_plus_w_pair(pres.parameter(), pres.vanishing(), w == "W3" ? WType::W3 : WType::W4);
    if (!w.empty()) throw ParameterError("'w' must be W3 or W4");
    return build_zn_pair(pres.parameter(), flag(req, "ambient_unit") ? AmbientUnit::Included : AmbientUnit::Excluded,
                         pres.vanishing());
  });
  r.results = model_pair_json(pair);
  for (const auto& c : verify_relations(pair).checks) add_check(r, c.name, c.pass);
}

void cmd_verify(RunReport& r, const Json& req, Timer& timer) {
  const std::string suite = string_opt(req, "suite", "all");
  VerifyOptions opt;
  if (req.contains("seed") && !req.at("seed").is_null()) opt.seed = seed_of(req);
  opt.profiles_per_setting = int_opt(req, "profiles", opt.profiles_per_setting);
  opt.countzero_samples = int_opt(req, "countzero_samples", opt.countzero_samples);
  if (opt.profiles_per_setting < 1 || opt.countzero_samples < 1) throw ParameterError("sample counts must be positive");
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else if (is_suite(suite)) names = {suite};
  else throw ParameterError("unknown suite '" + suite + "'");

  r.results["seed"] = opt.seed;
  Json suites = Json::array();
  for (const auto& name : names) {
    SuiteResult s = timer.step(name, [&] { return run_suite(name, opt); });
    suites.push_back({{"suite", name}, {"passed", s.passed()}, {"failed", s.failed()}, {"notes", s.notes}});
    for (const auto& c : s.checks) add_check(r, name + ": " + c.name, c.pass, c.residual);
  }
  r.results["suites"] = suites;
}

std::string error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::PresentationMismatch: return "PresentationMismatch";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
    case ErrorCode::WitnessInvalid: return "WitnessInvalid";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  if (!error.is_null()) j["error"] = error;
  j["results"] = results;
  j["checks"] = checks;
  if (!timing.is_null()) j["timing"] = timing;
  j["exit_code"] = exit_code;
  return j;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << command << ": ";
  if (!error.is_null()) {
    out << "error " << error.at("code").get<std::string>() << ": " << error.at("message").get<std::string>() << "\n";
    return out.str();
  }
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.at("pass").get<bool>() ? 1 : 0;
  out << passed << "/" << checks.size() << " checks passed\n";
  if (command == "classify" && results.contains("verdict")) {
    const Json& v = results.at("verdict");
    out << "  setting   " << results.at("setting").get<std::string>() << "\n";
    out << "  verdict   " << v.at("kind").get<std::string>();
    if (!v.at("index").is_null()) out << " (index " << v.at("index").get<int>() << ")";
    out << "\n  rule      " << v.at("rule_fired").get<std::string>() << "\n  spectrum  {";
    for (std::size_t i = 0; i < v.at("spectrum").size(); ++i)
      out << (i ? ", " : "") << v.at("spectrum")[i].get<std::string>();
    out << "}\n";
  } else if (command == "drazin") {
    for (const char* key : {"closed_form", "oracle"})
      if (results.contains(key))
        out << "  " << key << ": index " << results.at(key).at("index").get<int>() << ", verified "
            << (results.at(key).at("verified").get<bool>() ? "yes" : "no") << "\n";
  } else if (command == "table") {
    out << "  dimension " << results.at("dimension").get<std::size_t>() << "\n";
  } else if (command == "models") {
    out << "  " << results.at("label").get<std::string>() << ", size " << results.at("size").get<std::size_t>() << "\n";
    for (const char* key : {"P", "Q"}) {
      out << "  " << key << " =\n";
      for (const auto& row : results.at(key)) {
        out << "   ";
        for (const auto& e : row) out << " " << e.get<std::string>();
        out << "\n";
      }
    }
  } else if (command == "verify") {
    out << "  suite       passed  failed\n";
    for (const auto& s : results.at("suites")) {
      std::string name = s.at("suite").get<std::string>();
      name.resize(12, ' ');
      out << "  " << name << s.at("passed").get<std::size_t>() << "\t" << s.at("failed").get<std::size_t>() << "\n";
    }
  }
  for (const auto& c : checks)
    if (!c.at("pass").get<bool>())
      out << "  FAIL " << c.at("name").get<std::string>() << " (residual " << c.at("residual").get<std::string>()
          << ")\n";
  return out.str();
}

ExitCode exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::HypothesisViolation: return ExitCode::HypothesisViolation;
    case ErrorCode::CheckFailed:
    case ErrorCode::AssociativityViolation:
    case ErrorCode::ConstructionFailure:
    case ErrorCode::WitnessInvalid:
    case ErrorCode::Internal: return ExitCode::CheckFailure;
    default: return ExitCode::InputError;
  }
}

RunReport run_command(const std::string& command, const Json& request) {
  RunReport r;
  r.command = command;
  r.inputs = request;
  r.results = Json::object();
  const bool timing = flag(request, "timing");
  Json steps = Json::array();
  Timer timer(steps, timing);
  try {
    if (!request.is_object()) throw ParameterError("request must be a JSON object");
    if (command == "classify") cmd_classify(r, request, timer);
    else if (command == "drazin") cmd_drazin(r, request, timer);
    else if (command == "table") cmd_table(r, request, timer);
    else if (command == "models") cmd_models(r, request, timer);
    else if (command == "verify") cmd_verify(r, request, timer);
    else throw ParameterError("unknown command '" + command + "'");
    bool all_pass = true;
    for (const auto& c : r.checks) all_pass = all_pass && c.at("pass").get<bool>();
    r.exit_code = static_cast<int>(all_pass ? ExitCode::Ok : ExitCode::CheckFailure);
  } catch (const Error& e) {
    r.results = Json::object();
    r.checks = Json::array();
    r.error = {{"code", error_name(e.code())}, {"message", e.what()}};
    r.exit_code = static_cast<int>(exit_code_for(e.code()));
  } catch (const nlohmann::json::exception& e) {
    r.results = Json::object();
    r.checks = Json::array();
    r.error = {{"code", "InvalidInput"}, {"message", e.what()}};
    r.exit_code = static_cast<int>(ExitCode::InputError);
  }
  if (timing) r.timing = steps;
  return r;
}

}  // namespace pqalg
