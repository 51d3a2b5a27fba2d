#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "pqalg/pqalg.h"

using Json = nlohmann::ordered_json;

namespace {

struct Presentation {
  std::string family;
  int n = 0, m = 0;
  std::string vanishing;
};

void add_presentation(CLI::App* app, Presentation& p) {
  app->add_option("--family", p.family, "Zn, F1, F2, F3 or F4");
  app->add_option("--n", p.n, "Zn parameter");
  app->add_option("--m", p.m, "family parameter");
  app->add_option("--vanishing", p.vanishing, "QP or PQ: which order-k word vanishes in Zn for odd n");
}

void put_presentation(Json& req, const Presentation& p) {
  if (!p.family.empty()) req["family"] = p.family;
  if (p.n) req["n"] = p.n;
  if (p.m) req["m"] = p.m;
  if (!p.vanishing.empty()) req["vanishing"] = p.vanishing;
}

Json split_list(const std::string& s) {
  Json out = Json::array();
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in algebras generated by two idempotents."};
  app.require_subcommand(1);
  bool json = false, pretty = false, timing = false;
  app.add_flag("--json", json, "print the report as JSON");
  app.add_flag("--pretty", pretty, "print the report as indented JSON");
  app.add_flag("--timing", timing, "include wall-clock times in the report");

  Json req = Json::object();

  Presentation cp;
  std::string x, y, profile_file, w;
  bool zero = false, unit = false, random = false;
  long long seed = -1;
  auto* classify = app.add_subcommand("classify", "classify an element from its coefficient profile");
  add_presentation(classify, cp);
  classify->add_option("--x", x, "coefficients of p, pq, pqp, ... (comma separated, a or a/b)");
  classify->add_option("--y", y, "coefficients of q, qp, qpq, ...");
  classify->add_option("--profile", profile_file, "JSON file {\"x\":[...],\"y\":[...]}");
  classify->add_flag("--zero", zero, "classify the zero element");
  classify->add_flag("--ambient-unit", unit, "Zn only: the ambient unit lies in the algebra");
  classify->add_option("--w", w, "Zn only: add a W3 or W4 summand");
  classify->add_flag("--random", random, "draw a random profile (needs --seed)");
  classify->add_option("--seed", seed, "random seed");

  Presentation dp;
  std::string alpha, lambda, method = "both", element_file;
  int hyp_m = 0;
  auto* drazin = app.add_subcommand("drazin", "Drazin inverse of alpha p + q or of a given element");
  drazin->footer("The zero element has Drazin index 1 (its inverse is 0).");
  add_presentation(drazin, dp);
  drazin->add_option("--alpha", alpha, "nonzero rational");
  drazin->add_option("--lambda", lambda, "use the lambda model with parameter lambda != 1");
  drazin->add_option("--method", method, "oracle, closed-form or both")->check(CLI::IsMember({"oracle", "closed-form", "both"}));
  drazin->add_option("--element", element_file, "element JSON file (oracle only)");
  drazin->add_option("--hyp-m", hyp_m, "m in (pq)^(m-1) = (pq)^m, default: the family parameter");

  Presentation tp;
  auto* table = app.add_subcommand("table", "structure table of a presentation");
  add_presentation(table, tp);

  Presentation mp;
  std::string model_lambda, model_w;
  bool example = false, model_unit = false;
  auto* models = app.add_subcommand("models", "matrix model of a presentation or of the lambda family");
  add_presentation(models, mp);
  models->add_flag("--example", example, "the pinned 3x3 pair for Z3");
  models->add_option("--lambda", model_lambda, "lambda model");
  models->add_flag("--ambient-unit", model_unit, "keep the ambient identity in the algebra");
  models->add_option("--w", model_w, "W3 or W4 (alone, or added to Zn)");

  std::string suite = "all";
  long long verify_seed = -1;
  int profiles = 0, countzero = 0;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite name or all");
  verify->add_option("--seed", verify_seed, "random seed (default 42)");
  verify->add_option("--profiles", profiles, "random profiles per classifier setting");
  verify->add_option("--countzero-samples", countzero, "random profiles for the countzero property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command;
  try {
    if (classify->parsed()) {
      command = "classify";
      put_presentation(req, cp);
      if (!x.empty()) req["x"] = split_list(x);
      if (!y.empty()) req["y"] = split_list(y);
      if (!profile_file.empty()) req["profile"] = read_json_file(profile_file);
      if (zero) req["zero"] = true;
      if (unit) req["ambient_unit"] = true;
      if (!w.empty()) req["w"] = w;
      if (random) req["random"] = true;
      if (seed >= 0) req["seed"] = seed;
    } else if (drazin->parsed()) {
      command = "drazin";
      put_presentation(req, dp);
      if (!alpha.empty()) req["alpha"] = alpha;
      if (!lambda.empty()) req["lambda"] = lambda;
      req["method"] = method;
      if (!element_file.empty()) req["element"] = read_json_file(element_file);
      if (hyp_m) req["hyp_m"] = hyp_m;
    } else if (table->parsed()) {
      command = "table";
      put_presentation(req, tp);
    } else if (models->parsed()) {
      command = "models";
      put_presentation(req, mp);
      if (example) req["example"] = true;
      if (!model_lambda.empty()) req["lambda"] = model_lambda;
      if (model_unit) req["ambient_unit"] = true;
      if (!model_w.empty()) req["w"] = model_w;
    } else {
      command = "verify";
      req["suite"] = suite;
      if (verify_seed >= 0) req["seed"] = verify_seed;
      if (profiles) req["profiles"] = profiles;
      if (countzero) req["countzero_samples"] = countzero;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (timing) req["timing"] = true;

  const pqalg_format format = pretty ? PQALG_FORMAT_PRETTY : json ? PQALG_FORMAT_JSON : PQALG_FORMAT_TEXT;
  const char* dir = std::getenv("PQALG_REPORT_DIR");
  const bool save = dir && *dir;
  char* report = nullptr;
  char* full = nullptr;
  int exit_code = 0;
  if (pqalg_run(command.c_str(), req.dump().c_str(), format, &report, save ? &full : nullptr, &exit_code) != PQALG_OK) {
    std::cerr << "error: " << pqalg_last_error() << "\n";
    return 2;
  }
  std::cout << report;
  pqalg_string_free(report);
  if (save) {
    std::ofstream out(std::string(dir) + "/" + command + ".json");
    out << full;
    if (!out) std::cerr << "warning: could not write report to " << dir << "\n";
    pqalg_string_free(full);
  }
  return exit_code;
}
