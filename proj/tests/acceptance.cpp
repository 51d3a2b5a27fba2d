// Acceptance criteria 1-10: one PASS/FAIL line each, nonzero exit on any FAIL.

#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pqalg/verify.hpp"

using namespace pqalg;

namespace {

struct Outcome {
  std::size_t passed = 0, total = 0;
  std::vector<std::string> failed;
  double seconds = 0;
};

std::map<std::string, SuiteResult> cache;

const SuiteResult& suite(const std::string& name) {
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_suite(name, VerifyOptions{})).first;
  return it->second;
}

// Checks of a suite whose name starts with prefix (all checks for "").
Outcome select(const std::string& name, const std::string& prefix) {
  const SuiteResult& s = suite(name);
  Outcome o;
  o.seconds = s.seconds;
  for (const auto& c : s.checks) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    ++o.total;
    if (c.pass)
      ++o.passed;
    else
      o.failed.push_back(c.name + " (" + c.residual + ")");
  }
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::optional<double> budget;  // seconds
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "dimensions and model word-image ranks", 10, [] { return select("dims", ""); }},
      {2, "radical dimensions via the trace form", 30, [] { return select("radical", ""); }},
      {3, "closed-form Drazin inverse of alpha p + q", 60, [] { return select("drazin", ""); }},
      {4, "lambda group inverse", 30, [] { return select("lambda", ""); }},
      {5, "classifier agrees with the rank oracle", 120, [] { return select("classify", "agree "); }},
      {6, "asserted spectra match the spectrum oracle", std::nullopt, [] { return select("classify", "spectrum "); }},
      {7, "index bounds", std::nullopt, [] { return select("index", ""); }},
      {8, "countzero property", std::nullopt, [] { return select("countzero", ""); }},
      {9, "3x3 Z3 example regression", std::nullopt, [] { return select("example1", ""); }},
      {10, "tightly-coupled rewrites", std::nullopt, [] { return select("rewrites", ""); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o = c.run();
    bool in_time = !c.budget || o.seconds <= *c.budget;
    bool ok = o.total > 0 && o.passed == o.total && in_time;
    if (!ok) ++failures;
    std::printf("[%s] AC%-2d %-45s %zu/%zu checks, %.2f s", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), o.passed,
                o.total, o.seconds);
    if (c.budget) std::printf(" (budget %.0f s)", *c.budget);
    std::printf("\n");
    for (const auto& f : o.failed) std::printf("       failed: %s\n", f.c_str());
    if (!in_time) std::printf("       over the time budget\n");
  }
  std::printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
