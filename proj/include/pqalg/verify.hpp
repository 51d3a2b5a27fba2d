#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pqalg {

struct Check {
  std::string name;
  bool pass;
  std::string residual;  // "0" when exact, otherwise a count or magnitude
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  std::vector<std::string> notes;  // informational lines (undecided counts etc.)
  double seconds = 0;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0 && !checks.empty(); }
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int profiles_per_setting = 500;
  int countzero_samples = 10000;
};

// dims, radical, drazin, lambda, classify, index, countzero, example1,
// rewrites, models
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Throws ParameterError for unknown suites.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace pqalg
