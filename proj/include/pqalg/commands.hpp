#pragma once

#include <string>

#include "pqalg/error.hpp"
#include "pqalg/serialize.hpp"

namespace pqalg {

enum class ExitCode : int { Ok = 0, CheckFailure = 1, InputError = 2, HypothesisViolation = 3 };

struct RunReport {
  std::string command;
  Json inputs;
  Json results;
  Json checks = Json::array();  // [{"name","pass","residual"}]
  Json timing;                  // null unless requested
  Json error;                   // null on success
  int exit_code = 0;

  Json to_json() const;
  std::string to_text() const;
};

ExitCode exit_code_for(ErrorCode code);

// Commands: classify, drazin, table, models, verify. The request carries the
// parsed command-line inputs; "timing": true adds wall-clock times.
RunReport run_command(const std::string& command, const Json& request);

}  // namespace pqalg
