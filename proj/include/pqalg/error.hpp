#pragma once

#include <stdexcept>
#include <string>

namespace pqalg {

// Numeric values double as C API status codes, see pqalg.h.
enum class ErrorCode : int {
  CheckFailed = 1,
  InvalidInput = 2,
  HypothesisViolation = 3,
  PresentationMismatch = 4,
  AssociativityViolation = 5,
  ConstructionFailure = 6,
  WitnessInvalid = 7,
  PreconditionViolation = 8,
  Internal = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& message)
      : Error(ErrorCode::InvalidInput, message) {}
};

class PresentationMismatch : public Error {
 public:
  explicit PresentationMismatch(const std::string& message)
      : Error(ErrorCode::PresentationMismatch, message) {}
};

class AssociativityViolation : public Error {
 public:
  explicit AssociativityViolation(const std::string& message)
      : Error(ErrorCode::AssociativityViolation, message) {}
};

class ConstructionFailure : public Error {
 public:
  explicit ConstructionFailure(const std::string& message)
      : Error(ErrorCode::ConstructionFailure, message) {}
};

class HypothesisViolation : public Error {
 public:
  explicit HypothesisViolation(const std::string& message)
      : Error(ErrorCode::HypothesisViolation, message) {}
};

class WitnessInvalid : public Error {
 public:
  explicit WitnessInvalid(const std::string& message)
      : Error(ErrorCode::WitnessInvalid, message) {}
};

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& message)
      : Error(ErrorCode::PreconditionViolation, message) {}
};

}  // namespace pqalg
