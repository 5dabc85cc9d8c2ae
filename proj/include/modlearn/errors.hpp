#pragma once

#include <stdexcept>
#include <string>

namespace modlearn {

enum class ErrorCode {
  Config,
  UniverseMismatch,
  UnsupportedQuery,
  BudgetExhausted,
  ProtocolViolation,
  InvalidPositiveExample,
  EmptyConceptClass,
  PreconditionUnmet,
  UniverseExhausted,
  FreshValuesExhausted,
  DomainError,
  NoConsistentHypothesis,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace modlearn
