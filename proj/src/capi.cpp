#include "modlearn.h"

#include <string>

#include "modlearn/errors.hpp"
#include "modlearn/experiments.hpp"

struct ml_experiment {
  modlearn::ExperimentConfig config;
  std::string output;
  std::string error;
  int exit_code = 0;
};

namespace {

ml_status status_from(modlearn::ErrorCode code) {
  using modlearn::ErrorCode;
  switch (code) {
    case ErrorCode::Config: return ML_ERR_CONFIG;
    case ErrorCode::UniverseMismatch: return ML_ERR_UNIVERSE_MISMATCH;
    case ErrorCode::UnsupportedQuery: return ML_ERR_UNSUPPORTED_QUERY;
    case ErrorCode::BudgetExhausted: return ML_ERR_BUDGET_EXHAUSTED;
    case ErrorCode::ProtocolViolation: return ML_ERR_PROTOCOL_VIOLATION;
    case ErrorCode::InvalidPositiveExample: return ML_ERR_INVALID_POSITIVE_EXAMPLE;
    case ErrorCode::EmptyConceptClass: return ML_ERR_EMPTY_CONCEPT_CLASS;
    case ErrorCode::PreconditionUnmet: return ML_ERR_PRECONDITION;
    case ErrorCode::UniverseExhausted: return ML_ERR_UNIVERSE_EXHAUSTED;
    case ErrorCode::FreshValuesExhausted: return ML_ERR_FRESH_VALUES_EXHAUSTED;
    case ErrorCode::DomainError: return ML_ERR_DOMAIN;
    case ErrorCode::NoConsistentHypothesis: return ML_ERR_NO_CONSISTENT_HYPOTHESIS;
    case ErrorCode::Internal: return ML_ERR_INTERNAL;
  }
  return ML_ERR_INTERNAL;
}

}  // namespace

extern "C" {

ml_status ml_experiment_create(const char* config_json, ml_experiment** out) {
  if (!config_json || !out) return ML_ERR_BAD_ARGUMENT;
  *out = nullptr;
  try {
    auto* exp = new ml_experiment;
    exp->config = modlearn::config_from_json(config_json);
    *out = exp;
    return ML_OK;
  } catch (const modlearn::Error& e) {
    return status_from(e.code());
  } catch (...) {
    return ML_ERR_INTERNAL;
  }
}

ml_status ml_experiment_run(ml_experiment* exp) {
  if (!exp) return ML_ERR_BAD_ARGUMENT;
  try {
    modlearn::Report report = modlearn::run_experiment(exp->config);
    exp->output = report.text;
    exp->exit_code = report.exit_code;
    exp->error.clear();
    return ML_OK;
  } catch (const modlearn::Error& e) {
    exp->error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    exp->error = e.what();
    return ML_ERR_INTERNAL;
  } catch (...) {
    exp->error = "unknown error";
    return ML_ERR_INTERNAL;
  }
}

const char* ml_experiment_output(const ml_experiment* exp) {
  return exp ? exp->output.c_str() : "";
}

int ml_experiment_exit_code(const ml_experiment* exp) {
  return exp ? exp->exit_code : ML_ERR_BAD_ARGUMENT;
}

const char* ml_experiment_error(const ml_experiment* exp) {
  return exp ? exp->error.c_str() : "";
}

void ml_experiment_destroy(ml_experiment* exp) { delete exp; }

const char* ml_version(void) { return "modlearn 1.0.0"; }

}  // extern "C"
