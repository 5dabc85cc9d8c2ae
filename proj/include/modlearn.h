/* C interface to the modlearn query-learning library.
 *
 * Experiments are configured with a JSON document and produce a text report
 * (JSON or CSV) plus an exit code: 0 on success, 1 on a bound violation or
 * learning failure, 2 on a configuration error.
 *
 * Config keys (all optional unless noted):
 *   command  (required)  "learn" | "lowerbound" | "pac" | "table"
 *   class, target, mode, construction, format ("json"|"csv"), out
 *   k, r, m, trials, budget, seed  integers
 *   epsilon, delta, b              numbers
 *   withmem                        boolean
 */
#ifndef MODLEARN_H
#define MODLEARN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ml_status {
  ML_OK = 0,
  ML_ERR_CONFIG = 1,
  ML_ERR_UNIVERSE_MISMATCH = 2,
  ML_ERR_UNSUPPORTED_QUERY = 3,
  ML_ERR_BUDGET_EXHAUSTED = 4,
  ML_ERR_PROTOCOL_VIOLATION = 5,
  ML_ERR_INVALID_POSITIVE_EXAMPLE = 6,
  ML_ERR_EMPTY_CONCEPT_CLASS = 7,
  ML_ERR_PRECONDITION = 8,
  ML_ERR_UNIVERSE_EXHAUSTED = 9,
  ML_ERR_FRESH_VALUES_EXHAUSTED = 10,
  ML_ERR_DOMAIN = 11,
  ML_ERR_NO_CONSISTENT_HYPOTHESIS = 12,
  ML_ERR_BAD_ARGUMENT = 13,
  ML_ERR_INTERNAL = 14
} ml_status;

typedef struct ml_experiment ml_experiment;

/* Builds an experiment from a JSON configuration string. On success stores
 * a handle in *out (release with ml_experiment_destroy). */
ml_status ml_experiment_create(const char* config_json, ml_experiment** out);

/* Runs the experiment. Returns ML_OK when a report was produced, even if
 * the report's exit code is nonzero; inspect ml_experiment_exit_code. */
ml_status ml_experiment_run(ml_experiment* exp);

/* Report text of the last run (empty before the first run). The pointer
 * stays valid until the next run or destroy. */
const char* ml_experiment_output(const ml_experiment* exp);

/* Exit code of the last run: 0 ok, 1 failure, 2 configuration error. */
int ml_experiment_exit_code(const ml_experiment* exp);

/* Message of the last error on this handle, or the empty string. */
const char* ml_experiment_error(const ml_experiment* exp);

void ml_experiment_destroy(ml_experiment* exp);

const char* ml_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MODLEARN_H */
