#ifndef RDMKIT_H
#define RDMKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rdm_status {
  RDM_OK = 0,
  RDM_ERR_NOT_HERMITIAN = 1,
  RDM_ERR_BAD_ARITY = 2,
  RDM_ERR_DIMENSION_OVERFLOW = 3,
  RDM_ERR_DEGENERATE_STATE = 4,
  RDM_ERR_NOT_INVERTIBLE = 5,
  RDM_ERR_NORM_BOUND_VIOLATED = 6,
  RDM_ERR_IO = 7,
  RDM_ERR_INVALID_ARGUMENT = 8,
  RDM_ERR_UNKNOWN = 9
} rdm_status;

typedef enum rdm_sector { RDM_SECTOR_FERMI = 0, RDM_SECTOR_BOSE = 1 } rdm_sector;

typedef enum rdm_path {
  RDM_PATH_BRUTE = 0,
  RDM_PATH_RECURRENCE = 1,
  RDM_PATH_EXPLICIT = 2
} rdm_path;

typedef struct rdm_state rdm_state_t;
typedef struct rdm_operator rdm_operator_t;
typedef struct rdm_xi rdm_xi_t;

const char* rdm_status_name(rdm_status status);

/* Message for the most recent failing call on this thread ("" if none). */
const char* rdm_last_error(void);

/* --- single-particle states ------------------------------------------- */

rdm_status rdm_state_load(const char* path, rdm_state_t** out);
rdm_status rdm_state_parse(const char* json_text, rdm_state_t** out);
rdm_status rdm_state_random(int dim, uint64_t seed, rdm_state_t** out);
int rdm_state_dim(const rdm_state_t* state);
void rdm_state_free(rdm_state_t* state);

/* --- normalization coefficient tables --------------------------------- */

rdm_status rdm_xi_compute(const rdm_state_t* state, int n_max, rdm_sector sector,
                          rdm_xi_t** out);
rdm_status rdm_xi_value(const rdm_xi_t* xi, int n, double* out);
rdm_status rdm_xi_ratio(const rdm_xi_t* xi, int n, double* out);
rdm_status rdm_xi_save(const rdm_xi_t* xi, const char* path);
void rdm_xi_free(rdm_xi_t* xi);

/* --- contractions ------------------------------------------------------ */

rdm_status rdm_contract(const rdm_state_t* state, int n, int k, rdm_sector sector,
                        rdm_path path, int normalized, rdm_operator_t** out);
rdm_status rdm_contract_save(const rdm_state_t* state, int n, int k,
                             rdm_sector sector, rdm_path path, int normalized,
                             const char* out_path);
rdm_status rdm_sigma1_asymptotic(const rdm_state_t* state, int n, rdm_sector sector,
                                 rdm_operator_t** out);

/* --- operator handles -------------------------------------------------- */

int rdm_operator_dim(const rdm_operator_t* op);
rdm_status rdm_operator_entry(const rdm_operator_t* op, int row, int col,
                              double* re, double* im);
/* Caller frees the returned string with rdm_string_free. */
rdm_status rdm_operator_to_json(const rdm_operator_t* op, char** out);
void rdm_operator_free(rdm_operator_t* op);
void rdm_string_free(char* s);

/* --- batch drivers ------------------------------------------------------ */

/* Cross-checks all three contraction paths over the grid; fail_count gets the
 * number of disagreeing cells.  report_path may be NULL. */
rdm_status rdm_verify(const int* dims, int dim_count, int n_max, int k_max,
                      const uint64_t* seeds, int seed_count,
                      const char* report_path, int* fail_count);

/* Runs the finite-size scaling sweep described by the JSON config.
 * json_path may be NULL; deterministic != 0 zeroes the runtime column. */
rdm_status rdm_sweep(const char* config_path, const char* csv_path,
                     const char* json_path, int deterministic);

#ifdef __cplusplus
}
#endif

#endif /* RDMKIT_H */
