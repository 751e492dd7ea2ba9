/* Copyright 2026 the smc-toolkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the sliding-mode control toolkit. All matrices are row-major
 * double arrays. Functions return SMC_OK on success; on failure a status
 * code is returned and smc_last_error() carries a thread-local message.
 */

#ifndef SMC_SMC_H_
#define SMC_SMC_H_

#include <stdint.h>

#if defined(_WIN32)
#define SMC_API __declspec(dllexport)
#else
#define SMC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smc_status {
  SMC_OK = 0,
  SMC_ERR_INVALID_ARGUMENT = 1,
  SMC_ERR_CONFIG = 2,
  SMC_ERR_NO_SOLUTION = 3,
  SMC_ERR_SINGULAR = 4,
  SMC_ERR_NOT_ADMISSIBLE = 5,
  SMC_ERR_GUARD = 6,
  SMC_ERR_NOT_CERTIFIABLE = 7,
  SMC_ERR_PROPERTY_FAILED = 8,
  SMC_ERR_IO = 9,
  SMC_ERR_INTERNAL = 10
} smc_status;

SMC_API const char* smc_status_name(smc_status status);

/* Thread-local message describing the most recent failure in this thread. */
SMC_API const char* smc_last_error(void);

SMC_API const char* smc_version(void);

/* Norm kinds for smc_induced_norm. */
#define SMC_NORM_ONE 1
#define SMC_NORM_TWO 2
#define SMC_NORM_INFINITY 0

SMC_API smc_status smc_induced_norm(int rows, int cols, const double* a,
                                    int kind, double* out);

typedef struct smc_solve_info {
  int patterns_tried;
  int on_surface;
  double residual;
} smc_solve_info;

/* Solves u + H|u| = u_c for u (dimension m, H row-major m*m). info may be
 * NULL. */
SMC_API smc_status smc_solve(int m, const double* h, const double* u_c,
                             double* u_hat, smc_solve_info* info);

typedef struct smc_admissibility {
  int admissible;        /* some induced norm of F_bar below one */
  int max_element_rule;  /* the stricter element-wise condition max < 1/m */
  double norm_one;
  double norm_two;
  double norm_infinity;
  double max_element;
} smc_admissibility;

SMC_API smc_status smc_check_admissibility(int m, const double* f_bar,
                                           smc_admissibility* out);

/* Opaque controller handle built from a JSON controller block:
 * {"rho":..., "f_bar":[...], "eta_bar":[...], "M":[[...]], "Q":[[...]],
 *  "F_bar":[[...]], "smoothing":bool, "delta_s":..., "delta_v":...}
 */
typedef struct smc_controller smc_controller;

SMC_API smc_status smc_controller_create_json(const char* controller_json,
                                              smc_controller** out);
SMC_API void smc_controller_destroy(smc_controller* controller);
SMC_API int smc_controller_dim(const smc_controller* controller);

/* One control evaluation: f0 and s have the controller dimension; u receives
 * the physical control. info may be NULL. */
SMC_API smc_status smc_controller_compute(const smc_controller* controller,
                                          const double* f0, const double* s,
                                          double* u, smc_solve_info* info);

/* Coarse operations driving whole workflows from JSON configuration text.
 * Returned strings are owned by the caller; release with smc_string_free.
 * seed_override < 0 keeps the seed from the configuration. */

/* Runs a closed-loop experiment; writes trajectory.csv and summary.json into
 * out_dir (or the configured output directory when out_dir is NULL/empty)
 * and returns the summary JSON. */
SMC_API smc_status smc_run_simulation(const char* config_json,
                                      const char* out_dir,
                                      int64_t seed_override,
                                      char** summary_json);

/* Runs a certification suite (cones, uniqueness, theorem3, lyapunov) and
 * returns the report JSON. SMC_ERR_PROPERTY_FAILED signals recorded
 * failures; the report is still returned. */
SMC_API smc_status smc_run_certification(const char* suite, uint64_t seed,
                                         int trials, int inject_inadmissible,
                                         char** report_json);

/* Runs the decomposition search; writes decomposition.json into out_dir and
 * returns the report JSON. SMC_ERR_NOT_CERTIFIABLE signals a best bound with
 * two-norm >= 1; the report is still returned. */
SMC_API smc_status smc_run_decomposition(const char* config_json,
                                         const char* out_dir,
                                         int64_t seed_override,
                                         char** report_json);

SMC_API void smc_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* SMC_SMC_H_ */
