/* C interface to the freeineq library: spectral functionals of measures on
 * [-2,2], inequality verification sweeps, and equilibrium-measure solves.
 *
 * All functions return fi_status; on FI_ERR_INPUT / FI_ERR_INTERNAL a
 * human-readable message is available from fi_last_error() (thread-local).
 * Strings returned through char** must be released with fi_string_free.
 */
#ifndef FREEINEQ_H
#define FREEINEQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fi_status {
    FI_OK = 0,
    FI_ERR_INPUT = 1,     /* malformed spec, bad argument, I/O failure */
    FI_VIOLATION = 2,     /* diagnostic: an inequality failed beyond tolerance */
    FI_ERR_INTERNAL = 3
} fi_status;

typedef struct fi_measure fi_measure;

/* Last error message for the calling thread; valid until the next call. */
const char* fi_last_error(void);

void fi_string_free(char* s);

/* Measure spec JSON:
 *   {"kind":"cheb","coeffs":[...]}
 *   {"kind":"grid","nodes":[...],"weights":[...],"interval":[a,b]}
 *   {"kind":"samples","points":[...]}
 */
fi_status fi_measure_parse(const char* json_text, fi_measure** out);
fi_status fi_measure_parse_file(const char* path, fi_measure** out);
void fi_measure_free(fi_measure* m);

/* JSON report {"W1":...,"H":...,"I":...,"J":...,"TV":...,
 * "slack_transport":...,"slack_lsi":...,"slack_hwi":...}; infinite values
 * serialize as the string "inf".  Returns FI_VIOLATION if any slack is
 * below -tolerance (the report is still produced). */
fi_status fi_functionals_report(const fi_measure* a, const fi_measure* b, double tolerance,
                                char** json_out);

/* Inequality sweep over n seeded random density pairs (random degree up to
 * max_degree); writes CSV with columns
 * sample_id,W1,H,I,J,slack_t,slack_lsi,slack_hwi.  Returns FI_VIOLATION if
 * any slack < -1e-9. */
fi_status fi_verify_csv(uint64_t seed, int n_samples, int max_degree, const char* out_path);

/* Geometric-family L^p sweep over `steps` values of r spaced so that
 * -log(1-r) is uniform on [r_min, r_max]; writes CSV columns
 * r,n_terms,tail_bound,H,lp_alpha,lp_reduced,ratio plus footer comments
 * with the fitted slope. */
fi_status fi_lp_sweep_csv(double p, double r_min, double r_max, int steps, double eta,
                          const char* out_path);

/* Potential spec JSON: {"kind":"poly","coeffs":[...]} or
 * {"kind":"double_well","a1":...,"a2":...}.  For poly: solves the
 * equilibrium problem on n_cells cells, runs the Euler-Lagrange check and
 * the global transportation check, and (if density_csv_path is non-NULL)
 * writes the density as CSV node,weight.  For double_well: returns the
 * two-semicircle demonstration report.  The JSON report goes to json_out. */
fi_status fi_equilibrium_run(const char* potential_json, int n_cells,
                             const char* density_csv_path, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* FREEINEQ_H */
