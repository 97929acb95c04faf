/* vertexkernels: exact kernels, spectral densities, and vacuum energy for
 * an infinite star graph with a delta (Exner-Seba) vertex coupling.
 *
 * C interface of the shared library.  All functions are pure and
 * reentrant; handles are immutable after creation and may be shared
 * between threads.  Functions return VXK_OK on success; on failure the
 * thread-local message from vxk_last_error() describes the problem.
 */

#ifndef VERTEXKERNELS_H
#define VERTEXKERNELS_H

#include <stddef.h>

#ifndef VXK_API
#if defined(_WIN32)
#define VXK_API
#else
#define VXK_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vxk_graph vxk_graph;
typedef struct vxk_sweep vxk_sweep;

typedef enum {
    VXK_OK = 0,
    VXK_ERR_DOMAIN = 1,    /* argument outside the mathematical domain */
    VXK_ERR_CONTRACT = 2,  /* misuse of the API (null handle, bad enum) */
    VXK_ERR_ACCURACY = 3,  /* an adaptive procedure missed its tolerance */
    VXK_ERR_RANGE = 4,     /* result not representable */
    VXK_ERR_IO = 5,        /* file could not be written */
    VXK_ERR_INTERNAL = 6
} vxk_status;

VXK_API const char* vxk_version(void);
VXK_API const char* vxk_status_name(vxk_status status);
/* Message for the most recent failure on this thread. */
VXK_API const char* vxk_last_error(void);

/* ---- graph configuration -------------------------------------------- */

VXK_API vxk_status vxk_graph_create(int n_edges, double alpha, vxk_graph** out);
VXK_API vxk_status vxk_graph_create_dirichlet(int n_edges, vxk_graph** out);
VXK_API void vxk_graph_free(vxk_graph* g);

VXK_API int vxk_graph_edges(const vxk_graph* g);
VXK_API double vxk_graph_alpha(const vxk_graph* g);
VXK_API int vxk_graph_is_dirichlet(const vxk_graph* g);
VXK_API int vxk_graph_is_kirchhoff(const vxk_graph* g);

/* ---- special functions ---------------------------------------------- */

VXK_API vxk_status vxk_expint_ei(double x, double* out);
VXK_API vxk_status vxk_expint_ei_complex(double re, double im, double* out_re,
                                 double* out_im);
VXK_API vxk_status vxk_erfc(double x, double* out);

/* ---- spectral objects ------------------------------------------------ */

VXK_API vxk_status vxk_local_spectral_density(const vxk_graph* g, double omega,
                                      int edge, double x, double* out);
VXK_API vxk_status vxk_spectral_projection_kernel(const vxk_graph* g, double omega,
                                          int j, int l, double x, double y,
                                          double* out);
/* regular part of the subtracted global density at omega */
VXK_API vxk_status vxk_global_density_regular(const vxk_graph* g, double omega,
                                      double* out);
/* coefficient of delta(omega) in the subtracted global density */
VXK_API vxk_status vxk_global_density_delta_weight(const vxk_graph* g, double* out);
VXK_API vxk_status vxk_staircase_increment(const vxk_graph* g, double omega,
                                   double* out);

/* ---- integral kernels ------------------------------------------------ */

VXK_API vxk_status vxk_heat_kernel(const vxk_graph* g, double t, int j, int l,
                           double x, double y, double* out);
VXK_API vxk_status vxk_cylinder_kernel(const vxk_graph* g, double t, int j, int l,
                               double x, double y, double* out);
VXK_API vxk_status vxk_quantum_kernel(const vxk_graph* g, double t, int j, int l,
                              double x, double y, double* out_re,
                              double* out_im);

/* ---- vacuum energy density ------------------------------------------ */

VXK_API vxk_status vxk_energy_density(const vxk_graph* g, double x, double* out);
VXK_API vxk_status vxk_energy_density_near(const vxk_graph* g, double x, double* out);
VXK_API vxk_status vxk_energy_density_far(const vxk_graph* g, double x, double* out);
/* small-t extraction from the cylinder kernel diagonal */
VXK_API vxk_status vxk_energy_density_numeric(const vxk_graph* g, int edge, double x,
                                      double* out);

/* ---- wave evolution -------------------------------------------------- */

/* Initial displacement sampled through a callback (initial velocity is
 * zero).  support_lo/support_hi bound the support of f on every edge. */
typedef double (*vxk_edge_fn)(int edge, double x, void* ctx);

VXK_API vxk_status vxk_wave_evolve(const vxk_graph* g, vxk_edge_fn f, void* ctx,
                           double support_lo, double support_hi, double t,
                           int edge, double x, double* out);

/* ---- tabulation ------------------------------------------------------ */

typedef enum { VXK_FORMAT_CSV = 0, VXK_FORMAT_JSON = 1 } vxk_format;

VXK_API vxk_status vxk_sweep_create(const char* const* column_names, int n_columns,
                            vxk_sweep** out);
VXK_API void vxk_sweep_free(vxk_sweep* sweep);
VXK_API vxk_status vxk_sweep_add_row(vxk_sweep* sweep, const double* values,
                             int n_values);
/* metadata value must already be a valid literal (numbers in %.17g) */
VXK_API vxk_status vxk_sweep_add_metadata(vxk_sweep* sweep, const char* key,
                                  const char* value);
/* path "-" writes to stdout */
VXK_API vxk_status vxk_sweep_write(const vxk_sweep* sweep, const char* path,
                           vxk_format format);

/* ---- verification suite ---------------------------------------------- */

typedef void (*vxk_verify_report_fn)(const char* name, int pass,
                                     double max_err, double tol,
                                     double seconds, const char* note,
                                     void* ctx);

/* tier 0 = quick, 1 = full.  *out_failures receives the failed count. */
VXK_API vxk_status vxk_verify_run(int tier, vxk_verify_report_fn report, void* ctx,
                          int* out_failures);

#ifdef __cplusplus
}
#endif

#endif /* VERTEXKERNELS_H */
