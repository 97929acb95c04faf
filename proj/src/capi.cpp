#include "vertexkernels.h"

#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "vxk/graph.hpp"
#include "vxk/kernels.hpp"
#include "vxk/specialfn.hpp"
#include "vxk/spectral.hpp"
#include "vxk/tabulate.hpp"
#include "vxk/vacuum.hpp"
#include "vxk/verify.hpp"
#include "vxk/wavesolve.hpp"

struct vxk_graph {
    vxk::StarGraphConfig config;
};

struct vxk_sweep {
    vxk::TabulatedSweep table;
};

namespace {

thread_local std::string g_last_error;

vxk_status fail(vxk_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Runs a callable, translating C++ errors to status codes.
template <typename Fn>
vxk_status guarded(Fn&& fn) {
    try {
        fn();
        return VXK_OK;
    } catch (const vxk::AccuracyError& e) {
        return fail(VXK_ERR_ACCURACY, e.what());
    } catch (const std::domain_error& e) {
        return fail(VXK_ERR_DOMAIN, e.what());
    } catch (const std::range_error& e) {
        return fail(VXK_ERR_RANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(VXK_ERR_CONTRACT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(VXK_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(VXK_ERR_INTERNAL, e.what());
    }
}

vxk_status require(bool ok, const char* what) {
    return ok ? VXK_OK : fail(VXK_ERR_CONTRACT, what);
}

}  // namespace

extern "C" {

const char* vxk_version(void) { return "0.1.0"; }

const char* vxk_status_name(vxk_status status) {
    switch (status) {
        case VXK_OK: return "ok";
        case VXK_ERR_DOMAIN: return "domain error";
        case VXK_ERR_CONTRACT: return "contract error";
        case VXK_ERR_ACCURACY: return "accuracy error";
        case VXK_ERR_RANGE: return "range error";
        case VXK_ERR_IO: return "i/o error";
        case VXK_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* vxk_last_error(void) { return g_last_error.c_str(); }

vxk_status vxk_graph_create(int n_edges, double alpha, vxk_graph** out) {
    if (auto s = require(out != nullptr, "vxk_graph_create: out is null"))
        return s;
    *out = nullptr;
    return guarded([&] {
        *out = new vxk_graph{vxk::StarGraphConfig::make(n_edges, alpha)};
    });
}

vxk_status vxk_graph_create_dirichlet(int n_edges, vxk_graph** out) {
    if (auto s = require(out != nullptr,
                         "vxk_graph_create_dirichlet: out is null"))
        return s;
    *out = nullptr;
    return guarded([&] {
        *out = new vxk_graph{vxk::StarGraphConfig::make_dirichlet(n_edges)};
    });
}

void vxk_graph_free(vxk_graph* g) { delete g; }

int vxk_graph_edges(const vxk_graph* g) {
    return g ? g->config.n_edges() : 0;
}

double vxk_graph_alpha(const vxk_graph* g) {
    return g ? g->config.alpha() : 0.0;
}

int vxk_graph_is_dirichlet(const vxk_graph* g) {
    return g && g->config.is_dirichlet() ? 1 : 0;
}

int vxk_graph_is_kirchhoff(const vxk_graph* g) {
    return g && g->config.is_kirchhoff() ? 1 : 0;
}

vxk_status vxk_expint_ei(double x, double* out) {
    if (auto s = require(out != nullptr, "vxk_expint_ei: out is null"))
        return s;
    return guarded([&] { *out = vxk::expint_ei(x); });
}

vxk_status vxk_expint_ei_complex(double re, double im, double* out_re,
                                 double* out_im) {
    if (auto s = require(out_re && out_im,
                         "vxk_expint_ei_complex: out is null"))
        return s;
    return guarded([&] {
        const auto v = vxk::expint_ei_complex({re, im});
        *out_re = v.real();
        *out_im = v.imag();
    });
}

vxk_status vxk_erfc(double x, double* out) {
    if (auto s = require(out != nullptr, "vxk_erfc: out is null")) return s;
    return guarded([&] { *out = vxk::erfc_real(x); });
}

vxk_status vxk_local_spectral_density(const vxk_graph* g, double omega,
                                      int edge, double x, double* out) {
    if (auto s = require(g && out, "vxk_local_spectral_density: null arg"))
        return s;
    return guarded(
        [&] { *out = vxk::local_spectral_density(g->config, omega, edge, x); });
}

vxk_status vxk_spectral_projection_kernel(const vxk_graph* g, double omega,
                                          int j, int l, double x, double y,
                                          double* out) {
    if (auto s =
            require(g && out, "vxk_spectral_projection_kernel: null arg"))
        return s;
    return guarded([&] {
        *out = vxk::spectral_projection_kernel(g->config, omega, j, l, x, y);
    });
}

vxk_status vxk_global_density_regular(const vxk_graph* g, double omega,
                                      double* out) {
    if (auto s = require(g && out, "vxk_global_density_regular: null arg"))
        return s;
    return guarded([&] {
        if (!(omega >= 0.0))
            throw std::domain_error(
                "vxk_global_density_regular: requires omega >= 0");
        *out = vxk::global_density_regular(g->config).regular_at(omega);
    });
}

vxk_status vxk_global_density_delta_weight(const vxk_graph* g, double* out) {
    if (auto s =
            require(g && out, "vxk_global_density_delta_weight: null arg"))
        return s;
    return guarded([&] {
        *out = vxk::global_density_regular(g->config).delta_weight_at_zero;
    });
}

vxk_status vxk_staircase_increment(const vxk_graph* g, double omega,
                                   double* out) {
    if (auto s = require(g && out, "vxk_staircase_increment: null arg"))
        return s;
    return guarded(
        [&] { *out = vxk::staircase_increment(g->config, omega); });
}

vxk_status vxk_heat_kernel(const vxk_graph* g, double t, int j, int l,
                           double x, double y, double* out) {
    if (auto s = require(g && out, "vxk_heat_kernel: null arg")) return s;
    return guarded(
        [&] { *out = vxk::star_kernel_heat(g->config, t, j, l, x, y); });
}

vxk_status vxk_cylinder_kernel(const vxk_graph* g, double t, int j, int l,
                               double x, double y, double* out) {
    if (auto s = require(g && out, "vxk_cylinder_kernel: null arg")) return s;
    return guarded(
        [&] { *out = vxk::cylinder_kernel(g->config, t, j, l, x, y); });
}

vxk_status vxk_quantum_kernel(const vxk_graph* g, double t, int j, int l,
                              double x, double y, double* out_re,
                              double* out_im) {
    if (auto s = require(g && out_re && out_im,
                         "vxk_quantum_kernel: null arg"))
        return s;
    return guarded([&] {
        const auto v = vxk::star_kernel_quantum(g->config, t, j, l, x, y);
        *out_re = v.real();
        *out_im = v.imag();
    });
}

vxk_status vxk_energy_density(const vxk_graph* g, double x, double* out) {
    if (auto s = require(g && out, "vxk_energy_density: null arg")) return s;
    return guarded([&] { *out = vxk::energy_density_closed(g->config, x); });
}

vxk_status vxk_energy_density_near(const vxk_graph* g, double x,
                                   double* out) {
    if (auto s = require(g && out, "vxk_energy_density_near: null arg"))
        return s;
    return guarded([&] { *out = vxk::energy_density_near(g->config, x); });
}

vxk_status vxk_energy_density_far(const vxk_graph* g, double x, double* out) {
    if (auto s = require(g && out, "vxk_energy_density_far: null arg"))
        return s;
    return guarded([&] { *out = vxk::energy_density_far(g->config, x); });
}

vxk_status vxk_energy_density_numeric(const vxk_graph* g, int edge, double x,
                                      double* out) {
    if (auto s = require(g && out, "vxk_energy_density_numeric: null arg"))
        return s;
    return guarded(
        [&] { *out = vxk::energy_density_numeric(g->config, edge, x); });
}

vxk_status vxk_wave_evolve(const vxk_graph* g, vxk_edge_fn f, void* ctx,
                           double support_lo, double support_hi, double t,
                           int edge, double x, double* out) {
    if (auto s = require(g && f && out, "vxk_wave_evolve: null arg"))
        return s;
    return guarded([&] {
        if (!(support_lo >= 0.0) || !(support_hi > support_lo))
            throw std::domain_error(
                "vxk_wave_evolve: requires 0 <= support_lo < support_hi");
        vxk::EdgeVectorFunction data;
        data.n_edges = g->config.n_edges();
        data.decay_rate = 1.0;
        data.support = std::make_pair(support_lo, support_hi);
        data.value = [f, ctx](int e, double s) { return f(e, s, ctx); };
        *out = vxk::evolve_exact(g->config, vxk::InitialData{data}, t,
                                 {edge, x});
    });
}

vxk_status vxk_sweep_create(const char* const* column_names, int n_columns,
                            vxk_sweep** out) {
    if (auto s = require(out && column_names && n_columns > 0,
                         "vxk_sweep_create: bad arguments"))
        return s;
    *out = nullptr;
    return guarded([&] {
        auto sweep = std::make_unique<vxk_sweep>();
        for (int i = 0; i < n_columns; ++i) {
            if (!column_names[i])
                throw std::invalid_argument(
                    "vxk_sweep_create: null column name");
            sweep->table.column_names.emplace_back(column_names[i]);
        }
        *out = sweep.release();
    });
}

void vxk_sweep_free(vxk_sweep* sweep) { delete sweep; }

vxk_status vxk_sweep_add_row(vxk_sweep* sweep, const double* values,
                             int n_values) {
    if (auto s = require(sweep && values, "vxk_sweep_add_row: null arg"))
        return s;
    return guarded([&] {
        sweep->table.add_row(std::vector<double>(values, values + n_values));
    });
}

vxk_status vxk_sweep_add_metadata(vxk_sweep* sweep, const char* key,
                                  const char* value) {
    if (auto s =
            require(sweep && key && value, "vxk_sweep_add_metadata: null arg"))
        return s;
    return guarded([&] { sweep->table.metadata.emplace_back(key, value); });
}

vxk_status vxk_sweep_write(const vxk_sweep* sweep, const char* path,
                           vxk_format format) {
    if (auto s = require(sweep && path, "vxk_sweep_write: null arg")) return s;
    if (format != VXK_FORMAT_CSV && format != VXK_FORMAT_JSON)
        return fail(VXK_ERR_CONTRACT, "vxk_sweep_write: unknown format");
    const auto emit = [&](std::ostream& os) {
        if (format == VXK_FORMAT_CSV)
            vxk::write_csv(os, sweep->table);
        else
            vxk::write_json(os, sweep->table);
    };
    if (std::string(path) == "-") {
        emit(std::cout);
        std::cout.flush();
        return VXK_OK;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) return fail(VXK_ERR_IO, "vxk_sweep_write: cannot open path");
    emit(file);
    file.flush();
    if (!file) return fail(VXK_ERR_IO, "vxk_sweep_write: write failed");
    return VXK_OK;
}

vxk_status vxk_verify_run(int tier, vxk_verify_report_fn report, void* ctx,
                          int* out_failures) {
    if (tier != 0 && tier != 1)
        return fail(VXK_ERR_CONTRACT, "vxk_verify_run: tier must be 0 or 1");
    return guarded([&] {
        int failures = 0;
        vxk::verify::run(
            tier == 0 ? vxk::verify::Tier::Quick : vxk::verify::Tier::Full,
            [&](const vxk::verify::CheckResult& r) {
                if (!r.pass) ++failures;
                if (report)
                    report(r.name.c_str(), r.pass ? 1 : 0, r.max_err, r.tol,
                           r.seconds, r.note.c_str(), ctx);
            });
        if (out_failures) *out_failures = failures;
    });
}

}  // extern "C"
