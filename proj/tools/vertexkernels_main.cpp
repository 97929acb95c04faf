// Command-line front end for the vertexkernels shared library: parameter
// sweeps tabulated to CSV/JSON plus the verification-suite runner.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "vertexkernels.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAccuracy = 2;

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;

    std::vector<double> points() const {
        std::vector<double> p(count);
        for (int i = 0; i < count; ++i)
            p[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
        if (count > 1) p.back() = hi;
        return p;
    }
};

bool parse_grid(const std::string& text, GridSpec& out) {
    const size_t c1 = text.find(':');
    if (c1 == std::string::npos) {
        try {
            out.lo = out.hi = std::stod(text);
        } catch (...) {
            return false;
        }
        out.count = 1;
        return true;
    }
    const size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) return false;
    try {
        out.lo = std::stod(text.substr(0, c1));
        out.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        out.count = std::stoi(text.substr(c2 + 1));
    } catch (...) {
        return false;
    }
    if (out.count < 1) return false;
    if (out.count == 1 && out.lo != out.hi) return false;
    if (out.count > 1 && !(out.lo < out.hi)) return false;
    return true;
}

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// RAII wrappers around the C handles.
struct GraphDeleter {
    void operator()(vxk_graph* g) const { vxk_graph_free(g); }
};
using GraphPtr = std::unique_ptr<vxk_graph, GraphDeleter>;

struct SweepDeleter {
    void operator()(vxk_sweep* s) const { vxk_sweep_free(s); }
};
using SweepPtr = std::unique_ptr<vxk_sweep, SweepDeleter>;

int status_to_exit(vxk_status s) {
    return s == VXK_ERR_ACCURACY ? kExitAccuracy : kExitUsage;
}

int report_failure(vxk_status s) {
    std::fprintf(stderr, "vertexkernels: %s: %s\n", vxk_status_name(s),
                 vxk_last_error());
    return status_to_exit(s);
}

unsigned worker_count(size_t rows) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("VERTEXKERNELS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) n = static_cast<unsigned>(v);
    }
    if (rows < n) n = static_cast<unsigned>(rows == 0 ? 1 : rows);
    return n;
}

// Computes rows concurrently, keeps them in grid order.
template <typename Fn>
vxk_status compute_rows(size_t n_rows, std::vector<std::vector<double>>& rows,
                        Fn&& fill) {
    rows.assign(n_rows, {});
    const unsigned workers = worker_count(n_rows);
    if (workers <= 1) {
        for (size_t i = 0; i < n_rows; ++i) {
            const vxk_status s = fill(i, rows[i]);
            if (s != VXK_OK) return s;
        }
        return VXK_OK;
    }
    std::atomic<size_t> next{0};
    std::atomic<int> first_error{VXK_OK};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= n_rows || first_error.load() != VXK_OK) return;
                const vxk_status s = fill(i, rows[i]);
                if (s != VXK_OK) {
                    int expected = VXK_OK;
                    first_error.compare_exchange_strong(expected, s);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    return static_cast<vxk_status>(first_error.load());
}

struct CommonOptions {
    int edges = 1;
    double alpha = 0.0;
    bool dirichlet = false;
    std::string format = "csv";
    std::string out = "-";
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_graph = true) {
    if (needs_graph) {
        cmd->add_option("--edges", opt.edges, "number of edges N")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--alpha", opt.alpha,
                        "vertex coupling strength (>= 0)");
        cmd->add_flag("--dirichlet", opt.dirichlet,
                      "Dirichlet vertex instead of a delta coupling");
    }
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.out, "output path ('-' for stdout)");
}

vxk_status make_graph(const CommonOptions& opt, GraphPtr& out) {
    vxk_graph* raw = nullptr;
    const vxk_status s = opt.dirichlet
                             ? vxk_graph_create_dirichlet(opt.edges, &raw)
                             : vxk_graph_create(opt.edges, opt.alpha, &raw);
    out.reset(raw);
    return s;
}

int write_sweep(const CommonOptions& opt,
                const std::vector<std::string>& columns,
                const std::vector<std::vector<double>>& rows,
                const std::vector<std::pair<std::string, std::string>>& meta) {
    std::vector<const char*> names;
    for (const auto& c : columns) names.push_back(c.c_str());
    vxk_sweep* raw = nullptr;
    vxk_status s =
        vxk_sweep_create(names.data(), static_cast<int>(names.size()), &raw);
    if (s != VXK_OK) return report_failure(s);
    SweepPtr sweep(raw);
    for (const auto& [key, value] : meta) {
        s = vxk_sweep_add_metadata(sweep.get(), key.c_str(), value.c_str());
        if (s != VXK_OK) return report_failure(s);
    }
    for (const auto& row : rows) {
        s = vxk_sweep_add_row(sweep.get(), row.data(),
                              static_cast<int>(row.size()));
        if (s != VXK_OK) return report_failure(s);
    }
    s = vxk_sweep_write(sweep.get(), opt.out.c_str(),
                        opt.format == "csv" ? VXK_FORMAT_CSV
                                            : VXK_FORMAT_JSON);
    if (s != VXK_OK) return report_failure(s);
    return kExitOk;
}

// ---- subcommand drivers ----------------------------------------------

int run_density(const CommonOptions& opt, const std::string& kind,
                const GridSpec& omega, const GridSpec& x, const GridSpec& y,
                int edge, int l) {
    GraphPtr graph;
    if (vxk_status s = make_graph(opt, graph)) return report_failure(s);

    const auto omegas = omega.points();
    if (kind == "global") {
        std::vector<std::vector<double>> rows;
        const vxk_status s = compute_rows(
            omegas.size(), rows, [&](size_t i, std::vector<double>& row) {
                double v = 0.0;
                const vxk_status st =
                    vxk_global_density_regular(graph.get(), omegas[i], &v);
                row = {omegas[i], v};
                return st;
            });
        if (s != VXK_OK) return report_failure(s);
        double weight = 0.0;
        if (vxk_status st =
                vxk_global_density_delta_weight(graph.get(), &weight))
            return report_failure(st);
        return write_sweep(opt, {"omega", "rho_regular"}, rows,
                           {{"delta_weight_at_zero", format17(weight)}});
    }

    const auto xs = x.points();
    if (kind == "projection") {
        const auto ys = y.points();
        std::vector<std::vector<double>> rows;
        const size_t n = omegas.size() * xs.size() * ys.size();
        const vxk_status s = compute_rows(
            n, rows, [&](size_t i, std::vector<double>& row) {
                const size_t iw = i / (xs.size() * ys.size());
                const size_t ix = (i / ys.size()) % xs.size();
                const size_t iy = i % ys.size();
                double v = 0.0;
                const vxk_status st = vxk_spectral_projection_kernel(
                    graph.get(), omegas[iw], edge, l, xs[ix], ys[iy], &v);
                row = {omegas[iw], xs[ix], ys[iy], v};
                return st;
            });
        if (s != VXK_OK) return report_failure(s);
        return write_sweep(opt, {"omega", "x", "y", "sigma"}, rows, {});
    }

    std::vector<std::vector<double>> rows;
    const size_t n = omegas.size() * xs.size();
    const vxk_status s =
        compute_rows(n, rows, [&](size_t i, std::vector<double>& row) {
            const size_t iw = i / xs.size();
            const size_t ix = i % xs.size();
            double v = 0.0;
            const vxk_status st = vxk_local_spectral_density(
                graph.get(), omegas[iw], edge, xs[ix], &v);
            row = {omegas[iw], xs[ix], v};
            return st;
        });
    if (s != VXK_OK) return report_failure(s);
    return write_sweep(opt, {"omega", "x", "rho"}, rows, {});
}

int run_staircase(const CommonOptions& opt, const GridSpec& omega) {
    GraphPtr graph;
    if (vxk_status s = make_graph(opt, graph)) return report_failure(s);
    const auto omegas = omega.points();
    std::vector<std::vector<double>> rows;
    const vxk_status s = compute_rows(
        omegas.size(), rows, [&](size_t i, std::vector<double>& row) {
            double v = 0.0;
            const vxk_status st =
                vxk_staircase_increment(graph.get(), omegas[i], &v);
            row = {omegas[i], v};
            return st;
        });
    if (s != VXK_OK) return report_failure(s);
    return write_sweep(opt, {"omega", "delta_N"}, rows, {});
}

int run_kernel(const CommonOptions& opt, const std::string& kind,
               const GridSpec& t, const GridSpec& x, const GridSpec& y,
               int j, int l) {
    GraphPtr graph;
    if (vxk_status s = make_graph(opt, graph)) return report_failure(s);
    const auto ts = t.points();
    const auto xs = x.points();
    const auto ys = y.points();
    const size_t n = ts.size() * xs.size() * ys.size();
    const bool complex_valued = kind == "quantum";

    std::vector<std::vector<double>> rows;
    const vxk_status s = compute_rows(
        n, rows, [&](size_t i, std::vector<double>& row) {
            const size_t it = i / (xs.size() * ys.size());
            const size_t ix = (i / ys.size()) % xs.size();
            const size_t iy = i % ys.size();
            vxk_status st;
            if (kind == "heat") {
                double v = 0.0;
                st = vxk_heat_kernel(graph.get(), ts[it], j, l, xs[ix],
                                     ys[iy], &v);
                row = {ts[it], xs[ix], ys[iy], v};
            } else if (kind == "cylinder") {
                double v = 0.0;
                st = vxk_cylinder_kernel(graph.get(), ts[it], j, l, xs[ix],
                                         ys[iy], &v);
                row = {ts[it], xs[ix], ys[iy], v};
            } else {
                double re = 0.0, im = 0.0;
                st = vxk_quantum_kernel(graph.get(), ts[it], j, l, xs[ix],
                                        ys[iy], &re, &im);
                row = {ts[it], xs[ix], ys[iy], re, im};
            }
            return st;
        });
    if (s != VXK_OK) return report_failure(s);
    std::vector<std::string> cols{"t", "x", "y"};
    if (complex_valued) {
        cols.push_back("G_re");
        cols.push_back("G_im");
    } else {
        cols.push_back("G");
    }
    return write_sweep(opt, cols, rows, {});
}

int run_energy_density(const CommonOptions& opt, const GridSpec& x,
                       int edge) {
    GraphPtr graph;
    if (vxk_status s = make_graph(opt, graph)) return report_failure(s);
    const auto xs = x.points();
    std::vector<std::vector<double>> rows;
    const vxk_status s = compute_rows(
        xs.size(), rows, [&](size_t i, std::vector<double>& row) {
            double closed = 0.0, numeric = 0.0;
            vxk_status st = vxk_energy_density(graph.get(), xs[i], &closed);
            if (st != VXK_OK) return st;
            st = vxk_energy_density_numeric(graph.get(), edge, xs[i],
                                            &numeric);
            row = {xs[i], closed, numeric};
            return st;
        });
    if (s != VXK_OK) return report_failure(s);
    return write_sweep(opt, {"x", "T00_closed", "T00_numeric"}, rows, {});
}

struct BumpCtx {
    double lo;
    double hi;
    int edge;
};

double bump_value(int edge, double x, void* ctx) {
    const auto* bump = static_cast<const BumpCtx*>(ctx);
    if (edge != bump->edge) return 0.0;
    const double s = (2.0 * x - bump->lo - bump->hi) / (bump->hi - bump->lo);
    const double q = 1.0 - s * s;
    if (q < 1e-12) return 0.0;
    return std::exp(1.0 - 1.0 / q);
}

int run_wave_evolve(const CommonOptions& opt, double t, const GridSpec& x,
                    const std::string& bump_spec) {
    GraphPtr graph;
    if (vxk_status s = make_graph(opt, graph)) return report_failure(s);

    BumpCtx bump{};
    {
        const size_t c1 = bump_spec.find(':');
        const size_t c2 =
            c1 == std::string::npos ? std::string::npos
                                    : bump_spec.find(':', c1 + 1);
        try {
            if (c2 == std::string::npos) throw std::invalid_argument("");
            bump.lo = std::stod(bump_spec.substr(0, c1));
            bump.hi = std::stod(bump_spec.substr(c1 + 1, c2 - c1 - 1));
            bump.edge = std::stoi(bump_spec.substr(c2 + 1));
        } catch (...) {
            std::fprintf(stderr,
                         "vertexkernels: --bump expects lo:hi:edge\n");
            return kExitUsage;
        }
        if (!(bump.lo >= 0.0) || !(bump.hi > bump.lo) || bump.edge < 1 ||
            bump.edge > vxk_graph_edges(graph.get())) {
            std::fprintf(stderr, "vertexkernels: invalid --bump values\n");
            return kExitUsage;
        }
    }

    const auto xs = x.points();
    const int n_edges = vxk_graph_edges(graph.get());
    const size_t n = xs.size() * static_cast<size_t>(n_edges);
    std::vector<std::vector<double>> rows;
    const vxk_status s = compute_rows(
        n, rows, [&](size_t i, std::vector<double>& row) {
            const int edge = static_cast<int>(i / xs.size()) + 1;
            const double xi = xs[i % xs.size()];
            double u = 0.0;
            const vxk_status st =
                vxk_wave_evolve(graph.get(), bump_value, &bump, bump.lo,
                                bump.hi, t, edge, xi, &u);
            row = {static_cast<double>(edge), xi, u};
            return st;
        });
    if (s != VXK_OK) return report_failure(s);
    return write_sweep(opt, {"edge", "x", "u"}, rows, {});
}

int run_verify(bool full) {
    std::printf("%-30s %-6s %-12s %-12s %s\n", "check", "status", "max_err",
                "tol", "time");
    int failures = 0;
    const vxk_status s = vxk_verify_run(
        full ? 1 : 0,
        [](const char* name, int pass, double max_err, double tol,
           double seconds, const char* note, void*) {
            std::printf("%-30s %-6s %-12.3e %-12.3e %6.2fs%s%s\n", name,
                        pass ? "PASS" : "FAIL", max_err, tol, seconds,
                        note && note[0] ? "  " : "", note ? note : "");
            std::fflush(stdout);
        },
        nullptr, &failures);
    if (s != VXK_OK) return report_failure(s);
    if (failures > 0) {
        std::printf("%d check(s) failed\n", failures);
        return kExitAccuracy;
    }
    std::printf("all checks passed\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "vertexkernels: spectral densities, Green functions, and vacuum "
        "energy on an infinite star graph with a delta vertex"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(vxk_version()));

    // density
    CommonOptions dens_opt;
    std::string dens_kind = "local";
    std::string dens_omega = "0.1:5:50";
    std::string dens_x = "0:5:50";
    std::string dens_y;
    int dens_edge = 1, dens_l = 1;
    auto* dens = app.add_subcommand(
        "density", "local/global spectral density or projection kernel");
    add_common(dens, dens_opt);
    dens->add_option("--kind", dens_kind, "local | global | projection")
        ->check(CLI::IsMember({"local", "global", "projection"}));
    dens->add_flag_callback("--global",
                            [&dens_kind] { dens_kind = "global"; },
                            "shorthand for --kind global");
    dens->add_option("--omega", dens_omega, "omega grid lo:hi:count");
    dens->add_option("--x", dens_x, "x grid lo:hi:count");
    dens->add_option("--y", dens_y,
                     "y grid lo:hi:count (projection; defaults to --x)");
    dens->add_option("--edge", dens_edge, "edge index j");
    dens->add_option("--l", dens_l, "second edge index (projection)");

    // staircase
    CommonOptions stair_opt;
    std::string stair_omega = "0:10:50";
    auto* stair = app.add_subcommand(
        "staircase", "incremental eigenvalue-counting staircase");
    add_common(stair, stair_opt);
    stair->add_option("--omega", stair_omega, "omega grid lo:hi:count");

    // kernel
    CommonOptions ker_opt;
    std::string ker_kind = "cylinder";
    std::string ker_t = "1";
    std::string ker_x = "0:3:20";
    std::string ker_y = "0:3:20";
    int ker_j = 1, ker_l = 1;
    auto* ker = app.add_subcommand("kernel",
                                   "heat/cylinder/quantum Green functions");
    add_common(ker, ker_opt);
    ker->add_option("--kind", ker_kind, "heat | cylinder | quantum")
        ->check(CLI::IsMember({"heat", "cylinder", "quantum"}));
    ker->add_option("--t", ker_t, "time grid lo:hi:count");
    ker->add_option("--x", ker_x, "x grid lo:hi:count");
    ker->add_option("--y", ker_y, "y grid lo:hi:count");
    ker->add_option("--j", ker_j, "observation edge");
    ker->add_option("--l", ker_l, "source edge");

    // energy-density
    CommonOptions en_opt;
    std::string en_x = "0.1:5:100";
    int en_edge = 1;
    auto* en = app.add_subcommand(
        "energy-density", "vacuum energy density: closed form and "
                          "small-t extraction");
    add_common(en, en_opt);
    en->add_option("--x", en_x, "x grid lo:hi:count");
    en->add_option("--edge", en_edge, "edge index");

    // wave-evolve
    CommonOptions wave_opt;
    double wave_t = 1.0;
    std::string wave_x = "0:8:200";
    std::string wave_bump = "1:2:1";
    auto* wave = app.add_subcommand(
        "wave-evolve", "exact wave evolution of a smooth bump");
    add_common(wave, wave_opt);
    wave->add_option("--t", wave_t, "evolution time");
    wave->add_option("--x", wave_x, "x grid lo:hi:count");
    wave->add_option("--bump", wave_bump,
                     "initial bump support and edge, lo:hi:edge");

    // verify
    bool verify_quick = false;
    bool verify_full = false;
    auto* ver = app.add_subcommand(
        "verify", "run the cross-module verification suite");
    ver->add_flag("--quick", verify_quick, "reduced grids (seconds)");
    ver->add_flag("--full", verify_full, "complete grids (minutes)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto grid_or_die = [](const std::string& text, const char* what,
                          GridSpec& out) {
        if (!parse_grid(text, out)) {
            std::fprintf(stderr,
                         "vertexkernels: bad %s grid '%s' (want lo:hi:count)\n",
                         what, text.c_str());
            return false;
        }
        return true;
    };

    if (dens->parsed()) {
        GridSpec omega, x, y;
        if (!grid_or_die(dens_omega, "--omega", omega) ||
            !grid_or_die(dens_x, "--x", x))
            return kExitUsage;
        if (dens_y.empty())
            y = x;
        else if (!grid_or_die(dens_y, "--y", y))
            return kExitUsage;
        return run_density(dens_opt, dens_kind, omega, x, y, dens_edge,
                           dens_l);
    }
    if (stair->parsed()) {
        GridSpec omega;
        if (!grid_or_die(stair_omega, "--omega", omega)) return kExitUsage;
        return run_staircase(stair_opt, omega);
    }
    if (ker->parsed()) {
        GridSpec t, x, y;
        if (!grid_or_die(ker_t, "--t", t) || !grid_or_die(ker_x, "--x", x) ||
            !grid_or_die(ker_y, "--y", y))
            return kExitUsage;
        return run_kernel(ker_opt, ker_kind, t, x, y, ker_j, ker_l);
    }
    if (en->parsed()) {
        GridSpec x;
        if (!grid_or_die(en_x, "--x", x)) return kExitUsage;
        return run_energy_density(en_opt, x, en_edge);
    }
    if (wave->parsed()) {
        GridSpec x;
        if (!grid_or_die(wave_x, "--x", x)) return kExitUsage;
        return run_wave_evolve(wave_opt, wave_t, x, wave_bump);
    }
    if (ver->parsed()) {
        if (verify_quick && verify_full) {
            std::fprintf(stderr,
                         "vertexkernels: choose one of --quick/--full\n");
            return kExitUsage;
        }
        return run_verify(verify_full);
    }
    return kExitUsage;
}
