#include "vxk/kernels.hpp"

#include <cmath>

#include "vxk/quadrature.hpp"
#include "vxk/specialfn.hpp"

namespace vxk {

namespace {

void require_time(double t, const char* who) {
    if (!(t > 0.0))
        throw std::domain_error(std::string(who) + ": requires t > 0");
}

void require_point(const StarGraphConfig& g, int j, int l, double x,
                   double y) {
    g.require_edge(j);
    g.require_edge(l);
    if (!(x >= 0.0) || !(y >= 0.0))
        throw std::domain_error("star kernel: requires x, y >= 0");
}

// Vertex term of the heat kernel in closed form, overflow-safe:
// -(a/N^2) exp(a(x+y)/N + a^2 t/N^2) erfc((x+y)/(2 sqrt t) + a sqrt t / N)
//   = -(a/N^2) exp(-(x+y)^2/(4t)) erfcx((x+y)/(2 sqrt t) + a sqrt t / N).
double heat_vertex_term(double alpha, int n, double t, double w) {
    if (alpha == 0.0) return 0.0;
    const double st = std::sqrt(t);
    const double u = w / (2.0 * st) + alpha * st / n;
    return -(alpha / (static_cast<double>(n) * n)) *
           std::exp(-w * w / (4.0 * t)) * erfcx_real(u);
}

// Vertex term of the cylinder kernel:
// -(2a/(pi N^2)) Im[exp(z) E1(z)],  z = (a(x+y) - i a t)/N.
double cylinder_vertex_term(double alpha, int n, double t, double w) {
    if (alpha == 0.0) return 0.0;
    const std::complex<double> z(alpha * w / n, -alpha * t / n);
    const double n2 = static_cast<double>(n) * n;
    return -(2.0 * alpha / (M_PI * n2)) *
           expint_e1_scaled_complex(z).imag();
}

// Vertex term of the quantum kernel by quadrature along the ray
// s = x + rho e^{i pi/4}, which turns the Fresnel factor into Gaussian
// damping.  w = x + y.
std::complex<double> quantum_vertex_term(double alpha, int n, double t,
                                         double w) {
    if (alpha == 0.0) return 0.0;
    const double a = alpha / n;
    const double inv4t = 0.25 / t;
    const double b = w / (2.0 * std::sqrt(2.0) * t) + a / std::sqrt(2.0);
    // real exponent: -rho^2/(4t) - b*rho; truncate where it reaches -45
    const double rho_max =
        -2.0 * t * b + std::sqrt(4.0 * t * t * b * b + 180.0 * t);
    const double phase0 = w * w * inv4t;
    auto expo = [&](double rho) {
        const double re = -rho * rho * inv4t - b * rho;
        const double im =
            phase0 + rho * (w / (2.0 * std::sqrt(2.0) * t) - a / std::sqrt(2.0));
        return std::complex<double>(re, im);
    };
    const double tol = 1e-10;
    const double re_part = integrate_adaptive(
                               [&](double rho) {
                                   const auto e = expo(rho);
                                   return std::exp(e.real()) * std::cos(e.imag());
                               },
                               0.0, rho_max, tol)
                               .value;
    const double im_part = integrate_adaptive(
                               [&](double rho) {
                                   const auto e = expo(rho);
                                   return std::exp(e.real()) * std::sin(e.imag());
                               },
                               0.0, rho_max, tol)
                               .value;
    const double pref = -2.0 * alpha / (static_cast<double>(n) * n) /
                        std::sqrt(4.0 * M_PI * t);
    // (4 pi i t)^{-1/2} carries e^{-i pi/4}; the ray rotation supplies
    // e^{+i pi/4}, so the two phases cancel.
    return pref * std::complex<double>(re_part, im_part);
}

}  // namespace

double free_kernel_heat(double t, double z) {
    require_time(t, "free_kernel_heat");
    return std::exp(-z * z / (4.0 * t)) / std::sqrt(4.0 * M_PI * t);
}

double free_kernel_cylinder(double t, double z) {
    require_time(t, "free_kernel_cylinder");
    return (t / M_PI) / (t * t + z * z);
}

std::complex<double> free_kernel_quantum(double t, double z) {
    require_time(t, "free_kernel_quantum");
    const double mag = 1.0 / std::sqrt(4.0 * M_PI * t);
    const double phase = z * z / (4.0 * t) - M_PI / 4.0;
    return mag * std::complex<double>(std::cos(phase), std::sin(phase));
}

std::complex<double> free_kernel(ProblemKind kind, double t, double z) {
    switch (kind) {
        case ProblemKind::Heat:
            return free_kernel_heat(t, z);
        case ProblemKind::Cylinder:
            return free_kernel_cylinder(t, z);
        case ProblemKind::Quantum:
            return free_kernel_quantum(t, z);
        case ProblemKind::Wave:
            break;
    }
    throw std::invalid_argument(
        "free_kernel: the wave kernel is distributional; use "
        "wave_kernel_slice");
}

double star_kernel_heat(const StarGraphConfig& g, double t, int j, int l,
                        double x, double y) {
    require_time(t, "star_kernel_heat");
    require_point(g, j, l, x, y);
    const double del = (j == l) ? 1.0 : 0.0;
    const double incident = del * free_kernel_heat(t, std::abs(x - y));
    const double image = free_kernel_heat(t, x + y);
    if (g.is_dirichlet()) return incident - del * image;
    const int n = g.n_edges();
    return incident + (2.0 / n - del) * image +
           heat_vertex_term(g.alpha(), n, t, x + y);
}

double cylinder_kernel(const StarGraphConfig& g, double t, int j, int l,
                       double x, double y) {
    require_time(t, "cylinder_kernel");
    require_point(g, j, l, x, y);
    const double del = (j == l) ? 1.0 : 0.0;
    const double incident = del * free_kernel_cylinder(t, std::abs(x - y));
    const double image = free_kernel_cylinder(t, x + y);
    if (g.is_dirichlet()) return incident - del * image;
    const int n = g.n_edges();
    return incident + (2.0 / n - del) * image +
           cylinder_vertex_term(g.alpha(), n, t, x + y);
}

std::complex<double> star_kernel_quantum(const StarGraphConfig& g, double t,
                                         int j, int l, double x, double y) {
    require_time(t, "star_kernel_quantum");
    require_point(g, j, l, x, y);
    const double del = (j == l) ? 1.0 : 0.0;
    const std::complex<double> incident =
        del * free_kernel_quantum(t, std::abs(x - y));
    const std::complex<double> image = free_kernel_quantum(t, x + y);
    if (g.is_dirichlet()) return incident - del * image;
    const int n = g.n_edges();
    return incident + (2.0 / n - del) * image +
           quantum_vertex_term(g.alpha(), n, t, x + y);
}

std::complex<double> star_kernel(ProblemKind kind, const StarGraphConfig& g,
                                 double t, int j, int l, double x, double y) {
    switch (kind) {
        case ProblemKind::Heat:
            return star_kernel_heat(g, t, j, l, x, y);
        case ProblemKind::Cylinder:
            return cylinder_kernel(g, t, j, l, x, y);
        case ProblemKind::Quantum:
            return star_kernel_quantum(g, t, j, l, x, y);
        case ProblemKind::Wave:
            break;
    }
    throw std::invalid_argument(
        "star_kernel: the wave kernel is distributional; use "
        "wave_kernel_slice");
}

double star_kernel_quadrature(ProblemKind kind, const StarGraphConfig& g,
                              double t, int j, int l, double x, double y,
                              double tol) {
    require_time(t, "star_kernel_quadrature");
    require_point(g, j, l, x, y);
    if (kind != ProblemKind::Heat && kind != ProblemKind::Cylinder)
        throw std::invalid_argument(
            "star_kernel_quadrature: supports Heat and Cylinder");
    auto free = [&](double z) {
        return kind == ProblemKind::Heat ? free_kernel_heat(t, z)
                                         : free_kernel_cylinder(t, z);
    };
    const double del = (j == l) ? 1.0 : 0.0;
    const double incident = del * free(std::abs(x - y));
    const double image = free(x + y);
    if (g.is_dirichlet()) return incident - del * image;
    const int n = g.n_edges();
    double vertex = 0.0;
    if (g.alpha() > 0.0) {
        const double a = g.alpha() / n;
        auto f = [&](double s) { return std::exp(-a * (s - x)) * free(s + y); };
        vertex = -(2.0 * g.alpha() / (n * static_cast<double>(n))) *
                 integrate_damped_tail(f, x, a, tol).value;
    }
    return incident + (2.0 / n - del) * image + vertex;
}

WaveKernelSlice wave_kernel_slice(const StarGraphConfig& g, double t, int j,
                                  int l, double x) {
    require_time(t, "wave_kernel_slice");
    g.require_edge(j);
    g.require_edge(l);
    if (!(x >= 0.0))
        throw std::domain_error("wave_kernel_slice: requires x >= 0");

    const double del = (j == l) ? 1.0 : 0.0;
    WaveKernelSlice slice;
    slice.t = t;
    slice.x = x;
    slice.j = j;
    slice.l = l;

    if (x - t >= 0.0) slice.dirac_terms.push_back({x - t, 0.5 * del});
    slice.dirac_terms.push_back({x + t, 0.5 * del});
    if (t - x >= 0.0) {
        const double w = g.is_dirichlet()
                             ? -0.5 * del
                             : 0.5 * (2.0 / g.n_edges() - del);
        slice.dirac_terms.push_back({t - x, w});
    }
    if (!g.is_dirichlet() && g.alpha() > 0.0 && t > x) {
        const double n2 = g.n_edges() * static_cast<double>(g.n_edges());
        slice.tail = WaveTail{t - x, -g.alpha() / n2,
                              g.alpha() / g.n_edges()};
    }
    return slice;
}

double apply_wave_kernel(const StarGraphConfig& g, double t, int j, double x,
                         const EdgeVectorFunction& f, double tol) {
    require_time(t, "apply_wave_kernel");
    g.require_edge(j);
    double u = 0.0;
    for (int l = 1; l <= g.n_edges(); ++l) {
        const WaveKernelSlice slice = wave_kernel_slice(g, t, j, l, x);
        for (const auto& d : slice.dirac_terms)
            u += d.weight * f.value(l, d.y_location);
        if (slice.tail) {
            const WaveTail& tail = *slice.tail;
            double lo = 0.0;
            double hi = tail.upper;
            if (f.support) {
                lo = std::max(lo, f.support->first);
                hi = std::min(hi, f.support->second);
            }
            if (lo < hi) {
                // in v = rate*(t-x-y) the boundary layer at y = t-x stays
                // resolved for any alpha
                const double tau = t - x;
                const double v_lo = tail.rate * (tau - hi);
                const double v_hi = std::min(tail.rate * (tau - lo), 45.0);
                if (v_lo < v_hi) {
                    auto integrand = [&](double v) {
                        return std::exp(-v) *
                               f.value(l, tau - v / tail.rate);
                    };
                    u += (tail.amplitude / tail.rate) *
                         integrate_adaptive(integrand, v_lo, v_hi, tol)
                             .value;
                }
            }
        }
    }
    return u;
}

double apply_kernel(ProblemKind kind, const StarGraphConfig& g, double t,
                    int j, double x, const EdgeVectorFunction& f, double tol) {
    if (kind != ProblemKind::Heat && kind != ProblemKind::Cylinder)
        throw std::invalid_argument(
            "apply_kernel: smooth contraction supports Heat and Cylinder; "
            "use apply_wave_kernel for the wave problem");
    require_time(t, "apply_kernel");
    g.require_edge(j);

    double u = 0.0;
    for (int l = 1; l <= g.n_edges(); ++l) {
        auto integrand = [&](double y) {
            const double k = kind == ProblemKind::Heat
                                 ? star_kernel_heat(g, t, j, l, x, y)
                                 : cylinder_kernel(g, t, j, l, x, y);
            return k * f.value(l, y);
        };
        double lo = 0.0;
        double hi;
        if (f.support) {
            lo = f.support->first;
            hi = f.support->second;
        } else {
            // envelope-based truncation: f decays at its certified rate and
            // the kernels are bounded in y for fixed t,x
            hi = lo + std::log(1e4 / tol) / f.decay_rate + x;
        }
        if (lo >= hi) continue;
        // the kernels peak at y = x; give the subdivision that boundary
        std::vector<double> pts{lo};
        if (x > lo && x < hi) pts.push_back(x);
        pts.push_back(hi);
        u += integrate_adaptive(integrand, pts, tol).value;
    }
    return u;
}

}  // namespace vxk
