#include "vxk/vacuum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "vxk/kernels.hpp"
#include "vxk/quadrature.hpp"
#include "vxk/specialfn.hpp"
#include "vxk/spectral.hpp"

namespace vxk {

namespace {

void require_x(double x) {
    if (!(x > 0.0))
        throw std::domain_error(
            "energy density: requires x > 0 (singular at the vertex)");
}

}  // namespace

double energy_density_closed(const StarGraphConfig& g, double x) {
    require_x(x);
    if (g.is_dirichlet()) return 1.0 / (8.0 * M_PI * x * x);
    const int n = g.n_edges();
    const double kirchhoff = (1.0 - 2.0 / n) / (8.0 * M_PI * x * x);
    const double a = g.alpha();
    if (a == 0.0) return kirchhoff;
    const double n2 = n * static_cast<double>(n);
    // e^{2ax/N} Ei(-2ax/N) = -exp(w) E1(w), w = 2ax/N
    const double scaled_ei = -expint_e1_scaled(2.0 * a * x / n);
    return kirchhoff + a / (2.0 * M_PI * n2 * x) +
           a * a / (M_PI * n2 * n) * scaled_ei;
}

double energy_density_near(const StarGraphConfig& g, double x) {
    require_x(x);
    if (g.is_dirichlet()) return 1.0 / (8.0 * M_PI * x * x);
    const int n = g.n_edges();
    const double kirchhoff = (1.0 - 2.0 / n) / (8.0 * M_PI * x * x);
    const double a = g.alpha();
    if (a == 0.0) return kirchhoff;
    const double n2 = n * static_cast<double>(n);
    return kirchhoff + a / (2.0 * M_PI * n2 * x) +
           a * a / (M_PI * n2 * n) * std::log(std::abs(a * x));
}

double energy_density_far(const StarGraphConfig& g, double x) {
    require_x(x);
    (void)g;
    return 1.0 / (8.0 * M_PI * x * x);
}

double energy_density_numeric(const StarGraphConfig& g, int edge, double x) {
    require_x(x);
    g.require_edge(edge);
    // subtracting through free_kernel_cylinder cancels the incident term
    // exactly instead of leaving 1/(pi t) rounding residue
    auto remainder = [&](double t) {
        return cylinder_kernel(g, t, edge, edge, x, x) -
               free_kernel_cylinder(t, 0.0);
    };
    const double t_max = 0.2 * std::min(1.0, x);
    const double c1 =
        extract_linear_coefficient(remainder, t_max / 32.0, t_max);
    return -0.5 * c1;
}

std::vector<double> default_damping_ladder(double x) {
    const double scale = std::min(1.0, x);
    return {0.2 * scale, 0.1 * scale, 0.05 * scale, 0.025 * scale};
}

double energy_density_from_density(const StarGraphConfig& g, int edge,
                                   double x,
                                   std::span<const double> t_damping) {
    require_x(x);
    g.require_edge(edge);
    if (t_damping.size() < 2)
        throw std::domain_error(
            "energy_density_from_density: need at least two damping values");

    std::vector<double> ts(t_damping.begin(), t_damping.end());
    std::sort(ts.begin(), ts.end(), std::greater<double>());

    std::vector<double> vals(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) {
        const double t = ts[i];
        auto integrand = [&](double omega) {
            const double s =
                local_spectral_density(g, omega, edge, x) - 1.0 / M_PI;
            return 0.5 * omega * std::exp(-omega * t) * s;
        };
        // |sigma - 1/pi| is bounded; pick Omega so the tail integral of
        // C omega e^{-omega t} is negligible
        const double c0 = 2.0;
        double u = 45.0;
        const double target = 1e-11 * t * t / c0;
        for (int it = 0; it < 60; ++it) {
            const double f = std::exp(-u) * (1.0 + u);
            if (f < target) break;
            u += 2.0;
        }
        const double omega_max = u / t;
        vals[i] = integrate_adaptive(integrand, 0.0, omega_max, 1e-10).value;
    }

    // I(t) is minus half the derivative of the odd cylinder remainder, so
    // it is even in t; extrapolate to 0 as a polynomial in t^2.
    std::vector<double> tab = vals;
    std::vector<double> s(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) s[i] = ts[i] * ts[i];
    for (size_t m = 1; m < s.size(); ++m)
        for (size_t i = 0; i + m < s.size(); ++i)
            tab[i] = tab[i + 1] +
                     (tab[i + 1] - tab[i]) * s[i + m] / (s[i] - s[i + m]);
    return tab[0];
}

double energy_density_from_density(const StarGraphConfig& g, int edge,
                                   double x) {
    const std::vector<double> ladder = default_damping_ladder(x);
    return energy_density_from_density(g, edge, x, ladder);
}

EnergyDensityValue energy_density(const StarGraphConfig& g, int edge,
                                  double x, EnergyRoute route) {
    switch (route) {
        case EnergyRoute::ClosedForm:
            return {energy_density_closed(g, x), route};
        case EnergyRoute::SmallTExtraction:
            return {energy_density_numeric(g, edge, x), route};
        case EnergyRoute::SubtractedDensity:
            return {energy_density_from_density(g, edge, x), route};
    }
    throw std::invalid_argument("energy_density: unknown route");
}

}  // namespace vxk
