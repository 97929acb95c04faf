#include "vxk/spectral.hpp"

#include <cmath>

namespace vxk {

namespace {

void require_omega(double omega) {
    if (!(omega >= 0.0))
        throw std::domain_error("spectral: requires omega >= 0");
}

}  // namespace

double spectral_projection_kernel(const StarGraphConfig& g, double omega,
                                  int j, int l, double x, double y) {
    require_omega(omega);
    g.require_edge(j);
    g.require_edge(l);
    const double del = (j == l) ? 1.0 : 0.0;
    const double incident =
        (2.0 / M_PI) * del * std::sin(omega * x) * std::sin(omega * y);
    if (g.is_dirichlet()) return incident;

    const int n = g.n_edges();
    const double a = g.alpha();
    if (omega == 0.0) {
        // continuous extension: both brace terms carry omega factors, and
        // for alpha = 0 the ratio N omega^2/(N^2 omega^2) survives
        return a > 0.0 ? 0.0 : 2.0 / (M_PI * n);
    }
    const double denom = a * a + n * static_cast<double>(n) * omega * omega;
    const double brace = n * omega * omega * std::cos(omega * (x + y)) +
                         a * omega * std::sin(omega * (x + y));
    return incident + (2.0 / M_PI) * brace / denom;
}

double local_spectral_density(const StarGraphConfig& g, double omega, int j,
                              double x) {
    require_omega(omega);
    g.require_edge(j);
    if (!(x >= 0.0))
        throw std::domain_error("local_spectral_density: requires x >= 0");
    if (g.is_dirichlet())
        return (1.0 - std::cos(2.0 * omega * x)) / M_PI;

    const int n = g.n_edges();
    const double a = g.alpha();
    const double c2 = std::cos(2.0 * omega * x);
    double rho = 1.0 / M_PI + (2.0 / n - 1.0) * c2 / M_PI;
    if (a > 0.0) {
        const double denom =
            a * a + n * static_cast<double>(n) * omega * omega;
        rho += (2.0 * a / M_PI) *
               (omega * std::sin(2.0 * omega * x) - (a / n) * c2) / denom;
    }
    return rho;
}

RegularPlusDelta global_density_regular(const StarGraphConfig& g) {
    RegularPlusDelta out;
    const int n = g.n_edges();
    if (g.is_dirichlet()) {
        out.delta_weight_at_zero = -n / 4.0;
        out.regular = [](double) { return 0.0; };
        return out;
    }
    const double a = g.alpha();
    if (a == 0.0) {
        out.delta_weight_at_zero = (2.0 - n) / 4.0;
        out.regular = [](double) { return 0.0; };
        return out;
    }
    out.delta_weight_at_zero = -n / 4.0;
    out.regular = [n, a](double omega) {
        return (n * a / M_PI) /
               (a * a + n * static_cast<double>(n) * omega * omega);
    };
    return out;
}

double staircase_increment(const StarGraphConfig& g, double omega) {
    if (omega < 0.0) return 0.0;
    const int n = g.n_edges();
    if (g.is_dirichlet()) return -n / 4.0;
    if (g.alpha() == 0.0) return (2.0 - n) / 4.0;
    return -n / 4.0 + std::atan(n * omega / g.alpha()) / M_PI;
}

std::complex<double> scattering_eigenfunction(const StarGraphConfig& g,
                                              double omega, int j, int l,
                                              double x) {
    if (!(omega > 0.0))
        throw std::domain_error(
            "scattering_eigenfunction: requires omega > 0");
    g.require_edge(j);
    g.require_edge(l);
    const double del = (j == l) ? 1.0 : 0.0;
    const std::complex<double> standing(0.0, -2.0 * del * std::sin(omega * x));
    if (g.is_dirichlet()) return standing;  // the alpha -> inf limit

    const int n = g.n_edges();
    const double a = g.alpha();
    const double denom = a * a + n * static_cast<double>(n) * omega * omega;
    const std::complex<double> amp =
        2.0 * omega * std::complex<double>(n * omega, -a) / denom;
    const std::complex<double> outgoing =
        amp * std::complex<double>(std::cos(omega * x), std::sin(omega * x));
    return standing + outgoing;
}

double scattering_reconstruction(const StarGraphConfig& g, double omega,
                                 int j, int jp, double x, double y) {
    if (!(omega > 0.0))
        throw std::domain_error(
            "scattering_reconstruction: requires omega > 0");
    g.require_edge(j);
    g.require_edge(jp);
    std::complex<double> sum = 0.0;
    for (int l = 1; l <= g.n_edges(); ++l)
        sum += scattering_eigenfunction(g, omega, j, l, x) *
               std::conj(scattering_eigenfunction(g, omega, jp, l, y));
    sum /= 2.0 * M_PI;
    if (std::abs(sum.imag()) > 1e-8)
        throw AccuracyError(
            "scattering_reconstruction: nonreal reconstruction", sum.real(),
            std::abs(sum.imag()));
    return sum.real();
}

}  // namespace vxk
