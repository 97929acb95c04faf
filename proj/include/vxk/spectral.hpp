#ifndef VXK_SPECTRAL_HPP
#define VXK_SPECTRAL_HPP

#include <complex>
#include <functional>

#include "vxk/graph.hpp"

namespace vxk {

// A distribution on [0, inf) of the form  c * delta(omega) + r(omega),
// with the delta weight kept as explicit data.
struct RegularPlusDelta {
    double delta_weight_at_zero = 0.0;
    std::function<double(double omega)> regular;

    double regular_at(double omega) const { return regular(omega); }
};

// sigma_S^{jl}(omega, x, y): derivative with respect to omega of the
// spectral projection kernel of H.  omega = 0 is the continuous extension.
double spectral_projection_kernel(const StarGraphConfig& g, double omega,
                                  int j, int l, double x, double y);

// Diagonal density sigma_S^{jj}(omega, x, x).
double local_spectral_density(const StarGraphConfig& g, double omega, int j,
                              double x);

// Global subtracted density Delta-rho(omega) as explicit delta weight plus
// regular part.
RegularPlusDelta global_density_regular(const StarGraphConfig& g);

// Delta-N(omega): incremental effect of the vertex on the counting
// function; 0 for omega < 0, right-continuous at omega = 0.
double staircase_increment(const StarGraphConfig& g, double omega);

// Incoming scattering eigenfunction psi_j^l(x) at frequency omega
// (simplified closed form).
std::complex<double> scattering_eigenfunction(const StarGraphConfig& g,
                                              double omega, int j, int l,
                                              double x);

// (1/2pi) sum_l psi_j^l(x) conj(psi_j'^l(y)); must be real up to rounding.
// Throws on an imaginary residue above 1e-8.
double scattering_reconstruction(const StarGraphConfig& g, double omega,
                                 int j, int jp, double x, double y);

}  // namespace vxk

#endif
