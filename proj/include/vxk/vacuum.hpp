#ifndef VXK_VACUUM_HPP
#define VXK_VACUUM_HPP

#include <span>
#include <vector>

#include "vxk/graph.hpp"

namespace vxk {

enum class EnergyRoute { ClosedForm, SmallTExtraction, SubtractedDensity };

struct EnergyDensityValue {
    double value = 0.0;
    EnergyRoute route = EnergyRoute::ClosedForm;
};

// T00(x) in closed form:
// (1 - 2/N)/(8 pi x^2) + a/(2 pi N^2 x) + (a^2/(pi N^3)) e^{2ax/N} Ei(-2ax/N);
// only the first term for alpha = 0; 1/(8 pi x^2) for Dirichlet.
double energy_density_closed(const StarGraphConfig& g, double x);

// Short-distance form: the 1/x^2 and 1/x terms plus the logarithm.
double energy_density_near(const StarGraphConfig& g, double x);

// Long-distance (almost pure Dirichlet) form 1/(8 pi x^2).
double energy_density_far(const StarGraphConfig& g, double x);

// Independent route: -1/2 times the linear-in-t coefficient of the
// cylinder-kernel diagonal after subtracting the free part 1/(pi t).
double energy_density_numeric(const StarGraphConfig& g, int edge, double x);

// Independent route: (1/2) int_0^inf omega e^{-omega t}
// [sigma(omega,x,x) - 1/pi] d omega extrapolated t -> 0 along t_damping.
double energy_density_from_density(const StarGraphConfig& g, int edge,
                                   double x,
                                   std::span<const double> t_damping);
double energy_density_from_density(const StarGraphConfig& g, int edge,
                                   double x);

// Default damping ladder 0.2, 0.1, 0.05, 0.025 scaled by min(1, x).
std::vector<double> default_damping_ladder(double x);

// Route dispatcher; the routes agree within the documented tolerances
// (1e-5 relative for SmallTExtraction, 1e-4 for SubtractedDensity).
EnergyDensityValue energy_density(const StarGraphConfig& g, int edge,
                                  double x, EnergyRoute route);

}  // namespace vxk

#endif
