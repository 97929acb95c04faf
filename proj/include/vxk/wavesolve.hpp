#ifndef VXK_WAVESOLVE_HPP
#define VXK_WAVESOLVE_HPP

#include <vector>

#include "vxk/transform.hpp"
#include "vxk/graph.hpp"

namespace vxk {

// Initial displacement for the wave problem; the initial velocity is zero.
// Tests use smooth data compactly supported away from the vertex.
struct InitialData {
    EdgeVectorFunction f;
};

// Field samples on a shared uniform grid, one array per edge.
struct FieldSnapshot {
    double time = 0.0;
    std::vector<double> x;
    std::vector<std::vector<double>> u;    // [edge-1][i]
    std::vector<std::vector<double>> ut;   // du/dt
    std::vector<std::vector<double>> ux;   // du/dx
    std::vector<std::vector<double>> uxx;  // optional, may be empty
    bool has_uxx() const { return !uxx.empty(); }
};

// Exact solution of u_tt = u_xx with u(0,.) = f, u_t(0,.) = 0:
// d'Alembert pieces plus the vertex reflection/transmission and the
// exponentially delayed transmission for alpha > 0.
double evolve_exact(const StarGraphConfig& g, const InitialData& data,
                    double t, const EdgePoint& point);

// Samples u, u_t, u_x (and u_xx if requested) of the exact solution on a
// grid; derivatives are analytic and require data.f.derivative (and
// second_derivative for u_xx).
FieldSnapshot evolve_exact_snapshot(const StarGraphConfig& g,
                                    const InitialData& data, double t,
                                    const Grid& grid, bool with_uxx);

struct EnergyValue {
    double value = 0.0;
    bool undersampled = false;  // fewer than 200 samples across the grid
};

// E = (1/2) sum_j int [u_t^2 + u_x^2] dx + (alpha/2) u(t,0)^2,
// composite quadrature on the snapshot grid (which must start at x = 0).
EnergyValue robin_energy(const StarGraphConfig& g, const FieldSnapshot& snap);

// Alternative form E = (1/2) sum_j int [u_t^2 - u u_xx] dx; equals
// robin_energy when the field satisfies the vertex condition.
EnergyValue robin_energy_alt(const StarGraphConfig& g,
                             const FieldSnapshot& snap);

// Explicit leapfrog oracle on [0, x_max]; vertex closure keeps discrete
// continuity and balances the summed flux against alpha*u(0) to second
// order.  The grid must extend past the causal range of the data.
FieldSnapshot evolve_fd_oracle(const StarGraphConfig& g,
                               const InitialData& data, double t_final,
                               const Grid& grid, double cfl);

}  // namespace vxk

#endif
