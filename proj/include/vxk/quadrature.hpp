#ifndef VXK_QUADRATURE_HPP
#define VXK_QUADRATURE_HPP

#include <functional>
#include <span>

#include "vxk/graph.hpp"

namespace vxk {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive bisection with a nested Gauss-Kronrod 7-15 rule per panel.
// Throws AccuracyError (carrying the best estimate) when the target
// tolerance is unreachable within the maximum subdivision depth.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    double tol);

// Same, with caller-supplied initial panel boundaries (strictly increasing).
// Useful when the integrand has known sharp features.
QuadratureResult integrate_adaptive(const Integrand& f,
                                    std::span<const double> breakpoints,
                                    double tol);

// Integral of f over [a, infinity) for integrands bounded by
// C*exp(-decay_rate*s).  Truncates where the tail bound drops below tol/10
// and delegates to integrate_adaptive.
QuadratureResult integrate_damped_tail(const Integrand& f, double a,
                                       double decay_rate, double tol);

}  // namespace vxk

#endif
