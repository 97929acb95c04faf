#ifndef VXK_TRANSFORM_HPP
#define VXK_TRANSFORM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "vxk/graph.hpp"

namespace vxk {

// A vector-valued function on the graph, one component per edge, with an
// explicit exponential-decay certificate so semi-infinite integrals against
// it are well defined.  Derivatives are optional; operations that need them
// say so.
struct EdgeVectorFunction {
    int n_edges = 1;
    std::function<double(int edge, double x)> value;
    std::function<double(int edge, double x)> derivative;         // optional
    std::function<double(int edge, double x)> second_derivative;  // optional
    double decay_rate = 1.0;  // |v_j(x)| <= C exp(-decay_rate*x)
    // Optional compact support [lo, hi]; quadratures restrict to it.
    std::optional<std::pair<double, double>> support;

    double operator()(int edge, double x) const { return value(edge, x); }
    double sum(double x) const {
        double s = 0.0;
        for (int j = 1; j <= n_edges; ++j) s += value(j, x);
        return s;
    }
};

// First-order transform between solutions of the delta-vertex and
// Dirichlet problems.  The forward direction takes a delta-vertex
// solution u to the Dirichlet solution
//   (sum_k u_k'(x)) - alpha u_j(x)
// per edge; the inverse reconstructs u from decaying Dirichlet data v:
//   u_j(x) = (1/alpha)[(1/N) sum_k v_k(x) - v_j(x)]
//            - (1/N^2) int_x^inf exp(-alpha(s-x)/N) sum_k v_k(s) ds.
// The inverse exists only for alpha > 0.

double apply_transform(const EdgeVectorFunction& u,
                       const StarGraphConfig& graph, const EdgePoint& point);

double apply_inverse_transform(const EdgeVectorFunction& v,
                               const StarGraphConfig& graph,
                               const EdgePoint& point, double tol);

// d/dx of the inverse-transform image, computed analytically (the tail
// term differentiates under the integral); requires v.derivative.
double apply_inverse_transform_derivative(const EdgeVectorFunction& v,
                                          const StarGraphConfig& graph,
                                          const EdgePoint& point, double tol);

// max over sample points of |forward(inverse(v)) - v|.
double roundtrip_residual(const EdgeVectorFunction& v,
                          const StarGraphConfig& graph,
                          const std::vector<EdgePoint>& sample_points,
                          double tol);

}  // namespace vxk

#endif
