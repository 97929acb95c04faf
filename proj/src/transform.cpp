#include "vxk/transform.hpp"

#include <cmath>

#include "vxk/quadrature.hpp"

namespace vxk {

namespace {

// Tail integral int_x^inf exp(-alpha(s-x)/N) sum_k v_k(s) ds.
double tail_integral(const EdgeVectorFunction& v, const StarGraphConfig& g,
                     double x, double tol) {
    const double rate = g.alpha() / g.n_edges() + v.decay_rate;
    auto f = [&](double s) {
        return std::exp(-g.alpha() * (s - x) / g.n_edges()) * v.sum(s);
    };
    if (v.support) {
        const double hi = v.support->second;
        if (hi <= x) return 0.0;
        const double lo = std::max(x, v.support->first);
        return integrate_adaptive(f, lo, hi, tol).value;
    }
    return integrate_damped_tail(f, x, rate, tol).value;
}

}  // namespace

double apply_transform(const EdgeVectorFunction& u, const StarGraphConfig& graph,
               const EdgePoint& point) {
    point.validate(graph);
    if (!u.derivative)
        throw std::invalid_argument("apply_transform: derivative_at is required");
    double s = 0.0;
    for (int k = 1; k <= graph.n_edges(); ++k)
        s += u.derivative(k, point.coordinate);
    return s - graph.alpha() * u.value(point.edge, point.coordinate);
}

double apply_inverse_transform(const EdgeVectorFunction& v,
                       const StarGraphConfig& graph, const EdgePoint& point,
                       double tol) {
    point.validate(graph);
    if (!(graph.alpha() > 0.0))
        throw std::domain_error(
            "apply_inverse_transform: the inverse transform does not exist for alpha = 0");
    const int n = graph.n_edges();
    const double x = point.coordinate;
    const double local =
        (v.sum(x) / n - v.value(point.edge, x)) / graph.alpha();
    return local - tail_integral(v, graph, x, tol) / (n * static_cast<double>(n));
}

double apply_inverse_transform_derivative(const EdgeVectorFunction& v,
                                  const StarGraphConfig& graph,
                                  const EdgePoint& point, double tol) {
    point.validate(graph);
    if (!(graph.alpha() > 0.0))
        throw std::domain_error(
            "apply_inverse_transform_derivative: the inverse transform does not exist for alpha = 0");
    if (!v.derivative)
        throw std::invalid_argument(
            "apply_inverse_transform_derivative: derivative_at is required");
    const int n = graph.n_edges();
    const double n2 = n * static_cast<double>(n);
    const double x = point.coordinate;
    double sum_d = 0.0;
    for (int k = 1; k <= n; ++k) sum_d += v.derivative(k, x);
    const double local =
        (sum_d / n - v.derivative(point.edge, x)) / graph.alpha();
    // d/dx of the tail term: (alpha/N) * tail_term + sum_k v_k(x)/N^2.
    const double tail = tail_integral(v, graph, x, tol);
    return local + (graph.alpha() / n) * (-tail / n2) + v.sum(x) / n2;
}

double roundtrip_residual(const EdgeVectorFunction& v,
                          const StarGraphConfig& graph,
                          const std::vector<EdgePoint>& sample_points,
                          double tol) {
    if (!(graph.alpha() > 0.0))
        throw std::domain_error(
            "roundtrip_residual: the inverse transform does not exist for alpha = 0");
    const int n = graph.n_edges();

    EdgeVectorFunction u;
    u.n_edges = n;
    u.decay_rate = std::min(v.decay_rate, graph.alpha() / n);
    u.value = [&v, &graph, tol](int edge, double x) {
        return apply_inverse_transform(v, graph, {edge, x}, tol);
    };
    u.derivative = [&v, &graph, tol](int edge, double x) {
        return apply_inverse_transform_derivative(v, graph, {edge, x}, tol);
    };

    double residual = 0.0;
    for (const EdgePoint& p : sample_points) {
        const double tu = apply_transform(u, graph, p);
        residual = std::max(residual,
                            std::abs(tu - v.value(p.edge, p.coordinate)));
    }
    return residual;
}

}  // namespace vxk
