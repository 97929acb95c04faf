#ifndef VXK_GRAPH_HPP
#define VXK_GRAPH_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace vxk {

// Matching condition imposed at the vertex of the star graph.
// Kirchhoff is the alpha = 0 case of ExnerSeba; Dirichlet is kept as a
// separate variant so its closed forms are evaluated exactly instead of
// through a large-alpha limit.
enum class VertexCondition { ExnerSeba, Kirchhoff, Dirichlet };

// A single vertex with n_edges semi-infinite leads and a delta coupling of
// strength alpha (units 1/length).  Immutable value type.
class StarGraphConfig {
public:
    static StarGraphConfig make(int n_edges, double alpha) {
        if (n_edges < 1)
            throw std::domain_error("StarGraphConfig: n_edges must be >= 1");
        if (!std::isfinite(alpha))
            throw std::domain_error("StarGraphConfig: alpha must be finite");
        if (alpha < 0.0)
            throw std::domain_error(
                "StarGraphConfig: alpha < 0 is not supported");
        return StarGraphConfig(n_edges, alpha,
                               alpha == 0.0 ? VertexCondition::Kirchhoff
                                            : VertexCondition::ExnerSeba);
    }

    static StarGraphConfig make_dirichlet(int n_edges) {
        if (n_edges < 1)
            throw std::domain_error("StarGraphConfig: n_edges must be >= 1");
        return StarGraphConfig(n_edges, 0.0, VertexCondition::Dirichlet);
    }

    int n_edges() const { return n_edges_; }
    double alpha() const { return alpha_; }
    VertexCondition condition() const { return condition_; }
    bool is_dirichlet() const {
        return condition_ == VertexCondition::Dirichlet;
    }
    bool is_kirchhoff() const {
        return condition_ == VertexCondition::Kirchhoff;
    }

    void require_edge(int edge) const {
        if (edge < 1 || edge > n_edges_)
            throw std::domain_error("edge index " + std::to_string(edge) +
                                    " out of range [1," +
                                    std::to_string(n_edges_) + "]");
    }

private:
    StarGraphConfig(int n, double a, VertexCondition c)
        : n_edges_(n), alpha_(a), condition_(c) {}

    int n_edges_;
    double alpha_;
    VertexCondition condition_;
};

// A point on the graph: edge index (1-based) and distance from the vertex.
struct EdgePoint {
    int edge = 1;
    double coordinate = 0.0;

    void validate(const StarGraphConfig& g) const {
        g.require_edge(edge);
        if (!(coordinate >= 0.0))
            throw std::domain_error("EdgePoint: coordinate must be >= 0");
    }
};

// Uniform grid, endpoints included.
class Grid {
public:
    static Grid uniform(double lo, double hi, int count) {
        if (!(lo < hi))
            throw std::domain_error("Grid: requires lo < hi");
        if (count < 2)
            throw std::domain_error("Grid: requires count >= 2");
        return Grid(lo, hi, count);
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    int count() const { return count_; }
    double spacing() const { return (hi_ - lo_) / (count_ - 1); }

    double operator[](int i) const {
        if (i == count_ - 1) return hi_;
        return lo_ + i * spacing();
    }

    std::vector<double> points() const {
        std::vector<double> p(count_);
        for (int i = 0; i < count_; ++i) p[i] = (*this)[i];
        return p;
    }

private:
    Grid(double lo, double hi, int count) : lo_(lo), hi_(hi), count_(count) {}
    double lo_;
    double hi_;
    int count_;
};

// Thrown when an adaptive numerical procedure fails to reach its target
// tolerance; carries the best estimate obtained so far.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err) {}

    double best_estimate;
    double error_estimate;
};

}  // namespace vxk

#endif
