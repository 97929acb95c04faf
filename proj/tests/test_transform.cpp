#include <doctest.h>

#include <cmath>

#include "vxk/transform.hpp"

using namespace vxk;

namespace {

EdgeVectorFunction exp_decay(int n_edges) {
    EdgeVectorFunction v;
    v.n_edges = n_edges;
    v.decay_rate = 1.0;
    v.value = [](int, double x) { return std::exp(-x); };
    v.derivative = [](int, double x) { return -std::exp(-x); };
    return v;
}

EdgeVectorFunction x_exp_decay(int n_edges) {
    EdgeVectorFunction v;
    v.n_edges = n_edges;
    v.decay_rate = 0.9;
    v.value = [](int, double x) { return x * std::exp(-x); };
    v.derivative = [](int, double x) { return (1.0 - x) * std::exp(-x); };
    return v;
}

std::vector<EdgePoint> sample_points(int n_edges, int count, double hi) {
    std::vector<EdgePoint> pts;
    for (int j = 1; j <= n_edges; ++j)
        for (int i = 0; i < count; ++i)
            pts.push_back({j, hi * i / (count - 1)});
    return pts;
}

}  // namespace

TEST_CASE("apply_transform by direct substitution") {
    SUBCASE("N=1, u=e^{-x}, alpha=1, x=0") {
        const auto g = StarGraphConfig::make(1, 1.0);
        const auto u = exp_decay(1);
        CHECK(apply_transform(u, g, {1, 0.0}) == doctest::Approx(-2.0));
    }
    SUBCASE("alpha=0 reduces to the derivative sum") {
        const auto g = StarGraphConfig::make(3, 0.0);
        const auto u = exp_decay(3);
        const double x = 0.7;
        CHECK(apply_transform(u, g, {2, x}) ==
              doctest::Approx(-3.0 * std::exp(-x)).epsilon(1e-14));
    }
    SUBCASE("N=2, u_j=e^{-x}, alpha=1, x=ln 2") {
        const auto g = StarGraphConfig::make(2, 1.0);
        const auto u = exp_decay(2);
        CHECK(apply_transform(u, g, {1, std::log(2.0)}) ==
              doctest::Approx(-1.5).epsilon(1e-14));
    }
    SUBCASE("missing derivative is a contract error") {
        const auto g = StarGraphConfig::make(1, 1.0);
        EdgeVectorFunction u = exp_decay(1);
        u.derivative = nullptr;
        CHECK_THROWS_AS(apply_transform(u, g, {1, 0.0}), std::invalid_argument);
    }
}

TEST_CASE("apply_inverse_transform closed form for N=1, v=e^{-x}") {
    // forward(u) = v with u = -e^{-x}/(alpha+1): u' - alpha u = e^{-x}
    for (double alpha : {0.5, 1.0, 3.0}) {
        const auto g = StarGraphConfig::make(1, alpha);
        const auto v = exp_decay(1);
        for (double x : {0.0, 0.3, 2.0}) {
            const double expected = -std::exp(-x) / (alpha + 1.0);
            CHECK(apply_inverse_transform(v, g, {1, x}, 1e-12) ==
                  doctest::Approx(expected).epsilon(1e-10));
        }
    }
    const auto g1 = StarGraphConfig::make(1, 1.0);
    CHECK(apply_inverse_transform(exp_decay(1), g1, {1, 0.0}, 1e-12) ==
          doctest::Approx(-0.5).epsilon(1e-11));
}

TEST_CASE("the inverse transform requires alpha > 0") {
    const auto g = StarGraphConfig::make(2, 0.0);
    const auto v = exp_decay(2);
    CHECK_THROWS_AS(apply_inverse_transform(v, g, {1, 1.0}, 1e-10),
                    std::domain_error);
    CHECK_THROWS_AS(roundtrip_residual(v, g, {{1, 0.0}}, 1e-10),
                    std::domain_error);
}

TEST_CASE("round trip: forward of inverse is the identity") {
    SUBCASE("v=e^{-x} on N=3, alpha=2") {
        const auto g = StarGraphConfig::make(3, 2.0);
        const double r = roundtrip_residual(exp_decay(3), g,
                                            sample_points(3, 20, 5.0), 1e-11);
        CHECK(r < 1e-9);
    }
    SUBCASE("v=x e^{-x} on N=1, alpha=1") {
        const auto g = StarGraphConfig::make(1, 1.0);
        const double r = roundtrip_residual(x_exp_decay(1), g,
                                            sample_points(1, 20, 5.0), 1e-11);
        CHECK(r < 1e-9);
    }
    SUBCASE("v identically zero") {
        const auto g = StarGraphConfig::make(2, 1.0);
        EdgeVectorFunction zero;
        zero.n_edges = 2;
        zero.decay_rate = 1.0;
        zero.value = [](int, double) { return 0.0; };
        zero.derivative = [](int, double) { return 0.0; };
        const double r =
            roundtrip_residual(zero, g, sample_points(2, 5, 3.0), 1e-11);
        CHECK(r == 0.0);
    }
}

TEST_CASE("inverse-transform image satisfies the vertex conditions when v(0)=0") {
    const auto g = StarGraphConfig::make(4, 1.5);
    EdgeVectorFunction v = x_exp_decay(4);
    // break the edge symmetry
    v.value = [](int j, double x) { return (1.0 + 0.1 * j) * x * std::exp(-x); };
    v.derivative = [](int j, double x) {
        return (1.0 + 0.1 * j) * (1.0 - x) * std::exp(-x);
    };

    std::vector<double> u0(4), du0(4);
    for (int j = 1; j <= 4; ++j) {
        u0[j - 1] = apply_inverse_transform(v, g, {j, 0.0}, 1e-12);
        du0[j - 1] = apply_inverse_transform_derivative(v, g, {j, 0.0}, 1e-12);
    }
    for (int j = 1; j < 4; ++j)
        CHECK(std::abs(u0[j] - u0[0]) < 1e-8);  // continuity
    double flux = 0.0;
    for (double d : du0) flux += d;
    CHECK(std::abs(flux - g.alpha() * u0[0]) < 1e-8);  // vertex condition
}

TEST_CASE("linearity of the inverse transform") {
    const auto g = StarGraphConfig::make(2, 1.0);
    const auto v = exp_decay(2);
    const auto w = x_exp_decay(2);
    EdgeVectorFunction combo;
    combo.n_edges = 2;
    combo.decay_rate = 0.9;
    combo.value = [&](int j, double x) {
        return 2.0 * v.value(j, x) - 3.0 * w.value(j, x);
    };
    combo.derivative = [&](int j, double x) {
        return 2.0 * v.derivative(j, x) - 3.0 * w.derivative(j, x);
    };
    for (double x : {0.0, 0.4, 1.7}) {
        const double lhs = apply_inverse_transform(combo, g, {1, x}, 1e-12);
        const double rhs = 2.0 * apply_inverse_transform(v, g, {1, x}, 1e-12) -
                           3.0 * apply_inverse_transform(w, g, {1, x}, 1e-12);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}
