#include <doctest.h>

#include <cmath>

#include "vxk/quadrature.hpp"

using namespace vxk;

TEST_CASE("polynomial and smooth integrals") {
    const auto r = integrate_adaptive([](double x) { return x * x; }, 0.0,
                                      1.0, 1e-12);
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const auto exp_tail =
        integrate_adaptive([](double s) { return std::exp(-s); }, 0.0, 40.0,
                           1e-12);
    CHECK(exp_tail.value ==
          doctest::Approx(1.0 - std::exp(-40.0)).epsilon(1e-12));

    const auto osc = integrate_adaptive(
        [](double s) { return std::cos(10.0 * s); }, 0.0, M_PI, 1e-12);
    CHECK(std::abs(osc.value) < 1e-10);
}

TEST_CASE("error estimate bounds the true error on smooth corpus") {
    struct Case {
        Integrand f;
        double a, b, exact;
    };
    const Case corpus[] = {
        {[](double x) { return x * x * x; }, 0.0, 2.0, 4.0},
        {[](double x) { return std::sin(x); }, 0.0, M_PI, 2.0},
        {[](double x) { return std::exp(x); }, 0.0, 1.0, std::exp(1.0) - 1.0},
        {[](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, M_PI / 4.0},
        {[](double x) { return std::cos(5.0 * x); }, 0.0, 2.0,
         std::sin(10.0) / 5.0},
        {[](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0},
        {[](double x) { return std::log1p(x); }, 0.0, 1.0,
         2.0 * std::log(2.0) - 1.0},
        {[](double x) { return x * std::exp(-x * x); }, 0.0, 3.0,
         0.5 * (1.0 - std::exp(-9.0))},
        {[](double x) { return 1.0 / (2.0 + std::sin(x)); }, 0.0, 2.0 * M_PI,
         2.0 * M_PI / std::sqrt(3.0)},
        {[](double x) { return std::cosh(x); }, -1.0, 1.0,
         2.0 * std::sinh(1.0)},
        {[](double x) { return std::exp(-x) * std::sin(3.0 * x); }, 0.0, 10.0,
         (3.0 - std::exp(-10.0) * (std::sin(30.0) * 1.0 +
                                   3.0 * std::cos(30.0))) /
             10.0},
        {[](double x) { return x * x * std::cos(x); }, 0.0, M_PI,
         -2.0 * M_PI},  // x^2 sin x + 2x cos x - 2 sin x at pi
        {[](double x) { return 1.0 / std::sqrt(1.0 + x); }, 0.0, 3.0, 2.0},
        {[](double x) { return std::atan(x); }, 0.0, 1.0,
         M_PI / 4.0 - 0.5 * std::log(2.0)},
        {[](double x) { return std::exp(-2.0 * x) * std::cos(x); }, 0.0, 30.0,
         2.0 / 5.0 - std::exp(-60.0) * (std::sin(30.0) -
                                        2.0 * std::cos(30.0)) /
                         5.0 * -1.0},
        {[](double x) { return 3.0 * x * x - 2.0 * x + 7.0; }, -2.0, 2.0,
         44.0},
        {[](double x) { return std::sin(x) * std::sin(x); }, 0.0, M_PI,
         M_PI / 2.0},
        {[](double x) { return 1.0 / (1.0 + std::exp(-x)); }, -5.0, 5.0, 5.0},
        {[](double x) { return std::cbrt(x); }, 0.0, 8.0, 12.0},
        {[](double x) { return x / (1.0 + x * x); }, 0.0, 2.0,
         0.5 * std::log(5.0)},
    };
    for (const auto& c : corpus) {
        const auto r = integrate_adaptive(c.f, c.a, c.b, 1e-10);
        const double true_err = std::abs(r.value - c.exact);
        CHECK(true_err <= std::max(r.error_estimate, 2e-15 * std::abs(c.exact)));
        CHECK(true_err < 1e-9);
    }
}

TEST_CASE("damped tail integration") {
    const auto unit = integrate_damped_tail(
        [](double s) { return std::exp(-s); }, 0.0, 1.0, 1e-10);
    CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-10));

    // int_0^inf e^{-2s} cos s ds = 2/5
    const auto damped_cos = integrate_damped_tail(
        [](double s) { return std::exp(-2.0 * s) * std::cos(s); }, 0.0, 2.0,
        1e-11);
    CHECK(damped_cos.value == doctest::Approx(0.4).epsilon(1e-10));

    CHECK_THROWS_AS(integrate_damped_tail([](double) { return 0.0; }, 0.0,
                                          0.0, 1e-8),
                    std::domain_error);
    CHECK_THROWS_AS(integrate_damped_tail([](double) { return 0.0; }, 0.0,
                                          -1.0, 1e-8),
                    std::domain_error);
}

TEST_CASE("breakpoints let the rule catch narrow features") {
    // narrow Gaussian at an interior breakpoint
    const double x0 = 2.0;
    const double sigma = 1e-3;
    auto spike = [=](double y) {
        const double u = (y - x0) / sigma;
        return std::exp(-0.5 * u * u);
    };
    const double pts[3] = {0.0, x0, 10.0};
    const auto r = integrate_adaptive(spike, pts, 1e-12);
    CHECK(r.value ==
          doctest::Approx(sigma * std::sqrt(2.0 * M_PI)).epsilon(1e-9));
}

TEST_CASE("max depth failure carries the best estimate") {
    // |x - 1/pi|^{-0.95} is integrable but needs infinite refinement
    auto nasty = [](double x) {
        return std::pow(std::abs(x - 1.0 / M_PI), -0.95);
    };
    CHECK_THROWS_AS(integrate_adaptive(nasty, 0.0, 1.0, 1e-12),
                    AccuracyError);
    try {
        integrate_adaptive(nasty, 0.0, 1.0, 1e-12);
    } catch (const AccuracyError& e) {
        CHECK(e.best_estimate > 0.0);
        CHECK(e.error_estimate > 0.0);
    }
}
