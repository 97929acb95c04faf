#include "vxk/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace vxk {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Power series: E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k/(k*k!).
// Well conditioned only for small x; beyond that the alternating terms
// cancel catastrophically, hence the continued fraction below.
double e1_series(double x) {
    double sum = 0.0;
    double u = 1.0;  // (-x)^k / k!
    for (int k = 1; k <= 60; ++k) {
        u *= -x / k;
        const double term = u / k;
        sum += term;
        if (std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
    }
    return -kEulerGamma - std::log(x) - sum;
}

// exp(x)*E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- 9/(x+7- ...)))), modified Lentz.
double e1_cf_scaled(double x) {
    const double tiny = 1e-300;
    double f = x + 1.0;
    if (f == 0.0) f = tiny;
    double C = f;
    double D = 0.0;
    for (int k = 1; k <= 5000; ++k) {
        const double a = -static_cast<double>(k) * k;
        const double b = x + 2.0 * k + 1.0;
        D = b + a * D;
        if (D == 0.0) D = tiny;
        C = b + a / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    return 1.0 / f;
}

// Ei(x) = gamma + ln x + sum_{k>=1} x^k/(k*k!), x > 0.  All terms positive.
double ei_series_pos(double x) {
    double sum = 0.0;
    double u = 1.0;  // x^k / k!
    for (int k = 1; k <= 200; ++k) {
        u *= x / k;
        const double term = u / k;
        sum += term;
        if (term < 0.25 * kEps * sum) break;
    }
    return kEulerGamma + std::log(x) + sum;
}

// Ei(x) ~ (e^x/x) sum_k k!/x^k for large x, truncated at the smallest term.
double ei_asymptotic_pos(double x) {
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k <= 400; ++k) {
        const double next = term * k / x;
        if (next >= term) break;
        term = next;
        sum += term;
        if (term < kEps * sum) break;
    }
    const double log_result = x - std::log(x) + std::log(sum);
    if (log_result > 709.0)
        throw std::range_error("expint_ei: overflow for large positive x");
    return std::exp(x - std::log(x)) * sum;
}

std::complex<double> e1_series_complex(std::complex<double> w) {
    std::complex<double> sum = 0.0;
    std::complex<double> u = 1.0;
    for (int k = 1; k <= 400; ++k) {
        u *= -w / static_cast<double>(k);
        const std::complex<double> term = u / static_cast<double>(k);
        sum += term;
        if (std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
    }
    return -kEulerGamma - std::log(w) - sum;
}

std::complex<double> e1_cf_scaled_complex(std::complex<double> w) {
    const double tiny = 1e-300;
    std::complex<double> f = w + 1.0;
    if (f == 0.0) f = tiny;
    std::complex<double> C = f;
    std::complex<double> D = 0.0;
    for (int k = 1; k <= 10000; ++k) {
        const double a = -static_cast<double>(k) * k;
        const std::complex<double> b = w + (2.0 * k + 1.0);
        D = b + a * D;
        if (D == 0.0) D = tiny;
        C = b + a / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const std::complex<double> delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    return 1.0 / f;
}

// (1/w) sum_k (-1)^k k!/w^k, truncated at the smallest term; adequate to
// full double precision once |w| >= 40.
std::complex<double> e1_asymptotic_scaled_complex(std::complex<double> w) {
    std::complex<double> sum = 1.0;
    std::complex<double> term = 1.0;
    const double aw = std::abs(w);
    for (int k = 1; k <= 400; ++k) {
        if (k > aw) break;
        term *= -static_cast<double>(k) / w;
        sum += term;
        if (std::abs(term) < kEps * std::abs(sum)) break;
    }
    return sum / w;
}

bool complex_series_region(std::complex<double> w) {
    const double aw = std::abs(w);
    return aw <= 40.0 && aw + w.real() <= 8.0;
}

}  // namespace

double expint_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("expint_e1: requires x > 0");
    if (x <= 1.0) return e1_series(x);
    return std::exp(-x) * e1_cf_scaled(x);
}

double expint_e1_scaled(double x) {
    if (!(x > 0.0)) throw std::domain_error("expint_e1_scaled: requires x > 0");
    if (x <= 1.0) return std::exp(x) * e1_series(x);
    return e1_cf_scaled(x);
}

double expint_ei(double x) {
    if (x == 0.0 || !std::isfinite(x))
        throw std::domain_error("expint_ei: requires finite nonzero x");
    if (x < 0.0) return -expint_e1(-x);
    if (x <= 40.0) return ei_series_pos(x);
    return ei_asymptotic_pos(x);
}

std::complex<double> expint_e1_complex(std::complex<double> w) {
    if (w == 0.0)
        throw std::domain_error("expint_e1_complex: requires w != 0");
    if (w.imag() == 0.0 && w.real() < 0.0)
        throw std::domain_error(
            "expint_e1_complex: branch cut on the negative real axis");
    if (w.imag() == 0.0) return expint_e1(w.real());
    if (complex_series_region(w)) return e1_series_complex(w);
    if (std::abs(w) <= 40.0) return std::exp(-w) * e1_cf_scaled_complex(w);
    return std::exp(-w) * e1_asymptotic_scaled_complex(w);
}

std::complex<double> expint_e1_scaled_complex(std::complex<double> w) {
    if (w == 0.0)
        throw std::domain_error("expint_e1_scaled_complex: requires w != 0");
    if (w.imag() == 0.0 && w.real() < 0.0)
        throw std::domain_error(
            "expint_e1_scaled_complex: branch cut on the negative real axis");
    if (w.imag() == 0.0) return expint_e1_scaled(w.real());
    if (complex_series_region(w)) return std::exp(w) * e1_series_complex(w);
    if (std::abs(w) <= 40.0) return e1_cf_scaled_complex(w);
    return e1_asymptotic_scaled_complex(w);
}

std::complex<double> expint_ei_complex(std::complex<double> z) {
    if (z == 0.0)
        throw std::domain_error("expint_ei_complex: requires z != 0");
    if (z.imag() == 0.0) return {expint_ei(z.real()), 0.0};
    return -expint_e1_complex(-z);
}

double erfc_real(double x) { return std::erfc(x); }

double erfcx_real(double x) {
    if (x < 8.0) {
        // Split x^2 so the exponential sees the exactly rounded argument.
        const double hi = x * x;
        const double lo = std::fma(x, x, -hi);
        return std::exp(hi) * (1.0 + lo) * std::erfc(x);
    }
    // Asymptotic: (1/(x sqrt(pi))) sum_k (-1)^k (2k-1)!!/(2x^2)^k.
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= -(2.0 * k - 1.0) * inv2x2;
        sum += term;
        if (std::abs(term) < kEps * sum) break;
    }
    return sum / (x * std::sqrt(M_PI));
}

double extract_linear_coefficient(const std::function<double(double)>& g,
                                  double t_min, double t_max) {
    if (!(t_min > 0.0) || !(t_max > t_min))
        throw std::domain_error(
            "extract_linear_coefficient: requires 0 < t_min < t_max");

    int levels = static_cast<int>(std::lround(std::log2(t_max / t_min)));
    levels = std::clamp(levels, 3, 16);

    // Samples on the geometric ladder and first differences:
    // D(h) = (g(2h)-g(h))/h = c1 + 3 c2 h + 7 c3 h^2 + ...
    std::vector<double> gv(levels + 1);
    double t = t_max;
    for (int k = 0; k <= levels; ++k, t *= 0.5) gv[k] = g(t);

    std::vector<double> row;  // Richardson tableau row, ratio-2 halving
    std::vector<double> diag;
    std::vector<double> change;
    double best = 0.0;
    double best_change = std::numeric_limits<double>::infinity();
    for (int k = 0; k < levels; ++k) {
        const double h = t_max / std::exp2(k + 1);
        std::vector<double> next(k + 1);
        next[0] = (gv[k] - gv[k + 1]) / h;
        for (int j = 1; j <= k; ++j)
            next[j] = next[j - 1] +
                      (next[j - 1] - row[j - 1]) / (std::exp2(j) - 1.0);
        row = std::move(next);
        diag.push_back(row[k]);
        if (k > 0) {
            const double d = std::abs(diag[k] - diag[k - 1]);
            change.push_back(d);
            if (d <= best_change) {
                best_change = d;
                best = diag[k];
            }
        }
    }

    // Diverging tail: the final correction blew up well past the best one
    // achieved, beyond what round-off alone can explain.
    if (!change.empty() && change.back() > 8.0 * best_change &&
        change.back() > 1e3 * kEps * (std::abs(best) + 1e-300)) {
        throw AccuracyError("extract_linear_coefficient: not contracting",
                            best, best_change);
    }
    // The full-depth diagonal carries the highest extrapolation order.
    return diag.back();
}

}  // namespace vxk
