#include "vxk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace vxk {

namespace {

// Gauss-Kronrod 7-15 pair on [-1,1].  Kronrod nodes/weights; the embedded
// 7-point Gauss rule uses every other node.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double kronrod;
    double gauss;
    double abs_integral;  // Kronrod applied to |f|, for error floors
};

PanelEstimate gk15(const Integrand& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    double absint = kWgk[7] * std::abs(fc);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        kron += kWgk[i] * (f1 + f2);
        absint += kWgk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
    }
    evals += 15;
    return {kron * h, gauss * h, absint * std::abs(h)};
}

constexpr int kMaxDepth = 48;
// Always split a few times so narrow interior features cannot slip
// unsampled between the rule nodes of a wide panel.
constexpr int kMinDepth = 3;

struct AdaptiveState {
    const Integrand* f;
    long evals = 0;
    double sum = 0.0;
    double err = 0.0;
    bool converged = true;
};

void refine(AdaptiveState& st, double a, double b, double budget, int depth) {
    if (depth < kMinDepth) {
        const double m = 0.5 * (a + b);
        refine(st, a, m, 0.5 * budget, depth + 1);
        refine(st, m, b, 0.5 * budget, depth + 1);
        return;
    }
    PanelEstimate e = gk15(*st.f, a, b, st.evals);
    double panel_err = std::abs(e.kronrod - e.gauss);
    const double floor =
        50.0 * std::numeric_limits<double>::epsilon() * e.abs_integral;
    if (panel_err <= std::max(budget, floor) || depth >= kMaxDepth) {
        st.sum += e.kronrod;
        st.err += std::max(panel_err, floor);
        if (panel_err > std::max(budget, floor)) st.converged = false;
        return;
    }
    const double m = 0.5 * (a + b);
    refine(st, a, m, 0.5 * budget, depth + 1);
    refine(st, m, b, 0.5 * budget, depth + 1);
}

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    double tol) {
    const double pts[2] = {a, b};
    return integrate_adaptive(f, pts, tol);
}

QuadratureResult integrate_adaptive(const Integrand& f,
                                    std::span<const double> breakpoints,
                                    double tol) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument(
            "integrate_adaptive: need at least two breakpoints");
    if (!(tol > 0.0))
        throw std::domain_error("integrate_adaptive: tol must be positive");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument(
                "integrate_adaptive: breakpoints must be strictly increasing");

    const double total = breakpoints.back() - breakpoints.front();
    AdaptiveState st;
    st.f = &f;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = breakpoints[i];
        const double b = breakpoints[i + 1];
        refine(st, a, b, tol * (b - a) / total, 0);
    }
    QuadratureResult r{st.sum, st.err, st.evals};
    if (!st.converged && st.err > tol)
        throw AccuracyError("integrate_adaptive: max subdivision depth reached",
                            r.value, r.error_estimate);
    return r;
}

QuadratureResult integrate_damped_tail(const Integrand& f, double a,
                                       double decay_rate, double tol) {
    if (!(decay_rate > 0.0))
        throw std::domain_error(
            "integrate_damped_tail: decay_rate must be positive");
    if (!(tol > 0.0))
        throw std::domain_error("integrate_damped_tail: tol must be positive");

    // Estimate the envelope constant C from samples; the caller certifies
    // |f(s)| <= C exp(-decay_rate*(s-a)) up to normalization at a.
    const double step = 0.5 / decay_rate;
    double c_est = 0.0;
    for (int k = 0; k <= 8; ++k) {
        const double s = a + k * step;
        c_est = std::max(c_est, std::abs(f(s)) * std::exp(decay_rate * (s - a)));
    }
    c_est = 4.0 * c_est + std::numeric_limits<double>::min();

    // (C/rate) exp(-rate*L) < tol/10
    double L = std::log(10.0 * c_est / (decay_rate * tol)) / decay_rate;
    L = std::max(L, 2.0 * step);
    QuadratureResult r = integrate_adaptive(f, a, a + L, 0.9 * tol);
    r.error_estimate += 0.1 * tol;
    return r;
}

}  // namespace vxk
