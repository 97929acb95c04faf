#include "vxk/wavesolve.hpp"

#include <cmath>

#include "vxk/quadrature.hpp"

namespace vxk {

namespace {

constexpr double kTailTol = 1e-12;

double eval0(const EdgeVectorFunction& f, int edge, double s) {
    return s < 0.0 ? 0.0 : f.value(edge, s);
}

double eval1(const EdgeVectorFunction& f, int edge, double s) {
    return s < 0.0 ? 0.0 : f.derivative(edge, s);
}

double eval2(const EdgeVectorFunction& f, int edge, double s) {
    return s < 0.0 ? 0.0 : f.second_derivative(edge, s);
}

double sum0(const EdgeVectorFunction& f, double s) {
    if (s < 0.0) return 0.0;
    return f.sum(s);
}

double sum1(const EdgeVectorFunction& f, double s) {
    if (s < 0.0) return 0.0;
    double acc = 0.0;
    for (int l = 1; l <= f.n_edges; ++l) acc += f.derivative(l, s);
    return acc;
}

double sum2(const EdgeVectorFunction& f, double s) {
    if (s < 0.0) return 0.0;
    double acc = 0.0;
    for (int l = 1; l <= f.n_edges; ++l) acc += f.second_derivative(l, s);
    return acc;
}

// tail(tau) = int_0^tau exp(-a(tau-eta)) sum_l f_l(eta) d eta, a = alpha/N.
// Integrated in u = a(tau-eta) so the exponential boundary layer is
// resolved for any alpha.
double tail_integral(const StarGraphConfig& g, const EdgeVectorFunction& f,
                     double tau) {
    if (tau <= 0.0) return 0.0;
    double lo = 0.0;
    double hi = tau;
    if (f.support) {
        lo = std::max(lo, f.support->first);
        hi = std::min(hi, f.support->second);
    }
    if (lo >= hi) return 0.0;
    const double rate = g.alpha() / g.n_edges();
    const double u_lo = rate * (tau - hi);
    const double u_hi = std::min(rate * (tau - lo), 45.0);
    if (u_lo >= u_hi) return 0.0;
    auto integrand = [&](double u) {
        return std::exp(-u) * sum0(f, tau - u / rate);
    };
    return integrate_adaptive(integrand, u_lo, u_hi, kTailTol).value / rate;
}

struct PointField {
    double u;
    double ut;
    double ux;
    double uxx;
};

PointField exact_field(const StarGraphConfig& g, const EdgeVectorFunction& f,
                       double t, int j, double x, int deriv_order) {
    const double tau = t - x;
    const double left = x - t;
    const double right = x + t;

    PointField out{0.0, 0.0, 0.0, 0.0};

    if (g.is_dirichlet()) {
        out.u = 0.5 * (eval0(f, j, left) + eval0(f, j, right) -
                       eval0(f, j, tau));
        if (deriv_order >= 1) {
            const double dl = eval1(f, j, left);
            const double dr = eval1(f, j, right);
            const double dt_ = eval1(f, j, tau);
            out.ut = 0.5 * (-dl + dr - dt_);
            out.ux = 0.5 * (dl + dr + dt_);
        }
        if (deriv_order >= 2)
            out.uxx = 0.5 * (eval2(f, j, left) + eval2(f, j, right) -
                             eval2(f, j, tau));
        return out;
    }

    const int n = g.n_edges();
    const double a = g.alpha();
    const double n2 = n * static_cast<double>(n);
    const double tail = a > 0.0 ? tail_integral(g, f, tau) : 0.0;
    const double s0 = sum0(f, tau);

    out.u = 0.5 * (eval0(f, j, left) + eval0(f, j, right)) -
            0.5 * eval0(f, j, tau) + s0 / n - (a / n2) * tail;

    if (deriv_order >= 1) {
        const double dl = eval1(f, j, left);
        const double dr = eval1(f, j, right);
        const double dt_ = eval1(f, j, tau);
        const double s1 = sum1(f, tau);
        // d tail / d tau = S(tau) - (a/N) tail
        const double dtail = s0 - (a / n) * tail;
        out.ut = 0.5 * (-dl + dr) - 0.5 * dt_ + s1 / n - (a / n2) * dtail;
        out.ux = 0.5 * (dl + dr) + 0.5 * dt_ - s1 / n + (a / n2) * dtail;
    }
    if (deriv_order >= 2) {
        const double s1 = sum1(f, tau);
        const double s2 = sum2(f, tau);
        const double ddtail =
            s1 - (a / n) * (s0 - (a / n) * tail);
        out.uxx = 0.5 * (eval2(f, j, left) + eval2(f, j, right)) -
                  0.5 * eval2(f, j, tau) + s2 / n - (a / n2) * ddtail;
    }
    return out;
}

double composite_integral(const std::vector<double>& v, double h) {
    const size_t n = v.size();
    if (n < 4) throw std::domain_error("snapshot grid too coarse");
    // Simpson on an even number of intervals, 3/8 rule on the leftover.
    double acc = 0.0;
    size_t m = n - 1;  // intervals
    size_t simpson_end = m;
    if (m % 2 == 1) simpson_end = m - 3;
    for (size_t i = 0; i + 2 <= simpson_end; i += 2)
        acc += (h / 3.0) * (v[i] + 4.0 * v[i + 1] + v[i + 2]);
    if (simpson_end != m) {
        const size_t i = simpson_end;
        acc += (3.0 * h / 8.0) *
               (v[i] + 3.0 * v[i + 1] + 3.0 * v[i + 2] + v[i + 3]);
    }
    return acc;
}

EnergyValue field_energy(const StarGraphConfig& g, const FieldSnapshot& snap,
                         bool alt_form) {
    if (snap.x.size() < 4 || snap.u.size() != static_cast<size_t>(g.n_edges()))
        throw std::invalid_argument("robin_energy: malformed snapshot");
    if (std::abs(snap.x.front()) > 1e-12)
        throw std::invalid_argument(
            "robin_energy: snapshot grid must start at the vertex");
    if (alt_form && !snap.has_uxx())
        throw std::invalid_argument(
            "robin_energy_alt: snapshot lacks u_xx samples");

    const double h = snap.x[1] - snap.x[0];
    EnergyValue out;
    out.undersampled = snap.x.size() < 200;
    std::vector<double> dens(snap.x.size());
    for (int j = 0; j < g.n_edges(); ++j) {
        for (size_t i = 0; i < snap.x.size(); ++i) {
            const double ut = snap.ut[j][i];
            dens[i] = alt_form
                          ? ut * ut - snap.u[j][i] * snap.uxx[j][i]
                          : ut * ut + snap.ux[j][i] * snap.ux[j][i];
        }
        out.value += 0.5 * composite_integral(dens, h);
    }
    if (!alt_form && !g.is_dirichlet() && g.alpha() > 0.0) {
        const double u0 = snap.u[0][0];
        out.value += 0.5 * g.alpha() * u0 * u0;
    }
    return out;
}

}  // namespace

double evolve_exact(const StarGraphConfig& g, const InitialData& data,
                    double t, const EdgePoint& point) {
    point.validate(g);
    if (!(t >= 0.0)) throw std::domain_error("evolve_exact: requires t >= 0");
    if (t == 0.0) return eval0(data.f, point.edge, point.coordinate);
    return exact_field(g, data.f, t, point.edge, point.coordinate, 0).u;
}

FieldSnapshot evolve_exact_snapshot(const StarGraphConfig& g,
                                    const InitialData& data, double t,
                                    const Grid& grid, bool with_uxx) {
    if (!(t >= 0.0))
        throw std::domain_error("evolve_exact_snapshot: requires t >= 0");
    if (!data.f.derivative)
        throw std::invalid_argument(
            "evolve_exact_snapshot: initial data needs a derivative");
    if (with_uxx && !data.f.second_derivative)
        throw std::invalid_argument(
            "evolve_exact_snapshot: u_xx requested but the data has no "
            "second derivative");

    FieldSnapshot snap;
    snap.time = t;
    snap.x = grid.points();
    const int n = g.n_edges();
    snap.u.assign(n, std::vector<double>(snap.x.size()));
    snap.ut.assign(n, std::vector<double>(snap.x.size()));
    snap.ux.assign(n, std::vector<double>(snap.x.size()));
    if (with_uxx) snap.uxx.assign(n, std::vector<double>(snap.x.size()));

    for (int j = 1; j <= n; ++j) {
        for (size_t i = 0; i < snap.x.size(); ++i) {
            const PointField pf =
                exact_field(g, data.f, t, j, snap.x[i], with_uxx ? 2 : 1);
            snap.u[j - 1][i] = pf.u;
            snap.ut[j - 1][i] = pf.ut;
            snap.ux[j - 1][i] = pf.ux;
            if (with_uxx) snap.uxx[j - 1][i] = pf.uxx;
        }
    }
    return snap;
}

EnergyValue robin_energy(const StarGraphConfig& g, const FieldSnapshot& snap) {
    return field_energy(g, snap, false);
}

EnergyValue robin_energy_alt(const StarGraphConfig& g,
                             const FieldSnapshot& snap) {
    return field_energy(g, snap, true);
}

FieldSnapshot evolve_fd_oracle(const StarGraphConfig& g,
                               const InitialData& data, double t_final,
                               const Grid& grid, double cfl) {
    if (!(t_final > 0.0))
        throw std::domain_error("evolve_fd_oracle: requires t_final > 0");
    if (!(cfl > 0.0) || cfl > 1.0)
        throw std::domain_error("evolve_fd_oracle: requires cfl in (0,1]");
    if (std::abs(grid.lo()) > 1e-12)
        throw std::domain_error("evolve_fd_oracle: grid must start at x = 0");

    const int n = g.n_edges();
    const int m = grid.count();
    const double h = grid.spacing();
    const long steps = std::max(1L, std::lround(std::ceil(t_final / (cfl * h))));
    const double dt = t_final / static_cast<double>(steps);
    const double lam2 = (dt / h) * (dt / h);
    const bool dirichlet = g.is_dirichlet();
    const double a = g.alpha();

    // Lumped vertex closure with the flux balance
    //   u_tt(0) ~ (2/(N h^2)) sum_j (u_{j,1}-u_0) - (2 alpha/(N h)) u_0;
    // its O(h) defect equals (alpha h/(3N)) u_tt(0), so dividing by
    // (1 + alpha h/(3N)) restores second order.
    const double closure = 1.0 + a * h / (3.0 * n);
    auto vertex_accel = [&](const std::vector<std::vector<double>>& u) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += u[j][1] - u[j][0];
        return (2.0 * s / (n * h * h) - 2.0 * a * u[0][0] / (n * h)) /
               closure;
    };

    std::vector<std::vector<double>> prev(n, std::vector<double>(m, 0.0));
    std::vector<std::vector<double>> cur(n, std::vector<double>(m, 0.0));
    std::vector<std::vector<double>> next(n, std::vector<double>(m, 0.0));

    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) prev[j][i] = eval0(data.f, j + 1, grid[i]);
    // shared vertex value
    double v0 = 0.0;
    for (int j = 0; j < n; ++j) v0 += prev[j][0];
    v0 /= n;
    for (int j = 0; j < n; ++j) prev[j][0] = dirichlet ? 0.0 : v0;

    // first step from u_t(0)=0: u^1 = u^0 + (dt^2/2) u_xx
    for (int j = 0; j < n; ++j) {
        for (int i = 1; i < m - 1; ++i)
            cur[j][i] = prev[j][i] + 0.5 * lam2 * (prev[j][i + 1] -
                                                   2.0 * prev[j][i] +
                                                   prev[j][i - 1]);
        cur[j][m - 1] = 0.0;
    }
    if (dirichlet) {
        for (int j = 0; j < n; ++j) cur[j][0] = 0.0;
    } else {
        const double acc = vertex_accel(prev);
        const double u0 = prev[0][0] + 0.5 * dt * dt * acc;
        for (int j = 0; j < n; ++j) cur[j][0] = u0;
    }

    auto step = [&](const std::vector<std::vector<double>>& um,
                    const std::vector<std::vector<double>>& uc,
                    std::vector<std::vector<double>>& up) {
        for (int j = 0; j < n; ++j) {
            for (int i = 1; i < m - 1; ++i)
                up[j][i] = 2.0 * uc[j][i] - um[j][i] +
                           lam2 * (uc[j][i + 1] - 2.0 * uc[j][i] +
                                   uc[j][i - 1]);
            up[j][m - 1] = 0.0;
        }
        if (dirichlet) {
            for (int j = 0; j < n; ++j) up[j][0] = 0.0;
        } else {
            const double u0 =
                2.0 * uc[0][0] - um[0][0] + dt * dt * vertex_accel(uc);
            for (int j = 0; j < n; ++j) up[j][0] = u0;
        }
    };

    // march to t_final, then one extra step for the centered u_t
    for (long k = 1; k < steps; ++k) {
        step(prev, cur, next);
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    step(prev, cur, next);  // next is u(t_final + dt), cur is u(t_final)

    FieldSnapshot snap;
    snap.time = t_final;
    snap.x = grid.points();
    snap.u = cur;
    snap.ut.assign(n, std::vector<double>(m, 0.0));
    snap.ux.assign(n, std::vector<double>(m, 0.0));
    snap.uxx.assign(n, std::vector<double>(m, 0.0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i)
            snap.ut[j][i] = (next[j][i] - prev[j][i]) / (2.0 * dt);
        for (int i = 1; i < m - 1; ++i) {
            snap.ux[j][i] = (cur[j][i + 1] - cur[j][i - 1]) / (2.0 * h);
            snap.uxx[j][i] = (cur[j][i + 1] - 2.0 * cur[j][i] +
                              cur[j][i - 1]) /
                             (h * h);
        }
        snap.ux[j][0] =
            (-3.0 * cur[j][0] + 4.0 * cur[j][1] - cur[j][2]) / (2.0 * h);
        snap.ux[j][m - 1] = (3.0 * cur[j][m - 1] - 4.0 * cur[j][m - 2] +
                             cur[j][m - 3]) /
                            (2.0 * h);
        snap.uxx[j][0] = (2.0 * cur[j][0] - 5.0 * cur[j][1] +
                          4.0 * cur[j][2] - cur[j][3]) /
                         (h * h);
        snap.uxx[j][m - 1] = (2.0 * cur[j][m - 1] - 5.0 * cur[j][m - 2] +
                              4.0 * cur[j][m - 3] - cur[j][m - 4]) /
                             (h * h);
    }
    return snap;
}

}  // namespace vxk
