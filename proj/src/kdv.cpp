#include <algorithm>
#include <cmath>

#include "algoart/errors.hpp"
#include "algoart/waves.hpp"

namespace algoart::waves {

void Grid1D::validate() const {
    if (n < 8) {
        throw ConfigError("KdV grid needs at least 8 points");
    }
    if (!(dx > 0.0) || !std::isfinite(dx)) {
        throw ConfigError("KdV grid spacing must be positive");
    }
    if (!periodic) {
        throw ConfigError("only periodic KdV grids are supported");
    }
}

KdvState KdvState::from_profile(Grid1D grid, std::vector<double> u, double t) {
    grid.validate();
    if (u.size() != grid.n) {
        throw ConfigError("profile has " + std::to_string(u.size()) + " values for a grid of " +
                          std::to_string(grid.n));
    }
    for (double v : u) {
        if (!std::isfinite(v)) {
            throw ConfigError("profile contains non-finite values");
        }
    }
    KdvState s;
    s.grid = grid;
    s.u = std::move(u);
    s.t = t;
    return s;
}

double kdv_stable_dt(const Grid1D& grid, double max_abs_u) {
    const double dx2 = grid.dx * grid.dx;
    return dx2 * grid.dx / (4.0 + 6.0 * dx2 * max_abs_u);
}

namespace {

double max_abs(const std::vector<double>& u) {
    double m = 0.0;
    for (double v : u) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

// rhs_i = -[(u_{i+1} + u_i + u_{i-1})(u_{i+1} - u_{i-1}) / dx
//           + (u_{i+2} - 2 u_{i+1} + 2 u_{i-1} - u_{i-2}) / (2 dx^3)]
void kdv_rhs(const std::vector<double>& u, double dx, std::vector<double>& out) {
    const std::size_t n = u.size();
    const double inv_dx = 1.0 / dx;
    const double inv_2dx3 = 1.0 / (2.0 * dx * dx * dx);
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double um2 = u[(i + n - 2) % n];
        const double um1 = u[(i + n - 1) % n];
        const double up1 = u[(i + 1) % n];
        const double up2 = u[(i + 2) % n];
        const double nonlinear = (up1 + u[i] + um1) * (up1 - um1) * inv_dx;
        const double dispersive = (up2 - 2.0 * up1 + 2.0 * um1 - um2) * inv_2dx3;
        out[i] = -(nonlinear + dispersive);
    }
}

}  // namespace

KdvState kdv_step(const KdvState& state, double dt) {
    const double limit = kdv_stable_dt(state.grid, max_abs(state.u));
    if (!(dt > 0.0) || dt > limit) {
        throw NumericalError("time step " + std::to_string(dt) + " violates the stability guard (limit " +
                                 std::to_string(limit) + ")",
                             state.t);
    }

    KdvState next;
    next.grid = state.grid;
    next.t = state.t + dt;
    next.prev_dt = dt;
    next.u.resize(state.u.size());

    std::vector<double> rhs;
    if (state.u_prev.size() == state.u.size() && state.prev_dt == dt) {
        kdv_rhs(state.u, state.grid.dx, rhs);
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            next.u[i] = state.u_prev[i] + 2.0 * dt * rhs[i];
        }
    } else {
        kdv_rhs(state.u, state.grid.dx, rhs);
        std::vector<double> half(state.u.size());
        for (std::size_t i = 0; i < half.size(); ++i) {
            half[i] = state.u[i] + 0.5 * dt * rhs[i];
        }
        kdv_rhs(half, state.grid.dx, rhs);
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            next.u[i] = state.u[i] + dt * rhs[i];
        }
    }

    for (double v : next.u) {
        if (!std::isfinite(v)) {
            throw NumericalError("KdV profile became non-finite", state.t);
        }
    }
    next.u_prev = state.u;
    return next;
}

KdvInvariants kdv_invariants(const KdvState& state) {
    KdvInvariants inv;
    for (double v : state.u) {
        inv.mass += v;
        inv.momentum += v * v;
    }
    inv.mass *= state.grid.dx;
    inv.momentum *= state.grid.dx;
    return inv;
}

std::vector<double> kdv_soliton_profile(const Grid1D& grid, double c, double x0, double t) {
    if (!(c > 0.0)) {
        throw ConfigError("soliton speed must be positive");
    }
    const double length = grid.length();
    const double k = 0.5 * std::sqrt(c);
    std::vector<double> u(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double d = std::fmod(grid.x(i) - x0 - c * t, length);
        if (d < -length / 2) {
            d += length;
        } else if (d >= length / 2) {
            d -= length;
        }
        const double sech = 1.0 / std::cosh(k * d);
        u[i] = 0.5 * c * sech * sech;
    }
    return u;
}

}  // namespace algoart::waves
