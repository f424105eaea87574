#ifndef BURGERS_PDE_ORACLE_HPP
#define BURGERS_PDE_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/hopf_cole.hpp"
#include "burgers/initial_data.hpp"

namespace burgers {

// Finite-difference grid for the direct Burgers integration. Scheme:
// Crank-Nicolson diffusion (implicit, tridiagonal) split around an explicit
// conservative convection step with central-slope reconstruction and local
// Lax-Friedrichs flux, advanced by SSP-RK2. Dirichlet values f0(+-L) are held
// at the ends; the tails evolve on timescale |x|^(1+alpha) >> t_final there.
struct OracleGrid {
    double half_width;  // L
    std::size_t nx;
    double dt;

    void validate() const {
        require(half_width > 0.0, ErrorKind::invalid_argument, "half_width must be positive");
        require(nx >= 1001, ErrorKind::invalid_argument, "nx must be >= 1001");
        require(dt > 0.0, ErrorKind::invalid_argument, "dt must be positive");
        require(dt <= dx(), ErrorKind::cfl_violation, "dt must not exceed dx",
                {{"dt", std::to_string(dt)}, {"dx", std::to_string(dx())}});
    }
    double dx() const { return 2.0 * half_width / static_cast<double>(nx - 1); }
    double x_at(std::size_t i) const { return -half_width + dx() * static_cast<double>(i); }
};

struct Snapshot {
    double t;
    std::vector<double> values;
};

struct IntegrateOptions {
    double t0 = 0.0;            // start time; 0 starts from the datum itself
    bool hopf_cole_init = false;  // initialize from the exact solution at t0
};

namespace detail {

// Thomas solve for (I - c D) u = rhs with D the 1D Laplacian stencil and
// Dirichlet ends pinned; a, b, c scratch kept by the caller.
inline void cn_diffusion_half_step(std::vector<double>& f, double dt_half, double dx,
                                   std::vector<double>& scratch_c, std::vector<double>& scratch_d) {
    const std::size_t n = f.size();
    const double r = 0.5 * dt_half / (dx * dx);  // theta = 1/2 over dt_half
    // rhs = (I + r D) f on the interior
    scratch_c.assign(n, 0.0);
    scratch_d.assign(n, 0.0);
    std::vector<double>& cp = scratch_c;
    std::vector<double>& dp = scratch_d;
    // forward sweep of the constant tridiagonal (-r, 1+2r, -r)
    const double b = 1.0 + 2.0 * r, a = -r;
    double rhs0 = f[1] + r * (f[2] - 2.0 * f[1] + f[0]) + r * f[0];
    cp[1] = a / b;
    dp[1] = rhs0 / b;
    for (std::size_t i = 2; i + 1 < n; ++i) {
        // last interior row keeps its upper coefficient; back-substitution
        // picks up the known Dirichlet value there
        const double rhs = f[i] + r * (f[i + 1] - 2.0 * f[i] + f[i - 1]);
        const double m = b - a * cp[i - 1];
        cp[i] = a / m;
        dp[i] = (rhs - a * dp[i - 1]) / m;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        f[i] = dp[i] - cp[i] * f[i + 1];
        if (i == 1) break;
    }
}

// One conservative convection sub-step: df/dt = -d(f^2/2)/dx with central
// slopes and local Lax-Friedrichs interface flux. Writes the interior of out.
inline void convection_rhs(const std::vector<double>& f, double dx, std::vector<double>& flux,
                           std::vector<double>& out) {
    const std::size_t n = f.size();
    auto slope = [&](std::size_t i) -> double {
        if (i == 0 || i + 1 == n) return 0.0;
        return 0.5 * (f[i + 1] - f[i - 1]);
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double fl = f[i] + 0.5 * slope(i);
        const double fr = f[i + 1] - 0.5 * slope(i + 1);
        const double a = std::max(std::abs(fl), std::abs(fr));
        flux[i] = 0.5 * (0.5 * fl * fl + 0.5 * fr * fr) - 0.5 * a * (fr - fl);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = -(flux[i] - flux[i - 1]) / dx;
}

}  // namespace detail

// Integrate the Burgers equation to t_final, returning snapshots at the
// requested times (plus the final time). Desk-scale guard: t_final <= 1e3 and
// L >= 10 sqrt(t_final) + 20 keep boundary truncation quantifiable.
inline std::vector<Snapshot> integrate(const TailFamily& datum, const OracleGrid& grid,
                                       double t_final, std::vector<double> snapshot_times = {},
                                       const IntegrateOptions& iopts = {},
                                       const QuadratureOptions& qopts = {}) {
    grid.validate();
    require(t_final <= 1e3, ErrorKind::time_over_guard, "t_final over the desk-scale guard");
    require(t_final > iopts.t0, ErrorKind::invalid_argument, "t_final must exceed t0");
    require(grid.half_width >= 10.0 * std::sqrt(t_final) + 20.0, ErrorKind::invalid_argument,
            "domain too small for t_final (need L >= 10 sqrt(t) + 20)",
            {{"L", std::to_string(grid.half_width)}});

    const std::size_t n = grid.nx;
    const double dx = grid.dx();
    std::vector<double> f(n);
    if (iopts.hopf_cole_init) {
        require(iopts.t0 > 0.0, ErrorKind::invalid_argument,
                "hopf_cole_init requires t0 > 0");
        for (std::size_t i = 0; i < n; ++i)
            f[i] = physical_solution(datum, grid.x_at(i), iopts.t0, qopts);
    } else {
        for (std::size_t i = 0; i < n; ++i) f[i] = datum.value(grid.x_at(i));
    }
    // quasi-static Dirichlet values
    const double left = datum.value(-grid.half_width);
    const double right = datum.value(grid.half_width);
    f.front() = left;
    f.back() = right;

    std::sort(snapshot_times.begin(), snapshot_times.end());
    snapshot_times.push_back(t_final);
    std::vector<Snapshot> result;

    std::vector<double> flux(n, 0.0), rhs(n, 0.0), stage(n, 0.0);
    std::vector<double> sc(n, 0.0), sd(n, 0.0);
    double t = iopts.t0;
    std::size_t next_snap = 0;
    while (next_snap < snapshot_times.size() && snapshot_times[next_snap] <= t + 1e-14)
        ++next_snap;

    while (t < t_final - 1e-14) {
        double fmax = 0.0;
        for (double v : f) fmax = std::max(fmax, std::abs(v));
        const double cfl_dt = fmax > 0.0 ? 0.4 * dx / fmax : grid.dt;
        if (grid.dt > cfl_dt * (1.0 + 1e-12))
            throw NumericalError(ErrorKind::cfl_violation, "dt exceeds 0.4 dx / max|f|",
                                 {{"dt", std::to_string(grid.dt)},
                                  {"limit", std::to_string(cfl_dt)}});
        double step = std::min(grid.dt, t_final - t);
        if (next_snap < snapshot_times.size())
            step = std::min(step, snapshot_times[next_snap] - t);

        detail::cn_diffusion_half_step(f, 0.5 * step, dx, sc, sd);
        // SSP-RK2 convection over the full step
        detail::convection_rhs(f, dx, flux, rhs);
        stage = f;
        for (std::size_t i = 1; i + 1 < n; ++i) stage[i] = f[i] + step * rhs[i];
        detail::convection_rhs(stage, dx, flux, rhs);
        for (std::size_t i = 1; i + 1 < n; ++i)
            f[i] = 0.5 * (f[i] + stage[i] + step * rhs[i]);
        detail::cn_diffusion_half_step(f, 0.5 * step, dx, sc, sd);
        f.front() = left;
        f.back() = right;
        t += step;

        while (next_snap < snapshot_times.size() && t >= snapshot_times[next_snap] - 1e-12) {
            result.push_back({t, f});
            ++next_snap;
        }
    }
    if (result.empty() || result.back().t < t_final - 1e-12) result.push_back({t, f});
    return result;
}

struct CompareReport {
    double max_abs_diff;
    double rms_diff;
};

// Evolve the finite-difference oracle to t and compare against the Hopf-Cole
// evaluation at the sample points. Initialization follows the cross-check
// recipe: exact solution at t0 = 0.01, so the direct time evolution is the
// independently verified part.
inline CompareReport compare(const TailFamily& datum, double t, const std::vector<double>& xs,
                             const OracleGrid& grid, const QuadratureOptions& qopts = {}) {
    for (double x : xs)
        require(x >= -grid.half_width + 10.0 && x <= grid.half_width - 10.0,
                ErrorKind::invalid_argument, "sample points must stay 10 units off the boundary",
                {{"x", std::to_string(x)}});
    IntegrateOptions iopts;
    iopts.t0 = 0.01;
    iopts.hopf_cole_init = true;
    const auto snaps = integrate(datum, grid, t, {}, iopts, qopts);
    const auto& fd = snaps.back().values;

    CompareReport report{0.0, 0.0};
    const double dx = grid.dx();
    for (double x : xs) {
        const double u = (x + grid.half_width) / dx;
        const std::size_t i = std::min(static_cast<std::size_t>(u), grid.nx - 2);
        const double w = u - static_cast<double>(i);
        const double fd_val = (1.0 - w) * fd[i] + w * fd[i + 1];
        const double hc_val = physical_solution(datum, x, t, qopts);
        const double d = std::abs(fd_val - hc_val);
        report.max_abs_diff = std::max(report.max_abs_diff, d);
        report.rms_diff += d * d;
    }
    report.rms_diff = std::sqrt(report.rms_diff / static_cast<double>(xs.size()));
    return report;
}

}  // namespace burgers

#endif
