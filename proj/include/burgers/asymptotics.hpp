#ifndef BURGERS_ASYMPTOTICS_HPP
#define BURGERS_ASYMPTOTICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "burgers/critical.hpp"
#include "burgers/errors.hpp"
#include "burgers/hopf_cole.hpp"
#include "burgers/initial_data.hpp"

namespace burgers {

// Re-centered frame z = z_c + t^(-gamma) x resolving structure at the
// discontinuity. Admissible zooms stay coarser than the Laplace noise floor
// t^(-(1-alpha0)/(2(1+alpha0))).
struct ZoomFrame {
    double gamma;
    double x;

    ZoomFrame(double gamma_, double x_, double alpha0) : gamma(gamma_), x(x_) {
        require(gamma >= 0.0, ErrorKind::invalid_argument, "zoom exponent must be >= 0");
        const double bound = (1.0 - alpha0) / (2.0 * (1.0 + alpha0));
        require(gamma < bound, ErrorKind::invalid_argument,
                "zoom exponent must stay below the Laplace noise floor",
                {{"gamma", std::to_string(gamma)}, {"bound", std::to_string(bound)}});
        require(x != 0.0, ErrorKind::invalid_argument, "zoom offset x must be nonzero");
    }

    double z(double z_c, double t) const { return z_c + std::pow(t, -gamma) * x; }
};

struct RateFit {
    double slope;
    double intercept;
    double r2;
    std::size_t n_used;
};

// Least-squares slope of log(err) vs log(t). Nonpositive errors are dropped
// before taking logs; at least 4 points must survive.
inline RateFit rate_fit(const std::vector<double>& ts, const std::vector<double>& errs) {
    require(ts.size() == errs.size(), ErrorKind::invalid_argument,
            "rate_fit needs matched t and error lists");
    for (std::size_t i = 1; i < ts.size(); ++i)
        require(ts[i] > ts[i - 1], ErrorKind::invalid_argument,
                "t grid must be strictly increasing");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (errs[i] > 0.0) {
            lx.push_back(std::log(ts[i]));
            ly.push_back(std::log(errs[i]));
        }
    }
    if (lx.size() < 4)
        throw NumericalError(ErrorKind::insufficient_points,
                             "fewer than 4 positive errors for the rate fit",
                             {{"kept", std::to_string(lx.size())}});
    const std::size_t n = lx.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = lx[i] - mx, dy = ly[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    const double slope = sxy / sxx;
    const double r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return {slope, my - slope * mx, r2, n};
}

// Power-law extrapolation value(t) ~ L + C t^(-theta), theta free via scan
// plus ternary refinement, linear least squares inside. The error bar is the
// distance from the extrapolated limit to the last sample.
struct PowerLawFit {
    double limit;
    double coefficient;
    double theta;
    double error_bar;
};

namespace detail {

inline double power_fit_sse(const std::vector<double>& ts, const std::vector<double>& vals,
                            double theta, double* limit_out, double* coeff_out) {
    const std::size_t n = ts.size();
    // normal equations for [1, t^-theta]
    double s1 = static_cast<double>(n), sb = 0.0, sbb = 0.0, sy = 0.0, sby = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double b = std::pow(ts[i], -theta);
        sb += b;
        sbb += b * b;
        sy += vals[i];
        sby += b * vals[i];
    }
    const double det = s1 * sbb - sb * sb;
    const double L = (sy * sbb - sb * sby) / det;
    const double C = (s1 * sby - sb * sy) / det;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = vals[i] - L - C * std::pow(ts[i], -theta);
        sse += r * r;
    }
    if (limit_out) *limit_out = L;
    if (coeff_out) *coeff_out = C;
    return sse;
}

}  // namespace detail

inline PowerLawFit extrapolate_power_law(const std::vector<double>& ts,
                                         const std::vector<double>& vals) {
    require(ts.size() == vals.size() && ts.size() >= 4, ErrorKind::insufficient_points,
            "extrapolation needs at least 4 samples");
    double best_theta = 0.005, best_sse = std::numeric_limits<double>::infinity();
    const int scan = 200;
    for (int i = 0; i < scan; ++i) {
        const double theta =
            0.005 * std::pow(1.0 / 0.005, static_cast<double>(i) / (scan - 1));
        const double sse = detail::power_fit_sse(ts, vals, theta, nullptr, nullptr);
        if (sse < best_sse) {
            best_sse = sse;
            best_theta = theta;
        }
    }
    double lo = best_theta / 1.06, hi = best_theta * 1.06;
    for (int it = 0; it < 80; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (detail::power_fit_sse(ts, vals, m1, nullptr, nullptr) <
            detail::power_fit_sse(ts, vals, m2, nullptr, nullptr))
            hi = m2;
        else
            lo = m1;
    }
    PowerLawFit fit{};
    fit.theta = 0.5 * (lo + hi);
    detail::power_fit_sse(ts, vals, fit.theta, &fit.limit, &fit.coefficient);
    fit.error_bar = std::abs(fit.limit - vals.back());
    return fit;
}

// Second-order probe of the two-term family: q(x, t) = t^gamma (rescaled
// solution - limit profile) at z = z_c + t^(-gamma) x, gamma = (beta - alpha)
// / (1 + alpha). Full quadrature, well defined arbitrarily close to the tie.
inline double q_estimate(const TailFamily& datum, const CriticalStructure& cs, double x,
                         double t, const QuadratureOptions& opts = {}) {
    require(datum.tails().size() >= 2, ErrorKind::invalid_argument,
            "q_estimate needs a two-term datum");
    const double alpha = cs.leading.alpha;
    const double beta = datum.tails()[1].alpha;
    const double gamma = (beta - alpha) / (1.0 + alpha);
    const ZoomFrame zoom(gamma, x, alpha);
    const double z = zoom.z(cs.z_c, t);
    if ((z > cs.z_c) != (x > 0.0) || z == cs.z_c)
        throw NumericalError(ErrorKind::undefined_at_discontinuity,
                             "zoomed z collapsed onto z_c (roundoff)",
                             {{"x", std::to_string(x)}, {"t", std::to_string(t)}});
    const auto sample = rescaled_solution(datum, Frame(alpha, t, z), opts);
    return std::pow(t, gamma) * (sample.value - profile_p(z, cs));
}

// Ladder of side constants for the nested family. The display form reproduces
// the published partial sum sum_n w_n t^(-gamma_n) |y*_pm(z_c)|^(-alpha_n);
// the branch_derivative form multiplies every n >= 1 rung by y*_pm'(z_c),
// which is the ladder the full quadrature actually converges to (same
// mechanism as the two-term side constants).
enum class LadderForm { branch_derivative, display };

inline double nested_gamma(const TailFamily& datum, std::size_t n) {
    const double alpha0 = datum.leading_alpha();
    return (datum.tails()[n].alpha - alpha0) / (1.0 + alpha0);
}

inline double nested_partial_sum(const TailFamily& datum, const CriticalStructure& cs,
                                 std::size_t N, Branch branch, double t,
                                 LadderForm form = LadderForm::branch_derivative) {
    const std::size_t n_max = datum.tails().size();
    require(n_max >= 3, ErrorKind::invalid_argument, "nested datum expected");
    require(N + 2 <= n_max, ErrorKind::invalid_argument,
            "partial sum order must satisfy N <= N_max - 2",
            {{"N", std::to_string(N)}, {"n_max", std::to_string(n_max)}});
    const double ys = branch == Branch::plus ? cs.y_star_plus_at_zc : cs.y_star_minus_at_zc;
    const double yprime =
        form == LadderForm::branch_derivative ? y_star_prime(cs.z_c, branch, cs.leading) : 1.0;
    double acc = 0.0;
    for (std::size_t n = 0; n <= N; ++n) {
        const double term = datum.tails()[n].kappa * std::pow(t, -nested_gamma(datum, n)) *
                            std::pow(std::abs(ys), -datum.tails()[n].alpha);
        acc += n == 0 ? term : term * yprime;
    }
    return acc;
}

// Residual of the N-term ladder, evaluated in a zoom frame one rung finer by
// default (zoom_level = N + 1) so the next correction is resolved. The zoom
// level is an explicit argument because the telescoping identity
// residual_N = residual_{N-1} - term_N only holds at a common frame.
inline double nested_residual(const TailFamily& datum, const CriticalStructure& cs,
                              std::size_t N, double x, double t, std::size_t zoom_level,
                              LadderForm form = LadderForm::branch_derivative,
                              const QuadratureOptions& opts = {}) {
    require(zoom_level < datum.tails().size(), ErrorKind::invalid_argument,
            "zoom level beyond the truncated ladder");
    const double alpha0 = datum.leading_alpha();
    const ZoomFrame zoom(nested_gamma(datum, zoom_level), x, alpha0);
    const double z = zoom.z(cs.z_c, t);
    if ((z > cs.z_c) != (x > 0.0) || z == cs.z_c)
        throw NumericalError(ErrorKind::undefined_at_discontinuity,
                             "zoomed z collapsed onto z_c (roundoff)");
    const Branch branch = x > 0.0 ? Branch::plus : Branch::minus;
    const auto sample = rescaled_solution(datum, Frame(alpha0, t, z), opts);
    return sample.value - nested_partial_sum(datum, cs, N, branch, t, form);
}

inline double nested_residual(const TailFamily& datum, const CriticalStructure& cs,
                              std::size_t N, double x, double t,
                              LadderForm form = LadderForm::branch_derivative,
                              const QuadratureOptions& opts = {}) {
    return nested_residual(datum, cs, N, x, t, N + 1, form, opts);
}

}  // namespace burgers

#endif
