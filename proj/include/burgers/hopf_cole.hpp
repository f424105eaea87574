#ifndef BURGERS_HOPF_COLE_HPP
#define BURGERS_HOPF_COLE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/frame.hpp"
#include "burgers/initial_data.hpp"
#include "burgers/landscape.hpp"
#include "burgers/quadrature.hpp"

namespace burgers {

struct QuadratureOptions {
    double log_cutoff = 45.0;   // integrand dropped where lambda (M - H) > cutoff
    int panel_refinement = 12;  // level-doubling cap
    double rel_tol = 1e-9;

    void validate() const {
        require(log_cutoff >= 30.0, ErrorKind::invalid_argument,
                "log_cutoff must be >= 30 (truncation below 1e-13 relative)");
        require(panel_refinement >= 1 && panel_refinement <= 24, ErrorKind::invalid_argument,
                "panel_refinement out of range");
        require(rel_tol > 0.0, ErrorKind::invalid_argument, "rel_tol must be positive");
    }
};

struct SolutionSample {
    Frame frame;
    double value;
    double error_estimate;
    LandscapeReport landscape;
};

namespace detail {

// Integration regions: one interval per active maximum (within the cutoff
// contour of the global max), seeded at +-6 Gaussian widths and extended
// outward to the contour, then merged where they overlap.
inline std::vector<std::pair<double, double>> active_regions(const TailFamily& datum,
                                                             const Frame& frame,
                                                             const LandscapeReport& report,
                                                             const QuadratureOptions& opts) {
    const double lam = frame.laplace_parameter();
    const double M = report.global_max().h_value;
    std::vector<std::pair<double, double>> regions;
    for (const auto& p : report.points) {
        if (p.kind != CriticalPoint::Kind::max) continue;
        if (lam * (M - p.h_value) > opts.log_cutoff) continue;
        const double lc = lam * std::abs(p.curvature);
        const double w = lc > 0.0 ? 6.0 / std::sqrt(lc) : 1.0;
        double lo = p.y - w, hi = p.y + w;
        double step = w;
        while (lam * (M - ht_eval(datum, frame, lo, HtChannel::value)) < opts.log_cutoff) {
            step *= 1.5;
            lo -= step;
        }
        step = w;
        while (lam * (M - ht_eval(datum, frame, hi, HtChannel::value)) < opts.log_cutoff) {
            step *= 1.5;
            hi += step;
        }
        regions.emplace_back(lo, hi);
    }
    std::sort(regions.begin(), regions.end());
    std::vector<std::pair<double, double>> merged{regions.front()};
    for (std::size_t i = 1; i < regions.size(); ++i) {
        if (regions[i].first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, regions[i].second);
        else
            merged.push_back(regions[i]);
    }
    return merged;
}

struct PanelSums {
    double numerator = 0.0;     // integrand A f0(y T) exp(lambda (H - M))
    double numerator_zy = 0.0;  // integrand (z - y)   exp(lambda (H - M))
    double denominator = 0.0;
};

inline PanelSums panel_level(const TailFamily& datum, const Frame& frame,
                             const std::vector<std::pair<double, double>>& regions, double M,
                             const QuadratureOptions& opts, std::size_t nseg) {
    const double lam = frame.laplace_parameter();
    const double T = frame.space_scale();
    const double A = frame.amplitude_scale();
    PanelSums sums;
    for (const auto& [lo, hi] : regions) {
        const double h = (hi - lo) / static_cast<double>(nseg);
        for (std::size_t s = 0; s < nseg; ++s) {
            const double a = lo + h * static_cast<double>(s);
            const double mid = a + 0.5 * h;
            const double half = 0.5 * h;
            for (const auto& nw : GaussLegendre20::rule) {
                const double y = mid + half * nw.x;
                const double ex = lam * (ht_eval(datum, frame, y, HtChannel::value) - M);
                if (ex <= -opts.log_cutoff - 5.0) continue;
                const double g = std::exp(ex) * nw.w * half;
                sums.denominator += g;
                sums.numerator += g * A * datum.value(y * T);
                sums.numerator_zy += g * (frame.z - y);
            }
        }
    }
    return sums;
}

}  // namespace detail

// Exact rescaled solution A f(T z, t) as the Hopf-Cole ratio of integrals,
// log-stabilized around the global maximum of the phase and refined by level
// doubling until two consecutive levels agree to rel_tol.
inline SolutionSample rescaled_solution(const TailFamily& datum, const Frame& frame,
                                        const QuadratureOptions& opts = {}) {
    opts.validate();
    LandscapeReport report;
    if (datum.is_zero()) {
        // numerator integrand vanishes identically
        report = scan_landscape(datum, frame);
        return {frame, 0.0, 0.0, std::move(report)};
    }
    report = scan_landscape(datum, frame);
    const double M = report.global_max().h_value;
    const auto regions = detail::active_regions(datum, frame, report, opts);

    double value = 0.0, prev = 0.0, err = 0.0;
    std::size_t nseg = 16;
    for (int level = 0; level < opts.panel_refinement; ++level) {
        const auto sums = detail::panel_level(datum, frame, regions, M, opts, nseg);
        value = sums.numerator / sums.denominator;
        if (level > 0) {
            err = std::abs(value - prev);
            if (err <= opts.rel_tol * std::max(std::abs(value), 1e-300))
                return {frame, value, err, std::move(report)};
        }
        prev = value;
        nseg *= 2;
    }
    throw QuadratureError("rel_tol unreachable at panel_refinement", value, err,
                          {{"z", std::to_string(frame.z)}, {"t", std::to_string(frame.t)}});
}

// Relative gap between the two equivalent numerators: integration by parts on
// exp(lambda H) makes int (z - y) e^(lambda H) dy equal int A f0(y T)
// e^(lambda H) dy exactly, so this gap is a pure quadrature diagnostic.
inline double numerator_identity_gap(const TailFamily& datum, const Frame& frame,
                                     const QuadratureOptions& opts = {}) {
    opts.validate();
    require(!datum.is_zero(), ErrorKind::invalid_argument,
            "identity gap needs a nonzero datum");
    const auto report = scan_landscape(datum, frame);
    const double M = report.global_max().h_value;
    const auto regions = detail::active_regions(datum, frame, report, opts);
    double gap = 0.0;
    std::size_t nseg = 16;
    double prev_f0 = 0.0;
    for (int level = 0; level < opts.panel_refinement; ++level) {
        const auto sums = detail::panel_level(datum, frame, regions, M, opts, nseg);
        const double vf0 = sums.numerator / sums.denominator;
        const double vzy = sums.numerator_zy / sums.denominator;
        gap = std::abs(vf0 - vzy) / std::max(std::abs(vf0), 1e-300);
        if (level > 0 && std::abs(vf0 - prev_f0) <= opts.rel_tol * std::max(std::abs(vf0), 1e-300))
            return gap;
        prev_f0 = vf0;
        nseg *= 2;
    }
    return gap;
}

// One-point Laplace approximation A f0(y* T) at the unique global maximum.
inline double laplace_approximation(const TailFamily& datum, const Frame& frame) {
    if (datum.is_zero()) return 0.0;
    const auto report = scan_landscape(datum, frame);
    const CriticalPoint& gmax = report.global_max();
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        if (i == report.global_max_index) continue;
        const auto& p = report.points[i];
        if (p.kind == CriticalPoint::Kind::max &&
            std::abs(p.h_value - gmax.h_value) <= 1e-12) {
            throw NumericalError(ErrorKind::ambiguous_branch,
                                 "maxima tie within 1e-12; offset z away from z_c",
                                 {{"z", std::to_string(frame.z)}});
        }
    }
    return frame.amplitude_scale() * datum.value(gmax.y * frame.space_scale());
}

// Physical-space solution f(x, t) of the Cauchy problem.
inline double physical_solution(const TailFamily& datum, double x, double t,
                                const QuadratureOptions& opts = {}) {
    require(t > 0.0, ErrorKind::invalid_argument, "t must be positive");
    require_finite(x, "x");
    const double alpha0 = datum.is_zero() ? 0.5 : datum.leading_alpha();
    Frame frame(alpha0, t, x / std::pow(t, 1.0 / (1.0 + alpha0)));
    const auto sample = rescaled_solution(datum, frame, opts);
    return sample.value / frame.amplitude_scale();
}

}  // namespace burgers

#endif
