#ifndef BURGERS_LANDSCAPE_HPP
#define BURGERS_LANDSCAPE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/frame.hpp"
#include "burgers/initial_data.hpp"

namespace burgers {

// Phase function of the rescaled Hopf-Cole integrals,
//     H_t(y, z) = -(z - y)^2 / 4 - F0(y T) / (2 lambda),
// whose maxima in y select the asymptotics. The dy channel returns
//     (1/2) (z - y - A f0(y T)),
// the exact derivative of the value channel (halved convention).
enum class HtChannel { value, dy };

inline double ht_eval(const TailFamily& datum, const Frame& frame, double y, HtChannel channel) {
    require_finite(y, "y");
    const double T = frame.space_scale();
    if (channel == HtChannel::value) {
        const double d = frame.z - y;
        return -0.25 * d * d - datum.antiderivative(y * T) / (2.0 * frame.laplace_parameter());
    }
    return 0.5 * (frame.z - y - frame.amplitude_scale() * datum.value(y * T));
}

struct CriticalPoint {
    double y;
    double h_value;
    enum class Kind { max, min } kind;
    double curvature;  // second-difference estimate of d2H/dy2
};

struct LandscapeReport {
    std::vector<CriticalPoint> points;  // sorted by y
    std::size_t global_max_index = 0;
    double gap = 0.0;      // max_gap at the default exclusion radius, if defined
    bool has_gap = false;  // false when fewer than two maxima
    double window_lo = 0.0;
    double window_hi = 0.0;
    double resolution = 0.0;
    // Grid samples kept so gap queries at other radii stay pure functions of
    // the report.
    std::vector<double> grid_y;
    std::vector<double> grid_h;

    std::size_t count_maxima() const {
        std::size_t n = 0;
        for (const auto& p : points)
            if (p.kind == CriticalPoint::Kind::max) ++n;
        return n;
    }
    const CriticalPoint& global_max() const { return points[global_max_index]; }
};

constexpr double kDegeneracyTolerance = 1e-10;
constexpr double kDerivativeTolerance = 1e-12;  // on the halved dy channel
constexpr double kDefaultExclusionRadius = 1.0;

// Gap between the global maximum and the best value outside an exclusion ball
// around it, evaluated on the stored scan grid.
inline double max_gap(const LandscapeReport& report, double exclusion_radius) {
    require(exclusion_radius > 0.0, ErrorKind::invalid_argument,
            "exclusion_radius must be positive");
    require(!report.points.empty(), ErrorKind::invalid_argument, "report has no critical points");
    const CriticalPoint& gmax = report.global_max();
    double best = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t i = 0; i < report.grid_y.size(); ++i) {
        if (std::abs(report.grid_y[i] - gmax.y) <= exclusion_radius) continue;
        any = true;
        best = std::max(best, report.grid_h[i]);
    }
    if (!any)
        throw ValidationError(ErrorKind::empty_window, "exclusion ball covers the whole window",
                              {{"radius", std::to_string(exclusion_radius)}});
    return gmax.h_value - best;
}

// Default search window. Union of the documented auto-window
// [-(|z|+5 kappa0+5), |z|+5 kappa0+5] and the box [z - 3(kappa0+|z|),
// z + 3(kappa0+|z|)] so the containment precondition holds for every z.
inline std::pair<double, double> auto_window(const TailFamily& datum, double z) {
    const double k0 = datum.leading_kappa();
    const double hw = std::abs(z) + 5.0 * k0 + 5.0;
    const double box = 3.0 * (k0 + std::abs(z));
    return {std::min(-hw, z - box), std::max(hw, z + box)};
}

// Locates and classifies the critical points of y -> H_t(y, z): grid scan for
// sign changes of the dy channel, bisection refinement, second-difference
// curvature. Near z_c at large t the report contains the two competing maxima
// y_-(z,t) < 0 < y_+(z,t).
inline LandscapeReport scan_landscape(const TailFamily& datum, const Frame& frame,
                                      std::pair<double, double> window, double resolution) {
    require(window.second > window.first, ErrorKind::empty_window, "window is empty");
    const double box = 3.0 * (datum.leading_kappa() + std::abs(frame.z));
    require(window.first <= frame.z - box && window.second >= frame.z + box,
            ErrorKind::invalid_argument,
            "window must contain [z - 3(kappa0+|z|), z + 3(kappa0+|z|)]",
            {{"z", std::to_string(frame.z)},
             {"lo", std::to_string(window.first)},
             {"hi", std::to_string(window.second)}});
    const double span = window.second - window.first;
    require(resolution > 0.0 && span / resolution >= 1000.0, ErrorKind::invalid_argument,
            "resolution must give at least 1e3 grid cells",
            {{"cells", std::to_string(span / resolution)}});

    const std::size_t n = static_cast<std::size_t>(std::ceil(span / resolution)) + 1;
    LandscapeReport report;
    report.window_lo = window.first;
    report.window_hi = window.second;
    report.resolution = span / static_cast<double>(n - 1);
    report.grid_y.resize(n);
    report.grid_h.resize(n);
    std::vector<double> grid_d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = window.first + report.resolution * static_cast<double>(i);
        report.grid_y[i] = y;
        report.grid_h[i] = ht_eval(datum, frame, y, HtChannel::value);
        grid_d[i] = ht_eval(datum, frame, y, HtChannel::dy);
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (grid_d[i] == 0.0 && grid_d[i + 1] == 0.0) continue;
        if (grid_d[i] * grid_d[i + 1] > 0.0) continue;
        double lo = report.grid_y[i], hi = report.grid_y[i + 1];
        double dlo = grid_d[i];
        double mid = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            mid = 0.5 * (lo + hi);
            const double dm = ht_eval(datum, frame, mid, HtChannel::dy);
            if (std::abs(dm) <= kDerivativeTolerance) break;
            if (dlo * dm <= 0.0) {
                hi = mid;
            } else {
                lo = mid;
                dlo = dm;
            }
        }
        const double y = mid;
        const double h = 1e-5 * (1.0 + std::abs(y));
        const double curv = (ht_eval(datum, frame, y + h, HtChannel::value) -
                             2.0 * ht_eval(datum, frame, y, HtChannel::value) +
                             ht_eval(datum, frame, y - h, HtChannel::value)) /
                            (h * h);
        if (std::abs(curv) < kDegeneracyTolerance)
            throw NumericalError(ErrorKind::degenerate_landscape,
                                 "degenerate critical point (fold)",
                                 {{"y", std::to_string(y)}, {"z", std::to_string(frame.z)}});
        report.points.push_back({y, ht_eval(datum, frame, y, HtChannel::value),
                                 curv < 0.0 ? CriticalPoint::Kind::max : CriticalPoint::Kind::min,
                                 curv});
    }

    if (report.points.empty())
        throw NumericalError(ErrorKind::degenerate_landscape,
                             "no critical point found in window",
                             {{"z", std::to_string(frame.z)}});
    std::sort(report.points.begin(), report.points.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) { return a.y < b.y; });
    // A root landing exactly on a grid node is seen by both adjacent cells;
    // genuine neighbors are far wider apart than the bisection scatter.
    std::vector<CriticalPoint> unique_points;
    for (const auto& p : report.points) {
        if (!unique_points.empty() &&
            std::abs(p.y - unique_points.back().y) <= 1e-8 * (1.0 + std::abs(p.y)))
            continue;
        unique_points.push_back(p);
    }
    report.points = std::move(unique_points);
    report.global_max_index = 0;
    for (std::size_t i = 1; i < report.points.size(); ++i)
        if (report.points[i].h_value > report.points[report.global_max_index].h_value)
            report.global_max_index = i;

    if (report.count_maxima() >= 2) {
        report.gap = max_gap(report, kDefaultExclusionRadius);
        report.has_gap = true;
    }
    return report;
}

inline LandscapeReport scan_landscape(const TailFamily& datum, const Frame& frame) {
    const auto window = auto_window(datum, frame.z);
    return scan_landscape(datum, frame, window, (window.second - window.first) / 8192.0);
}

}  // namespace burgers

#endif
