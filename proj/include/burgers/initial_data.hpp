#ifndef BURGERS_INITIAL_DATA_HPP
#define BURGERS_INITIAL_DATA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/quadrature.hpp"

namespace burgers {

// One power-law tail kappa/|x|^alpha of the initial datum.
struct PowerTail {
    double kappa;
    double alpha;
};

enum class Channel { value, derivative, antiderivative };

namespace detail {

// Generalized binomial coefficient C(a, k) for the tail expansion of
// (eps^2 + x^2)^(-alpha/2).
inline double binom(double a, unsigned k) {
    double c = 1.0;
    for (unsigned j = 0; j < k; ++j) c *= (a - j) / (j + 1.0);
    return c;
}

}  // namespace detail

// Smooth even realization of the power-law families:
//     f0(x) = sum_n kappa_n (eps^2 + x^2)^(-alpha_n/2),
// which matches kappa_n/|x|^alpha_n at infinity with remainder O(|x|^(-alpha_n-2)).
// The antiderivative F0(x) = int_0^x f0 is tabulated on a geometric inner grid
// and continued by the closed-form tail expansion beyond switch_radius; both are
// needed by the phase function at arguments up to t^(1/(1+alpha)) |y|.
class TailFamily {
  public:
    // Empty datum (f0 == 0), used by tests and trivial checks only.
    TailFamily() = default;

    TailFamily(std::vector<PowerTail> tails, double core_scale)
        : tails_(std::move(tails)), eps_(core_scale) {
        require(eps_ > 0.0, ErrorKind::invalid_argument, "core_scale must be positive",
                {{"eps", std::to_string(eps_)}});
        for (std::size_t n = 0; n < tails_.size(); ++n) {
            require(tails_[n].kappa > 0.0, ErrorKind::invalid_argument,
                    "tail amplitude must be positive");
            require(tails_[n].alpha > 0.0 && tails_[n].alpha < 1.0, ErrorKind::invalid_argument,
                    "tail exponent must lie in (0,1)",
                    {{"alpha", std::to_string(tails_[n].alpha)}});
            if (n > 0)
                require(tails_[n].alpha > tails_[n - 1].alpha, ErrorKind::invalid_argument,
                        "tail exponents must be strictly increasing");
        }
        if (!tails_.empty()) build_antiderivative_table();
    }

    bool is_zero() const noexcept { return tails_.empty(); }
    const std::vector<PowerTail>& tails() const noexcept { return tails_; }
    double core_scale() const noexcept { return eps_; }
    double leading_kappa() const noexcept { return tails_.empty() ? 0.0 : tails_[0].kappa; }
    double leading_alpha() const noexcept { return tails_.empty() ? 0.5 : tails_[0].alpha; }

    double value(double x) const {
        const double r2 = eps_ * eps_ + x * x;
        double acc = 0.0;
        for (const auto& tail : tails_) acc += tail.kappa * std::pow(r2, -0.5 * tail.alpha);
        return acc;
    }

    double derivative(double x) const {
        const double r2 = eps_ * eps_ + x * x;
        double acc = 0.0;
        for (const auto& tail : tails_)
            acc += tail.kappa * (-tail.alpha) * x * std::pow(r2, -0.5 * tail.alpha - 1.0);
        return acc;
    }

    // F0 is odd because f0 is even; only |x| is looked up.
    double antiderivative(double x) const {
        if (tails_.empty()) return 0.0;
        const double ax = std::abs(x);
        double mag;
        if (ax <= switch_radius_) {
            mag = inner_antiderivative(ax);
        } else {
            mag = antiderivative_at_switch_ + tail_primitive(ax) - tail_primitive_at_switch_;
        }
        return x < 0.0 ? -mag : mag;
    }

    double evaluate(double x, Channel channel) const {
        require_finite(x, "x");
        switch (channel) {
            case Channel::value: return value(x);
            case Channel::derivative: return derivative(x);
            case Channel::antiderivative: return antiderivative(x);
        }
        throw ValidationError(ErrorKind::invalid_argument, "unknown channel");
    }

    // f0(x) minus the pure power-law sum; quantifies the regularization
    // remainder, meaningful only outside the core.
    double tail_residual(double x) const {
        require(std::abs(x) >= 1.0, ErrorKind::invalid_argument,
                "tail_residual requires |x| >= 1", {{"x", std::to_string(x)}});
        double acc = value(x);
        for (const auto& tail : tails_) acc -= tail.kappa * std::pow(std::abs(x), -tail.alpha);
        return acc;
    }

    double switch_radius() const noexcept { return switch_radius_; }

  private:
    std::vector<PowerTail> tails_;
    double eps_ = 1.0;

    // Antiderivative table: geometric edges 0 = e_0 < e_1 < ... < e_K = switch
    // with cumulative Gauss-Legendre cell integrals; beyond the switch the
    // binomial tail expansion with two correction terms takes over.
    double switch_radius_ = 1000.0;
    std::vector<double> edges_;
    std::vector<double> prefix_;
    double antiderivative_at_switch_ = 0.0;
    double tail_primitive_at_switch_ = 0.0;
    // per tail: coefficients and powers of the primitive of the expansion
    // kappa (1 + c1 (eps/x)^2 + c2 (eps/x)^4) x^(-alpha)
    struct TailPrimitive {
        double coeff[3];
        double power[3];
    };
    std::vector<TailPrimitive> tail_primitives_;

    void build_antiderivative_table() {
        constexpr std::size_t cells = 160;
        edges_.resize(cells + 1);
        edges_[0] = 0.0;
        const double lo = 1e-3;
        const double ratio = std::pow(switch_radius_ / lo, 1.0 / (cells - 1));
        double e = lo;
        for (std::size_t j = 1; j <= cells; ++j) {
            edges_[j] = e;
            e *= ratio;
        }
        edges_[cells] = switch_radius_;

        prefix_.resize(cells + 1);
        prefix_[0] = 0.0;
        for (std::size_t j = 0; j < cells; ++j) {
            const double cell = gl20([this](double u) { return value(u); }, edges_[j], edges_[j + 1]);
            prefix_[j + 1] = prefix_[j] + cell;
        }
        antiderivative_at_switch_ = prefix_[cells];

        tail_primitives_.resize(tails_.size());
        for (std::size_t n = 0; n < tails_.size(); ++n) {
            const double a = tails_[n].alpha;
            for (unsigned k = 0; k < 3; ++k) {
                const double p = 1.0 - a - 2.0 * k;
                tail_primitives_[n].coeff[k] =
                    tails_[n].kappa * detail::binom(-0.5 * a, k) * std::pow(eps_, 2.0 * k) / p;
                tail_primitives_[n].power[k] = p;
            }
        }
        tail_primitive_at_switch_ = tail_primitive(switch_radius_);
    }

    double inner_antiderivative(double ax) const {
        const auto it = std::upper_bound(edges_.begin(), edges_.end(), ax);
        std::size_t j = static_cast<std::size_t>(it - edges_.begin());
        j = (j == 0) ? 0 : j - 1;
        if (j >= edges_.size() - 1) j = edges_.size() - 2;
        return prefix_[j] + gl20([this](double u) { return value(u); }, edges_[j], ax);
    }

    double tail_primitive(double ax) const {
        double acc = 0.0;
        for (const auto& tp : tail_primitives_)
            for (unsigned k = 0; k < 3; ++k) acc += tp.coeff[k] * std::pow(ax, tp.power[k]);
        return acc;
    }
};

// Family factories. Exponent windows follow the admissibility hypotheses of
// the correction and nested results they feed.

inline TailFamily make_single(double kappa, double alpha, double core_scale = 1.0) {
    return TailFamily({{kappa, alpha}}, core_scale);
}

inline TailFamily make_two_term(double kappa1, double alpha, double kappa2, double beta,
                                double core_scale = 1.0) {
    require(alpha > 0.0 && alpha < 1.0, ErrorKind::invalid_argument, "alpha must lie in (0,1)");
    require(beta > alpha && beta < 0.5 * (1.0 + alpha), ErrorKind::invalid_argument,
            "beta must lie in (alpha, (1+alpha)/2)",
            {{"beta", std::to_string(beta)},
             {"lo", std::to_string(alpha)},
             {"hi", std::to_string(0.5 * (1.0 + alpha))}});
    return TailFamily({{kappa1, alpha}, {kappa2, beta}}, core_scale);
}

// Nested family: weights kappa1 * 2^(-n) over a strictly increasing exponent sequence.
// Admissibility: alpha_1 > (alpha_inf + alpha_0)/2 with alpha_inf = sup of the
// supplied sequence, and sup alpha_n < (1 + alpha_0)/2.
inline TailFamily make_nested(double kappa1, const std::vector<double>& alphas,
                              double core_scale = 1.0) {
    require(kappa1 > 0.0, ErrorKind::invalid_argument, "kappa1 must be positive");
    require(alphas.size() >= 2, ErrorKind::invalid_argument,
            "nested family needs at least two exponents",
            {{"given", std::to_string(alphas.size())}});
    const double alpha0 = alphas[0];
    double alpha_sup = 0.0;
    for (std::size_t n = 1; n < alphas.size(); ++n) alpha_sup = std::max(alpha_sup, alphas[n]);
    require(alphas[1] > 0.5 * (alpha_sup + alpha0), ErrorKind::invalid_argument,
            "nested sequence violates alpha_1 > (alpha_inf + alpha_0)/2",
            {{"alpha1", std::to_string(alphas[1])},
             {"bound", std::to_string(0.5 * (alpha_sup + alpha0))}});
    require(alpha_sup < 0.5 * (1.0 + alpha0), ErrorKind::invalid_argument,
            "nested sequence violates sup alpha_n < (1 + alpha_0)/2",
            {{"sup", std::to_string(alpha_sup)}, {"bound", std::to_string(0.5 * (1.0 + alpha0))}});
    std::vector<PowerTail> tails;
    tails.reserve(alphas.size());
    double w = kappa1;
    for (double a : alphas) {
        tails.push_back({w, a});
        w *= 0.5;
    }
    return TailFamily(std::move(tails), core_scale);
}

// Canonical nested sequence alpha_0 = 1/2, alpha_n = 0.7 - 0.08 * 2^(1-n)
// for n = 1..n_max, so the returned list has n_max + 1 entries.
inline std::vector<double> canonical_nested_alphas(std::size_t n_max) {
    std::vector<double> alphas{0.5};
    for (std::size_t n = 1; n <= n_max; ++n)
        alphas.push_back(0.7 - 0.08 * std::pow(2.0, 1.0 - static_cast<double>(n)));
    return alphas;
}

inline TailFamily make_zero_datum() { return TailFamily(); }

}  // namespace burgers

#endif
