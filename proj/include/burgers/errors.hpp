#ifndef BURGERS_ERRORS_HPP
#define BURGERS_ERRORS_HPP

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace burgers {

// Error taxonomy. ValidationError covers rejected inputs (CLI exit code 2),
// NumericalError covers failures inside an otherwise valid computation
// (CLI exit code 1). Both carry a key/value context for JSON serialization.
enum class ErrorKind {
    invalid_argument,
    unknown_config_key,
    degenerate_landscape,
    empty_window,
    ambiguous_branch,
    branch_missing,
    fold_region,
    no_sign_change,
    singular_denominator,
    tolerance_unreachable,
    undefined_at_discontinuity,
    cfl_violation,
    time_over_guard,
    insufficient_points,
    invariant_failed,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_argument: return "invalid_argument";
        case ErrorKind::unknown_config_key: return "unknown_config_key";
        case ErrorKind::degenerate_landscape: return "degenerate_landscape";
        case ErrorKind::empty_window: return "empty_window";
        case ErrorKind::ambiguous_branch: return "ambiguous_branch";
        case ErrorKind::branch_missing: return "branch_missing";
        case ErrorKind::fold_region: return "fold_region";
        case ErrorKind::no_sign_change: return "no_sign_change";
        case ErrorKind::singular_denominator: return "singular_denominator";
        case ErrorKind::tolerance_unreachable: return "tolerance_unreachable";
        case ErrorKind::undefined_at_discontinuity: return "undefined_at_discontinuity";
        case ErrorKind::cfl_violation: return "cfl_violation";
        case ErrorKind::time_over_guard: return "time_over_guard";
        case ErrorKind::insufficient_points: return "insufficient_points";
        case ErrorKind::invariant_failed: return "invariant_failed";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    using Context = std::map<std::string, std::string>;

    Error(ErrorKind kind, std::string message, Context context = {})
        : std::runtime_error(std::move(message)), kind_(kind), context_(std::move(context)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const Context& context() const noexcept { return context_; }

  private:
    ErrorKind kind_;
    Context context_;
};

class ValidationError : public Error {
  public:
    using Error::Error;
};

class NumericalError : public Error {
  public:
    using Error::Error;
};

// Best value computed before a tolerance failure, attached per the solver
// contract (rel_tol unreachable at panel_refinement -> error with best value).
class QuadratureError : public NumericalError {
  public:
    QuadratureError(std::string message, double best_value, double error_estimate,
                    Context context = {})
        : NumericalError(ErrorKind::tolerance_unreachable, std::move(message), std::move(context)),
          best_value_(best_value), error_estimate_(error_estimate) {}

    double best_value() const noexcept { return best_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

  private:
    double best_value_;
    double error_estimate_;
};

inline void require(bool cond, ErrorKind kind, const std::string& message,
                    Error::Context context = {}) {
    if (!cond) throw ValidationError(kind, message, std::move(context));
}

inline void require_finite(double x, const std::string& name) {
    if (!std::isfinite(x)) {
        throw ValidationError(ErrorKind::invalid_argument, name + " must be finite",
                              {{"name", name}});
    }
}

}  // namespace burgers

#endif
