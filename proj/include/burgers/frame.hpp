#ifndef BURGERS_FRAME_HPP
#define BURGERS_FRAME_HPP

#include <cmath>

#include "burgers/errors.hpp"

namespace burgers {

// Self-similar evaluation frame. The three scales are always derived from
// (alpha0, t) so they can never drift out of sync:
//   space  T = t^(1/(1+alpha0))   (argument scale of the datum)
//   amp    A = t^(alpha0/(1+alpha0))   (amplitude of the rescaled solution)
//   lambda = t^((1-alpha0)/(1+alpha0))   (large parameter of the Laplace method)
struct Frame {
    double alpha0;
    double t;
    double z;

    Frame(double alpha0_, double t_, double z_) : alpha0(alpha0_), t(t_), z(z_) {
        require(alpha0 > 0.0 && alpha0 < 1.0, ErrorKind::invalid_argument,
                "alpha0 must lie in (0,1)");
        require(t > 0.0, ErrorKind::invalid_argument, "t must be positive");
        require_finite(z, "z");
    }

    double space_scale() const { return std::pow(t, 1.0 / (1.0 + alpha0)); }
    double amplitude_scale() const { return std::pow(t, alpha0 / (1.0 + alpha0)); }
    double laplace_parameter() const { return std::pow(t, (1.0 - alpha0) / (1.0 + alpha0)); }
};

}  // namespace burgers

#endif
