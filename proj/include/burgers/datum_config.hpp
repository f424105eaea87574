#pragma once

#include <string>

#include "burgers/config.hpp"
#include "burgers/errors.hpp"
#include "burgers/initial_data.hpp"

namespace burgers {

// [datum] section: family = single | two_term | nested, plus the numeric
// fields each family needs.  Validation is delegated to the factories.
inline TailFamily datum_from_config(const Config& cfg) {
    const std::string family = cfg.get_string("datum", "family");
    const double eps = cfg.get_double("datum", "eps", 1.0);
    if (family == "single") {
        return make_single(cfg.get_double("datum", "kappa1"),
                           cfg.get_double("datum", "alpha"), eps);
    }
    if (family == "two_term") {
        return make_two_term(cfg.get_double("datum", "kappa1"),
                             cfg.get_double("datum", "alpha"),
                             cfg.get_double("datum", "kappa2"),
                             cfg.get_double("datum", "beta"), eps);
    }
    if (family == "nested") {
        long n_max = cfg.get_int("datum", "nmax", 0);
        if (cfg.has("datum", "alphas")) {
            auto alphas = cfg.get_double_list("datum", "alphas");
            require(n_max == 0 ||
                        static_cast<std::size_t>(n_max) + 1 == alphas.size(),
                    ErrorKind::invalid_argument,
                    "nmax disagrees with the alphas list length",
                    {{"key", "datum.nmax"}});
            return make_nested(cfg.get_double("datum", "kappa1"), alphas, eps);
        }
        require(n_max >= 2, ErrorKind::invalid_argument,
                "nested family needs alphas or nmax >= 2",
                {{"key", "datum.nmax"}});
        return make_nested(cfg.get_double("datum", "kappa1"),
                           canonical_nested_alphas(static_cast<int>(n_max)), eps);
    }
    throw ValidationError(ErrorKind::invalid_argument,
                          "unknown datum family",
                          {{"key", "datum.family"}, {"value", family}});
}

}  // namespace burgers
