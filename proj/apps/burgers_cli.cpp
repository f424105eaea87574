// Command-line front end. Every computation the library exposes is reachable
// through a subcommand; outputs are CSV (one header row, '#' metadata lines,
// %.17g cells, LF) or JSON on stdout. Validation failures exit 2, numerical
// failures exit 1, and both serialize the error context to stderr as JSON.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "burgers/asymptotics.hpp"
#include "burgers/config.hpp"
#include "burgers/critical.hpp"
#include "burgers/datum_config.hpp"
#include "burgers/errors.hpp"
#include "burgers/frame.hpp"
#include "burgers/hopf_cole.hpp"
#include "burgers/initial_data.hpp"
#include "burgers/io.hpp"
#include "burgers/landscape.hpp"
#include "burgers/pde_oracle.hpp"

namespace {

using nlohmann::json;

constexpr const char* kGenerator = "burgers-cli 1.0.0";

json error_json(const char* kind, const std::string& message,
                const burgers::Error::Context& context = {}) {
    json ctx = json::object();
    for (const auto& [k, v] : context) ctx[k] = v;
    return json{{"error", {{"kind", kind}, {"message", message}, {"context", ctx}}}};
}

// Allowed config keys per subcommand. validate_keys rejects anything else;
// apply_env_overrides reads BURGERS_<SECTION>_<KEY> for exactly these.
std::map<std::string, std::set<std::string>> allowed_keys(const std::string& sub) {
    std::map<std::string, std::set<std::string>> allowed{
        {"datum", {"family", "kappa1", "alpha", "kappa2", "beta", "eps", "alphas", "nmax"}},
        {"quadrature", {"rel-tol", "log-cutoff", "panel-refinement"}},
    };
    if (sub == "solve") allowed[sub] = {"z", "x", "t", "z-min", "z-max", "count"};
    if (sub == "landscape") allowed[sub] = {"z", "t", "window-lo", "window-hi", "resolution"};
    if (sub == "critical") allowed[sub] = {"betas", "kappa2"};
    if (sub == "prop11") allowed[sub] = {"x", "t-min", "t-max", "t-count"};
    if (sub == "thm12")
        allowed[sub] = {"x", "t-min", "t-max", "t-count", "order", "zoom-level", "form"};
    if (sub == "rates") allowed[sub] = {"offsets", "t-min", "t-max", "t-count"};
    if (sub == "oracle")
        allowed[sub] = {"t-final", "half-width", "nx", "dt", "t0", "hopf-cole-init", "times"};
    if (sub == "profile-plot-data") allowed[sub] = {"span", "count", "times"};
    return allowed;
}

// Effective run configuration: file values, then environment overrides, then
// command-line flags. Resolved values are written back so the serialized
// config pins the run exactly (see --dump-config and the config-hash stamp).
struct Params {
    burgers::Config cfg;
    std::string section;

    void load(const std::string& path, const std::string& sub) {
        section = sub;
        if (!path.empty()) cfg = burgers::Config::parse(burgers::read_text_file(path));
        const auto allowed = allowed_keys(sub);
        cfg.validate_keys(allowed);
        cfg.apply_env_overrides(allowed);
    }

    double number_in(const std::string& sec, const CLI::Option* opt, double flag_value,
                     const std::string& key, std::optional<double> fallback = std::nullopt) {
        double v;
        if (opt != nullptr && opt->count() > 0) {
            v = flag_value;
        } else if (cfg.has(sec, key)) {
            v = cfg.get_double(sec, key);
        } else if (fallback) {
            v = *fallback;
        } else {
            throw burgers::ValidationError(burgers::ErrorKind::invalid_argument,
                                           "missing required parameter",
                                           {{"key", sec + "." + key}});
        }
        cfg.set(sec, key, burgers::format_double(v));
        return v;
    }

    double number(const CLI::Option* opt, double flag_value, const std::string& key,
                  std::optional<double> fallback = std::nullopt) {
        return number_in(section, opt, flag_value, key, fallback);
    }

    long integer_in(const std::string& sec, const CLI::Option* opt, long flag_value,
                    const std::string& key, long fallback) {
        long v;
        if (opt != nullptr && opt->count() > 0) {
            v = flag_value;
        } else {
            v = cfg.get_int(sec, key, fallback);
        }
        cfg.set(sec, key, std::to_string(v));
        return v;
    }

    long integer(const CLI::Option* opt, long flag_value, const std::string& key, long fallback) {
        return integer_in(section, opt, flag_value, key, fallback);
    }

    bool toggle(const CLI::Option* opt, bool flag_value, const std::string& key, bool fallback) {
        bool v;
        if (opt != nullptr && opt->count() > 0) {
            v = flag_value;
        } else {
            v = cfg.get_int(section, key, fallback ? 1 : 0) != 0;
        }
        cfg.set(section, key, v ? "1" : "0");
        return v;
    }

    std::vector<double> list(const CLI::Option* opt, const std::vector<double>& flag_value,
                             const std::string& key, const std::vector<double>& fallback) {
        std::vector<double> v;
        if (opt != nullptr && opt->count() > 0) {
            v = flag_value;
        } else if (cfg.has(section, key)) {
            v = cfg.get_double_list(section, key);
        } else {
            v = fallback;
        }
        std::string joined;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) joined += ",";
            joined += burgers::format_double(v[i]);
        }
        cfg.set(section, key, joined);
        return v;
    }

    // A datum flag overrides the config key; remaining holes are filled with
    // the subcommand's default family so the effective config is complete.
    void datum_key(const CLI::Option* opt, const std::string& value, const std::string& key) {
        if (opt != nullptr && opt->count() > 0) cfg.set("datum", key, value);
    }

    void datum_default(const std::string& key, const std::string& value) {
        if (!cfg.has("datum", key)) cfg.set("datum", key, value);
    }

    std::string hash() const { return "fnv1a64:" + burgers::to_hex(burgers::fnv1a64(cfg.serialize())); }

    void dump(const std::string& path) const {
        if (!path.empty()) burgers::write_text_file(path, cfg.serialize());
    }
};

// Quadrature flags shared by every subcommand that evaluates the solution.
struct QuadFlags {
    double rel_tol = 1e-9;
    double log_cutoff = 45.0;
    long refinement = 12;
    CLI::Option* o_rel = nullptr;
    CLI::Option* o_cut = nullptr;
    CLI::Option* o_ref = nullptr;

    void attach(CLI::App* sub) {
        o_rel = sub->add_option("--rel-tol", rel_tol,
                                "relative tolerance of the adaptive quadrature (dimensionless)")
                    ->capture_default_str();
        o_cut = sub->add_option("--log-cutoff", log_cutoff,
                                "drop the integrand where lambda (M - H) exceeds this (log units)")
                    ->capture_default_str();
        o_ref = sub->add_option("--panel-refinement", refinement,
                                "maximum panel level-doubling count")
                    ->capture_default_str();
    }

    burgers::QuadratureOptions resolve(Params& p) const {
        burgers::QuadratureOptions q;
        q.rel_tol = p.number_in("quadrature", o_rel, rel_tol, "rel-tol", q.rel_tol);
        q.log_cutoff = p.number_in("quadrature", o_cut, log_cutoff, "log-cutoff", q.log_cutoff);
        q.panel_refinement = static_cast<int>(
            p.integer_in("quadrature", o_ref, refinement, "panel-refinement", q.panel_refinement));
        q.validate();
        return q;
    }
};

void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    burgers::require(static_cast<bool>(out), burgers::ErrorKind::invalid_argument,
                     "cannot open output file", {{"path", path}});
    fn(out);
}

void stamp(burgers::CsvWriter& csv, const Params& p) {
    csv.metadata("generator", kGenerator);
    csv.metadata("subcommand", p.section);
    csv.metadata("config-hash", p.hash());
}

json frame_json(const burgers::Frame& f) {
    return json{{"alpha0", f.alpha0},
                {"t", f.t},
                {"z", f.z},
                {"space_scale", f.space_scale()},
                {"amplitude_scale", f.amplitude_scale()},
                {"laplace_parameter", f.laplace_parameter()}};
}

std::vector<double> log_grid(double lo, double hi, long n) {
    burgers::require(lo > 0.0 && hi > lo, burgers::ErrorKind::invalid_argument,
                     "time grid needs 0 < t-min < t-max",
                     {{"t-min", burgers::format_double(lo)},
                      {"t-max", burgers::format_double(hi)}});
    burgers::require(n >= 2, burgers::ErrorKind::invalid_argument,
                     "time grid needs at least two points", {{"t-count", std::to_string(n)}});
    std::vector<double> ts(static_cast<std::size_t>(n));
    const double step = std::log(hi / lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < ts.size(); ++i)
        ts[i] = lo * std::exp(step * static_cast<double>(i));
    ts.back() = hi;
    return ts;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- solve ----

struct SolveState {
    std::string datum_path, output, dump_path;
    double z = 0.0, x = 0.0, t = 0.0, z_min = 0.0, z_max = 0.0;
    long count = 0;
    CLI::Option *o_z = nullptr, *o_x = nullptr, *o_t = nullptr;
    CLI::Option *o_zmin = nullptr, *o_zmax = nullptr, *o_count = nullptr;
    QuadFlags quad;
};

void run_solve(SolveState& st) {
    Params p;
    p.load(st.datum_path, "solve");
    const auto datum = burgers::datum_from_config(p.cfg);
    const auto opts = st.quad.resolve(p);
    const double t = p.number(st.o_t, st.t, "t");
    burgers::require(t > 0.0, burgers::ErrorKind::invalid_argument, "t must be positive",
                     {{"key", "solve.t"}});
    const double alpha0 = datum.is_zero() ? 0.5 : datum.leading_alpha();

    const bool have_z = st.o_z->count() > 0 || p.cfg.has("solve", "z");
    const bool have_x = st.o_x->count() > 0 || p.cfg.has("solve", "x");
    const bool have_sweep = st.o_zmin->count() > 0 || p.cfg.has("solve", "z-min");
    burgers::require(int(have_z) + int(have_x) + int(have_sweep) == 1,
                     burgers::ErrorKind::invalid_argument,
                     "choose exactly one of --z, --x, or a --z-min/--z-max/--count sweep");

    if (have_sweep) {
        const double z_min = p.number(st.o_zmin, st.z_min, "z-min");
        const double z_max = p.number(st.o_zmax, st.z_max, "z-max");
        const long count = p.integer(st.o_count, st.count, "count", 0);
        burgers::require(z_max > z_min && count >= 2, burgers::ErrorKind::invalid_argument,
                         "sweep needs z-min < z-max and count >= 2");
        p.dump(st.dump_path);
        with_output(st.output, [&](std::ostream& out) {
            burgers::CsvWriter csv(out);
            stamp(csv, p);
            csv.metadata("t", burgers::format_double(t));
            csv.header({"z", "value", "error_estimate"});
            for (long i = 0; i < count; ++i) {
                const double z =
                    z_min + (z_max - z_min) * static_cast<double>(i) / static_cast<double>(count - 1);
                const auto s = burgers::rescaled_solution(datum, burgers::Frame(alpha0, t, z), opts);
                csv.row({z, s.value, s.error_estimate});
            }
        });
        return;
    }

    json out{{"subcommand", "solve"}, {"config_hash", p.hash()}};
    if (have_z) {
        const double z = p.number(st.o_z, st.z, "z");
        const burgers::Frame frame(alpha0, t, z);
        const auto s = burgers::rescaled_solution(datum, frame, opts);
        out["mode"] = "rescaled";
        out["value"] = s.value;
        out["error_estimate"] = s.error_estimate;
        out["frame"] = frame_json(frame);
    } else {
        const double x = p.number(st.o_x, st.x, "x");
        const burgers::Frame frame(alpha0, t, x / std::pow(t, 1.0 / (1.0 + alpha0)));
        const auto s = burgers::rescaled_solution(datum, frame, opts);
        out["mode"] = "physical";
        out["x"] = x;
        out["value"] = s.value / frame.amplitude_scale();
        out["error_estimate"] = s.error_estimate / frame.amplitude_scale();
        out["frame"] = frame_json(frame);
    }
    p.dump(st.dump_path);
    emit_json(out);
}

void register_solve(CLI::App& app) {
    auto st = std::make_shared<SolveState>();
    CLI::App* sub = app.add_subcommand(
        "solve", "Evaluate the exact solution at one point or on a z sweep");
    sub->add_option("--datum", st->datum_path, "config file with [datum] and optional sections")
        ->required()
        ->check(CLI::ExistingFile);
    st->o_t = sub->add_option("--t", st->t, "evaluation time (time units, > 0)");
    st->o_z = sub->add_option("--z", st->z, "self-similar coordinate x / t^(1/(1+alpha))");
    st->o_x = sub->add_option("--x", st->x, "physical coordinate (emits the unrescaled value)");
    st->o_zmin = sub->add_option("--z-min", st->z_min, "sweep start in z");
    st->o_zmax = sub->add_option("--z-max", st->z_max, "sweep end in z");
    st->o_count = sub->add_option("--count", st->count, "sweep point count (>= 2)");
    st->quad.attach(sub);
    sub->add_option("--output", st->output, "CSV path for sweeps ('-' = stdout, default)");
    sub->add_option("--dump-config", st->dump_path, "write the effective config to this path");
    sub->callback([st] { run_solve(*st); });
}

// ------------------------------------------------------------ landscape ----

struct LandscapeState {
    std::string datum_path, output, dump_path;
    double z = 0.0, t = 0.0, window_lo = 0.0, window_hi = 0.0, resolution = 0.0;
    CLI::Option *o_z = nullptr, *o_t = nullptr;
    CLI::Option *o_lo = nullptr, *o_hi = nullptr, *o_res = nullptr;
};

void run_landscape(LandscapeState& st) {
    Params p;
    p.load(st.datum_path, "landscape");
    const auto datum = burgers::datum_from_config(p.cfg);
    const double t = p.number(st.o_t, st.t, "t");
    const double z = p.number(st.o_z, st.z, "z");
    const double alpha0 = datum.is_zero() ? 0.5 : datum.leading_alpha();
    const burgers::Frame frame(alpha0, t, z);

    burgers::LandscapeReport report;
    const bool custom = st.o_lo->count() > 0 || p.cfg.has("landscape", "window-lo");
    if (custom) {
        const double lo = p.number(st.o_lo, st.window_lo, "window-lo");
        const double hi = p.number(st.o_hi, st.window_hi, "window-hi");
        const double res = p.number(st.o_res, st.resolution, "resolution", (hi - lo) / 8192.0);
        report = burgers::scan_landscape(datum, frame, {lo, hi}, res);
    } else {
        report = burgers::scan_landscape(datum, frame);
    }
    p.dump(st.dump_path);

    if (!st.output.empty()) {
        with_output(st.output, [&](std::ostream& out) {
            burgers::CsvWriter csv(out);
            stamp(csv, p);
            csv.header({"y", "h"});
            for (std::size_t i = 0; i < report.grid_y.size(); ++i)
                csv.row({report.grid_y[i], report.grid_h[i]});
        });
    }

    json points = json::array();
    for (const auto& pt : report.points)
        points.push_back({{"y", pt.y},
                          {"h", pt.h_value},
                          {"kind", pt.kind == burgers::CriticalPoint::Kind::max ? "max" : "min"},
                          {"curvature", pt.curvature}});
    json out{{"subcommand", "landscape"},
             {"config_hash", p.hash()},
             {"z", z},
             {"t", t},
             {"window", {{"lo", report.window_lo}, {"hi", report.window_hi}}},
             {"resolution", report.resolution},
             {"points", points},
             {"global_max", {{"y", report.global_max().y}, {"h", report.global_max().h_value}}},
             {"has_gap", report.has_gap}};
    if (report.has_gap) out["gap"] = report.gap;
    emit_json(out);
}

void register_landscape(CLI::App& app) {
    auto st = std::make_shared<LandscapeState>();
    CLI::App* sub = app.add_subcommand(
        "landscape", "Scan the phase landscape y -> H_t(y, z) and report its critical points");
    sub->add_option("--datum", st->datum_path, "config file with [datum] and optional sections")
        ->required()
        ->check(CLI::ExistingFile);
    st->o_t = sub->add_option("--t", st->t, "evaluation time (time units, > 0)");
    st->o_z = sub->add_option("--z", st->z, "self-similar coordinate");
    st->o_lo = sub->add_option("--window-lo", st->window_lo, "scan window start in y (default auto)");
    st->o_hi = sub->add_option("--window-hi", st->window_hi, "scan window end in y (default auto)");
    st->o_res = sub->add_option("--resolution", st->resolution,
                                "scan cell width in y (default window/8192)");
    sub->add_option("--output", st->output, "CSV path for the sampled (y, h) grid");
    sub->add_option("--dump-config", st->dump_path, "write the effective config to this path");
    sub->callback([st] { run_landscape(*st); });
}

// ------------------------------------------------------------- critical ----

struct CriticalState {
    std::string datum_path, output, dump_path, format = "json";
    double kappa1 = 1.0, alpha = 0.5, kappa2 = 1.0;
    std::vector<double> betas;
    CLI::Option *o_k1 = nullptr, *o_a = nullptr, *o_k2 = nullptr, *o_betas = nullptr;
};

void run_critical(CriticalState& st) {
    Params p;
    p.load(st.datum_path, "critical");
    p.datum_key(st.o_k1, burgers::format_double(st.kappa1), "kappa1");
    p.datum_key(st.o_a, burgers::format_double(st.alpha), "alpha");
    p.datum_default("kappa1", "1");
    p.datum_default("alpha", "0.5");
    const double kappa1 = p.cfg.get_double("datum", "kappa1");
    const double alpha = p.cfg.get_double("datum", "alpha");
    const double kappa2 = p.number(st.o_k2, st.kappa2, "kappa2", 1.0);
    const auto betas = p.list(st.o_betas, st.betas, "betas", {});

    const auto cs = burgers::find_zc({kappa1, alpha});
    struct Row {
        double beta, p_plus, p_minus;
    };
    std::vector<Row> rows;
    for (double beta : betas)
        rows.push_back({beta, burgers::p_correction(beta, burgers::Branch::plus, cs, kappa2),
                        burgers::p_correction(beta, burgers::Branch::minus, cs, kappa2)});
    p.dump(st.dump_path);

    const auto write_csv = [&](std::ostream& out) {
        burgers::CsvWriter csv(out);
        stamp(csv, p);
        csv.header({"kappa1", "alpha", "z_c", "m_plus", "y_star_plus", "y_star_minus",
                    "profile_plus", "profile_minus", "half_jump", "beta", "p_plus", "p_minus"});
        const std::vector<double> fixed{kappa1,
                                        alpha,
                                        cs.z_c,
                                        cs.m_plus,
                                        cs.y_star_plus_at_zc,
                                        cs.y_star_minus_at_zc,
                                        cs.profile_limit_plus(),
                                        cs.profile_limit_minus(),
                                        cs.half_jump()};
        if (rows.empty()) {
            auto cells = fixed;
            const double nan = std::nan("");
            cells.insert(cells.end(), {nan, nan, nan});
            csv.row(cells);
        }
        for (const auto& r : rows) {
            auto cells = fixed;
            cells.insert(cells.end(), {r.beta, r.p_plus, r.p_minus});
            csv.row(cells);
        }
    };

    if (!st.output.empty()) with_output(st.output, write_csv);
    if (st.format == "csv") {
        if (st.output.empty()) with_output("-", write_csv);
        return;
    }
    json corrections = json::array();
    for (const auto& r : rows)
        corrections.push_back(
            {{"beta", r.beta}, {"kappa2", kappa2}, {"p_plus", r.p_plus}, {"p_minus", r.p_minus}});
    emit_json(json{{"subcommand", "critical"},
                   {"config_hash", p.hash()},
                   {"kappa1", kappa1},
                   {"alpha", alpha},
                   {"z_c", cs.z_c},
                   {"m_plus", cs.m_plus},
                   {"y_star_plus", cs.y_star_plus_at_zc},
                   {"y_star_minus", cs.y_star_minus_at_zc},
                   {"profile_plus", cs.profile_limit_plus()},
                   {"profile_minus", cs.profile_limit_minus()},
                   {"half_jump", cs.half_jump()},
                   {"corrections", corrections}});
}

void register_critical(CLI::App& app) {
    auto st = std::make_shared<CriticalState>();
    CLI::App* sub = app.add_subcommand(
        "critical",
        "Critical coordinate z_c, branch roots, limit profile one-sided values, jump");
    st->o_k1 = sub->add_option("--kappa1", st->kappa1, "leading tail amplitude (default 1)");
    st->o_a = sub->add_option("--alpha", st->alpha, "leading tail exponent in (0,1) (default 0.5)");
    st->o_k2 = sub->add_option("--kappa2", st->kappa2,
                               "second tail amplitude used for the correction constants");
    st->o_betas = sub->add_option("--beta", st->betas,
                                  "second tail exponent(s) for the correction constants "
                                  "(repeatable, in (alpha, (1+alpha)/2))");
    sub->add_option("--datum", st->datum_path, "optional config file supplying [datum] values")
        ->check(CLI::ExistingFile);
    sub->add_option("--format", st->format, "stdout payload: json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", st->output, "also write the CSV table to this path");
    sub->add_option("--dump-config", st->dump_path, "write the effective config to this path");
    sub->callback([st] { run_critical(*st); });
}

// --------------------------------------------------------------- prop11 ----

struct Prop11State {
    std::string datum_path, output, dump_path;
    double kappa1 = 1.0, alpha = 0.5, kappa2 = 1.0, beta = 0.0, eps = 1.0;
    std::vector<double> xs;
    double t_min = 1e5, t_max = 1e9;
    long t_count = 9;
    CLI::Option *o_k1 = nullptr, *o_a = nullptr, *o_k2 = nullptr, *o_b = nullptr, *o_eps = nullptr;
    CLI::Option *o_x = nullptr, *o_tmin = nullptr, *o_tmax = nullptr, *o_tcount = nullptr;
    QuadFlags quad;
};

void run_prop11(Prop11State& st) {
    Params p;
    p.load(st.datum_path, "prop11");
    p.datum_key(st.o_k1, burgers::format_double(st.kappa1), "kappa1");
    p.datum_key(st.o_a, burgers::format_double(st.alpha), "alpha");
    p.datum_key(st.o_k2, burgers::format_double(st.kappa2), "kappa2");
    p.datum_key(st.o_b, burgers::format_double(st.beta), "beta");
    p.datum_key(st.o_eps, burgers::format_double(st.eps), "eps");
    p.datum_default("family", "two_term");
    p.datum_default("kappa1", "1");
    p.datum_default("alpha", "0.5");
    p.datum_default("kappa2", "1");
    p.datum_default("eps", "1");
    const auto datum = burgers::datum_from_config(p.cfg);
    burgers::require(datum.tails().size() >= 2, burgers::ErrorKind::invalid_argument,
                     "correction probe needs a two-term datum", {{"key", "datum.family"}});
    const auto opts = st.quad.resolve(p);
    const auto xs = p.list(st.o_x, st.xs, "x", {-1.0, 1.0});
    const auto ts = log_grid(p.number(st.o_tmin, st.t_min, "t-min", 1e5),
                             p.number(st.o_tmax, st.t_max, "t-max", 1e9),
                             p.integer(st.o_tcount, st.t_count, "t-count", 9));
    p.dump(st.dump_path);

    const double alpha = datum.leading_alpha();
    const double beta = datum.tails()[1].alpha;
    const double kappa2 = datum.tails()[1].kappa;
    const double gamma = (beta - alpha) / (1.0 + alpha);
    const auto cs = burgers::find_zc({datum.leading_kappa(), alpha});

    struct Series {
        double x, predicted;
        std::vector<double> raw, scaled;
    };
    std::vector<Series> series;
    for (double x : xs) {
        const auto branch = x > 0.0 ? burgers::Branch::plus : burgers::Branch::minus;
        Series s{x, burgers::p_correction(beta, branch, cs, kappa2), {}, {}};
        for (double t : ts) {
            const double q = burgers::q_estimate(datum, cs, x, t, opts);
            s.scaled.push_back(q);
            s.raw.push_back(q * std::pow(t, -gamma));
        }
        series.push_back(std::move(s));
    }

    if (!st.output.empty()) {
        with_output(st.output, [&](std::ostream& out) {
            burgers::CsvWriter csv(out);
            stamp(csv, p);
            csv.metadata("z_c", burgers::format_double(cs.z_c));
            csv.metadata("gamma", burgers::format_double(gamma));
            csv.header({"t", "x", "raw", "scaled", "predicted"});
            for (const auto& s : series)
                for (std::size_t i = 0; i < ts.size(); ++i)
                    csv.row({ts[i], s.x, s.raw[i], s.scaled[i], s.predicted});
        });
    }

    json results = json::array();
    for (const auto& s : series) {
        std::vector<double> abs_raw(s.raw.size());
        for (std::size_t i = 0; i < s.raw.size(); ++i) abs_raw[i] = std::abs(s.raw[i]);
        const auto fit = burgers::rate_fit(ts, abs_raw);
        const auto ext = burgers::extrapolate_power_law(ts, s.scaled);
        results.push_back({{"x", s.x},
                           {"branch", s.x > 0.0 ? "plus" : "minus"},
                           {"predicted", s.predicted},
                           {"extrapolated_limit", ext.limit},
                           {"error_bar", ext.error_bar},
                           {"theta", ext.theta},
                           {"rel_error", std::abs(ext.limit - s.predicted) / std::abs(s.predicted)},
                           {"slope", fit.slope},
                           {"r2", fit.r2}});
    }
    emit_json(json{{"subcommand", "prop11"},
                   {"config_hash", p.hash()},
                   {"alpha", alpha},
                   {"beta", beta},
                   {"gamma", gamma},
                   {"z_c", cs.z_c},
                   {"predicted_slope", -gamma},
                   {"results", results}});
}

void register_prop11(CLI::App& app) {
    auto st = std::make_shared<Prop11State>();
    CLI::App* sub = app.add_subcommand(
        "prop11",
        "Second-order correction probe: q(x,t) against the side constants P_plus/P_minus");
    st->o_k1 = sub->add_option("--kappa1", st->kappa1, "leading tail amplitude (default 1)");
    st->o_a = sub->add_option("--alpha", st->alpha, "leading tail exponent (default 0.5)");
    st->o_k2 = sub->add_option("--kappa2", st->kappa2, "second tail amplitude (default 1)");
    st->o_b = sub->add_option("--beta", st->beta,
                              "second tail exponent, must lie in (alpha, (1+alpha)/2)");
    st->o_eps = sub->add_option("--eps", st->eps, "datum core scale (default 1)");
    st->o_x = sub->add_option("--x", st->xs, "zoom coordinates, sign picks the branch "
                                             "(repeatable, default -1 1)");
    st->o_tmin = sub->add_option("--t-min", st->t_min, "first time of the geometric grid")
                     ->capture_default_str();
    st->o_tmax = sub->add_option("--t-max", st->t_max, "last time of the geometric grid")
                     ->capture_default_str();
    st->o_tcount = sub->add_option("--t-count", st->t_count, "grid point count")
                       ->capture_default_str();
    sub->add_option("--datum", st->datum_path, "config file supplying the two-term [datum]")
        ->check(CLI::ExistingFile);
    st->quad.attach(sub);
    sub->add_option("--output", st->output, "CSV path for (t, x, raw, scaled, predicted) rows");
    sub->add_option("--dump-config", st->dump_path, "write the effective config to this path");
    sub->callback([st] { run_prop11(*st); });
}

// ---------------------------------------------------------------- thm12 ----

struct Thm12State {
    std::string datum_path, output, dump_path, form = "branch-derivative";
    double kappa1 = 1.0, eps = 1.0;
    long nmax = 6, order = 0, zoom_level = -1;
    std::vector<double> xs;
    double t_min = 1e5, t_max = 1e9;
    long t_count = 9;
    CLI::Option *o_k1 = nullptr, *o_nmax = nullptr, *o_eps = nullptr;
    CLI::Option *o_order = nullptr, *o_zoom = nullptr, *o_form = nullptr;
    CLI::Option *o_x = nullptr, *o_tmin = nullptr, *o_tmax = nullptr, *o_tcount = nullptr;
    QuadFlags quad;
};

void run_thm12(Thm12State& st) {
    Params p;
    p.load(st.datum_path, "thm12");
    p.datum_key(st.o_k1, burgers::format_double(st.kappa1), "kappa1");
    p.datum_key(st.o_nmax, std::to_string(st.nmax), "nmax");
    p.datum_key(st.o_eps, burgers::format_double(st.eps), "eps");
    p.datum_default("family", "nested");
    p.datum_default("kappa1", "1");
    if (!p.cfg.has("datum", "alphas")) p.datum_default("nmax", "6");
    p.datum_default("eps", "1");
    const auto datum = burgers::datum_from_config(p.cfg);
    burgers::require(datum.tails().size() >= 3, burgers::ErrorKind::invalid_argument,
                     "correction ladder needs a nested datum", {{"key", "datum.family"}});
    const auto opts = st.quad.resolve(p);
    const long order = p.integer(st.o_order, st.order, "order", 0);
    burgers::require(order >= 0 && static_cast<std::size_t>(order) + 2 <= datum.tails().size(),
                     burgers::ErrorKind::invalid_argument,
                     "order must satisfy 0 <= N <= N_max - 2", {{"key", "thm12.order"}});
    const long zoom_level =
        p.integer(st.o_zoom, st.zoom_level, "zoom-level", order + 1);
    burgers::require(zoom_level >= 1 && static_cast<std::size_t>(zoom_level) < datum.tails().size(),
                     burgers::ErrorKind::invalid_argument,
                     "zoom-level must satisfy 1 <= level <= N_max", {{"key", "thm12.zoom-level"}});
    std::string form_name = st.form;
    if (st.o_form->count() == 0 && p.cfg.has("thm12", "form"))
        form_name = p.cfg.get_string("thm12", "form");
    burgers::require(form_name == "branch-derivative" || form_name == "display",
                     burgers::ErrorKind::invalid_argument,
                     "form must be branch-derivative or display", {{"key", "thm12.form"}});
    p.cfg.set("thm12", "form", form_name);
    const auto form = form_name == "display" ? burgers::LadderForm::display
                                             : burgers::LadderForm::branch_derivative;
    const auto xs = p.list(st.o_x, st.xs, "x", {-1.0, 1.0});
    const auto ts = log_grid(p.number(st.o_tmin, st.t_min, "t-min", 1e5),
                             p.number(st.o_tmax, st.t_max, "t-max", 1e9),
                             p.integer(st.o_tcount, st.t_count, "t-count", 9));
    p.dump(st.dump_path);

    const auto N = static_cast<std::size_t>(order);
    const auto cs = burgers::find_zc({datum.leading_kappa(), datum.leading_alpha()});
    const double gamma_N = burgers::nested_gamma(datum, N);
    const bool have_next = N + 3 <= datum.tails().size();

    struct Series {
        double x;
        std::vector<double> raw, scaled, predicted;
    };
    std::vector<Series> series;
    for (double x : xs) {
        const auto branch = x > 0.0 ? burgers::Branch::plus : burgers::Branch::minus;
        Series s{x, {}, {}, {}};
        for (double t : ts) {
            const double r = burgers::nested_residual(datum, cs, N, x, t,
                                                      static_cast<std::size_t>(zoom_level), form,
                                                      opts);
            s.raw.push_back(r);
            s.scaled.push_back(std::pow(t, gamma_N) * r);
            s.predicted.push_back(
                have_next ? burgers::nested_partial_sum(datum, cs, N + 1, branch, t, form) -
                                burgers::nested_partial_sum(datum, cs, N, branch, t, form)
                          : std::nan(""));
        }
        series.push_back(std::move(s));
    }

    if (!st.output.empty()) {
        with_output(st.output, [&](std::ostream& out) {
            burgers::CsvWriter csv(out);
            stamp(csv, p);
            csv.metadata("z_c", burgers::format_double(cs.z_c));
            csv.metadata("order", std::to_string(order));
            csv.metadata("gamma", burgers::format_double(gamma_N));
            csv.header({"t", "x", "raw", "scaled", "predicted"});
            for (const auto& s : series)
                for (std::size_t i = 0; i < ts.size(); ++i)
                    csv.row({ts[i], s.x, s.raw[i], s.scaled[i], s.predicted[i]});
        });
    }

    json results = json::array();
    for (const auto& s : series) {
        std::vector<double> abs_raw(s.raw.size());
        for (std::size_t i = 0; i < s.raw.size(); ++i) abs_raw[i] = std::abs(s.raw[i]);
        const auto fit = burgers::rate_fit(ts, abs_raw);
        const auto ext = burgers::extrapolate_power_law(ts, s.scaled);
        json r{{"x", s.x},
               {"branch", s.x > 0.0 ? "plus" : "minus"},
               {"extrapolated_limit", ext.limit},
               {"error_bar", ext.error_bar},
               {"theta", ext.theta},
               {"slope", fit.slope},
               {"r2", fit.r2}};
        if (have_next) {
            // rel_error compares the measured residual at t_max against the
            // next rung of the ladder, the prediction for what was left out
            const double predicted = s.predicted.back();
            r["predicted"] = predicted;
            r["rel_error"] = std::abs(s.raw.back() - predicted) / std::abs(predicted);
        }
        results.push_back(std::move(r));
    }
    emit_json(json{{"subcommand", "thm12"},
                   {"config_hash", p.hash()},
                   {"order", order},
                   {"zoom_level", zoom_level},
                   {"form", form_name},
                   {"gamma", gamma_N},
                   {"z_c", cs.z_c},
                   {"results", results}});
}

void register_thm12(CLI::App& app) {
    auto st = std::make_shared<Thm12State>();
    CLI::App* sub = app.add_subcommand(
        "thm12", "Nested correction ladder: partial sums and residual decay for the nested family");
    st->o_k1 = sub->add_option("--kappa1", st->kappa1, "leading weight of the nested family");
    st->o_nmax = sub->add_option("--nmax", st->nmax,
                                 "depth of the canonical nested exponent sequence (default 6)");
    st->o_eps = sub->add_option("--eps", st->eps, "datum core scale (default 1)");
    st->o_order = sub->add_option("--order", st->order, "partial sum order N (default 0)");
    st->o_zoom = sub->add_option("--zoom-level", st->zoom_level,
                                 "zoom rung for the evaluation frame (default N+1)");
    st->o_form = sub->add_option("--form", st->form,
                                 "ladder form: branch-derivative (default) or display")
                     ->check(CLI::IsMember({"branch-derivative", "display"}));
    st->o_x = sub->add_option("--x", st->xs, "zoom coordinates (repeatable, default -1 1)");
    st->o_tmin = sub->add_option("--t-min", st->t_min, "first time of the geometric grid")
                     ->capture_default_str();
    st->o_tmax = sub->add_option("--t-max", st->t_max, "last time of the geometric grid")
                     ->capture_default_str();
    st->o_tcount = sub->add_option("--t-count", st->t_count, "grid point count")
                       ->capture_default_str();
    sub->add_option("--datum", st->datum_path, "config file supplying the nested [datum]")
        ->check(CLI::ExistingFile);
    st->quad.attach(sub);
    sub->add_option("--output", st->output, "CSV path for (t, x, raw, scaled, predicted) rows");
    sub->add_option("--dump-config", st->dump_path, "write the effective config to this path");
    sub->callback([st] { run_thm12(*st); });
}

// ---------------------------------------------------------------- rates ----

struct RatesState {
    std::string datum_path, output, dump_path;
    std::vector<double> offsets;
    double t_min = 1e4, t_max = 1e9;
    long t_count = 6;
    CLI::Option *o_off = nullptr, *o_tmin = nullptr, *o_tmax = nullptr, *o_tcount = nullptr;
    QuadFlags quad;
};

void run_rates(RatesState& st) {
    Params p;
    p.load(st.datum_path, "rates");
    p.datum_default("family", "single");
    p.datum_default("kappa1", "1");
    p.datum_default("alpha", "0.5");
    p.datum_default("eps", "1");
    const auto datum = burgers::datum_from_config(p.cfg);
    const auto opts = st.quad.resolve(p);
    const auto offsets = p.list(st.o_off, st.offsets, "offsets", {-1.0, -0.5, 0.5, 1.0});
    const auto ts = log_grid(p.number(st.o_tmin, st.t_min, "t-min", 1e4),
                             p.number(st.o_tmax, st.t_max, "t-max", 1e9),
                             p.integer(st.o_tcount, st.t_count, "t-count", 6));
    p.dump(st.dump_path);

    const double alpha = datum.leading_alpha();
    const auto cs = burgers::find_zc({datum.leading_kappa(), alpha});
    const double predicted_slope = -(1.0 - alpha) / (2.0 * (1.0 + alpha));

    struct Series {
        double offset, z;
        std::vector<double> errors;
    };
    std::vector<Series> series;
    for (double d : offsets) {
        burgers::require(d != 0.0, burgers::ErrorKind::invalid_argument,
                         "offsets must avoid the discontinuity itself", {{"key", "rates.offsets"}});
        Series s{d, cs.z_c + d, {}};
        const double limit = burgers::profile_p(s.z, cs);
        for (double t : ts) {
            const auto sample =
                burgers::rescaled_solution(datum, burgers::Frame(alpha, t, s.z), opts);
            s.errors.push_back(std::abs(sample.value - limit));
        }
        series.push_back(std::move(s));
    }

    if (!st.output.empty()) {
        with_output(st.output, [&](std::ostream& out) {
            burgers::CsvWriter csv(out);
            stamp(csv, p);
            csv.metadata("z_c", burgers::format_double(cs.z_c));
            csv.header({"offset", "z", "t", "error"});
            for (const auto& s : series)
                for (std::size_t i = 0; i < ts.size(); ++i)
                    csv.row({s.offset, s.z, ts[i], s.errors[i]});
        });
    }

    json fits = json::array();
    for (const auto& s : series) {
        const auto fit = burgers::rate_fit(ts, s.errors);
        fits.push_back({{"offset", s.offset},
                        {"z", s.z},
                        {"slope", fit.slope},
                        {"intercept", fit.intercept},
                        {"r2", fit.r2},
                        {"n_used", fit.n_used}});
    }
    emit_json(json{{"subcommand", "rates"},
                   {"config_hash", p.hash()},
                   {"z_c", cs.z_c},
                   {"predicted_slope", predicted_slope},
                   {"fits", fits}});
}

void register_rates(CLI::App& app) {
    auto st = std::make_shared<RatesState>();
    CLI::App* sub = app.add_subcommand(
        "rates", "Convergence rate of the rescaled solution to the limit profile off z_c");
    st->o_off = sub->add_option("--offset", st->offsets,
                                "z offsets from z_c (repeatable, default -1 -0.5 0.5 1)");
    st->o_tmin = sub->add_option("--t-min", st->t_min, "first time of the geometric grid")
                     ->capture_default_str();
    st->o_tmax = sub->add_option("--t-max", st->t_max, "last time of the geometric grid")
                     ->capture_default_str();
    st->o_tcount = sub->add_option("--t-count", st->t_count, "grid point count")
                       ->capture_default_str();
    sub->add_option("--datum", st->datum_path,
                    "config file with [datum] (default: single family, kappa1 1, alpha 0.5)")
        ->check(CLI::ExistingFile);
    st->quad.attach(sub);
    sub->add_option("--output", st->output, "CSV path for (offset, z, t, error) rows");
    sub->add_option("--dump-config", st->dump_path, "write the effective config to this path");
    sub->callback([st] { run_rates(*st); });
}

// --------------------------------------------------------------- oracle ----

struct OracleState {
    std::string datum_path, output, dump_path;
    double t_final = 0.0, half_width = 0.0, dt = 0.0, t0 = 0.0;
    long nx = 2001;
    bool hopf_cole_init = false;
    std::vector<double> times;
    CLI::Option *o_tf = nullptr, *o_L = nullptr, *o_nx = nullptr, *o_dt = nullptr;
    CLI::Option *o_t0 = nullptr, *o_hc = nullptr, *o_times = nullptr;
    QuadFlags quad;
};

void run_oracle(OracleState& st) {
    Params p;
    p.load(st.datum_path, "oracle");
    const auto datum = burgers::datum_from_config(p.cfg);
    const auto opts = st.quad.resolve(p);
    const double t_final = p.number(st.o_tf, st.t_final, "t-final");
    const double default_L = std::ceil(10.0 * std::sqrt(std::max(t_final, 0.0)) + 20.0);
    const double L = p.number(st.o_L, st.half_width, "half-width", default_L);
    const long nx = p.integer(st.o_nx, st.nx, "nx", 2001);
    burgers::require(nx >= 2, burgers::ErrorKind::invalid_argument, "nx must be at least 2",
                     {{"key", "oracle.nx"}});
    const double dx = 2.0 * L / static_cast<double>(nx - 1);
    const double dt = p.number(st.o_dt, st.dt, "dt", 0.3 * dx);
    const double t0 = p.number(st.o_t0, st.t0, "t0", 0.0);
    const bool hc_init = p.toggle(st.o_hc, st.hopf_cole_init, "hopf-cole-init", false);
    const auto times = p.list(st.o_times, st.times, "times", {});
    p.dump(st.dump_path);

    const burgers::OracleGrid grid{L, static_cast<std::size_t>(nx), dt};
    burgers::IntegrateOptions iopts;
    iopts.t0 = t0;
    iopts.hopf_cole_init = hc_init;
    const auto snapshots = burgers::integrate(datum, grid, t_final, times, iopts, opts);

    // one (x, f) table per snapshot; multiple snapshots to a file get an
    // index suffix so each table stays a well-formed CSV
    const auto emit_snapshot = [&](std::ostream& out, const burgers::Snapshot& snap) {
        burgers::CsvWriter csv(out);
        stamp(csv, p);
        csv.metadata("t", burgers::format_double(snap.t));
        csv.header({"x", "f"});
        for (std::size_t i = 0; i < snap.values.size(); ++i)
            csv.row({grid.x_at(i), snap.values[i]});
    };
    if (st.output.empty() || st.output == "-") {
        for (const auto& snap : snapshots) emit_snapshot(std::cout, snap);
        return;
    }
    if (snapshots.size() == 1) {
        with_output(st.output, [&](std::ostream& out) { emit_snapshot(out, snapshots[0]); });
        return;
    }
    const std::size_t dot = st.output.rfind('.');
    const std::string stem = dot == std::string::npos ? st.output : st.output.substr(0, dot);
    const std::string ext = dot == std::string::npos ? "" : st.output.substr(dot);
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        const std::string path = stem + "_" + std::to_string(i + 1) + ext;
        with_output(path, [&](std::ostream& out) { emit_snapshot(out, snapshots[i]); });
    }
}

void register_oracle(CLI::App& app) {
    auto st = std::make_shared<OracleState>();
    CLI::App* sub = app.add_subcommand(
        "oracle", "Finite-difference time stepper for the physical equation (cross-check)");
    sub->add_option("--datum", st->datum_path, "config file with [datum] and optional sections")
        ->required()
        ->check(CLI::ExistingFile);
    st->o_tf = sub->add_option("--t-final", st->t_final,
                               "integration end time (time units, <= 1000)");
    st->o_L = sub->add_option("--half-width", st->half_width,
                              "domain half width L, needs L >= 10 sqrt(t) + 20 "
                              "(default: that bound, rounded up)");
    st->o_nx = sub->add_option("--nx", st->nx, "grid point count")->capture_default_str();
    st->o_dt = sub->add_option("--dt", st->dt, "time step (default 0.3 dx)");
    st->o_t0 = sub->add_option("--t0", st->t0, "start time (default 0: start from the datum)");
    st->o_hc = sub->add_flag("--hopf-cole-init", st->hopf_cole_init,
                             "initialize from the exact solution at t0 (requires t0 > 0)");
    st->o_times = sub->add_option("--time", st->times,
                                  "intermediate snapshot times (repeatable; final always emitted)");
    st->quad.attach(sub);
    sub->add_option("--output", st->output,
                    "CSV path; multiple snapshots get _1, _2, ... suffixes ('-' = stdout)");
    sub->add_option("--dump-config", st->dump_path, "write the effective config to this path");
    sub->callback([st] { run_oracle(*st); });
}

// ---------------------------------------------------- profile-plot-data ----

struct ProfilePlotState {
    std::string datum_path, output, dump_path;
    double kappa1 = 1.0, alpha = 0.5, eps = 1.0, span = 2.0;
    long count = 200;
    std::vector<double> times;
    CLI::Option *o_k1 = nullptr, *o_a = nullptr, *o_eps = nullptr;
    CLI::Option *o_span = nullptr, *o_count = nullptr, *o_times = nullptr;
    QuadFlags quad;
};

void run_profile_plot(ProfilePlotState& st) {
    Params p;
    p.load(st.datum_path, "profile-plot-data");
    p.datum_key(st.o_k1, burgers::format_double(st.kappa1), "kappa1");
    p.datum_key(st.o_a, burgers::format_double(st.alpha), "alpha");
    p.datum_key(st.o_eps, burgers::format_double(st.eps), "eps");
    p.datum_default("family", "single");
    p.datum_default("kappa1", "1");
    p.datum_default("alpha", "0.5");
    p.datum_default("eps", "1");
    const auto datum = burgers::datum_from_config(p.cfg);
    const auto opts = st.quad.resolve(p);
    const double span = p.number(st.o_span, st.span, "span", 2.0);
    burgers::require(span > 0.0, burgers::ErrorKind::invalid_argument, "span must be positive",
                     {{"key", "profile-plot-data.span"}});
    const long count = p.integer(st.o_count, st.count, "count", 200);
    burgers::require(count >= 2, burgers::ErrorKind::invalid_argument, "count must be at least 2",
                     {{"key", "profile-plot-data.count"}});
    const auto times = p.list(st.o_times, st.times, "times", {1e4, 1e6, 1e8});
    p.dump(st.dump_path);

    const double alpha = datum.leading_alpha();
    const auto cs = burgers::find_zc({datum.leading_kappa(), alpha});

    with_output(st.output, [&](std::ostream& out) {
        burgers::CsvWriter csv(out);
        stamp(csv, p);
        csv.metadata("z_c", burgers::format_double(cs.z_c));
        std::vector<std::string> header{"z", "p"};
        for (double t : times) header.push_back("f_t" + burgers::format_double(t));
        csv.header(header);
        for (long i = 0; i < count; ++i) {
            const double z = cs.z_c - span +
                             2.0 * span * static_cast<double>(i) / static_cast<double>(count - 1);
            if (z == cs.z_c) continue;  // limit profile undefined at the jump
            std::vector<double> row{z, burgers::profile_p(z, cs)};
            for (double t : times)
                row.push_back(
                    burgers::rescaled_solution(datum, burgers::Frame(alpha, t, z), opts).value);
            csv.row(row);
        }
    });
}

void register_profile_plot(CLI::App& app) {
    auto st = std::make_shared<ProfilePlotState>();
    CLI::App* sub = app.add_subcommand(
        "profile-plot-data",
        "Limit profile and finite-time rescaled solutions on a z grid straddling z_c");
    st->o_k1 = sub->add_option("--kappa1", st->kappa1, "leading tail amplitude (default 1)");
    st->o_a = sub->add_option("--alpha", st->alpha, "leading tail exponent (default 0.5)");
    st->o_eps = sub->add_option("--eps", st->eps, "datum core scale (default 1)");
    st->o_span = sub->add_option("--span", st->span, "grid half width around z_c")
                     ->capture_default_str();
    st->o_count = sub->add_option("--count", st->count, "grid point count")->capture_default_str();
    st->o_times = sub->add_option("--time", st->times,
                                  "finite times for the rescaled columns "
                                  "(repeatable, default 1e4 1e6 1e8)");
    sub->add_option("--datum", st->datum_path, "config file supplying [datum]")
        ->check(CLI::ExistingFile);
    st->quad.attach(sub);
    sub->add_option("--output", st->output, "CSV path ('-' = stdout, default)");
    sub->add_option("--dump-config", st->dump_path, "write the effective config to this path");
    sub->callback([st] { run_profile_plot(*st); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Long-time structure of the viscous Burgers equation with "
                 "slowly decaying power-law initial data"};
    app.require_subcommand(1);
    register_solve(app);
    register_landscape(app);
    register_critical(app);
    register_prop11(app);
    register_thm12(app);
    register_rates(app);
    register_oracle(app);
    register_profile_plot(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        std::cerr << error_json("invalid_argument", e.what(), {{"name", e.get_name()}}).dump()
                  << "\n";
        return 2;
    } catch (const burgers::ValidationError& e) {
        std::cerr << error_json(burgers::to_string(e.kind()), e.what(), e.context()).dump() << "\n";
        return 2;
    } catch (const burgers::QuadratureError& e) {
        auto context = e.context();
        context["best_value"] = burgers::format_double(e.best_value());
        context["error_estimate"] = burgers::format_double(e.error_estimate());
        std::cerr << error_json(burgers::to_string(e.kind()), e.what(), context).dump() << "\n";
        return 1;
    } catch (const burgers::Error& e) {
        std::cerr << error_json(burgers::to_string(e.kind()), e.what(), e.context()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()).dump() << "\n";
        return 1;
    }
    return 0;
}
