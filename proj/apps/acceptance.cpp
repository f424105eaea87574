// Acceptance runner: one criterion per invocation (argv[1] in 1..8), one
// verdict line per criterion, sub-checks and analysis notes above it. Exit 0
// iff every sub-check passed. Criteria that measure asymptotic statements are
// run exactly as stated at desk scale; where the stated bound is out of reach
// of the mechanism being measured, the runner says so next to the red line
// rather than moving the goalposts.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "burgers/asymptotics.hpp"
#include "burgers/critical.hpp"
#include "burgers/hopf_cole.hpp"
#include "burgers/initial_data.hpp"
#include "burgers/landscape.hpp"
#include "burgers/pde_oracle.hpp"

using namespace burgers;

namespace {

std::string strf(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return buf;
}

struct Verdict {
    bool pass = true;

    void sub(bool ok, const std::string& name, const std::string& detail) {
        std::printf("  %s %-58s %s\n", ok ? "[pass]" : "[FAIL]", name.c_str(), detail.c_str());
        pass = pass && ok;
    }

    void note(const std::string& line) { std::printf("  note   %s\n", line.c_str()); }
};

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> ts(static_cast<std::size_t>(n));
    const double r = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) ts[static_cast<std::size_t>(i)] = lo * std::exp(r * i);
    ts.back() = hi;
    return ts;
}

// 1. Exact solver vs finite-difference time stepper, physical frame.
bool criterion1() {
    std::puts("criterion 1: exact solver vs finite-difference cross-check");
    Verdict v;
    const auto datum = make_single(1.0, 0.5);
    std::vector<double> xs;
    for (int i = -20; i <= 20; ++i) xs.push_back(i);
    {
        const OracleGrid grid{40.0, 4001, 0.3 * 0.02};
        const auto rep = compare(datum, 1.0, xs, grid);
        v.sub(rep.max_abs_diff <= 1e-4, "t=1, x in [-20,20], max abs diff <= 1e-4",
              strf("measured=%.3e rms=%.3e (L=40, nx=4001)", rep.max_abs_diff, rep.rms_diff));
    }
    {
        const OracleGrid grid{120.0, 6001, 0.3 * 0.04};
        const auto rep = compare(datum, 50.0, xs, grid);
        v.sub(rep.max_abs_diff <= 1e-3, "t=50, x in [-20,20], max abs diff <= 1e-3",
              strf("measured=%.3e rms=%.3e (L=120, nx=6001)", rep.max_abs_diff, rep.rms_diff));
    }
    return v.pass;
}

// 2. Critical structure invariants for six (kappa1, alpha) combinations plus
// the two closed-form anchors.
bool criterion2() {
    std::puts("criterion 2: critical structure invariants");
    Verdict v;
    bool stated_sign_failed = false;
    for (double kappa1 : {1.0, 2.0}) {
        for (double alpha : {0.3, 0.5, 0.7}) {
            const auto cs = find_zc({kappa1, alpha});
            for (const auto& check : cs.invariant_report()) {
                v.sub(check.pass, strf("(%g, %g) %s", kappa1, alpha, check.name.c_str()),
                      strf("measured=%.6e", check.measured));
                if (!check.pass && check.name.rfind("stated_sign", 0) == 0)
                    stated_sign_failed = true;
            }
        }
    }
    {
        const double y = y_star(0.0, Branch::minus, {1.0, 0.5});
        v.sub(std::abs(y + 1.0) <= 1e-12, "exact root y*_-(0) = -1 at (1, 0.5)",
              strf("measured=%.17g", y));
        const auto cs = find_zc({1.0, 0.5});
        const double m_ref = 3.0 * std::pow(2.0, -2.0 / 3.0);
        v.sub(std::abs(cs.m_plus - m_ref) <= 1e-12, "exact fold height m_plus = 3*2^(-2/3)",
              strf("measured=%.17g expected=%.17g", cs.m_plus, m_ref));
    }
    if (stated_sign_failed) {
        v.note("the stated sign condition z_c - y*_+ < 0 contradicts the defining equation");
        v.note("z = y + kappa1/|y|^alpha, which forces z_c - y* = kappa1/|y*|^alpha > 0 on");
        v.note("both branches; the check is run as stated and reported red. The minus-branch");
        v.note("twin with the same orientation passes, as do all residual and height checks.");
    }
    return v.pass;
}

// 3. Decay of |rescaled solution - limit profile| off the discontinuity.
bool criterion3() {
    std::puts("criterion 3: limit profile convergence rate");
    Verdict v;
    const auto datum = make_single(1.0, 0.5);
    const auto cs = find_zc({1.0, 0.5});
    const double bound = -(1.0 - 0.5) / (2.0 * (1.0 + 0.5)) + 0.05;
    const auto ts = log_grid(1e4, 1e9, 6);
    for (double d : {-1.0, -0.5, 0.5, 1.0}) {
        const double z = cs.z_c + d;
        const double p = profile_p(z, cs);
        std::vector<double> errs;
        for (double t : ts)
            errs.push_back(std::abs(rescaled_solution(datum, Frame(0.5, t, z)).value - p));
        const auto fit = rate_fit(ts, errs);
        v.sub(fit.slope <= bound && fit.r2 >= 0.9,
              strf("z = z_c%+.1f: slope <= %.4f, r2 >= 0.9", d, bound),
              strf("slope=%.4f r2=%.5f", fit.slope, fit.r2));
    }
    return v.pass;
}

// 4. Finite-time shift of the minus-branch maximizer at z_c: rate and
// coefficient against the closed-form root-shift constant.
bool criterion4() {
    std::puts("criterion 4: finite-time root shift rate and coefficient");
    Verdict v;
    const auto datum = make_two_term(1.0, 0.5, 1.0, 0.6);
    const auto cs = find_zc({1.0, 0.5});
    const double rate = -(0.6 - 0.5) / (1.0 + 0.5);  // -1/15
    const auto ts = log_grid(1e4, 1e9, 6);
    std::vector<double> shifts;
    for (double t : ts)
        shifts.push_back(std::abs(finite_t_maxima(datum, cs.z_c, t).first -
                                  cs.y_star_minus_at_zc));
    const auto fit = rate_fit(ts, shifts);
    v.sub(std::abs(fit.slope - rate) <= 0.2 * std::abs(rate) && fit.r2 >= 0.9,
          "shift rate -1/15 within 20%, r2 >= 0.9",
          strf("slope=%.5f target=%.5f r2=%.6f", fit.slope, rate, fit.r2));
    const double coef = std::abs(lemma_root_shift_coefficient(0.6, Branch::minus, cs));
    const double fitted = std::exp(fit.intercept + fit.slope * std::log(1e9));
    const double predicted = coef * std::pow(1e9, rate);
    v.sub(std::abs(fitted / predicted - 1.0) <= 0.1,
          "fitted prefactor within 10% of the root-shift coefficient at t=1e9",
          strf("fitted=%.6f predicted=%.6f ratio=%.4f", fitted, predicted, fitted / predicted));
    return v.pass;
}

// 5. Extrapolated second-order side constants against the closed forms.
bool criterion5() {
    std::puts("criterion 5: second-order side constants");
    Verdict v;
    const double betas[3] = {0.55, 0.6, 0.7};
    // weak second tails keep the finite-time branch tie inside |x| < 1 so the
    // x = +1 probe reads the plus branch rather than the shifted tie
    const double kappa2s[3] = {0.05, 0.05, 0.15};
    const auto ts = log_grid(1e5, 1e9, 9);
    const auto cs = find_zc({1.0, 0.5});
    int detected = 0;
    for (int b = 0; b < 3; ++b) {
        const auto datum = make_two_term(1.0, 0.5, kappa2s[b], betas[b]);
        const double xs[4] = {1.0, -1.0, -2.0, -0.5};
        double limit[4], bar[4];
        for (int k = 0; k < 4; ++k) {
            std::vector<double> q;
            for (double t : ts) q.push_back(q_estimate(datum, cs, xs[k], t));
            const auto ext = extrapolate_power_law(ts, q);
            limit[k] = ext.limit;
            bar[k] = ext.error_bar;
        }
        const double pp = p_correction(betas[b], Branch::plus, cs, kappa2s[b]);
        const double pm = p_correction(betas[b], Branch::minus, cs, kappa2s[b]);
        const double rel_p = std::abs(limit[0] - pp) / std::abs(pp);
        const double rel_m = std::abs(limit[1] - pm) / std::abs(pm);
        v.sub(rel_p <= 0.02 && rel_m <= 0.02,
              strf("beta=%.2f: extrapolated limits at x=+-1 within 2%%", betas[b]),
              strf("rel_plus=%.4f rel_minus=%.4f", rel_p, rel_m));
        const double side_gap = std::abs(limit[2] - limit[3]);
        v.sub(side_gap <= bar[2] + bar[3],
              strf("beta=%.2f: x=-2 vs x=-0.5 agree within error bars", betas[b]),
              strf("gap=%.6f combined_bar=%.6f", side_gap, bar[2] + bar[3]));
        const double detect_gap = std::abs(limit[0] - limit[1]);
        if (detect_gap > 3.0 * (bar[0] + bar[1])) ++detected;
    }
    v.sub(detected >= 2, "side constants differ (gap > 3x error bar) for >= 2 of 3 beta",
          strf("detected=%d/3", detected));
    if (!v.pass) {
        v.note("the L + C t^-theta extrapolation absorbs one correction power; at beta=0.55");
        v.note("and 0.6 the next-order terms inside t <= 1e9 still move the limit by ~10-30%,");
        v.note("so the 2% target needs times beyond desk scale. The jump between the two side");
        v.note("constants is detected cleanly for all three exponents.");
    }
    return v.pass;
}

// 6. Landscape gap scaling at the moving zoom coordinate, and branch flip.
bool criterion6() {
    std::puts("criterion 6: branch gap scaling at the zoom boundary");
    Verdict v;
    const auto datum = make_two_term(1.0, 0.5, 0.05, 0.7, 0.1);
    const auto cs = find_zc({1.0, 0.5});
    const double gamma = (0.7 - 0.5) / 1.5;  // 2/15
    const auto ts = log_grid(1e4, 1e8, 5);
    std::vector<double> nus;
    for (double t : ts) {
        const auto rep =
            scan_landscape(datum, Frame(0.5, t, cs.z_c + std::pow(t, -gamma)));
        nus.push_back(max_gap(rep, 1.7));
    }
    const auto fit = rate_fit(ts, nus);
    v.sub(std::abs(fit.slope + gamma) <= 0.15 * gamma,
          "gap at z = z_c + t^(-2/15): slope -2/15 within 15%",
          strf("slope=%.4f target=%.4f r2=%.5f", fit.slope, -gamma, fit.r2));
    const auto rep_plus =
        scan_landscape(datum, Frame(0.5, 1e6, cs.z_c + std::pow(1e6, -gamma)));
    const auto rep_minus =
        scan_landscape(datum, Frame(0.5, 1e6, cs.z_c - std::pow(1e6, -gamma)));
    v.sub(rep_plus.global_max().y > 0.0 && rep_minus.global_max().y < 0.0,
          "dominant branch flips with the sign of the zoom coordinate",
          strf("y(x=+1)=%.4f y(x=-1)=%.4f", rep_plus.global_max().y, rep_minus.global_max().y));
    return v.pass;
}

// 7. Nested ladder: scaled residual decrease, telescoping, admissibility.
bool criterion7() {
    std::puts("criterion 7: nested ladder residuals");
    Verdict v;
    const auto datum = make_nested(1.0, canonical_nested_alphas(6));
    const auto cs = find_zc({1.0, 0.5});
    const auto ts = log_grid(1e5, 1e9, 5);
    for (std::size_t N : {0u, 1u, 2u}) {
        const double gN = nested_gamma(datum, N);
        const double cap = std::pow(10.0, 4.0 * (nested_gamma(datum, N + 1) - gN));
        for (double x : {-1.0, 1.0}) {
            std::vector<double> scaled;
            bool monotone = true;
            for (double t : ts) {
                scaled.push_back(std::pow(t, gN) *
                                 std::abs(nested_residual(datum, cs, N, x, t)));
                if (scaled.size() > 1 && scaled.back() >= scaled[scaled.size() - 2])
                    monotone = false;
            }
            const double factor = scaled.front() / scaled.back();
            v.sub(monotone && factor >= 2.0,
                  strf("N=%zu, x=%+.0f: scaled residual falls monotonically by >= 2x", N, x),
                  strf("factor=%.3f over t=1e5..1e9 (rate cap allows %.2fx)", factor, cap));
        }
    }
    {
        double worst = 0.0;
        for (std::size_t N : {1u, 2u}) {
            for (double x : {-1.0, 1.0}) {
                const auto branch = x > 0.0 ? Branch::plus : Branch::minus;
                const double r_n = nested_residual(datum, cs, N, x, 1e6, N + 1);
                const double r_prev = nested_residual(datum, cs, N - 1, x, 1e6, N + 1);
                const double term = nested_partial_sum(datum, cs, N, branch, 1e6) -
                                    nested_partial_sum(datum, cs, N - 1, branch, 1e6);
                worst = std::max(worst, std::abs(r_n - (r_prev - term)));
            }
        }
        v.sub(worst <= 1e-13, "telescoping identity at a matched zoom frame",
              strf("worst=%.3e", worst));
    }
    {
        bool rejected = true;
        try {
            make_nested(1.0, {0.5, 0.56, 0.66});  // first step below the midpoint bound
            rejected = false;
        } catch (const ValidationError&) {
        }
        try {
            make_nested(1.0, {0.5, 0.74, 0.76});  // sup over (1 + alpha0)/2
            rejected = false;
        } catch (const ValidationError&) {
        }
        v.sub(rejected, "inadmissible exponent sequences are rejected", "two rejection paths");
    }
    if (!v.pass) {
        v.note("the scaled residual at order N decays at best like t^-(gamma_{N+1}-gamma_N);");
        v.note("over four decades that caps the decrease at 10^(4 dgamma) = 2.09, 1.28, 1.13");
        v.note("for N = 0, 1, 2, so the >= 2x bar is out of reach for N >= 1 at any grid");
        v.note("inside the guard. The N=0 decrease is further slowed by the profile drift");
        v.note("x p'(z_c) t^-gamma_1 entering the zoom frame, and at x=+1 the finite-time");
        v.note("branch tie sits past the zoom point, leaving an order-one branch mismatch.");
        v.note("Telescoping and admissibility, which probe the ladder itself, pass.");
    }
    return v.pass;
}

// 8. Micro-suite: derivative channel, antiderivative, refinement, trivial data.
bool criterion8() {
    std::puts("criterion 8: landscape and quadrature micro-checks");
    Verdict v;
    const auto datum = make_single(1.0, 0.5);
    {
        double worst = 0.0;
        int used = 0;
        const double frames[3][2] = {{0.0, 1e2}, {2.6, 1e6}, {-3.0, 1e4}};
        for (const auto& fr : frames) {
            const Frame frame(0.5, fr[1], fr[0]);
            for (double y : {-2.0, -0.5, 0.7, 1.9, 5.0}) {
                const double d = ht_eval(datum, frame, y, HtChannel::dy);
                if (std::abs(d) < 1e-3) continue;  // relative target needs signal
                const double h = 1e-6 * (1.0 + std::abs(y));
                const double fd = (ht_eval(datum, frame, y + h, HtChannel::value) -
                                   ht_eval(datum, frame, y - h, HtChannel::value)) /
                                  (2.0 * h);
                worst = std::max(worst, std::abs(fd - d) / std::abs(d));
                ++used;
            }
        }
        v.sub(worst <= 1e-6 && used >= 12, "derivative channel vs finite differences, 1e-6",
              strf("worst_rel=%.3e over %d points", worst, used));
    }
    {
        double worst = 0.0;
        for (double x : {0.3, 1.0, 3.7, 10.0, 100.0, 850.0, 999.5, 1000.5, 2000.0, 1e4}) {
            const double h = 1e-5 * (1.0 + std::abs(x));
            const double fd =
                (datum.antiderivative(x + h) - datum.antiderivative(x - h)) / (2.0 * h);
            worst = std::max(worst, std::abs(fd - datum.value(x)) / datum.value(x));
        }
        bool odd = true;
        for (double x : {0.7, 12.0, 4321.0})
            odd = odd && datum.antiderivative(-x) == -datum.antiderivative(x);
        v.sub(worst <= 1e-8 && odd, "antiderivative consistent with the datum, 1e-8",
              strf("worst_rel=%.3e, oddness exact=%d", worst, odd));
    }
    {
        QuadratureOptions loose, tight;
        loose.rel_tol = 1e-6;
        tight.rel_tol = 1e-11;
        const Frame frame(0.5, 1e6, 2.2);
        const auto a = rescaled_solution(datum, frame, loose);
        const auto b = rescaled_solution(datum, frame, tight);
        const double drift = std::abs(a.value - b.value);
        v.sub(drift <= std::max(a.error_estimate, 1e-6 * std::abs(b.value)) &&
                  b.error_estimate <= 1e-11 * std::abs(b.value),
              "refinement: drift under tightening bounded by rel_tol",
              strf("drift=%.3e loose_est=%.3e tight_est=%.3e", drift, a.error_estimate,
                   b.error_estimate));
    }
    {
        const auto zero = make_zero_datum();
        const auto s = rescaled_solution(zero, Frame(0.5, 10.0, 1.3));
        bool exact = s.value == 0.0 && s.error_estimate == 0.0 &&
                     physical_solution(zero, 4.2, 7.0) == 0.0;
        const OracleGrid grid{30.0, 1001, 0.018};
        const auto snaps = integrate(zero, grid, 0.5);
        for (double f : snaps.back().values) exact = exact && f == 0.0;
        v.sub(exact, "zero datum stays exactly zero in both solvers", "bitwise");
    }
    return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
        return 2;
    }
    const int c = std::atoi(argv[1]);
    bool pass = false;
    try {
        switch (c) {
            case 1: pass = criterion1(); break;
            case 2: pass = criterion2(); break;
            case 3: pass = criterion3(); break;
            case 4: pass = criterion4(); break;
            case 5: pass = criterion5(); break;
            case 6: pass = criterion6(); break;
            case 7: pass = criterion7(); break;
            case 8: pass = criterion8(); break;
            default: std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n"); return 2;
        }
    } catch (const std::exception& e) {
        std::printf("  [FAIL] unexpected exception: %s\n", e.what());
        pass = false;
    }
    std::printf("criterion %d: %s\n", c, pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}
