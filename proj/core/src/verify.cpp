// Programmatic acceptance checks.  One function per criterion; every
// tolerance is pinned here.  run_suite() groups them:
//   unitarity         -> 1
//   oracle            -> 2
//   closed_vs_series  -> 3, 4, 5
//   limits            -> 6, 7, 8

#include "coulomb2d/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "coulomb2d/amplitude.hpp"
#include "coulomb2d/detail/parallel.hpp"
#include "coulomb2d/errors.hpp"
#include "coulomb2d/kinematics.hpp"
#include "coulomb2d/phase_shift.hpp"
#include "coulomb2d/radial.hpp"
#include "coulomb2d/specfun.hpp"

namespace coulomb2d::verify {

namespace {

using Complex = std::complex<double>;
constexpr double PI = 3.14159265358979323846264338327950288;
constexpr double TWO_PI = 6.28318530717958647692528676655900577;

// Frozen once from a development-time fit of |f_series_exact - f_closed|/gamma^2
// (absolute, natural units) over the criterion-4 angles and gamma in
// [3e-3, 3e-2]: measured 1.7 at theta = pi/2, 3pi/2, max 3.6 at pi/6, ~0.06 at
// pi where the leading odd harmonic cancels.
constexpr double kSeriesClosedC = 8.0;

double wrap_mod_pi(double d) { return d - PI * std::round(d / PI); }

double snap_dyadic(double x) { return std::ldexp(std::round(std::ldexp(x, 50)), -50); }

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = double(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct Worst {
    double value = 0.0;
    std::string where;

    void update(double v, const std::string& w) {
        if (v > value) {
            value = v;
            where = w;
        }
    }
};

CheckResult make_result(const std::string& id, const std::string& name, const Worst& worst,
                        double tolerance, double seconds) {
    CheckResult r;
    r.id = id;
    r.name = name;
    r.tolerance = tolerance;
    r.margin = worst.value / tolerance;
    r.passed = worst.value <= tolerance;
    r.seconds = seconds;
    r.detail = "worst " + std::to_string(worst.value) + " at " + worst.where;
    return r;
}

class Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// ---------------------------------------------------------------- criterion 1
CheckResult check_unitarity(const VerifyOptions& opts) {
    Stopwatch timer;
    const double gammas[] = {0.01, -0.01, 0.1, -0.1, 0.3, -0.3, 0.49, -0.49};
    const double ratios[] = {1.01, 1.25, 5.0, 50.0};
    Worst worst;
    for (double g : gammas) {
        for (double e : ratios) {
            Kinematics kin = Kinematics::from_gamma(g, e);
            for (int t = 1; t <= 401; t += 2) {
                for (int sign : {1, -1}) {
                    auto el = s_matrix_exact(AngularMomentum(sign * t), kin);
                    double dev = std::fabs(std::abs(el.value) - 1.0);
                    std::ostringstream w;
                    w << "two_j=" << sign * t << " gamma=" << g << " E/mu=" << e;
                    worst.update(dev, w.str());
                }
            }
        }
    }
    // seeded spot checks off the fixed grid
    std::mt19937 rng(opts.seed);
    std::uniform_real_distribution<double> ug(-0.49, 0.49), ue(1.001, 60.0);
    std::uniform_int_distribution<int> uj(0, 200);
    for (int i = 0; i < 64; ++i) {
        double g = ug(rng), e = ue(rng);
        int two_j = 2 * uj(rng) + 1;
        if (i % 2) two_j = -two_j;
        Kinematics kin = Kinematics::from_gamma(g, e);
        auto el = s_matrix_exact(AngularMomentum(two_j), kin);
        std::ostringstream w;
        w << "random two_j=" << two_j << " gamma=" << g << " E/mu=" << e;
        worst.update(std::fabs(std::abs(el.value) - 1.0), w.str());
    }
    return make_result("1", "unitarity of the exact channel factors", worst, 1e-12,
                       timer.seconds());
}

// ---------------------------------------------------------------- criterion 2
CheckResult check_oracle(const VerifyOptions& opts) {
    Stopwatch timer;
    struct Case {
        int two_j;
        double gamma, ratio;
    };
    std::vector<Case> cases;
    for (int t : {1, -1, 3, -3, 5, -5})
        for (double g : {0.01, 0.1, 0.3})
            for (double e : {1.25, 5.0}) cases.push_back({t, g, e});

    std::vector<double> grid(512);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = 100.0 + 100.0 * double(i) / double(grid.size() - 1);

    std::vector<double> devs(cases.size());
    std::vector<double> residuals(cases.size());
    detail::parallel_for(cases.size(), opts.threads, [&](std::size_t i) {
        const Case& c = cases[i];
        Kinematics kin = Kinematics::from_gamma(c.gamma, c.ratio);
        AngularMomentum j(c.two_j);
        double eta_ref = s_matrix_exact(j, kin).eta_principal;
        RadialSolution sol = ode_integrate(j, kin, {1e-4, 200.0}, grid);
        PhaseExtraction ext = extract_phase(sol);
        devs[i] = std::fabs(wrap_mod_pi(ext.eta - eta_ref));
        residuals[i] = std::max(ext.residual, ext.residual_g);
    });

    Worst worst;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        std::ostringstream w;
        w << "two_j=" << cases[i].two_j << " gamma=" << cases[i].gamma
          << " E/mu=" << cases[i].ratio << " (fit residual " << residuals[i] << ")";
        worst.update(devs[i], w.str());
        if (residuals[i] > 1e-4) worst.update(1.0, w.str() + " [residual breach]");
    }
    double elapsed = timer.seconds();
    CheckResult r = make_result("2", "ODE oracle vs exact phase shifts (mod pi)", worst, 1e-6,
                                elapsed);
    if (elapsed > 60.0) {
        r.passed = false;
        r.detail += " [runtime " + std::to_string(elapsed) + " s > 60 s]";
    }
    return r;
}

// ---------------------------------------------------------------- criterion 3
CheckResult check_closed_consistency(const VerifyOptions&) {
    Stopwatch timer;
    AngleGrid grid = AngleGrid::uniform(256, PI / 32.0, 63.0 * PI / 32.0, PI / 32.0);
    std::vector<Kinematics> kins = {
        derive_kinematics(ParticleSpec{}, 1.25),
        Kinematics::from_gamma(0.3, 5.0),
        Kinematics::from_gamma(-0.15, 1.01),
    };
    Worst worst;
    for (const Kinematics& kin : kins) {
        for (double theta : grid.thetas) {
            double closed = sigma_closed_at(theta, kin);
            double fsq = std::norm(f_closed_at(theta, kin));
            std::ostringstream w;
            w << "theta=" << theta << " gamma=" << kin.gamma_coupling;
            worst.update(std::fabs(fsq / closed - 1.0), w.str() + " [|f|^2 vs closed]");
            double classical =
                sigma_classical_form(theta, kin.v_over_c, kin.gamma_coupling, 1.0);
            worst.update(std::fabs(classical / closed - 1.0), w.str() + " [classical form]");
        }
    }
    return make_result("3", "closed-form self-consistency (|f|^2, classical variables)",
                       worst, 1e-12, timer.seconds());
}

// ---------------------------------------------------------------- criterion 4
//
// Three faces of "the regularized series converges to the closed form":
//  (a) with the small-coupling channel factors the closed form is the exact
//      sum, so the regularized series must land on it within 1e-3 relative
//      and within 3x the extrapolation diagnostic;
//  (b) with the exact factors the residue is the genuine next-order physics:
//      |f_series - f_closed| <= max(C gamma^2, 3 diag), C frozen above
//      (the relative gap at generic angles is linear in gamma -- an odd-in-
//      coupling correction -- and only at theta = pi is it O(gamma^2));
//  (c) the gamma^2 character itself: log-log slope 2 +- 0.15 of the absolute
//      difference at the generic angles and of the relative difference at
//      theta = pi, over gamma in [3e-3, 3e-2].
CheckResult check_series_vs_closed(const VerifyOptions& opts) {
    Stopwatch timer;
    std::vector<double> angles = {PI / 6.0, PI / 2.0, PI, 3.0 * PI / 2.0};
    AngleGrid grid(angles, PI / 64.0);

    SummationOptions sopts;
    sopts.max_two_j = 24001;
    sopts.target_tolerance = 1e-10;
    sopts.threads = opts.threads;

    Kinematics kin = derive_kinematics(ParticleSpec{}, 1.25);
    double gamma2 = kin.gamma_coupling * kin.gamma_coupling;
    Worst worst;

    // (a) exactly-resummable route
    AmplitudeGrid fss = f_series_small_gamma(grid, kin, sopts);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Complex fc = f_closed_at(grid.thetas[i], kin);
        double diff = std::abs(fss.values[i] - fc);
        std::ostringstream w;
        w << "theta=" << grid.thetas[i];
        worst.update(diff / std::abs(fc) / 1e-3, w.str() + " [small-gamma route, rel vs 1e-3]");
        worst.update(diff / (3.0 * fss.diagnostics[i]), w.str() + " [small-gamma route vs 3 diag]");
    }

    // (b) exact route against the frozen gamma^2 envelope
    AmplitudeGrid fs = f_series_exact(grid, kin, sopts);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Complex fc = f_closed_at(grid.thetas[i], kin);
        double diff = std::abs(fs.values[i] - fc);
        std::ostringstream w;
        w << "theta=" << grid.thetas[i] << " rel=" << diff / std::abs(fc);
        double bound = std::max(kSeriesClosedC * gamma2, 3.0 * fs.diagnostics[i]);
        worst.update(diff / bound, w.str() + " [max(C gamma^2, 3 diag) bound]");
    }
    // at theta = pi the closed form is accurate to O(gamma^2) relative
    worst.update(std::abs(fs.values[2] - f_closed_at(PI, kin)) / std::abs(f_closed_at(PI, kin)) /
                     1e-3,
                 "theta=pi [rel diff vs 1e-3]");

    // (c) scaling study
    std::vector<double> gammas = {3e-3, 5.2e-3, 9.5e-3, 1.7e-2, 3e-2};
    std::vector<std::vector<double>> ln_abs(angles.size()), ln_rel(angles.size());
    std::vector<double> lng;
    for (double g : gammas) {
        Kinematics kg = Kinematics::from_gamma(g, 1.25);
        AmplitudeGrid fsg = f_series_exact(grid, kg, sopts);
        lng.push_back(std::log(g));
        for (std::size_t i = 0; i < angles.size(); ++i) {
            Complex fc = f_closed_at(angles[i], kg);
            double diff = std::abs(fsg.values[i] - fc);
            ln_abs[i].push_back(std::log(diff));
            ln_rel[i].push_back(std::log(diff / std::abs(fc)));
        }
    }
    for (std::size_t i = 0; i < angles.size(); ++i) {
        bool at_pi = std::fabs(angles[i] - PI) < 1e-12;
        double slope = fit_slope(lng, at_pi ? ln_rel[i] : ln_abs[i]);
        std::ostringstream w;
        w << "slope=" << slope << " at theta=" << angles[i]
          << (at_pi ? " (relative)" : " (absolute)");
        worst.update(std::fabs(slope - 2.0) / 0.15, w.str());
    }
    return make_result("4", "partial-wave series converges to the closed form", worst, 1.0,
                       timer.seconds());
}

// ---------------------------------------------------------------- criterion 5
CheckResult check_f1_series(const VerifyOptions&) {
    Stopwatch timer;
    AngleGrid grid = AngleGrid::uniform(33, PI / 16.0, 31.0 * PI / 16.0, PI / 16.0);
    Worst worst;
    for (double beta : {0.05, 0.2}) {
        for (double v : {0.3, 0.6, 0.9}) {
            Kinematics kin = Kinematics::from_beta_speed(beta, v);
            AmplitudeGrid series = f1_series(grid, kin);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                Complex closed = f1_closed_at(grid.thetas[i], kin);
                double rel = std::abs(series.values[i] - closed) / std::abs(closed);
                std::ostringstream w;
                w << "theta=" << grid.thetas[i] << " beta=" << beta << " v=" << v;
                worst.update(rel, w.str());
            }
        }
    }
    return make_result("5", "relativistic correction: series vs closed form", worst, 1e-8,
                       timer.seconds());
}

// ---------------------------------------------------------------- criterion 6
CheckResult check_nonrel_limit(const VerifyOptions&) {
    Stopwatch timer;
    Worst worst;
    Kinematics kin = Kinematics::from_beta_speed(0.2, 1e-3);
    AngleGrid grid = AngleGrid::uniform(32);
    double norm = kin.beta * std::tanh(kin.beta * PI);
    for (double theta : grid.thetas) {
        double st = std::sin(0.5 * theta);
        double ratio = sigma_closed_at(theta, kin) * 2.0 * kin.k * st * st / norm;
        std::ostringstream w;
        w << "theta=" << theta;
        worst.update(std::fabs(ratio - 1.0) / 1e-5, w.str() + " [sigma nonrel reduction]");
    }
    // f1 vanishes like (1 - beta'/beta): slope 1 in v^2 of |f1/f0|, which
    // strips the trivial k(v)-dependence of the overall amplitude scale
    std::vector<double> lnv2, lnf1;
    for (double v : {1e-3, 3e-3, 1e-2, 3e-2, 1e-1}) {
        Kinematics kv = Kinematics::from_beta_speed(0.2, v);
        lnv2.push_back(std::log(v * v));
        lnf1.push_back(std::log(std::abs(f1_closed_at(PI / 2.0, kv) / f0_closed_at(PI / 2.0, kv))));
    }
    double slope = fit_slope(lnv2, lnf1);
    std::ostringstream w;
    w << "slope=" << slope;
    worst.update(std::fabs(slope - 1.0) / 0.05, w.str() + " [f1 ~ v^2]");
    return make_result("6", "nonrelativistic limit", worst, 1.0, timer.seconds());
}

// ---------------------------------------------------------------- criterion 7
CheckResult check_symmetries(const VerifyOptions& opts) {
    Stopwatch timer;
    Worst worst;
    Kinematics kin = derive_kinematics(ParticleSpec{}, 1.25);

    // mirror symmetry, bitwise on dyadically snapped angles
    std::mt19937 rng(opts.seed + 1);
    std::uniform_real_distribution<double> uth(PI / 32.0, PI);
    for (int i = 0; i < 64; ++i) {
        double theta = snap_dyadic(uth(rng));
        double mirror = TWO_PI - theta;  // exact: theta is a multiple of 2^-50
        double a = sigma_closed_at(theta, kin);
        double b = sigma_closed_at(mirror, kin);
        std::ostringstream w;
        w << "theta=" << theta;
        worst.update(a == b ? 0.0 : 1.0, w.str() + " [bitwise mirror]");
        // and the generic (unsnapped) symmetry at rounding level
        double t2 = uth(rng);
        double rel = std::fabs(sigma_closed_at(t2, kin) / sigma_closed_at(TWO_PI - t2, kin) - 1.0);
        worst.update(rel / 2e-14, w.str() + " [mirror at rounding level]");
    }

    // sigma even under kappa -> -kappa, bitwise
    for (double kappa : {0.007, 0.1, 0.3}) {
        for (double theta : {PI / 8.0, PI / 2.0, PI, 7.0 * PI / 4.0}) {
            double a = sigma_classical_form(theta, 0.6, kappa, 1.0);
            double b = sigma_classical_form(theta, 0.6, -kappa, 1.0);
            std::ostringstream w;
            w << "kappa=" << kappa << " theta=" << theta;
            worst.update(a == b ? 0.0 : 1.0, w.str() + " [kappa evenness]");
        }
    }

    // Born scaling: 0 < 1 - sigma/sigma_born <= (beta pi)^2/3, ratio -> 1/3
    for (double beta : {1e-3, 3e-3, 0.01, 0.03}) {
        Kinematics kb = Kinematics::from_beta_speed(beta, 0.6);
        double theta = PI / 2.0;
        double st2 = std::sin(0.25 * PI) * std::sin(0.25 * PI);
        double born = PI * beta * beta / (2.0 * kb.k * st2) *
                      (1.0 - kb.v_over_c * kb.v_over_c * st2);
        double dev = 1.0 - sigma_closed_at(theta, kb) / born;
        double x2 = beta * PI * beta * PI;
        std::ostringstream w;
        w << "beta=" << beta << " dev/(beta pi)^2=" << dev / x2;
        worst.update(dev / (x2 / 3.0), w.str() + " [Born bound]");
        if (beta <= 0.01) {
            bool shape_ok = dev / x2 >= 0.28 && dev / x2 <= 0.3334 && dev > 0.0;
            worst.update(shape_ok ? 0.0 : 2.0, w.str() + " [Born shape]");
        }
    }
    return make_result("7", "symmetry and limit battery", worst, 1.0, timer.seconds());
}

// ---------------------------------------------------------------- criterion 8
CheckResult check_specfun_kernel(const VerifyOptions& opts) {
    Stopwatch timer;
    Worst worst;

    // reflection-identity check |Gamma(1/2 + i beta)|^2 cosh(pi beta)/pi = 1
    {
        std::vector<double> betas;
        for (int i = 0; i <= 40; ++i) betas.push_back(0.01 + (5.0 - 0.01) * i / 40.0);
        std::mt19937 rng(opts.seed + 2);
        std::uniform_real_distribution<double> ub(1e-3, 5.0);
        for (int i = 0; i < 16; ++i) betas.push_back(ub(rng));
        for (double b : betas) {
            double mod2 = std::exp(2.0 * specfun::log_gamma(Complex(0.5, b)).real());
            double dev = std::fabs(mod2 * std::cosh(PI * b) / PI - 1.0);
            std::ostringstream w;
            w << "beta=" << b;
            worst.update(dev / 1e-13, w.str() + " [Gamma modulus identity]");
        }
    }

    // Kummer recurrence residual over the contract domain
    {
        const double svals[] = {0.0995, 0.5, 1.5, 2.5};
        const double bvals[] = {0.0, 0.2, 0.49};
        const double rhos[] = {0.25, 2.0, 8.0, 15.0, 25.0, 40.0, 120.0, 1000.0, 5000.0};
        for (double s : svals)
            for (double bet : bvals)
                for (double rho : rhos) {
                    Complex a(s, -bet);
                    double b = 2.0 * s + 1.0;
                    double res = specfun::kummer_recurrence_residual(a, b, Complex(0, -2.0 * rho));
                    std::ostringstream w;
                    w << "s=" << s << " beta=" << bet << " rho=" << rho;
                    worst.update(res / 1e-8, w.str() + " [Kummer recurrence]");
                }
    }

    // the exact Kummer solution satisfies the radial system
    {
        std::vector<double> rhos;
        for (int i = 0; i <= 24; ++i)
            rhos.push_back(std::pow(10.0, -3.0 + 5.5 * i / 24.0));  // 1e-3 .. ~300
        for (int two_j : {1, -1, 3, -3, 5, -5}) {
            for (auto [g, e] : {std::pair{0.01, 1.25}, {0.3, 1.25}, {0.3, 5.0}}) {
                Kinematics kin = Kinematics::from_gamma(g, e);
                for (double rho : rhos) {
                    double res = kummer_ode_residual(AngularMomentum(two_j), kin, rho);
                    std::ostringstream w;
                    w << "two_j=" << two_j << " gamma=" << g << " rho=" << rho;
                    worst.update(res / 1e-8, w.str() + " [radial system residual]");
                }
            }
        }
    }
    return make_result("8", "special-function kernel identities", worst, 1.0, timer.seconds());
}

}  // namespace

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::unitarity: return "unitarity";
        case Suite::oracle: return "oracle";
        case Suite::closed_vs_series: return "closed_vs_series";
        case Suite::limits: return "limits";
        case Suite::all: return "all";
    }
    return "?";
}

Suite parse_suite(const std::string& name) {
    for (Suite s : {Suite::unitarity, Suite::oracle, Suite::closed_vs_series, Suite::limits,
                    Suite::all})
        if (name == suite_name(s)) return s;
    throw DomainError("unknown verify suite: " + name);
}

namespace {

// A check that throws (accuracy contract breach during verification) is
// reported as a failure rather than aborting the remaining checks.
template <typename Fn>
void run_checked(std::vector<CheckResult>& out, const char* id, const char* name, Fn&& fn) {
    try {
        out.push_back(fn());
    } catch (const std::exception& e) {
        CheckResult r;
        r.id = id;
        r.name = name;
        r.passed = false;
        r.margin = std::numeric_limits<double>::infinity();
        r.detail = std::string("exception: ") + e.what();
        out.push_back(std::move(r));
    }
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
    if (want(Suite::unitarity))
        run_checked(out, "1", "unitarity", [&] { return check_unitarity(opts); });
    if (want(Suite::oracle))
        run_checked(out, "2", "ODE oracle", [&] { return check_oracle(opts); });
    if (want(Suite::closed_vs_series)) {
        run_checked(out, "3", "closed-form self-consistency",
                    [&] { return check_closed_consistency(opts); });
        run_checked(out, "4", "series vs closed form",
                    [&] { return check_series_vs_closed(opts); });
        run_checked(out, "5", "relativistic correction series",
                    [&] { return check_f1_series(opts); });
    }
    if (want(Suite::limits)) {
        run_checked(out, "6", "nonrelativistic limit",
                    [&] { return check_nonrel_limit(opts); });
        run_checked(out, "7", "symmetry battery", [&] { return check_symmetries(opts); });
        run_checked(out, "8", "special-function kernel",
                    [&] { return check_specfun_kernel(opts); });
    }
    return out;
}

}  // namespace coulomb2d::verify
