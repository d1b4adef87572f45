// Partial-wave amplitude assembly.  The off-forward series
//   f(theta) = -i/sqrt(2 pi k) sum_m S_{2m+1} e^{i m theta}
// is a distributional (Abel) sum: each damping level e^{-eps |m|} is summed
// to its damped-tail bound, the level values are Richardson-extrapolated to
// eps -> 0, and the last extrapolant difference is reported per angle.

#include "coulomb2d/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "coulomb2d/detail/parallel.hpp"
#include "coulomb2d/specfun.hpp"

namespace coulomb2d {

namespace {

using Complex = std::complex<double>;
constexpr Complex I{0.0, 1.0};
constexpr double PI = 3.14159265358979323846264338327950288;
constexpr double TWO_PI = 6.28318530717958647692528676655900577;

double fold_about_pi(double theta) { return theta > PI ? TWO_PI - theta : theta; }

void validate_theta(double theta, double cutoff) {
    if (!(theta >= cutoff && theta <= TWO_PI - cutoff))
        throw DomainError("theta outside the admissible window [cutoff, 2pi - cutoff]");
}

}  // namespace

AngleGrid::AngleGrid(std::vector<double> ts, double cutoff)
    : thetas(std::move(ts)), forward_cutoff(cutoff) {
    if (!(cutoff > 0.0)) throw DomainError("AngleGrid: forward_cutoff must be positive");
    if (thetas.empty()) throw DomainError("AngleGrid: empty grid");
    double prev = 0.0;
    for (double t : thetas) {
        validate_theta(t, cutoff);
        if (t <= prev) throw DomainError("AngleGrid: angles must be strictly increasing");
        prev = t;
    }
}

AngleGrid AngleGrid::uniform(int count, double lo, double hi, double cutoff) {
    if (count < 1) throw DomainError("AngleGrid: count must be >= 1");
    if (lo < 0.0) lo = cutoff;
    if (hi < 0.0) hi = TWO_PI - cutoff;
    std::vector<double> ts(static_cast<std::size_t>(count));
    if (count == 1) {
        ts[0] = lo;
    } else {
        double step = (hi - lo) / (count - 1);
        for (int i = 0; i < count; ++i) ts[static_cast<std::size_t>(i)] = lo + step * i;
        ts.back() = hi;
    }
    return AngleGrid(std::move(ts), cutoff);
}

const char* to_string(AmplitudeMethod m) {
    switch (m) {
        case AmplitudeMethod::series_exact: return "series_exact";
        case AmplitudeMethod::closed_form: return "closed_form";
        case AmplitudeMethod::series_f1_plus_closed_f0: return "series_f1_plus_closed_f0";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// closed forms
// ---------------------------------------------------------------------------

namespace {

// Gamma(1/2 - i beta)/Gamma(i beta), evaluated through the entire 1/Gamma so
// the beta -> 0 limit comes out as an exact zero.
Complex closed_prefactor(double beta) {
    return std::exp(specfun::log_gamma(Complex(0.5, -beta))) *
           specfun::recip_gamma(Complex(0.0, beta));
}

Complex log_sin_phase(double theta, double beta) {
    // exp(i beta ln sin^2(theta/2))
    double ls2 = 2.0 * std::log(std::sin(0.5 * theta));
    return std::polar(1.0, beta * ls2);
}

}  // namespace

Complex f0_closed_at(double theta, const Kinematics& kin) {
    double st = std::sin(0.5 * theta);
    return -I * closed_prefactor(kin.beta) * log_sin_phase(theta, kin.beta) /
           (std::sqrt(2.0 * kin.k) * st);
}

Complex f1_closed_at(double theta, const Kinematics& kin) {
    double one_minus_ratio = kin.k2 / kin.energy_ratio;  // 1 - beta'/beta = (E-1)/E
    return -closed_prefactor(kin.beta) * one_minus_ratio *
           std::polar(1.0, -0.5 * theta) * log_sin_phase(theta, kin.beta) /
           std::sqrt(2.0 * kin.k);
}

Complex f_closed_at(double theta, const Kinematics& kin) {
    double one_minus_ratio = kin.k2 / kin.energy_ratio;
    double st = std::sin(0.5 * theta);
    Complex bracket = 1.0 - I * std::polar(1.0, -0.5 * theta) * st * one_minus_ratio;
    return f0_closed_at(theta, kin) * bracket;
}

namespace {

AmplitudeGrid map_closed(const AngleGrid& grid, const Kinematics& kin,
                         Complex (*fn)(double, const Kinematics&)) {
    AmplitudeGrid out;
    out.grid = grid;
    out.method = AmplitudeMethod::closed_form;
    out.values.resize(grid.size());
    out.diagnostics.assign(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = fn(grid.thetas[i], kin);
    return out;
}

}  // namespace

AmplitudeGrid f0_closed(const AngleGrid& grid, const Kinematics& kin) {
    return map_closed(grid, kin, &f0_closed_at);
}

AmplitudeGrid f1_closed(const AngleGrid& grid, const Kinematics& kin) {
    return map_closed(grid, kin, &f1_closed_at);
}

AmplitudeGrid f_closed(const AngleGrid& grid, const Kinematics& kin) {
    return map_closed(grid, kin, &f_closed_at);
}

AmplitudeGrid f1_series(const AngleGrid& grid, const Kinematics& kin,
                        const F1SeriesOptions& opts) {
    AmplitudeGrid out;
    out.grid = grid;
    out.method = AmplitudeMethod::series_f1_plus_closed_f0;
    out.values.resize(grid.size());
    out.diagnostics.assign(grid.size(), 0.0);
    double diff = kin.beta * kin.k2 / kin.energy_ratio;  // beta - beta'
    if (diff == 0.0) {
        std::fill(out.values.begin(), out.values.end(), Complex(0.0));
        return out;
    }
    Complex a2(0.5, -kin.beta);
    Complex b1(1.5, kin.beta);
    Complex pref = -diff / std::sqrt(TWO_PI * kin.k) * specfun::gamma_ratio(a2, b1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double theta = grid.thetas[i];
        Complex w = std::polar(1.0, theta);
        Complex plus = specfun::gauss_f_unit(a2, b1, w, opts.max_terms, opts.tolerance);
        Complex minus = specfun::gauss_f_unit(a2, b1, std::conj(w), opts.max_terms,
                                              opts.tolerance);
        out.values[i] = pref * (plus - std::polar(1.0, -theta) * minus);
    }
    return out;
}

// ---------------------------------------------------------------------------
// cross sections
// ---------------------------------------------------------------------------

double sigma_closed_at(double theta, const Kinematics& kin) {
    double th = fold_about_pi(theta);
    double st = std::sin(0.5 * th);
    double s2 = st * st;
    double ab = std::fabs(kin.beta);
    double v2 = kin.v_over_c * kin.v_over_c;
    return ab * std::tanh(ab * PI) / (2.0 * kin.k * s2) * (1.0 - v2 * s2);
}

std::vector<double> sigma(const AngleGrid& grid, const Kinematics& kin) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double theta = grid.thetas[i];
        double closed = sigma_closed_at(theta, kin);
        Complex f = f_closed_at(theta, kin);
        double fsq = std::norm(f);
        if (closed == 0.0) {
            if (fsq != 0.0) throw NumericError("sigma: |f|^2 nonzero at beta = 0");
        } else if (std::fabs(fsq / closed - 1.0) > 1e-12) {
            std::ostringstream msg;
            msg << "sigma: |f_closed|^2 disagrees with the closed formula at theta = "
                << theta << " (rel " << std::fabs(fsq / closed - 1.0) << ")";
            throw NumericError(msg.str());
        }
        out[i] = closed;
    }
    return out;
}

double sigma_classical_form(double theta, double v_c, double kappa, double mu) {
    if (!(v_c > 0.0 && v_c < 1.0)) throw DomainError("sigma_classical_form: v_c/c in (0,1)");
    if (!(mu > 0.0)) throw DomainError("sigma_classical_form: mu must be positive");
    if (!(theta > 0.0 && theta < TWO_PI)) throw DomainError("sigma_classical_form: theta range");
    double th = fold_about_pi(theta);
    double st = std::sin(0.5 * th);
    double s2 = st * st;
    double ak = std::fabs(kappa);
    double v2 = v_c * v_c;
    return ak * std::tanh(PI * ak / v_c) / (2.0 * mu * v2 * s2) * (1.0 - v2 * s2) *
           std::sqrt((1.0 - v_c) * (1.0 + v_c));
}

// ---------------------------------------------------------------------------
// Abel-regularized series
// ---------------------------------------------------------------------------

namespace {

struct LevelPlan {
    double eps;
    long pairs;        // summed pair count; n runs over (m = +n, m = -(n+1))
    bool fits;         // the damped tail meets the budget within the cap
    double tail_bound;  // bound on what the truncation left out
};

// Damped-tail bound (summation by parts): |sum_{|m|>M}| <= 2 e^{-eps M}/d with
// d = |1 - e^{i theta - eps}|.
LevelPlan plan_level(double theta, double eps, double tail_budget, long cap_pairs) {
    double d = std::abs(1.0 - std::polar(std::exp(-eps), theta));
    double need = std::log(20.0 / (d * tail_budget)) / eps;
    LevelPlan plan;
    plan.eps = eps;
    long pairs_needed = static_cast<long>(std::ceil(std::max(need, 8.0)));
    plan.pairs = std::min(pairs_needed, cap_pairs);
    plan.tail_bound = 2.0 * std::exp(-eps * double(plan.pairs)) / d;
    plan.fits = pairs_needed <= cap_pairs || plan.tail_bound <= tail_budget;
    return plan;
}

// One damped level, deterministic channel order: |two_j| ascending, j > 0
// before j < 0, i.e. m = 0, -1, +1, -2, +2, ...
Complex abel_level_sum(const SMatrixTable& table, double theta, double eps, long pairs) {
    Complex acc = 0.0;
    for (long n = 0; n < pairs; ++n) {
        double mp = double(n);
        acc += table.for_m(int(n)) * std::polar(std::exp(-eps * mp), mp * theta);
        double mm = double(n + 1);
        acc += table.for_m(int(-n - 1)) * std::polar(std::exp(-eps * mm), -mm * theta);
    }
    return acc;
}

struct Extrapolated {
    Complex value;
    double diagnostic;
};

// Richardson/Neville table on the halving eps-schedule.
Extrapolated richardson(const std::vector<Complex>& levels, int order, double dropped_bound) {
    std::size_t k = levels.size();
    std::vector<std::vector<Complex>> t(k);
    for (std::size_t i = 0; i < k; ++i) {
        t[i].resize(i + 1);
        t[i][0] = levels[i];
        for (std::size_t col = 1; col <= i && col <= std::size_t(order); ++col) {
            double denom = std::pow(2.0, double(col)) - 1.0;
            t[i][col] = t[i][col - 1] + (t[i][col - 1] - t[i - 1][col - 1]) / denom;
        }
    }
    std::size_t last_col = std::min<std::size_t>(order, k - 1);
    Complex value = t[k - 1][last_col];
    double diag;
    if (k >= 2) {
        std::size_t prev_col = std::min<std::size_t>(last_col, k - 2);
        diag = std::abs(value - t[k - 2][prev_col]);
    } else {
        diag = std::abs(value);
    }
    return {value, std::max(diag, dropped_bound)};
}

enum class SeriesMode { exact, small_gamma, split };

AmplitudeGrid abel_series(const AngleGrid& grid, const Kinematics& kin,
                          const SummationOptions& opts, SeriesMode mode) {
    if (opts.levels < 1 || opts.eps0 <= 0.0) throw DomainError("SummationOptions: bad schedule");
    if (opts.max_two_j < 1) throw DomainError("SummationOptions: bad max_two_j");
    long cap_pairs = (opts.max_two_j + 1) / 2;
    double tail_budget = 0.1 * opts.target_tolerance;

    // Per-(angle, level) plans, one table sized for the largest kept level.
    // F(eps) is analytic in |eps| < theta (nearest singularity of the
    // generating function sits at eps = i theta, folded), so the schedule is
    // started per angle at min(eps0, theta/4) to keep every Richardson node
    // well inside the disk; levels whose damped tail cannot meet the budget
    // within the channel cap are kept only while fewer than two levels exist,
    // with their truncation bound folded into the diagnostic.
    std::vector<std::vector<LevelPlan>> plans(grid.size());
    long pairs_max = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double eps = std::min(opts.eps0, 0.25 * fold_about_pi(grid.thetas[i]));
        for (int l = 0; l < opts.levels; ++l, eps *= 0.5) {
            LevelPlan plan = plan_level(grid.thetas[i], eps, tail_budget, cap_pairs);
            if (!plan.fits && plans[i].size() >= 2) break;
            pairs_max = std::max(pairs_max, plan.pairs);
            plans[i].push_back(plan);
        }
    }

    int two_j_needed = int(2 * pairs_max - 1);
    SMatrixMethod base = (mode == SeriesMode::small_gamma) ? SMatrixMethod::small_gamma
                                                           : SMatrixMethod::exact;
    SMatrixTable table = build_s_matrix_table(two_j_needed, kin, base, opts.threads);
    if (mode == SeriesMode::split) {
        SMatrixTable small = build_s_matrix_table(two_j_needed, kin,
                                                  SMatrixMethod::small_gamma, opts.threads);
        for (std::size_t i = 0; i < table.values.size(); ++i)
            table.values[i] -= small.values[i];  // residual channel terms
    }

    AmplitudeGrid out;
    out.grid = grid;
    out.method = (mode == SeriesMode::split) ? AmplitudeMethod::series_f1_plus_closed_f0
                                             : AmplitudeMethod::series_exact;
    out.values.resize(grid.size());
    out.diagnostics.resize(grid.size());

    double norm = 1.0 / std::sqrt(TWO_PI * kin.k);
    detail::parallel_for(grid.size(), opts.threads, [&](std::size_t i) {
        double theta = grid.thetas[i];
        std::vector<Complex> levels;
        double unmet_bound = 0.0;
        for (const LevelPlan& plan : plans[i]) {
            levels.push_back(abel_level_sum(table, theta, plan.eps, plan.pairs));
            if (!plan.fits) unmet_bound = std::max(unmet_bound, plan.tail_bound);
        }
        // factor 3 covers the worst Richardson weight applied to a truncated level
        Extrapolated ex = richardson(levels, opts.richardson_order, 3.0 * unmet_bound);
        Complex value = -I * norm * ex.value;
        if (mode == SeriesMode::split) value += f_closed_at(theta, kin);
        out.values[i] = value;
        out.diagnostics[i] = norm * ex.diagnostic;
    });
    return out;
}

}  // namespace

AmplitudeGrid f_series_exact(const AngleGrid& grid, const Kinematics& kin,
                             const SummationOptions& opts) {
    return abel_series(grid, kin, opts, SeriesMode::exact);
}

AmplitudeGrid f_series_split(const AngleGrid& grid, const Kinematics& kin,
                             const SummationOptions& opts) {
    return abel_series(grid, kin, opts, SeriesMode::split);
}

AmplitudeGrid f_series_small_gamma(const AngleGrid& grid, const Kinematics& kin,
                                   const SummationOptions& opts) {
    return abel_series(grid, kin, opts, SeriesMode::small_gamma);
}

}  // namespace coulomb2d
