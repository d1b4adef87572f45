#pragma once

// Scattering amplitude f(theta) and differential cross section sigma(theta):
// Abel-regularized partial-wave series, small-coupling closed forms, and the
// convergent hypergeometric series for the relativistic correction.

#include <complex>
#include <vector>

#include "coulomb2d/kinematics.hpp"
#include "coulomb2d/phase_shift.hpp"

namespace coulomb2d {

/// Strictly increasing angles in (0, 2 pi), kept at least forward_cutoff away
/// from the forward direction {0, 2 pi} where the amplitude is singular.
struct AngleGrid {
    std::vector<double> thetas;
    double forward_cutoff = default_cutoff();

    static double default_cutoff() { return 3.14159265358979323846 / 64.0; }

    AngleGrid() = default;
    AngleGrid(std::vector<double> ts, double cutoff = default_cutoff());

    /// count angles equally spaced over [lo, hi] (defaults to the full
    /// admissible range for the given cutoff).
    static AngleGrid uniform(int count, double lo = -1.0, double hi = -1.0,
                             double cutoff = default_cutoff());

    std::size_t size() const { return thetas.size(); }
};

enum class AmplitudeMethod { series_exact, closed_form, series_f1_plus_closed_f0 };

const char* to_string(AmplitudeMethod m);

/// Abel regularization of the partial-wave sum: terms damped by e^{-eps |m|}
/// on a geometric eps-schedule, Richardson-extrapolated to eps -> 0.
struct SummationOptions {
    double eps0 = 0.1;             // first damping level
    int levels = 6;                // eps0, eps0/2, ..., eps0/2^(levels-1)
    int richardson_order = 3;
    int max_two_j = 2001;          // channel cap |two_j| <= max_two_j
    double target_tolerance = 1e-8;  // absolute, on the regularized sum
    int threads = 1;
};

struct AmplitudeGrid {
    AngleGrid grid;
    std::vector<std::complex<double>> values;  // units k^{-1/2} (natural)
    AmplitudeMethod method = AmplitudeMethod::closed_form;
    /// Per-angle extrapolation error estimate; includes the damped-tail bound
    /// whenever the channel cap truncated an eps level.
    std::vector<double> diagnostics;
};

/// f(theta) = -i/sqrt(2 pi k) sum_j exp(2 i eta_j) e^{i m theta}, summed in
/// deterministic order (ascending |two_j|, j > 0 first) with Abel damping and
/// Richardson extrapolation.  The dropped forward delta(theta) term does not
/// contribute on the grid (theta != 0).  Per-angle non-convergence shows up
/// in diagnostics; it is not fatal.
AmplitudeGrid f_series_exact(const AngleGrid& grid, const Kinematics& kin,
                             const SummationOptions& opts = {});

/// Split evaluation: closed small-coupling part plus the Abel-summed residual
/// sum_j (S_exact - S_smallgamma) e^{i m theta}.  The residual decays in |j|,
/// which conditions the regularization better; kept separate from the pure
/// series so the closed forms it reuses stay independently validated.
AmplitudeGrid f_series_split(const AngleGrid& grid, const Kinematics& kin,
                             const SummationOptions& opts = {});

/// The same regularized series with the small-coupling channel factors.  This
/// sum has the closed form as its exact value, so it isolates the summation
/// machinery from the exact-vs-approximate channel physics; used by the
/// verification suites.
AmplitudeGrid f_series_small_gamma(const AngleGrid& grid, const Kinematics& kin,
                                   const SummationOptions& opts = {});

/// f0 = -i Gamma(1/2 - i beta)/Gamma(i beta)
///        exp(i beta ln sin^2(theta/2)) / (sqrt(2k) sin(theta/2)),
/// evaluated through 1/Gamma(i beta) so the beta -> 0 limit is smooth.
AmplitudeGrid f0_closed(const AngleGrid& grid, const Kinematics& kin);

/// f1 = -Gamma(1/2 - i beta)/Gamma(i beta) (1 - beta'/beta)
///        e^{-i theta/2} exp(i beta ln sin^2(theta/2)) / sqrt(2k);
/// 1 - beta'/beta = (E - 1)/E independently of the coupling sign.
AmplitudeGrid f1_closed(const AngleGrid& grid, const Kinematics& kin);

struct F1SeriesOptions {
    long max_terms = 100000;   // continued-fraction depth cap
    double tolerance = 1e-12;  // per-level settling threshold
};

/// Relativistic correction from its convergent hypergeometric form
///   f1 = -(beta - beta')/sqrt(2 pi k) Gamma(1/2-i beta)/Gamma(3/2+i beta)
///        [F(1,1/2-i beta;3/2+i beta;e^{i theta})
///         - e^{-i theta} F(1,1/2-i beta;3/2+i beta;e^{-i theta})].
AmplitudeGrid f1_series(const AngleGrid& grid, const Kinematics& kin,
                        const F1SeriesOptions& opts = {});

/// f = f0 + f1 in one expression (identical to the sum by algebra).
AmplitudeGrid f_closed(const AngleGrid& grid, const Kinematics& kin);

std::complex<double> f0_closed_at(double theta, const Kinematics& kin);
std::complex<double> f1_closed_at(double theta, const Kinematics& kin);
std::complex<double> f_closed_at(double theta, const Kinematics& kin);

/// Closed differential cross section (2D, units of length)
///   sigma = beta tanh(beta pi) / (2 k sin^2(theta/2)) (1 - v^2 sin^2(theta/2)),
/// folded about theta = pi before any trig so sigma(theta) == sigma(2pi-theta)
/// bitwise whenever 2pi - theta is exact.
double sigma_closed_at(double theta, const Kinematics& kin);

/// sigma per grid angle.  Both the closed formula and |f_closed|^2 are
/// evaluated and must agree to 1e-12 relative (NumericError otherwise); the
/// closed formula is returned.
std::vector<double> sigma(const AngleGrid& grid, const Kinematics& kin);

/// The same cross section in classical variables (natural units):
///   kappa tanh(pi kappa / v_c) / (2 mu v_c^2 sin^2(theta/2))
///     (1 - v_c^2 sin^2(theta/2)) sqrt(1 - v_c^2),
/// even in kappa by construction.
double sigma_classical_form(double theta, double v_c, double kappa, double mu = 1.0);

}  // namespace coulomb2d
