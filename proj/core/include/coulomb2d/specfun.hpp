#pragma once

// Complex special-function kernel: log-Gamma (analytic branch), Gamma ratios,
// the Kummer confluent hypergeometric function Phi(a,b,z) on and near the
// negative imaginary axis, and the Gauss hypergeometric F(1,a2;b1;w) on the
// unit circle.  Only the parameter domains required by the scattering
// formulas are in contract; this is not a general special-function library.

#include <complex>

#include "coulomb2d/errors.hpp"

namespace coulomb2d::specfun {

/// log Gamma(z), principal branch, analytic continuation (continuous on the
/// right half-plane; Schwarz-symmetric elsewhere).  Stirling with upward
/// recurrence for Re z >= 1/2, reflection below.  Relative accuracy better
/// than 1e-13 for |z| <= 1e3.  Throws DomainError at the poles.
std::complex<double> log_gamma(std::complex<double> z);

/// Gamma(a)/Gamma(b) = exp(log_gamma(a) - log_gamma(b)); avoids overflow of
/// the individual Gamma values.
std::complex<double> gamma_ratio(std::complex<double> a, std::complex<double> b);

/// 1/Gamma(z), entire; safe at z = 0 and the negative integers where it
/// vanishes smoothly (used for the 1/Gamma(i beta) prefactors).
std::complex<double> recip_gamma(std::complex<double> z);

struct KummerOptions {
    /// |z| above which the Taylor sum switches to double-double accumulation
    /// (absorbs the e^{|z|/2}-scale cancellation on the imaginary axis).
    double taylor_dd_threshold = 10.0;
    /// |z| above which the large-argument expansion takes over.
    double asymptotic_threshold = 30.0;
    double target_accuracy = 1e-10;
    int max_terms = 600;
};

/// Kummer Phi(a, b, z) for b > 0.  Contract domain: z = -2 i rho, rho >= 0,
/// |z| <= 1e4; relative accuracy <= 1e-10 there.  Throws NumericError with
/// the achieved error if no regime reaches the target.
std::complex<double> kummer_phi(std::complex<double> a, double b, std::complex<double> z,
                                const KummerOptions& opts = {});

/// d/dz Phi(a,b,z) = (a/b) Phi(a+1, b+1, z), the contiguous relation.
std::complex<double> kummer_phi_derivative(std::complex<double> a, double b,
                                           std::complex<double> z,
                                           const KummerOptions& opts = {});

/// Residual of (z d/dz + a) Phi(a,b,z) = a Phi(a+1,b,z), relative to the
/// right-hand side.  Zero for a = 0 or z = 0 by construction.
double kummer_recurrence_residual(std::complex<double> a, double b, std::complex<double> z,
                                  const KummerOptions& opts = {});

/// Gauss hypergeometric F(1, a2; b1; w) for w in the unit disk and on the
/// unit circle away from w = 1, evaluated by the Gauss continued fraction
/// (the Pade accelerants of the defining series).  Accuracy <= 1e-9 for
/// |arg w| >= pi/32.  Throws DomainError as w -> 1 where the function
/// diverges, NumericError when the fraction fails to settle within max_depth
/// levels of the requested tolerance.
std::complex<double> gauss_f_unit(std::complex<double> a2, std::complex<double> b1,
                                  std::complex<double> w, long max_depth = 200000,
                                  double tolerance = 1e-15);

/// Test-only fault injection: log_gamma returns its value plus
/// eps * (1 + 2i sign(Im z)).  Shifts every downstream phase shift by 2 eps
/// while leaving |exp(2 i eta)| and the ODE-side phase fit untouched, so the
/// verification suites must detect it.  eps = 0 disables (default).
void set_log_gamma_fault(double eps);
double log_gamma_fault();

}  // namespace coulomb2d::specfun
