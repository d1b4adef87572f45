#pragma once

// Per-channel S-matrix elements exp(2 i eta_j) for half-integer total angular
// momentum j: the exact form, the small-coupling approximation, and the
// nonrelativistic factor they share.

#include <complex>
#include <utility>
#include <vector>

#include "coulomb2d/kinematics.hpp"

namespace coulomb2d {

/// Half-integer total angular momentum, stored exactly as two_j (odd).
/// m = j - 1/2 is an integer.
struct AngularMomentum {
    int two_j = 1;

    AngularMomentum() = default;
    explicit AngularMomentum(int tj) : two_j(tj) {
        if (tj % 2 == 0) throw DomainError("AngularMomentum: two_j must be odd");
    }
    double j() const { return 0.5 * two_j; }
    int m() const { return (two_j - 1) / 2; }
    int abs_m() const { int mm = m(); return mm < 0 ? -mm : mm; }
    double abs_j() const { return 0.5 * (two_j < 0 ? -two_j : two_j); }
};

enum class SMatrixMethod { exact, small_gamma, nonrel };

const char* to_string(SMatrixMethod m);

struct SMatrixElement {
    AngularMomentum j;
    std::complex<double> value;   // exp(2 i eta_j)
    SMatrixMethod method = SMatrixMethod::exact;
    double eta_principal = 0.0;   // arg(value)/2 in (-pi/2, pi/2]
};

/// Positive channel exponent s = sqrt(j^2 - gamma^2).  Throws DomainError
/// when j^2 <= gamma^2.
double exponent_s(AngularMomentum j, double gamma);

/// Exact channel factor
///   exp(2 i eta_j) = (j + i beta') Gamma(s - i beta)/Gamma(s + i beta + 1)
///                    exp(i j pi - i s pi),
/// with the half-odd phase evaluated cancellation-safely through
/// j - s = gamma^2/(j + s) (and exp(-2 pi i |j|) = -1 for j < 0), so the
/// O(gamma^2) phase that distinguishes exact from approximate survives.
SMatrixElement s_matrix_exact(AngularMomentum j, const Kinematics& kin);

/// Small-coupling approximation: the exact factor with s replaced by |j|,
/// i.e. nonrelativistic term plus a relativistic correction proportional to
/// (beta - beta') that vanishes as v_c -> 0.
SMatrixElement s_matrix_small_gamma(AngularMomentum j, const Kinematics& kin);

/// The two terms of the small-coupling factor (nonrelativistic, correction).
std::pair<std::complex<double>, std::complex<double>>
small_gamma_terms(AngularMomentum j, const Kinematics& kin);

/// Nonrelativistic factor exp(2 i delta_|m|)
///   = Gamma(|m| + 1/2 - i beta)/Gamma(|m| + 1/2 + i beta), unimodular.
std::complex<double> s_matrix_nonrel(int m_abs, double beta);

/// All channels with |two_j| <= two_j_max, ordered by ascending |two_j| with
/// j > 0 before j < 0 (deterministic).
std::vector<SMatrixElement> s_matrix_channels(int two_j_max, const Kinematics& kin,
                                              SMatrixMethod method = SMatrixMethod::exact);

/// Channel values indexed by the integer m = j - 1/2 (so two_j = 2m + 1),
/// for the partial-wave sums.  Built once, shared read-only across angles.
struct SMatrixTable {
    int m_min = 0;
    int m_max = -1;
    std::vector<std::complex<double>> values;

    const std::complex<double>& for_m(int m) const { return values[m - m_min]; }
};

SMatrixTable build_s_matrix_table(int two_j_max, const Kinematics& kin,
                                  SMatrixMethod method = SMatrixMethod::exact,
                                  int threads = 1);

}  // namespace coulomb2d
