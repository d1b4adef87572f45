#include "coulomb2d/kinematics.hpp"

#include <cmath>
#include <string>

namespace coulomb2d {

namespace {

Kinematics assemble(double gamma, double energy_ratio) {
    if (!(energy_ratio > 1.0))
        throw DomainError("scattering requires E > mu c^2 (energy_ratio > 1)");
    Kinematics kin;
    kin.energy_ratio = energy_ratio;
    kin.gamma_coupling = gamma;
    kin.k1 = energy_ratio + 1.0;
    kin.k2 = energy_ratio - 1.0;  // exact for energy_ratio in (1, 2] by Sterbenz
    kin.k = std::sqrt(kin.k1 * kin.k2);
    kin.v_over_c = kin.k / energy_ratio;
    kin.beta = gamma / kin.v_over_c;
    kin.beta_prime = gamma / kin.k;
    return kin;
}

}  // namespace

Kinematics Kinematics::from_gamma(double gamma, double energy_ratio) {
    return assemble(gamma, energy_ratio);
}

Kinematics Kinematics::from_beta_speed(double beta, double v_over_c) {
    if (!(v_over_c > 0.0 && v_over_c < 1.0))
        throw DomainError("v_over_c must lie in (0, 1)");
    double energy_ratio = 1.0 / std::sqrt((1.0 - v_over_c) * (1.0 + v_over_c));
    Kinematics kin;
    kin.energy_ratio = energy_ratio;
    kin.gamma_coupling = beta * v_over_c;
    kin.k1 = energy_ratio + 1.0;
    kin.k2 = energy_ratio - 1.0;
    kin.k = energy_ratio * v_over_c;  // k = E v, avoids cancellation near v -> 0
    kin.v_over_c = v_over_c;
    kin.beta = beta;
    kin.beta_prime = beta * std::sqrt((1.0 - v_over_c) * (1.0 + v_over_c));
    return kin;
}

Kinematics derive_kinematics(const ParticleSpec& spec, double energy_ratio) {
    if (spec.z_nucleus < 1) throw DomainError("z_nucleus must be >= 1");
    if (!(spec.fine_structure_alpha > 0.0))
        throw DomainError("fine_structure_alpha must be positive");
    double gamma = spec.coupling_gamma();
    if (std::fabs(gamma) >= 0.5 && !spec.allow_large_gamma)
        throw DomainError("|gamma| = Z*alpha = " + std::to_string(std::fabs(gamma)) +
                          " >= 1/2: the j = +-1/2 channel exponent would be imaginary"
                          " (roughly Z <= 68 is required)");
    return assemble(gamma, energy_ratio);
}

}  // namespace coulomb2d
