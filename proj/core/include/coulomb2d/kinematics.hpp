#pragma once

// Scattering kinematics for a Dirac particle in an attractive/repulsive
// Coulomb field in two dimensions.  Internal unit system: hbar = c = mu = 1,
// momenta in units of mu c / hbar; conversions to physical units happen at
// the CLI boundary only.

#include <cmath>

#include "coulomb2d/errors.hpp"

namespace coulomb2d {

enum class Species { electron, positron };

/// Projectile/target configuration.  The coupling is gamma = +Z alpha for an
/// electron and -Z alpha for a positron (sign of kappa = +-Z e^2).
struct ParticleSpec {
    Species species = Species::electron;
    int z_nucleus = 1;
    double fine_structure_alpha = 1.0 / 137.035999;
    /// Lifts the |gamma| < 1/2 gate.  Out of warranty: the j = +-1/2 channel
    /// exponent becomes imaginary and every downstream formula breaks down.
    bool allow_large_gamma = false;

    double coupling_gamma() const {
        double g = z_nucleus * fine_structure_alpha;
        return species == Species::electron ? g : -g;
    }
};

/// Derived dimensionless parameters for one (coupling, energy) configuration.
///
/// k1 = E + 1, k2 = E - 1, k = sqrt(k1 k2) (all in mu c / hbar),
/// beta = gamma / v_c, beta_prime = gamma / k = beta sqrt(1 - v_c^2).
struct Kinematics {
    double energy_ratio = 0.0;  // E / (mu c^2), > 1
    double k1 = 0.0;
    double k2 = 0.0;
    double k = 0.0;
    double gamma_coupling = 0.0;
    double beta = 0.0;
    double beta_prime = 0.0;
    double v_over_c = 0.0;

    /// beta_prime / beta = 1 / energy_ratio, smooth through gamma = 0.
    double beta_ratio() const { return 1.0 / energy_ratio; }

    /// Arbitrary coupling at a given energy ratio (tests and sweeps).
    static Kinematics from_gamma(double gamma, double energy_ratio);

    /// Parameterization by (beta, v/c), used where the Coulomb strength and
    /// the incident speed are dialed independently.
    static Kinematics from_beta_speed(double beta, double v_over_c);
};

/// Physical inputs -> Kinematics.  Rejects energy_ratio <= 1 (no propagating
/// solution) and |gamma| >= 1/2 (channel exponent would turn imaginary for
/// j = +-1/2) with distinct messages.
Kinematics derive_kinematics(const ParticleSpec& spec, double energy_ratio);

}  // namespace coulomb2d
