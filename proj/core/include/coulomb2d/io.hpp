#pragma once

// Table writers.  All numeric output is printed with %.17g so identical
// inputs produce bitwise-identical files.

#include <ostream>
#include <string>
#include <vector>

#include "coulomb2d/amplitude.hpp"
#include "coulomb2d/phase_shift.hpp"
#include "coulomb2d/radial.hpp"

namespace coulomb2d::io {

std::string format_double(double x);

/// Columns: two_j, m, s, re_S, im_S, eta_principal, method.
void write_phase_shift_csv(std::ostream& os, const std::vector<SMatrixElement>& channels,
                           const Kinematics& kin);

/// Columns: theta_rad, re_f, im_f, sigma, sigma_closed, method, diag.
/// sigma is |f|^2 of the tabulated amplitude, sigma_closed the closed formula.
/// length_scale rescales k^{-1/2}-amplitudes and lengths to physical units
/// (1.0 = natural units).
void write_amplitude_csv(std::ostream& os, const AmplitudeGrid& amp,
                         const Kinematics& kin, double length_scale = 1.0);

/// Columns: rho, re_u, im_u, re_v, im_v, re_f, im_f, re_g, im_g.
void write_radial_csv(std::ostream& os, const RadialSolution& sol);

}  // namespace coulomb2d::io
