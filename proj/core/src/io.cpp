#include "coulomb2d/io.hpp"

#include <cmath>
#include <cstdio>

namespace coulomb2d::io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_phase_shift_csv(std::ostream& os, const std::vector<SMatrixElement>& channels,
                           const Kinematics& kin) {
    os << "two_j,m,s,re_S,im_S,eta_principal,method\n";
    for (const auto& ch : channels) {
        double s = exponent_s(ch.j, kin.gamma_coupling);
        os << ch.j.two_j << ',' << ch.j.m() << ',' << format_double(s) << ','
           << format_double(ch.value.real()) << ',' << format_double(ch.value.imag()) << ','
           << format_double(ch.eta_principal) << ',' << to_string(ch.method) << '\n';
    }
}

void write_amplitude_csv(std::ostream& os, const AmplitudeGrid& amp, const Kinematics& kin,
                         double length_scale) {
    os << "theta_rad,re_f,im_f,sigma,sigma_closed,method,diag\n";
    double amp_scale = std::sqrt(length_scale);
    for (std::size_t i = 0; i < amp.grid.size(); ++i) {
        double theta = amp.grid.thetas[i];
        std::complex<double> f = amp.values[i] * amp_scale;
        double sig = std::norm(f);
        double sig_closed = sigma_closed_at(theta, kin) * length_scale;
        os << format_double(theta) << ',' << format_double(f.real()) << ','
           << format_double(f.imag()) << ',' << format_double(sig) << ','
           << format_double(sig_closed) << ',' << to_string(amp.method) << ','
           << format_double(amp.diagnostics[i] * amp_scale) << '\n';
    }
}

void write_radial_csv(std::ostream& os, const RadialSolution& sol) {
    os << "rho,re_u,im_u,re_v,im_v,re_f,im_f,re_g,im_g\n";
    for (std::size_t i = 0; i < sol.rho.size(); ++i) {
        os << format_double(sol.rho[i]) << ',' << format_double(sol.u[i].real()) << ','
           << format_double(sol.u[i].imag()) << ',' << format_double(sol.v[i].real()) << ','
           << format_double(sol.v[i].imag()) << ',' << format_double(sol.f[i].real()) << ','
           << format_double(sol.f[i].imag()) << ',' << format_double(sol.g[i].real()) << ','
           << format_double(sol.g[i].imag()) << '\n';
    }
}

}  // namespace coulomb2d::io
