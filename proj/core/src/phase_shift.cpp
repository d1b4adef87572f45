#include "coulomb2d/phase_shift.hpp"

#include <cmath>
#include <complex>

#include "coulomb2d/detail/parallel.hpp"
#include "coulomb2d/specfun.hpp"

namespace coulomb2d {

namespace {

using Complex = std::complex<double>;
constexpr Complex I{0.0, 1.0};
constexpr double PI = 3.14159265358979323846264338327950288;

double principal_eta(Complex s_value) { return 0.5 * std::arg(s_value); }

}  // namespace

const char* to_string(SMatrixMethod m) {
    switch (m) {
        case SMatrixMethod::exact: return "exact";
        case SMatrixMethod::small_gamma: return "small_gamma";
        case SMatrixMethod::nonrel: return "nonrel";
    }
    return "?";
}

double exponent_s(AngularMomentum j, double gamma) {
    double j2 = 0.25 * double(j.two_j) * double(j.two_j);
    double g2 = gamma * gamma;
    if (!(j2 > g2)) throw DomainError("exponent_s: requires j^2 > gamma^2");
    return std::sqrt(j2 - g2);
}

SMatrixElement s_matrix_exact(AngularMomentum j, const Kinematics& kin) {
    double s = exponent_s(j, kin.gamma_coupling);
    double jj = j.j();
    double aj = std::fabs(jj);
    // s is real, so Gamma(s - i beta) = conj Gamma(s + i beta) and
    //   Gamma(s - i beta)/Gamma(s + 1 + i beta) = e^{-2 i Im log Gamma(s + i beta)}/(s + i beta),
    // which keeps |S| at rounding level for every channel.
    double phi = specfun::log_gamma(Complex(s, kin.beta)).imag();
    Complex ratio = std::polar(1.0, -2.0 * phi) / Complex(s, kin.beta);
    // exp(i pi (j - s)) with the O(gamma^2) phase kept exactly:
    // j - s = gamma^2/(j + s) for j > 0; for j < 0 split off exp(-2 pi i |j|) = -1.
    double small = kin.gamma_coupling * kin.gamma_coupling / (aj + s);
    Complex phase = std::polar(1.0, PI * small);
    if (j.two_j < 0) phase = -phase;
    Complex value = Complex(jj, kin.beta_prime) * ratio * phase;
    return {j, value, SMatrixMethod::exact, principal_eta(value)};
}

std::pair<Complex, Complex> small_gamma_terms(AngularMomentum j, const Kinematics& kin) {
    double b = kin.beta;
    double diff = kin.beta * kin.k2 / kin.energy_ratio;  // beta - beta', cancellation-free
    if (j.two_j > 0) {
        double m_half = j.j();  // m + 1/2 = j
        Complex nonrel = specfun::gamma_ratio(Complex(m_half, -b), Complex(m_half, b));
        Complex corr = -I * diff *
                       specfun::gamma_ratio(Complex(m_half, -b), Complex(m_half + 1.0, b));
        return {nonrel, corr};
    }
    double aj = j.abs_j();  // |m| + 1/2 = |j| + 1, |m| - 1/2 = |j|
    Complex nonrel = specfun::gamma_ratio(Complex(aj + 1.0, -b), Complex(aj + 1.0, b));
    Complex corr = I * diff * specfun::gamma_ratio(Complex(aj, -b), Complex(aj + 1.0, b));
    return {nonrel, corr};
}

SMatrixElement s_matrix_small_gamma(AngularMomentum j, const Kinematics& kin) {
    auto [nonrel, corr] = small_gamma_terms(j, kin);
    Complex value = nonrel + corr;
    return {j, value, SMatrixMethod::small_gamma, principal_eta(value)};
}

Complex s_matrix_nonrel(int m_abs, double beta) {
    if (m_abs < 0) throw DomainError("s_matrix_nonrel: m_abs must be >= 0");
    return specfun::gamma_ratio(Complex(m_abs + 0.5, -beta), Complex(m_abs + 0.5, beta));
}

namespace {

SMatrixElement element_for(AngularMomentum j, const Kinematics& kin, SMatrixMethod method) {
    switch (method) {
        case SMatrixMethod::exact: return s_matrix_exact(j, kin);
        case SMatrixMethod::small_gamma: return s_matrix_small_gamma(j, kin);
        case SMatrixMethod::nonrel: {
            Complex value = s_matrix_nonrel(j.abs_m(), kin.beta);
            return {j, value, SMatrixMethod::nonrel, principal_eta(value)};
        }
    }
    throw DomainError("unknown SMatrixMethod");
}

}  // namespace

std::vector<SMatrixElement> s_matrix_channels(int two_j_max, const Kinematics& kin,
                                              SMatrixMethod method) {
    if (two_j_max < 1 || two_j_max % 2 == 0)
        throw DomainError("s_matrix_channels: two_j_max must be a positive odd integer");
    std::vector<SMatrixElement> out;
    out.reserve(two_j_max + 1);
    for (int t = 1; t <= two_j_max; t += 2) {
        out.push_back(element_for(AngularMomentum(t), kin, method));
        out.push_back(element_for(AngularMomentum(-t), kin, method));
    }
    return out;
}

SMatrixTable build_s_matrix_table(int two_j_max, const Kinematics& kin, SMatrixMethod method,
                                  int threads) {
    if (two_j_max < 1 || two_j_max % 2 == 0)
        throw DomainError("build_s_matrix_table: two_j_max must be a positive odd integer");
    SMatrixTable table;
    table.m_max = (two_j_max - 1) / 2;
    table.m_min = -(two_j_max + 1) / 2;
    std::size_t n = static_cast<std::size_t>(table.m_max - table.m_min + 1);
    table.values.resize(n);
    detail::parallel_for(n, threads, [&](std::size_t idx) {
        int m = table.m_min + static_cast<int>(idx);
        table.values[idx] = element_for(AngularMomentum(2 * m + 1), kin, method).value;
    });
    return table;
}

}  // namespace coulomb2d
