// Radial channel solutions and phase extraction.
//
// The first-order system in rho = k r (oscillation factored out per the
// u/v transformation):
//   u' = (i beta u + (i beta' + j) v)/rho
//   v' = -2 i v - (i beta v + (i beta' - j) u)/rho
// Exact solution: u = a_j rho^s Phi(s - i beta, 2s+1, -2 i rho), v through the
// contiguous relation; asymptotically f_j is a log-distorted standing wave
// whose phase offset is the channel phase shift.

#include "coulomb2d/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>

#include <boost/numeric/odeint.hpp>
#include <Eigen/Dense>

#include "coulomb2d/specfun.hpp"

namespace coulomb2d {

namespace {

using Complex = std::complex<double>;
constexpr Complex I{0.0, 1.0};
constexpr double PI = 3.14159265358979323846264338327950288;

struct ChannelParams {
    double s;
    Complex a;       // s - i beta
    double b;        // 2 s + 1
    Complex v_factor;  // (s - i beta)/(j + i beta')
    Complex a_j;
    double beta, beta_prime, jj;
};

ChannelParams channel_params(AngularMomentum j, const Kinematics& kin) {
    ChannelParams p;
    p.s = exponent_s(j, kin.gamma_coupling);
    p.beta = kin.beta;
    p.beta_prime = kin.beta_prime;
    p.jj = j.j();
    p.a = Complex(p.s, -kin.beta);
    p.b = 2.0 * p.s + 1.0;
    p.v_factor = p.a / Complex(p.jj, kin.beta_prime);
    p.a_j = radial_normalization(j, kin);
    return p;
}

void spinor_from_uv(const Kinematics& kin, double rho, Complex u, Complex v,
                    Complex& f, Complex& g) {
    Complex phase = std::polar(1.0, rho);
    f = 0.5 * phase * (u + v);
    g = -0.5 * I * std::sqrt(kin.k2 / kin.k1) * phase * (u - v);
}

// Truncated Kummer series for the near-origin initialization.
Complex phi_truncated(Complex a, double b, Complex z, int terms) {
    Complex term = 1.0, sum = 1.0;
    for (int n = 0; n < terms; ++n) {
        term *= (a + double(n)) * z / ((b + n) * (n + 1.0));
        sum += term;
    }
    return sum;
}

void validate_grid(const std::vector<double>& rho_grid) {
    if (rho_grid.empty()) throw DomainError("radial: empty rho grid");
    double prev = 0.0;
    for (double r : rho_grid) {
        if (!(r > prev)) throw DomainError("radial: rho grid must be positive and increasing");
        prev = r;
    }
}

}  // namespace

std::complex<double> radial_normalization(AngularMomentum j, const Kinematics& kin) {
    double s = exponent_s(j, kin.gamma_coupling);
    int m = j.m();
    Complex A = I * std::sqrt(kin.k1 / (kin.k1 + kin.k2)) * std::sqrt(2.0 / (PI * kin.k));
    Complex gammas = std::exp(specfun::log_gamma(Complex(s, -kin.beta)) -
                              specfun::log_gamma(Complex(2.0 * s + 1.0)));
    double sign_m = (m % 2 == 0) ? 1.0 : -1.0;  // exp(i m pi)
    return A * std::pow(2.0, s) * Complex(j.j(), kin.beta_prime) * gammas *
           std::exp(kin.beta * PI / 2.0) * sign_m * std::polar(1.0, -s * PI / 2.0 + PI / 4.0);
}

RadialSolution kummer_radial(AngularMomentum j, const Kinematics& kin,
                             std::vector<double> rho_grid) {
    validate_grid(rho_grid);
    ChannelParams p = channel_params(j, kin);
    RadialSolution sol;
    sol.j = j;
    sol.kin = kin;
    sol.rho = std::move(rho_grid);
    std::size_t n = sol.rho.size();
    sol.u.resize(n);
    sol.v.resize(n);
    sol.f.resize(n);
    sol.g.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double rho = sol.rho[i];
        Complex z(0.0, -2.0 * rho);
        double rs = std::pow(rho, p.s);
        Complex u = p.a_j * rs * specfun::kummer_phi(p.a, p.b, z);
        Complex v = p.a_j * p.v_factor * rs * specfun::kummer_phi(p.a + 1.0, p.b, z);
        sol.u[i] = u;
        sol.v[i] = v;
        spinor_from_uv(kin, rho, u, v, sol.f[i], sol.g[i]);
    }
    return sol;
}

double kummer_ode_residual(AngularMomentum j, const Kinematics& kin, double rho) {
    if (!(rho > 0.0)) throw DomainError("kummer_ode_residual: rho must be positive");
    ChannelParams p = channel_params(j, kin);
    Complex z(0.0, -2.0 * rho);
    double rs = std::pow(rho, p.s);

    Complex phi1 = specfun::kummer_phi(p.a, p.b, z);
    Complex dphi1 = specfun::kummer_phi_derivative(p.a, p.b, z);
    Complex phi2 = specfun::kummer_phi(p.a + 1.0, p.b, z);
    Complex dphi2 = specfun::kummer_phi_derivative(p.a + 1.0, p.b, z);

    Complex u = p.a_j * rs * phi1;
    Complex v = p.a_j * p.v_factor * rs * phi2;
    // d/drho of rho^s Phi(..., -2 i rho) = rho^{s-1}(s Phi + rho (-2i) Phi')
    Complex du = p.a_j * rs / rho * (p.s * phi1 + rho * (-2.0 * I) * dphi1);
    Complex dv = p.a_j * p.v_factor * rs / rho * (p.s * phi2 + rho * (-2.0 * I) * dphi2);

    Complex t1 = I * p.beta / rho * u;
    Complex t2 = Complex(p.jj, p.beta_prime) / rho * v;  // (i beta' + j)/rho v
    Complex r1 = du - t1 - t2;

    Complex t3 = 2.0 * I * v;
    Complex t4 = I * p.beta / rho * v;
    Complex t5 = Complex(-p.jj, p.beta_prime) / rho * u;  // (i beta' - j)/rho u
    Complex r2 = dv + t3 + t4 + t5;

    double scale = std::max({std::abs(du), std::abs(t1), std::abs(t2), std::abs(dv),
                             std::abs(t3), std::abs(t4), std::abs(t5)});
    if (scale == 0.0) return 0.0;
    return std::max(std::abs(r1), std::abs(r2)) / scale;
}

RadialSolution ode_integrate(AngularMomentum j, const Kinematics& kin,
                             std::pair<double, double> rho_span,
                             std::vector<double> rho_grid, const RadialOdeOptions& opts) {
    validate_grid(rho_grid);
    double rho0 = std::max(opts.rho0, rho_span.first);
    if (!(rho0 > 0.0)) throw DomainError("ode_integrate: rho0 must be positive");
    if (rho_grid.front() < rho0)
        throw DomainError("ode_integrate: grid starts before rho0");
    if (rho_grid.back() > rho_span.second)
        throw DomainError("ode_integrate: grid extends past rho_span");

    ChannelParams p = channel_params(j, kin);
    using State = std::array<Complex, 2>;

    auto rhs = [&p](const State& x, State& dxdt, double rho) {
        dxdt[0] = (I * p.beta * x[0] + Complex(p.jj, p.beta_prime) * x[1]) / rho;
        dxdt[1] = -2.0 * I * x[1] - (I * p.beta * x[1] + Complex(-p.jj, p.beta_prime) * x[0]) / rho;
    };

    Complex z0(0.0, -2.0 * rho0);
    double rs0 = std::pow(rho0, p.s);
    State x{p.a_j * rs0 * phi_truncated(p.a, p.b, z0, opts.init_terms),
            p.a_j * p.v_factor * rs0 * phi_truncated(p.a + 1.0, p.b, z0, opts.init_terms)};

    RadialSolution sol;
    sol.j = j;
    sol.kin = kin;
    sol.rho = std::move(rho_grid);
    std::size_t n = sol.rho.size();
    sol.u.resize(n);
    sol.v.resize(n);
    sol.f.resize(n);
    sol.g.resize(n);

    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_controlled(opts.abs_tol, opts.rel_tol,
                                        ode::runge_kutta_fehlberg78<State>());
    double t = rho0;
    try {
        for (std::size_t i = 0; i < n; ++i) {
            double target = sol.rho[i];
            if (target > t) {
                double dt = std::min(0.05, 0.5 * (target - t));
                if (dt <= 0.0) dt = 1e-6;
                ode::integrate_adaptive(stepper, rhs, x, t, target, dt);
                t = target;
            }
            sol.u[i] = x[0];
            sol.v[i] = x[1];
            spinor_from_uv(kin, t, x[0], x[1], sol.f[i], sol.g[i]);
        }
    } catch (const std::overflow_error& e) {
        std::ostringstream msg;
        msg << "ode_integrate: step-size underflow near rho = " << t
            << " (" << e.what() << "); raise rho0";
        throw NumericError(msg.str());
    }
    return sol;
}

PhaseExtraction extract_phase(const RadialSolution& sol, const PhaseExtractionOptions& opts) {
    if (!(opts.window_max > opts.window_min) || opts.sideband_order < 0)
        throw DomainError("extract_phase: bad options");
    std::size_t lo = 0, hi = sol.rho.size();
    while (lo < hi && sol.rho[lo] < opts.window_min) ++lo;
    while (hi > lo && sol.rho[hi - 1] > opts.window_max) --hi;
    std::size_t npts = hi - lo;
    std::size_t ncols = 2 * std::size_t(opts.sideband_order + 1);
    if (npts < 2 * ncols)
        throw DomainError("extract_phase: too few grid points inside the fit window");

    double beta = sol.kin.beta;
    int m = sol.j.m();
    double rho_ref = std::sqrt(sol.rho[lo] * sol.rho[hi - 1]);

    Eigen::MatrixXcd A(npts, ncols);
    Eigen::VectorXcd yf(npts), yg(npts);
    for (std::size_t r = 0; r < npts; ++r) {
        double rho = sol.rho[lo + r];
        double phi0 = rho + beta * std::log(2.0 * rho) - m * PI / 2.0 - PI / 4.0;
        Complex ep = std::polar(1.0, phi0);
        double t = 1.0;
        for (int nb = 0; nb <= opts.sideband_order; ++nb) {
            A(r, nb) = ep * t;
            A(r, opts.sideband_order + 1 + nb) = std::conj(ep) * t;
            t *= rho_ref / rho;
        }
        yf(r) = sol.f[lo + r];
        yg(r) = sol.g[lo + r];
    }

    auto qr = A.colPivHouseholderQr();
    Eigen::VectorXcd cf = qr.solve(yf);
    Eigen::VectorXcd cg = qr.solve(yg);
    double res_f = (A * cf - yf).norm() / yf.norm();
    double res_g = (A * cg - yg).norm() / yg.norm();

    // f ~ K [e^{2 i eta} e^{+i phi0} + e^{-i phi0}]/2,
    // g ~ K'[e^{2 i eta} e^{+i phi0} - e^{-i phi0}]/(2i): leading-coefficient
    // ratios give exp(2 i eta) with every normalization cancelled.
    Complex e2eta_f = cf(0) / cf(opts.sideband_order + 1);
    Complex e2eta_g = -cg(0) / cg(opts.sideband_order + 1);

    PhaseExtraction out;
    out.eta = 0.5 * std::arg(e2eta_f);
    out.eta_from_g = 0.5 * std::arg(e2eta_g);
    out.fit_window = {sol.rho[lo], sol.rho[hi - 1]};
    out.residual = res_f;
    out.residual_g = res_g;
    if (!(res_f <= opts.residual_tolerance) || !(res_g <= opts.residual_tolerance)) {
        std::ostringstream msg;
        msg << "extract_phase: poor fit (residuals " << res_f << ", " << res_g
            << " > " << opts.residual_tolerance
            << "); widen the window or check upstream accuracy";
        throw NumericError(msg.str());
    }
    return out;
}

}  // namespace coulomb2d
