// Kummer Phi(a,b,z) on the oscillatory axis z = -2 i rho.
//
// Three regimes.  The Taylor sum cancels like e^{|z|/2} on the imaginary
// axis, so plain doubles are good only to |z| ~ 10; a double-double
// accumulator carries the middle band, and the large-argument expansion
//
//   Phi(a,b,z) ~ Gamma(b)/Gamma(b-a) e^{+-i pi a} z^{-a} 2F0(a, a-b+1; -1/z)
//              + Gamma(b)/Gamma(a)   e^z z^{a-b}     2F0(b-a, 1-a;  1/z)
//
// (lower sign on ph z in (-3pi/2, -pi/2], principal powers) takes over where
// its optimally-truncated error e^{-|z|} is below target.

#include <cmath>
#include <complex>
#include <sstream>

#include "coulomb2d/detail/ddouble.hpp"
#include "coulomb2d/specfun.hpp"

namespace coulomb2d::specfun {

namespace {

using Complex = std::complex<double>;
using detail::DD;
using detail::DDC;

constexpr double PI = 3.14159265358979323846264338327950288;

struct Evaluation {
    Complex value;
    double error;  // relative estimate
};

Evaluation taylor_double(Complex a, double b, Complex z, int max_terms) {
    Complex term = 1.0;
    Complex sum = 1.0;
    double max_mag = 1.0;
    double az = std::abs(z);
    int settled = 0;
    int n = 0;
    for (; n < max_terms; ++n) {
        term *= (a + static_cast<double>(n)) * z / ((b + n) * (n + 1.0));
        sum += term;
        double tm = std::abs(term);
        if (tm > max_mag) max_mag = tm;
        if (n >= az && tm <= 1e-18 * std::abs(sum)) {
            if (++settled >= 2) break;
        } else {
            settled = 0;
        }
    }
    double smag = std::abs(sum);
    if (smag == 0.0) return {sum, 1.0};
    double err = (2.2e-16 * max_mag * std::sqrt(double(n + 1)) + std::abs(term)) / smag;
    return {sum, err};
}

Evaluation taylor_dd(Complex a, double b, Complex z, int max_terms) {
    DDC term(1.0, 0.0);
    DDC sum(1.0, 0.0);
    DDC zz(z.real(), z.imag());
    double max_mag = 1.0;
    double az = std::abs(z);
    int settled = 0;
    int n = 0;
    for (; n < max_terms; ++n) {
        DDC an(DD(a.real()) + DD(double(n)), DD(a.imag()));
        DD den = (DD(b) + DD(double(n))) * DD(n + 1.0);
        term = term * an * zz / den;
        sum = sum + term;
        double tm = detail::mag_hi(term);
        if (tm > max_mag) max_mag = tm;
        if (n >= az && tm <= 1e-36 * detail::mag_hi(sum)) {
            if (++settled >= 2) break;
        } else {
            settled = 0;
        }
    }
    Complex value(detail::to_double(sum.re), detail::to_double(sum.im));
    double smag = std::abs(value);
    if (smag == 0.0) return {value, 1.0};
    double err = (1.5e-32 * max_mag * std::sqrt(double(n + 1)) + detail::mag_hi(term)) / smag;
    // double rounding of the final value itself
    err += 4.4e-16;
    return {value, err};
}

// One 2F0-type asymptotic tail: sum_n (p)_n (q)_n / (n! x^n), truncated at the
// smallest term.  Returns the sum and the magnitude of the first omitted term.
std::pair<Complex, double> asymptotic_tail(Complex p, Complex q, Complex x, int max_terms) {
    Complex term = 1.0;
    Complex sum = term;
    double prev = 1.0;
    for (int n = 0; n < max_terms; ++n) {
        Complex next = term * (p + static_cast<double>(n)) * (q + static_cast<double>(n)) /
                       ((n + 1.0) * x);
        double nm = std::abs(next);
        if (nm >= prev || nm < 1e-20) {  // growing again, or fully converged
            return {sum + ((nm < 1e-20) ? next : 0.0), nm};
        }
        term = next;
        sum += term;
        prev = nm;
    }
    return {sum, prev};
}

Evaluation asymptotic(Complex a, double b, Complex z, int max_terms) {
    Complex lg_b = log_gamma(Complex(b));
    Complex log_z = std::log(z);
    double sign = (std::arg(z) > -PI / 2.0) ? 1.0 : -1.0;

    auto [s1, trunc1] = asymptotic_tail(a, a - b + 1.0, -z, max_terms);
    Complex pref1 = std::exp(lg_b - log_gamma(Complex(b) - a) +
                             Complex(0.0, sign * PI) * a - a * log_z);

    auto [s2, trunc2] = asymptotic_tail(Complex(b) - a, 1.0 - a, z, max_terms);
    Complex pref2 = std::exp(lg_b - log_gamma(a) + z + (a - Complex(b)) * log_z);

    Complex value = pref1 * s1 + pref2 * s2;
    double smag = std::abs(value);
    if (smag == 0.0) return {value, 1.0};
    double err = (trunc1 * std::abs(pref1) + trunc2 * std::abs(pref2)) / smag + 1e-15;
    return {value, err};
}

}  // namespace

Complex kummer_phi(Complex a, double b, Complex z, const KummerOptions& opts) {
    if (!(b > 0.0)) throw DomainError("kummer_phi: b must be positive");
    if (z == 0.0 || a == 0.0) return 1.0;

    double az = std::abs(z);
    Evaluation ev;
    if (az <= opts.taylor_dd_threshold) {
        ev = taylor_double(a, b, z, opts.max_terms);
        if (ev.error > opts.target_accuracy) ev = taylor_dd(a, b, z, opts.max_terms);
    } else if (az <= opts.asymptotic_threshold) {
        ev = taylor_dd(a, b, z, opts.max_terms);
    } else {
        ev = asymptotic(a, b, z, opts.max_terms);
    }
    if (ev.error > opts.target_accuracy) {
        std::ostringstream msg;
        msg << "kummer_phi: achieved relative error " << ev.error << " exceeds target "
            << opts.target_accuracy << " at |z| = " << az;
        throw NumericError(msg.str());
    }
    return ev.value;
}

Complex kummer_phi_derivative(Complex a, double b, Complex z, const KummerOptions& opts) {
    return a / b * kummer_phi(a + 1.0, b + 1.0, z, opts);
}

double kummer_recurrence_residual(Complex a, double b, Complex z, const KummerOptions& opts) {
    Complex phi = kummer_phi(a, b, z, opts);
    Complex dphi = kummer_phi_derivative(a, b, z, opts);
    Complex lhs = z * dphi + a * phi;
    Complex rhs = a * kummer_phi(a + 1.0, b, z, opts);
    double denom = std::abs(rhs);
    if (denom == 0.0) return std::abs(lhs);
    return std::abs(lhs - rhs) / denom;
}

}  // namespace coulomb2d::specfun
