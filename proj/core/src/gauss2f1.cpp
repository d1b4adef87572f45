// Gauss hypergeometric F(1, a2; b1; w) by the Gauss continued fraction,
// evaluated with the modified Lentz algorithm.  The CF convergents are the
// Pade approximants of the defining series sum (a2)_n/(b1)_n w^n, which is
// only conditionally convergent on |w| = 1; the fraction converges linearly
// everywhere in the cut plane C \ [1, inf).

#include <cmath>
#include <complex>
#include <sstream>

#include "coulomb2d/specfun.hpp"

namespace coulomb2d::specfun {

namespace {

using Complex = std::complex<double>;

// Partial-numerator coefficients d_n of
//   F(1,a2;b1;w) = 1/(1 + d_1 w/(1 + d_2 w/(1 + ...)))
Complex cf_coefficient(long n, Complex a2, Complex b1) {
    if (n % 2 == 1) {
        double k = double((n - 1) / 2);
        return -(a2 + k) * (b1 - 1.0 + k) / ((b1 - 1.0 + 2.0 * k) * (b1 + 2.0 * k));
    }
    double k = double(n / 2 - 1);
    return -(k + 1.0) * (b1 - a2 + k) / ((b1 + 2.0 * k) * (b1 + 2.0 * k + 1.0));
}

}  // namespace

Complex gauss_f_unit(Complex a2, Complex b1, Complex w, long max_depth, double tolerance) {
    if (std::abs(w - 1.0) < 1e-10)
        throw DomainError("gauss_f_unit: series diverges as w -> 1 (forward direction)");
    if (std::abs(w) > 1.0 + 1e-12)
        throw DomainError("gauss_f_unit: |w| must be <= 1");
    if (max_depth < 4 || !(tolerance > 0.0))
        throw DomainError("gauss_f_unit: bad depth/tolerance");

    const double tiny = 1e-60;
    Complex f = tiny;
    Complex C = f;
    Complex D = 0.0;
    int settled = 0;
    double last_delta = 1.0;
    for (long n = 1; n <= max_depth; ++n) {
        Complex an = (n == 1) ? Complex(1.0) : cf_coefficient(n - 1, a2, b1) * w;
        D = 1.0 + an * D;
        if (D == 0.0) D = tiny;
        C = 1.0 + an / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        Complex delta = C * D;
        f *= delta;
        last_delta = std::abs(delta - 1.0);
        if (last_delta < tolerance) {
            if (++settled >= 2) return f;
        } else {
            settled = 0;
        }
    }
    std::ostringstream msg;
    msg << "gauss_f_unit: continued fraction not settled after " << max_depth
        << " levels (last relative change " << last_delta << ", |1-w| = "
        << std::abs(w - 1.0) << ")";
    throw NumericError(msg.str());
}

}  // namespace coulomb2d::specfun
