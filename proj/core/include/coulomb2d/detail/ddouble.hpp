#pragma once

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms with
// fma products), enough for the cancellation-heavy Kummer Taylor sums on the
// imaginary axis.  ~32 significant digits.  Requires IEEE semantics: do not
// compile this with -ffast-math.

#include <cmath>

namespace coulomb2d::detail {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD quick_two_sum(double a, double b) {  // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD operator+(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
    double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return q + DD(q3);
}

inline double to_double(DD a) { return a.hi + a.lo; }
inline double abs_hi(DD a) { return std::fabs(a.hi); }

/// Complex double-double.
struct DDC {
    DD re, im;

    constexpr DDC() = default;
    constexpr DDC(DD r, DD i) : re(r), im(i) {}
    constexpr DDC(double r, double i = 0.0) : re(r), im(i) {}
};

inline DDC operator+(DDC a, DDC b) { return {a.re + b.re, a.im + b.im}; }
inline DDC operator-(DDC a, DDC b) { return {a.re - b.re, a.im - b.im}; }

inline DDC operator*(DDC a, DDC b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline DDC operator/(DDC a, DD d) { return {a.re / d, a.im / d}; }

inline double mag_hi(DDC a) {
    double r = std::fabs(a.re.hi), i = std::fabs(a.im.hi);
    return std::hypot(r, i);
}

}  // namespace coulomb2d::detail
