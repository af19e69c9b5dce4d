// Numerical inversion of Laplace transforms whose singularities lie on the
// closed negative real axis: fixed-Talbot contour as the primary method and
// an Euler-summation series as fallback and cross-check.
//
// The Talbot sum multiplies transform values by e^{t Re s} factors as large as
// e^{2M/5} (~1e11 at M = 64), so transform evaluations and accumulation both
// run in quad precision; anything coarser caps the achievable accuracy near
// 1e-5 at that node count.

#pragma once

#include <functional>
#include <stdexcept>

namespace levydd::inversion {

// minimal quad-precision complex type for transform evaluation
struct QComplex {
    __float128 re = 0, im = 0;

    friend QComplex operator+(const QComplex& a, const QComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend QComplex operator-(const QComplex& a, const QComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QComplex operator/(const QComplex& a, const QComplex& b) {
        const __float128 den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    friend QComplex operator*(__float128 s, const QComplex& a) { return {s * a.re, s * a.im}; }
    friend QComplex operator+(__float128 s, const QComplex& a) { return {s + a.re, a.im}; }
    friend QComplex operator-(__float128 s, const QComplex& a) { return {s - a.re, -a.im}; }
};

using QTransform = std::function<QComplex(const QComplex&)>;

struct InversionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-Talbot rule with the given node count.
double talbot(const QTransform& transform, double t, int nodes = 64);

// Euler summation of the Bromwich series (discretization parameter a,
// `terms` plain terms, binomial averaging over `average` more).
double euler(const QTransform& transform, double t, int terms = 60, int average = 20,
             double a = 36.0);

// Talbot at 64 and 48 nodes; if they disagree beyond rel_tol * scale the
// value is recomputed by Euler summation, and when that also fails to agree
// an InversionError is thrown (never returns silent garbage).
double invert_checked(const QTransform& transform, double t, double scale,
                      double rel_tol = 1e-11);

} // namespace levydd::inversion
