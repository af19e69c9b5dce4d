#include "levydd/laplace_inversion.hpp"

#include <quadmath.h>

#include <cmath>
#include <string>
#include <vector>

namespace levydd::inversion {

namespace {

QComplex qexp(const QComplex& z) {
    const __float128 m = expq(z.re);
    return {m * cosq(z.im), m * sinq(z.im)};
}

const __float128 kPi = M_PIq;

} // namespace

double talbot(const QTransform& transform, double t, int nodes) {
    if (!(t > 0.0))
        throw std::domain_error("talbot: t must be > 0");
    const int m = nodes;
    const __float128 qt = t;
    const __float128 r = __float128(2 * m) / (5 * qt);

    __float128 acc = 0.5q * expq(r * qt) * transform(QComplex{r, 0}).re;
    for (int k = 1; k < m; ++k) {
        const __float128 theta = kPi * k / m;
        const __float128 cot = cosq(theta) / sinq(theta);
        const QComplex s{r * theta * cot, r * theta};
        const __float128 sigma = theta + (theta * cot - 1) * cot;
        const QComplex term = qexp(qt * s) * transform(s) * QComplex{1, sigma};
        acc += term.re;
    }
    return double(acc * r / m);
}

double euler(const QTransform& transform, double t, int terms, int average, double a) {
    if (!(t > 0.0))
        throw std::domain_error("euler: t must be > 0");
    const __float128 qt = t;
    const __float128 qa = a;
    const int n_partial = average + 1;
    std::vector<__float128> partial(n_partial);

    __float128 sum = 0.5q * transform(QComplex{qa / (2 * qt), 0}).re;
    for (int j = 1, idx = 0; idx < n_partial; ++j) {
        const QComplex s{qa / (2 * qt), kPi * j / qt};
        sum += (j % 2 == 0 ? 1 : -1) * transform(s).re;
        if (j > terms)
            partial[idx++] = sum;
    }

    // binomial averaging of the tail partial sums
    __float128 acc = 0;
    __float128 binom = 1;  // C(average, k), built incrementally
    for (int k = 0; k <= average; ++k) {
        acc += binom * partial[k];
        binom = binom * (average - k) / (k + 1);
    }
    acc /= powq(2.0q, average);
    return double(acc * expq(qa / 2) / qt);
}

double invert_checked(const QTransform& transform, double t, double scale, double rel_tol) {
    const double tol = rel_tol * std::max(std::abs(scale), 1e-300);
    const double t64 = talbot(transform, t, 64);
    const double t48 = talbot(transform, t, 48);
    if (std::abs(t64 - t48) <= std::max(tol, 1e-13 * std::abs(t64)))
        return t64;

    const double e1 = euler(transform, t, 60, 20);
    const double e2 = euler(transform, t, 90, 20);
    if (std::abs(e1 - e2) <= std::max(tol, 1e-11 * std::abs(e1)))
        return e1;

    throw InversionError("laplace inversion did not converge (talbot and euler both oscillate) at t=" +
                         std::to_string(t));
}

} // namespace levydd::inversion
