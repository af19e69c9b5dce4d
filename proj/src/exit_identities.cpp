#include "levydd/exit_identities.hpp"

#include <cmath>
#include <stdexcept>

namespace levydd {

namespace {

// W(x)/W(y) computed through log W so huge scale values cancel
double w_ratio(const ScaleTable& t, double x, double y) {
    if (x == y)
        return 1.0;
    if (x == 0.0)
        return 0.0;
    return std::exp(t.log_w(x) - t.log_w(y));
}

// W'(d)/W(d) = Phi + Wt'(d)/Wt(d); the tilted ratio has no cancellation
double wprime_over_w(const ScaleTable& t, double d) {
    return t.phi_gamma() + t.w_tilted_prime(d) / t.w_tilted(d);
}

} // namespace

double one_sided_up(const ScaleTable& table, double x) {
    if (x < 0.0)
        throw std::domain_error("one_sided_up: x must be >= 0");
    return std::exp(-table.phi_gamma() * x);
}

double one_sided_down(const ScaleTable& table, double x) {
    if (x < 0.0)
        throw std::domain_error("one_sided_down: x must be >= 0");
    return table.down_crossing_lt(x);
}

double two_sided_up(const ScaleTable& table, double x, double b) {
    if (x < 0.0 || x > b)
        throw std::domain_error("two_sided_up: need 0 <= x <= b");
    return w_ratio(table, x, b);
}

double two_sided_down(const ScaleTable& table, double x, double b) {
    if (x < 0.0 || x > b)
        throw std::domain_error("two_sided_down: need 0 <= x <= b");
    if (x == 0.0)
        return 1.0;
    if (x == b)
        return 0.0;
    return table.z(x) - table.z(b) * w_ratio(table, x, b);
}

double updown_before_drawdown(const ScaleTable& table, double x, double b, double d) {
    if (!(d > 0.0) || x < 0.0 || x > d || d > b)
        throw std::domain_error("updown_before_drawdown: need 0 <= x <= d <= b");
    if (x == 0.0)
        return 0.0;
    return std::exp(table.log_w(x) - table.log_w(d) - (b - d) * wprime_over_w(table, d));
}

double drawdown_before_up(const ScaleTable& table, double gap, double d) {
    if (gap < 0.0)
        throw std::domain_error("drawdown_before_up: gap must be >= 0");
    if (!(d > 0.0))
        throw std::domain_error("drawdown_before_up: d must be > 0");
    if (gap == 0.0)
        return 0.0;
    // Z(d) - gamma W(d)^2/W'(d), assembled from tilted quantities
    const double wt = table.w_tilted(d), wtp = table.w_tilted_prime(d);
    const double u = table.z_minus_one_tilted(d);
    const double bracket = u - table.gamma() * wt * wt / (table.phi_gamma() * wt + wtp);
    const double factor = 1.0 + std::exp(table.phi_gamma() * d) * bracket;
    return -std::expm1(-gap * wprime_over_w(table, d)) * factor;
}

} // namespace levydd
