#include "levydd/scale_functions.hpp"

#include "levydd/laplace_inversion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace levydd {

namespace {

// cubic Hermite on [x0, x0+h] with slopes d0, d1; t = (x - x0)/h
double hermite(double t, double h, double f0, double f1, double d0, double d1) {
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * h * d0 +
           (-2 * t3 + 3 * t2) * f1 + (t3 - t2) * h * d1;
}

constexpr double kFlatTail = 1e-10;  // below this psi'(Phi) counts as zero

} // namespace

void GridSpec::validate() const {
    if (!(x_min > 0.0) || !(x_max > x_min))
        throw std::invalid_argument("GridSpec: need 0 < x_min < x_max");
    if (points < 8)
        throw std::invalid_argument("GridSpec: need at least 8 points");
}

ScaleTable ScaleTable::make(const LevyModel& model, double gamma, const GridSpec& grid) {
    return model.family == LevyFamily::BrownianDrift ? closed_form(model, gamma, grid)
                                                     : inverted(model, gamma, grid);
}

ScaleTable ScaleTable::closed_form(const LevyModel& model, double gamma, const GridSpec& grid) {
    model.validate();
    grid.validate();
    if (model.family != LevyFamily::BrownianDrift)
        throw std::invalid_argument("ScaleTable: closed form only for BrownianDrift");
    if (gamma < 0.0)
        throw std::domain_error("ScaleTable: gamma must be >= 0");

    ScaleTable t;
    t.model_ = model;
    t.gamma_ = gamma;
    t.method_ = ScaleMethod::ClosedForm;
    t.grid_ = grid;

    // psi(lambda) - gamma = (sigma^2/2)(lambda - r+)(lambda - r-)
    const double s2 = model.sigma * model.sigma;
    const double disc = model.mu * model.mu + 2.0 * s2 * gamma;
    const double s = std::sqrt(disc);
    t.cf_s_ = s;
    t.cf_root_pos_ = (-model.mu + s) / s2;
    t.cf_root_neg_ = (-model.mu - s) / s2;
    t.phi_ = std::max(t.cf_root_pos_, 0.0);
    t.psi_prime_phi_ = psi_prime(model, t.phi_);
    t.psi_prime0_ = psi_prime(model, 0.0);
    t.wprime0_ = 2.0 / s2;

    t.build_grid();
    t.fill_from_closed_form();
    return t;
}

ScaleTable ScaleTable::inverted(const LevyModel& model, double gamma, const GridSpec& grid) {
    model.validate();
    grid.validate();
    if (gamma < 0.0)
        throw std::domain_error("ScaleTable: gamma must be >= 0");

    ScaleTable t;
    t.model_ = model;
    t.gamma_ = gamma;
    t.method_ = ScaleMethod::Inverted;
    t.grid_ = grid;
    t.phi_ = phi(model, gamma);
    t.psi_prime_phi_ = psi_prime(model, t.phi_);
    t.psi_prime0_ = psi_prime(model, 0.0);
    t.wprime0_ = 2.0 / (model.sigma * model.sigma);

    t.build_grid();
    t.fill_from_inversion();
    return t;
}

void ScaleTable::build_grid() {
    const std::size_t n = grid_.points;
    x_.assign(n + 1, 0.0);
    const double step = std::log(grid_.x_max / grid_.x_min) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        x_[i + 1] = grid_.x_min * std::exp(step * double(i));
    x_.back() = grid_.x_max;

    wt_.assign(n + 1, 0.0);
    wtp_.assign(n + 1, 0.0);
    wtpp_.assign(n + 1, 0.0);
    u_.assign(n + 1, 0.0);
    n_.assign(n + 1, 0.0);
    np_.assign(n + 1, 0.0);
}

void ScaleTable::fill_from_closed_form() {
    const double s2 = model_.sigma * model_.sigma;
    const double gap = cf_root_pos_ - cf_root_neg_;  // 2s/sigma^2 when s > 0
    wtp_[0] = wprime0_;
    wtpp_[0] = (cf_s_ > 0.0) ? -gap * gap / cf_s_ : 0.0;
    np_[0] = gamma_ * wprime0_;
    for (std::size_t i = 1; i < x_.size(); ++i) {
        const double x = x_[i];
        if (cf_s_ > 0.0) {
            const double e = std::exp(-gap * x);
            wt_[i] = -std::expm1(-gap * x) / cf_s_;
            wtp_[i] = gap * e / cf_s_;
            wtpp_[i] = -gap * gap * e / cf_s_;
            if (gamma_ > 0.0) {
                const double zm1 = gamma_ / cf_s_ * (std::expm1(cf_root_pos_ * x) / cf_root_pos_ -
                                                     std::expm1(cf_root_neg_ * x) / cf_root_neg_);
                u_[i] = std::exp(-phi_ * x) * zm1;
                // gamma W - Phi (Z-1) reduces to a single exponential complement
                const double c = gamma_ / cf_s_ * (1.0 - cf_root_pos_ / cf_root_neg_);
                n_[i] = -c * std::expm1(cf_root_neg_ * x);
                np_[i] = -c * cf_root_neg_ * std::exp(cf_root_neg_ * x);
            }
        } else {
            // degenerate double root (mu = 0, gamma = 0): W = 2x/sigma^2
            wt_[i] = 2.0 * x / s2;
            wtp_[i] = 2.0 / s2;
        }
    }
}

void ScaleTable::fill_from_inversion() {
    using inversion::QComplex;
    const LevyModel m = model_;
    const __float128 mu = m.mu, half_s2 = 0.5q * m.sigma * m.sigma;
    const __float128 rate = m.jump_rate, mean = m.jump_mean;
    const bool jumps = m.jump_rate > 0.0;
    const __float128 ph = phi_, g = gamma_;
    const double s2 = m.sigma * m.sigma;

    const auto psi0 = [=](const QComplex& lam) {
        QComplex v = mu * lam + half_s2 * (lam * lam);
        if (jumps)
            v = v - rate * ((mean * lam) / (1 + mean * lam));
        return v;
    };
    const auto psit = [=](const QComplex& lam) {
        return psi0(lam + QComplex{ph, 0}) - QComplex{g, 0};
    };
    const inversion::QTransform f_wt = [=](const QComplex& lam) {
        return QComplex{1, 0} / psit(lam);
    };
    const inversion::QTransform f_wtp = [=](const QComplex& lam) { return lam / psit(lam); };
    const inversion::QTransform f_wtpp = [=](const QComplex& lam) {
        return (lam * lam) / psit(lam) - QComplex{__float128(2.0) / s2, 0};
    };
    const inversion::QTransform f_u = [=](const QComplex& lam) {
        return QComplex{g, 0} / ((lam + QComplex{ph, 0}) * psit(lam));
    };
    // untilted transforms of sup_defect and its derivative; the factor
    // (lambda - Phi) removes the pole at Phi, so the Talbot contour applies
    const inversion::QTransform f_n = [=](const QComplex& lam) {
        return (g * (lam - QComplex{ph, 0})) / (lam * (psi0(lam) - QComplex{g, 0}));
    };
    const inversion::QTransform f_np = [=](const QComplex& lam) {
        return (g * (lam - QComplex{ph, 0})) / (psi0(lam) - QComplex{g, 0});
    };

    const double pp = psi_prime_phi_;
    const double tilt_drift = m.mu + s2 * ph;
    wtp_[0] = wprime0_;
    wtpp_[0] = -4.0 * tilt_drift / (s2 * s2);
    np_[0] = g * wprime0_;

    for (std::size_t i = 1; i < x_.size(); ++i) {
        const double x = x_[i];
        const double wt_scale = pp > kFlatTail ? 1.0 / pp : 2.0 * x / s2;
        wt_[i] = inversion::invert_checked(f_wt, x, wt_scale);
        wtp_[i] = inversion::invert_checked(f_wtp, x, wprime0_);
        wtpp_[i] = inversion::invert_checked(f_wtpp, x, std::max(std::abs(wtpp_[0]), 1.0));
        if (g > 0.0) {
            u_[i] = inversion::invert_checked(f_u, x, g / (ph * pp));
            n_[i] = inversion::invert_checked(f_n, x, ph);
            np_[i] = inversion::invert_checked(f_np, x, g * wprime0_);
        }
    }
}

std::size_t ScaleTable::interval_of(double x) const {
    // largest i with x_[i] <= x; caller guarantees 0 <= x < x_.back()
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    return std::size_t(it - x_.begin()) - 1;
}

double ScaleTable::wt_at(double x) const {
    if (x <= 0.0)
        return 0.0;
    if (x >= x_.back()) {
        if (psi_prime_phi_ > kFlatTail)
            return 1.0 / psi_prime_phi_;  // W(x) ~ e^{Phi x}/psi'(Phi)
        return wt_.back() + wtp_.back() * (x - x_.back());
    }
    const std::size_t i = interval_of(x);
    const double h = x_[i + 1] - x_[i];
    return hermite((x - x_[i]) / h, h, wt_[i], wt_[i + 1], wtp_[i], wtp_[i + 1]);
}

double ScaleTable::wtp_at(double x) const {
    if (x <= 0.0)
        return wprime0_;
    if (x >= x_.back())
        return psi_prime_phi_ > kFlatTail ? 0.0 : wtp_.back();
    const std::size_t i = interval_of(x);
    const double h = x_[i + 1] - x_[i];
    return hermite((x - x_[i]) / h, h, wtp_[i], wtp_[i + 1], wtpp_[i], wtpp_[i + 1]);
}

double ScaleTable::u_at(double x) const {
    if (x <= 0.0 || gamma_ == 0.0)
        return 0.0;
    if (x >= x_.back()) {
        // Z - 1 continues as (Z(xmax)-1) + gamma W_inf (e^{Phi x}-e^{Phi xmax})/Phi
        const double wt_inf = psi_prime_phi_ > kFlatTail ? 1.0 / psi_prime_phi_ : wt_.back();
        const double dx = x - x_.back();
        return u_.back() * std::exp(-phi_ * dx) - gamma_ / phi_ * wt_inf * std::expm1(-phi_ * dx);
    }
    const std::size_t i = interval_of(x);
    const double h = x_[i + 1] - x_[i];
    const double d0 = gamma_ * wt_[i] - phi_ * u_[i];
    const double d1 = gamma_ * wt_[i + 1] - phi_ * u_[i + 1];
    return hermite((x - x_[i]) / h, h, u_[i], u_[i + 1], d0, d1);
}

double ScaleTable::n_at(double x) const {
    if (x <= 0.0 || gamma_ == 0.0)
        return 0.0;
    if (method_ == ScaleMethod::ClosedForm && cf_s_ > 0.0) {
        const double c = gamma_ / cf_s_ * (1.0 - cf_root_pos_ / cf_root_neg_);
        return -c * std::expm1(cf_root_neg_ * x);
    }
    if (x >= x_.back()) {
        // log-linear continuation of the complement Phi - n
        const double rem = phi_ - n_.back();
        if (rem <= 0.0 || np_.back() <= 0.0)
            return n_.back();
        return phi_ - rem * std::exp(-np_.back() / rem * (x - x_.back()));
    }
    const std::size_t i = interval_of(x);
    const double h = x_[i + 1] - x_[i];
    return hermite((x - x_[i]) / h, h, n_[i], n_[i + 1], np_[i], np_[i + 1]);
}

double ScaleTable::w(double x) const {
    if (x < 0.0)
        throw std::domain_error("ScaleTable::w: x must be >= 0");
    if (x == 0.0)
        return 0.0;
    if (method_ == ScaleMethod::ClosedForm) {
        if (cf_s_ > 0.0)
            return -std::expm1((cf_root_neg_ - cf_root_pos_) * x) / cf_s_ *
                   std::exp(cf_root_pos_ * x);
        return 2.0 * x / (model_.sigma * model_.sigma);
    }
    return std::exp(phi_ * x) * wt_at(x);
}

double ScaleTable::w_prime(double x) const {
    if (!(x > 0.0))
        throw std::domain_error("ScaleTable::w_prime: x must be > 0");
    if (method_ == ScaleMethod::ClosedForm) {
        if (cf_s_ > 0.0)
            return (cf_root_pos_ * std::exp(cf_root_pos_ * x) -
                    cf_root_neg_ * std::exp(cf_root_neg_ * x)) / cf_s_;
        return 2.0 / (model_.sigma * model_.sigma);
    }
    return std::exp(phi_ * x) * (phi_ * wt_at(x) + wtp_at(x));
}

double ScaleTable::z(double x) const {
    if (x < 0.0)
        throw std::domain_error("ScaleTable::z: x must be >= 0");
    if (x == 0.0 || gamma_ == 0.0)
        return 1.0;
    if (method_ == ScaleMethod::ClosedForm)
        return 1.0 + gamma_ / cf_s_ * (std::expm1(cf_root_pos_ * x) / cf_root_pos_ -
                                       std::expm1(cf_root_neg_ * x) / cf_root_neg_);
    return 1.0 + std::exp(phi_ * x) * u_at(x);
}

double ScaleTable::w_tilted(double x) const {
    if (x < 0.0)
        throw std::domain_error("ScaleTable::w_tilted: x must be >= 0");
    if (x == 0.0)
        return 0.0;
    if (method_ == ScaleMethod::ClosedForm) {
        if (cf_s_ > 0.0)
            return -std::expm1((cf_root_neg_ - cf_root_pos_) * x) / cf_s_;
        return 2.0 * x / (model_.sigma * model_.sigma);
    }
    return wt_at(x);
}

double ScaleTable::w_tilted_prime(double x) const {
    if (x < 0.0)
        throw std::domain_error("ScaleTable::w_tilted_prime: x must be >= 0");
    if (method_ == ScaleMethod::ClosedForm) {
        if (cf_s_ > 0.0)
            return (cf_root_pos_ - cf_root_neg_) * std::exp((cf_root_neg_ - cf_root_pos_) * x) /
                   cf_s_;
        return 2.0 / (model_.sigma * model_.sigma);
    }
    return wtp_at(x);
}

double ScaleTable::z_minus_one_tilted(double x) const {
    if (x < 0.0)
        throw std::domain_error("ScaleTable::z_minus_one_tilted: x must be >= 0");
    if (x == 0.0 || gamma_ == 0.0)
        return 0.0;
    if (method_ == ScaleMethod::ClosedForm)
        return std::exp(-phi_ * x) * gamma_ / cf_s_ *
               (std::expm1(cf_root_pos_ * x) / cf_root_pos_ -
                std::expm1(cf_root_neg_ * x) / cf_root_neg_);
    return u_at(x);
}

double ScaleTable::log_w(double x) const {
    if (!(x > 0.0))
        throw std::domain_error("ScaleTable::log_w: x must be > 0");
    return phi_ * x + std::log(w_tilted(x));
}

double ScaleTable::down_crossing_lt(double x) const {
    if (x < 0.0)
        throw std::domain_error("ScaleTable::down_crossing_lt: x must be >= 0");
    if (x == 0.0)
        return 1.0;
    if (gamma_ == 0.0) {
        // P_x(tau_0^- < inf): 1 when the process does not drift to +inf
        if (phi_ > 0.0 || psi_prime0_ <= 0.0)
            return 1.0;
        return 1.0 - psi_prime0_ * w(x);
    }
    return 1.0 - n_at(x) / phi_;
}

double ScaleTable::sup_defect(double x) const {
    if (x < 0.0)
        throw std::domain_error("ScaleTable::sup_defect: x must be >= 0");
    if (gamma_ == 0.0)
        return 0.0;
    return n_at(x);
}

void ScaleTable::dump_csv(std::ostream& out) const {
    char buf[288];
    std::snprintf(buf, sizeof buf,
                  "# levydd scale table model_hash=%016llx gamma=%.17g phi=%.17g "
                  "psi_prime_phi=%.17g psi_prime0=%.17g wprime0=%.17g method=%s\n",
                  (unsigned long long)model_hash(model_), gamma_, phi_, psi_prime_phi_,
                  psi_prime0_, wprime0_,
                  method_ == ScaleMethod::ClosedForm ? "closed_form" : "inverted");
    out << buf << "x,W,Wprime,Z\n";
    for (std::size_t i = 0; i < x_.size(); ++i) {
        const double x = x_[i];
        const double wp = i == 0 ? wprime0_ : w_prime(x);  // W'(0+) limit on the first row
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x, w(x), wp, z(x));
        out << buf;
    }
}

ScaleTable ScaleTable::load_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("# levydd scale table", 0) != 0)
        throw std::invalid_argument("ScaleTable::load_csv: missing header line");

    ScaleTable t;
    t.method_ = ScaleMethod::Loaded;
    const auto grab = [&line](const char* key) {
        const auto pos = line.find(key);
        if (pos == std::string::npos)
            throw std::invalid_argument(std::string("ScaleTable::load_csv: header lacks ") + key);
        return std::stod(line.substr(pos + std::string(key).size()));
    };
    t.gamma_ = grab("gamma=");
    t.phi_ = grab("phi=");
    t.psi_prime_phi_ = grab("psi_prime_phi=");
    t.psi_prime0_ = grab("psi_prime0=");
    t.wprime0_ = grab("wprime0=");

    if (!std::getline(in, line) || line != "x,W,Wprime,Z")
        throw std::invalid_argument("ScaleTable::load_csv: missing column header");

    std::vector<double> xs, ws, wps, zs;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        double x, w, wp, z;
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg", &x, &w, &wp, &z) != 4)
            throw std::invalid_argument("ScaleTable::load_csv: bad data row: " + line);
        xs.push_back(x);
        ws.push_back(w);
        wps.push_back(wp);
        zs.push_back(z);
    }
    if (xs.size() < 8 || xs.front() != 0.0)
        throw std::invalid_argument("ScaleTable::load_csv: need a grid starting at x=0");

    const std::size_t n = xs.size();
    t.x_ = xs;
    t.grid_ = GridSpec{xs[1], xs.back(), n - 1};
    t.wt_.assign(n, 0.0);
    t.wtp_.assign(n, 0.0);
    t.wtpp_.assign(n, 0.0);
    t.u_.assign(n, 0.0);
    t.n_.assign(n, 0.0);
    t.np_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double e = std::exp(-t.phi_ * xs[i]);
        t.wt_[i] = ws[i] * e;
        t.wtp_[i] = wps[i] * e - t.phi_ * t.wt_[i];
        t.u_[i] = (zs[i] - 1.0) * e;
        t.n_[i] = t.gamma_ * ws[i] - t.phi_ * (zs[i] - 1.0);
        t.np_[i] = t.gamma_ * (wps[i] - t.phi_ * ws[i]);
    }
    // second derivative of the tilted W is not persisted; use three-point
    // finite differences on the (non-uniform) grid for the Hermite slopes
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = xs[i] - xs[i - 1], hr = xs[i + 1] - xs[i];
        t.wtpp_[i] = (hl * (t.wtp_[i + 1] - t.wtp_[i]) / hr +
                      hr * (t.wtp_[i] - t.wtp_[i - 1]) / hl) / (hl + hr);
    }
    t.wtpp_[0] = (t.wtp_[1] - t.wtp_[0]) / (xs[1] - xs[0]);
    t.wtpp_[n - 1] = (t.wtp_[n - 1] - t.wtp_[n - 2]) / (xs[n - 1] - xs[n - 2]);
    return t;
}

} // namespace levydd
