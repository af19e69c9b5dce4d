// Scale-function engine: evaluates W, W', Z for a model/gamma pair, either in
// closed form (Brownian with drift) or by numerical inversion of the defining
// transform int_0^inf e^{-lambda x} W(x) dx = 1/(psi(lambda) - gamma).
//
// Inversion runs on the tilted function Wt(x) = e^{-Phi(gamma) x} W(x) (the
// 0-scale function of the Esscher-tilted process), which is bounded and keeps
// all singularities of the transform on the negative real axis. Cached grid
// values are interpolated by cubic Hermite polynomials with exact derivatives,
// so relative accuracy survives the e^{Phi x} growth of W itself.
//
// Two bounded combinations that the distribution formulas need are inverted
// directly rather than assembled from W and Z (which loses all digits to
// cancellation once Phi*x is large):
//   down_crossing_lt(x) = Z(x) - (gamma/Phi) W(x)      in [0,1], decreasing
//   sup_defect(x)       = gamma W(x) - Phi (Z(x) - 1)  in [0,Phi], increasing
// Both transforms have a removable singularity at Phi, leaving only the
// negative axis.

#pragma once

#include "levydd/levy_model.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace levydd {

enum class ScaleMethod { ClosedForm, Inverted, Loaded };

struct GridSpec {
    double x_min = 1e-4;
    double x_max = 50.0;
    std::size_t points = 512;  // log-spaced nodes on [x_min, x_max]; x=0 is prepended

    void validate() const;
};

class ScaleTable {
public:
    // Closed form when the family has one, numerical inversion otherwise.
    static ScaleTable make(const LevyModel& model, double gamma, const GridSpec& grid = {});
    static ScaleTable closed_form(const LevyModel& model, double gamma, const GridSpec& grid = {});
    static ScaleTable inverted(const LevyModel& model, double gamma, const GridSpec& grid = {});

    double w(double x) const;        // W(x), x >= 0
    double w_prime(double x) const;  // dW/dx, x > 0
    double z(double x) const;        // Z(x) = 1 + gamma * int_0^x W, x >= 0
    double w_tilted(double x) const; // e^{-Phi(gamma) x} W(x)

    // derivative of the tilted W; equals e^{-Phi x}(W'(x) - Phi W(x)), >= 0
    double w_tilted_prime(double x) const;

    // e^{-Phi x} (Z(x) - 1); bounded companion of z() for ratio formulas
    double z_minus_one_tilted(double x) const;

    // log W(x); stays finite where W overflows (used for ratio formulas)
    double log_w(double x) const;

    // E_x[e^{-gamma tau_0^-}; tau_0^- < inf] = Z(x) - (gamma/Phi) W(x),
    // with the gamma = 0 limit Z - psi'(0+) W handled explicitly
    double down_crossing_lt(double x) const;

    // gamma W(x) - Phi (Z(x) - 1); increases from 0 to Phi (gamma > 0 only)
    double sup_defect(double x) const;

    double gamma() const { return gamma_; }
    double phi_gamma() const { return phi_; }
    double psi_prime_phi() const { return psi_prime_phi_; }
    ScaleMethod method() const { return method_; }
    const LevyModel& model() const { return model_; }
    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& grid_x() const { return x_; }

    // CSV persistence: header carries model hash, gamma, phi and method;
    // columns are x, W, Wprime, Z.
    void dump_csv(std::ostream& out) const;
    static ScaleTable load_csv(std::istream& in);

private:
    ScaleTable() = default;
    void build_grid();
    void fill_from_closed_form();
    void fill_from_inversion();
    double wt_at(double x) const;   // tilted W
    double wtp_at(double x) const;  // derivative of tilted W
    double u_at(double x) const;    // e^{-Phi x} (Z(x) - 1)
    double n_at(double x) const;    // sup_defect
    std::size_t interval_of(double x) const;

    LevyModel model_{};
    double gamma_ = 0.0;
    double phi_ = 0.0;
    double psi_prime_phi_ = 0.0;  // psi'(Phi(gamma)) = tilted psi'(0)
    double psi_prime0_ = 0.0;     // psi'(0+), used by the gamma = 0 ruin limit
    double wprime0_ = 0.0;        // W'(0+) = 2 / sigma^2
    ScaleMethod method_ = ScaleMethod::ClosedForm;
    GridSpec grid_{};

    // closed-form representation (BrownianDrift): W = (e^{r+ x} - e^{r- x})/s,
    // degenerating to (2/sigma^2) x when s = 0
    double cf_root_pos_ = 0.0, cf_root_neg_ = 0.0, cf_s_ = 0.0;

    std::vector<double> x_;     // x_[0] = 0
    std::vector<double> wt_;    // tilted W
    std::vector<double> wtp_;   // tilted W'
    std::vector<double> wtpp_;  // tilted W''  (Hermite slopes for wtp_)
    std::vector<double> u_;     // tilted Z - 1
    std::vector<double> n_;     // sup_defect
    std::vector<double> np_;    // its derivative gamma (W' - Phi W), inverted directly
};

} // namespace levydd
