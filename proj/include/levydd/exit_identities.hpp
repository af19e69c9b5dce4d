// First-passage and drawdown-exit identities over a scale table. Everything
// is expressed in gap coordinates (distances to the barriers), exploiting the
// spatial homogeneity of the process; callers shift absolute levels out.

#pragma once

#include "levydd/scale_functions.hpp"

namespace levydd {

// E[e^{-gamma tau_x^+}] = e^{-Phi(gamma) x} for the barrier x above the start.
double one_sided_up(const ScaleTable& table, double x);

// E_x[e^{-gamma tau_0^-}; tau_0^- < inf] = Z(x) - (gamma/Phi(gamma)) W(x).
double one_sided_down(const ScaleTable& table, double x);

// E_x[e^{-gamma tau_b^+}; tau_b^+ < tau_0^-] = W(x)/W(b), 0 <= x <= b.
double two_sided_up(const ScaleTable& table, double x, double b);

// E_x[e^{-gamma tau_0^-}; tau_0^- < tau_b^+] = Z(x) - Z(b) W(x)/W(b).
double two_sided_down(const ScaleTable& table, double x, double b);

// E_x[e^{-gamma tau_b^+}; tau_b^+ <= alpha_d ^ tau_0^-]
//   = (W(x)/W(d)) e^{-(b-d) W'(d)/W(d)},   0 <= x <= d <= b.
double updown_before_drawdown(const ScaleTable& table, double x, double b, double d);

// E[e^{-gamma alpha_d}; alpha_d < tau^+ at distance `gap` above the start]
//   = (1 - e^{-gap W'(d)/W(d)}) (Z(d) - gamma W(d)^2/W'(d)).
double drawdown_before_up(const ScaleTable& table, double gap, double d);

} // namespace levydd
