#pragma once

#include <functional>

#include "chaoskit/clark_ocone.hpp"
#include "chaoskit/functional.hpp"
#include "chaoskit/spectrum.hpp"

namespace chaoskit {

/// 1-D chaos profile of a catalog payoff. Closed forms throughout;
/// quad_order is accepted for interface parity and ignored (notably for
/// the Heaviside, whose profile must never come from quadrature).
OneDimCoeffs coeffs_1d(const Payoff& payoff, double T, int n_max, int quad_order = 0);

/// Profile of an arbitrary payoff by Gauss-Hermite quadrature, with the
/// square-integrability drift check: coefficients are computed at
/// quad_order and quad_order + 8 and must agree to 1e-6 relative, else
/// throws std::domain_error.
OneDimCoeffs coeffs_1d_quadrature(const std::function<double(double)>& payoff, double T, int n_max,
                                  int quad_order);

/// Full spectrum of a terminal payoff F(W_T) on a grid: the multinomial
/// spreading c_k = sqrt(n!/(k_1!..k_N!)) (dt/T)^{n/2} a_n for |k| = n.
/// Exact identity, valid for any N; guarded by the index-count budget.
ChaosSpectrum terminal_spectrum(const OneDimCoeffs& a, const TimeGrid& grid, int n_max);
ChaosSpectrum terminal_spectrum(const Payoff& payoff, const TimeGrid& grid, int n_max);

/// Spectrum of an additive functional sum_i f(t_i, W_{t_i}) dt. The 1-D
/// profile of f(t_i, .) against mu_{t_i} is spread over coordinates
/// 1..i by the terminal rule with T replaced by t_i:
///   c_k = dt sqrt(n!/prod k_j!) sum_{i >= trailing(k)} i^{-n/2} b_n(i).
/// For catalog integrands b_n(i) is closed-form; otherwise 1-D
/// quadrature at quad_order per time node.
ChaosSpectrum build_additive(const FunctionalSpec& f, const TimeGrid& grid, int n_max,
                             int quad_order = 64);

/// sqrt(n!/(k_1!..k_N!)) for a multi-index of degree n.
double multinomial_sqrt(const MultiIndex& k);

} // namespace chaoskit
