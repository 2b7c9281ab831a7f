#pragma once

#include <vector>

#include "chaoskit/functional.hpp"
#include "chaoskit/spectrum.hpp"

namespace chaoskit {

/// Tensor Gauss-Hermite projection of X onto the chaos basis:
/// coeff[k] ~ E[X prod_i H_{k_i}(dW_i/sqrt(dt))]. Guarded by
/// quad_order^N <= 1e8 (and the index-count guard); throws
/// FeasibilityError beyond that.
ChaosSpectrum project_chaos(const FunctionalSpec& x, const TimeGrid& grid, int n_max, int quad_order);

/// Synthesis: sum_k c_k prod_i H_{k_i}(point_i/sqrt(dt)); `point` holds
/// increments.
double evaluate(const ChaosSpectrum& x, const std::vector<double>& point);

/// E[X | G_l] on coefficients: keeps exactly the indices with
/// trailing <= l. l = 0 gives the constant E[X].
ChaosSpectrum conditional_expectation(const ChaosSpectrum& x, int l);

/// Discrete Malliavin derivative d_l as the ladder action
/// out[k] = sqrt((k_l+1)/dt) c(k + e_l).
ChaosSpectrum derivative(const ChaosSpectrum& x, int l);

/// Squared Sobolev norm sum_k (1 + degree(k))^s c_k^2; s = 0 is the
/// squared L^2 norm.
double sobolev_norm(const ChaosSpectrum& x, double s);

/// E[f(dW_1,...,dW_N)] by tensor Gauss-Hermite quadrature (same guard
/// as project_chaos). Test utility and Parseval cross-check.
double tensor_expectation(const FunctionalSpec& x, const TimeGrid& grid, int quad_order);

} // namespace chaoskit
