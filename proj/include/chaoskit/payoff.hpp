#pragma once

#include <string>

namespace chaoskit {

/// Terminal payoff catalog: heaviside | call:<K> | power:<p> | sin.
struct Payoff {
    enum class Kind { heaviside, call, power, sine };
    Kind kind = Kind::heaviside;
    double param = 0.0;  // strike for call, exponent for power

    double operator()(double x) const;
    std::string str() const;
};

/// Parses the CLI payoff grammar; throws std::invalid_argument.
Payoff parse_payoff(const std::string& text);

/// E[F(x + sqrt(s) Z) H_m(Z)] for Z ~ N(0,1), in closed form.
///
/// Gaussian smoothing kernel: for m >= 1 it equals
/// (s^{m/2}/sqrt(m!)) E[F^(m)(x + sqrt(s) Z)] without ever touching a
/// pointwise derivative, so it is the production path for conditional
/// integrands of non-smooth payoffs. With x = 0, s = T it yields the
/// one-dimensional chaos profile a_m = E[F(W_T) H_m(W_T/sqrt(T))].
double smoothed_coeff(const Payoff& payoff, int m, double x, double s);

/// Standard normal density and CDF.
double norm_pdf(double x);
double norm_cdf(double x);

/// Tail integral int_a^inf H_m(z) phi(z) dz; equals
/// H_{m-1}(a) phi(a)/sqrt(m) for m >= 1 and 1 - Phi(a) for m = 0.
double hermite_tail_integral(int m, double a);

} // namespace chaoskit
