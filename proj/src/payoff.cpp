#include "chaoskit/payoff.hpp"

#include <cmath>
#include <stdexcept>

#include "chaoskit/hermite.hpp"

namespace chaoskit {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779;

int checked_power_exponent(double p) {
    int ip = static_cast<int>(std::lround(p));
    if (ip < 0 || ip > 60 || double(ip) != p)
        throw std::invalid_argument("power payoff: exponent must be an integer in [0, 60]");
    return ip;
}
} // namespace

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double hermite_tail_integral(int m, double a) {
    if (m == 0) return 1.0 - norm_cdf(a);
    return hermite_eval(m - 1, a) * norm_pdf(a) / std::sqrt(double(m));
}

double Payoff::operator()(double x) const {
    switch (kind) {
        case Kind::heaviside: return x >= 0.0 ? 1.0 : 0.0;
        case Kind::call: return std::max(x - param, 0.0);
        case Kind::power: return std::pow(x, checked_power_exponent(param));
        case Kind::sine: return std::sin(x);
    }
    return 0.0;
}

std::string Payoff::str() const {
    switch (kind) {
        case Kind::heaviside: return "heaviside";
        case Kind::call: return "call:" + std::to_string(param);
        case Kind::power: return "power:" + std::to_string(checked_power_exponent(param));
        case Kind::sine: return "sin";
    }
    return "?";
}

Payoff parse_payoff(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    if (head == "heaviside") {
        if (colon != std::string::npos)
            throw std::invalid_argument("payoff 'heaviside' takes no parameter");
        return {Payoff::Kind::heaviside, 0.0};
    }
    if (head == "sin") {
        if (colon != std::string::npos)
            throw std::invalid_argument("payoff 'sin' takes no parameter");
        return {Payoff::Kind::sine, 0.0};
    }
    if (head == "call" || head == "power") {
        if (colon == std::string::npos)
            throw std::invalid_argument("payoff '" + head + "' needs a parameter, e.g. " + head + ":2");
        double v;
        try {
            v = std::stod(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("payoff parameter in '" + text + "' is not a number");
        }
        if (head == "call") return {Payoff::Kind::call, v};
        Payoff p{Payoff::Kind::power, v};
        checked_power_exponent(v);
        return p;
    }
    throw std::invalid_argument("unknown payoff '" + text + "' (grammar: heaviside | call:<K> | power:<p> | sin)");
}

namespace {

// E[Z^j H_m(Z)] = j! / (sqrt(m!) 2^{(j-m)/2} ((j-m)/2)!) when j >= m
// with matching parity, else 0.
double moment_against_hermite(int j, int m) {
    if (j < m || (j - m) % 2 != 0) return 0.0;
    int h = (j - m) / 2;
    double v = 1.0;
    for (int i = 2; i <= j; ++i) v *= i;            // j!
    for (int i = 2; i <= m; ++i) v /= std::sqrt(double(i));  // /sqrt(m!)
    for (int i = 1; i <= h; ++i) v /= 2.0 * i;      // / (2^h h!)
    return v;
}

double smoothed_power(int p, int m, double x, double s) {
    // E[(x + sqrt(s) Z)^p H_m] = sum_j C(p,j) x^{p-j} s^{j/2} E[Z^j H_m]
    double sum = 0.0;
    double sqs = std::sqrt(s);
    for (int j = m; j <= p; ++j) {
        double binom = 1.0;
        for (int i = 1; i <= j; ++i) binom *= double(p - j + i) / i;
        sum += binom * std::pow(x, p - j) * std::pow(sqs, j) * moment_against_hermite(j, m);
    }
    return sum;
}

double smoothed_call(double strike, int m, double x, double s) {
    double sqs = std::sqrt(s);
    double a = (strike - x) / sqs;
    // (x - K + sqrt(s) z) split; z H_m = sqrt(m+1) H_{m+1} + sqrt(m) H_{m-1}
    double v = (x - strike) * hermite_tail_integral(m, a) +
               sqs * std::sqrt(m + 1.0) * hermite_tail_integral(m + 1, a);
    if (m >= 1) v += sqs * std::sqrt(double(m)) * hermite_tail_integral(m - 1, a);
    return v;
}

double smoothed_sine(int m, double x, double s) {
    // Im[e^{ix} E[e^{i sqrt(s) Z} H_m]] with E[e^{lambda Z} H_m] = lambda^m e^{lambda^2/2}/sqrt(m!)
    double amp = std::exp(-0.5 * s) * std::pow(s, 0.5 * m);
    for (int i = 2; i <= m; ++i) amp /= std::sqrt(double(i));
    switch (m % 4) {
        case 0: return amp * std::sin(x);
        case 1: return amp * std::cos(x);
        case 2: return -amp * std::sin(x);
        default: return -amp * std::cos(x);
    }
}

} // namespace

double smoothed_coeff(const Payoff& payoff, int m, double x, double s) {
    if (m < 0) throw std::invalid_argument("smoothed_coeff: m must be >= 0");
    if (!(s > 0.0)) throw std::invalid_argument("smoothed_coeff: s must be > 0");
    switch (payoff.kind) {
        case Payoff::Kind::heaviside: {
            double a = -x / std::sqrt(s);
            return hermite_tail_integral(m, a);
        }
        case Payoff::Kind::call:
            return smoothed_call(payoff.param, m, x, s);
        case Payoff::Kind::power:
            return smoothed_power(checked_power_exponent(payoff.param), m, x, s);
        case Payoff::Kind::sine:
            return smoothed_sine(m, x, s);
    }
    return 0.0;
}

} // namespace chaoskit
