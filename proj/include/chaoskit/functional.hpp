#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "chaoskit/payoff.hpp"
#include "chaoskit/time_grid.hpp"

namespace chaoskit {

/// Thrown when a tensor enumeration would exceed the feasibility guard;
/// callers are expected to switch to the 1-D or additive closed forms.
struct FeasibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A functional of the increment vector (dW_1,...,dW_N): a terminal
/// payoff F(W_T), an additive functional sum_i f(t_i, W_{t_i}) dt, or a
/// raw callable.
class FunctionalSpec {
public:
    enum class Kind { terminal, additive, raw };

    static FunctionalSpec terminal(Payoff p) {
        FunctionalSpec s;
        s.kind_ = Kind::terminal;
        s.payoff_ = p;
        return s;
    }

    /// Additive with time-independent integrand f(t, x) = g(x).
    static FunctionalSpec additive(Payoff g) {
        FunctionalSpec s;
        s.kind_ = Kind::additive;
        s.payoff_ = g;
        return s;
    }

    static FunctionalSpec additive_fn(std::function<double(double, double)> f) {
        FunctionalSpec s;
        s.kind_ = Kind::additive;
        s.integrand_ = std::move(f);
        return s;
    }

    static FunctionalSpec raw(std::function<double(const std::vector<double>&)> f) {
        FunctionalSpec s;
        s.kind_ = Kind::raw;
        s.raw_ = std::move(f);
        return s;
    }

    /// Discretized occupation time: sum_i 1_{[0,inf)}(W_{t_i}) dt.
    static FunctionalSpec occupation() { return additive(Payoff{Payoff::Kind::heaviside, 0.0}); }

    Kind kind() const { return kind_; }
    const Payoff& payoff() const { return payoff_; }
    bool has_integrand_fn() const { return static_cast<bool>(integrand_); }
    double integrand(double t, double x) const { return integrand_ ? integrand_(t, x) : payoff_(x); }

    /// Evaluates X at an increment vector.
    double operator()(const TimeGrid& grid, const std::vector<double>& dw) const {
        if (static_cast<int>(dw.size()) != grid.N)
            throw std::invalid_argument("FunctionalSpec: increment vector length != N");
        switch (kind_) {
            case Kind::terminal: {
                double w = 0.0;
                for (double d : dw) w += d;
                return payoff_(w);
            }
            case Kind::additive: {
                double w = 0.0, sum = 0.0;
                for (int i = 1; i <= grid.N; ++i) {
                    w += dw[i - 1];
                    sum += integrand(grid.t(i), w);
                }
                return sum * grid.dt();
            }
            case Kind::raw:
                return raw_(dw);
        }
        return 0.0;
    }

private:
    Kind kind_ = Kind::terminal;
    Payoff payoff_{};
    std::function<double(double, double)> integrand_;
    std::function<double(const std::vector<double>&)> raw_;
};

} // namespace chaoskit
