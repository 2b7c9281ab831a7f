#pragma once

#include <stdexcept>

namespace chaoskit {

/// Uniform partition t_k = kT/N of [0, T]; the product measure mu^N of
/// i.i.d. N(0, dt) increments is determined by (N, dt).
struct TimeGrid {
    int N = 1;
    double T = 1.0;

    TimeGrid() = default;
    TimeGrid(int n, double horizon) : N(n), T(horizon) {
        if (n < 1) throw std::invalid_argument("TimeGrid: N must be >= 1");
        if (!(horizon > 0.0)) throw std::invalid_argument("TimeGrid: T must be > 0");
    }

    double dt() const { return T / N; }
    double t(int k) const { return k * T / N; }

    bool operator==(const TimeGrid& o) const { return N == o.N && T == o.T; }
};

} // namespace chaoskit
