#pragma once

#include <map>
#include <string>

#include "chaoskit/multi_index.hpp"
#include "chaoskit/time_grid.hpp"

namespace chaoskit {

/// Sparse chaos spectrum of a functional X in L^2(mu^N): the map
/// MultiIndex -> c_{(k_1,...,k_N)} with c the coefficient against the
/// orthonormal tensor-Hermite basis prod_i H_{k_i}(dW_i/sqrt(dt)).
/// Immutable in spirit: operations return new spectra.
class ChaosSpectrum {
public:
    ChaosSpectrum() = default;
    ChaosSpectrum(TimeGrid grid, int n_max) : grid_(grid), n_max_(n_max) {}

    const TimeGrid& grid() const { return grid_; }
    int n_max() const { return n_max_; }
    std::size_t size() const { return coeffs_.size(); }

    // ordered lexicographically, so every iteration is deterministic
    const std::map<MultiIndex, double>& coeffs() const { return coeffs_; }

    double get(const MultiIndex& k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? 0.0 : it->second;
    }

    /// Inserts or accumulates; exact zeros are dropped, indices beyond
    /// the truncation degree are rejected.
    void set(const MultiIndex& k, double c);
    void add(const MultiIndex& k, double c);

    double mean() const { return get(MultiIndex::zero(grid_.N)); }

    /// Parseval sum of squared coefficients (= ||X||^2 in L^2(mu^N)).
    double l2_squared() const;
    double variance() const;

    /// CSV dump: header k_1,...,k_N,coeff; scientific, 17 significant digits.
    std::string to_csv() const;

private:
    TimeGrid grid_;
    int n_max_ = 0;
    std::map<MultiIndex, double> coeffs_;
};

} // namespace chaoskit
