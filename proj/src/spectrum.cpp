#include "chaoskit/spectrum.hpp"

#include <cstdio>
#include <stdexcept>

#include "chaoskit/accum.hpp"

namespace chaoskit {

namespace {

void check_index(const ChaosSpectrum& s, const MultiIndex& k, const TimeGrid& grid, int n_max) {
    if (k.dim() != grid.N)
        throw std::invalid_argument("ChaosSpectrum: index dimension != grid N");
    if (k.degree() > n_max)
        throw std::invalid_argument("ChaosSpectrum: index degree exceeds n_max");
    (void)s;
}

} // namespace

void ChaosSpectrum::set(const MultiIndex& k, double c) {
    check_index(*this, k, grid_, n_max_);
    if (c == 0.0)
        coeffs_.erase(k);
    else
        coeffs_[k] = c;
}

void ChaosSpectrum::add(const MultiIndex& k, double c) {
    if (c == 0.0) return;
    check_index(*this, k, grid_, n_max_);
    double& slot = coeffs_[k];
    slot += c;
    if (slot == 0.0) coeffs_.erase(k);
}

double ChaosSpectrum::l2_squared() const {
    Accumulator acc;
    for (const auto& [k, c] : coeffs_) acc.add(c * c);
    return acc.value();
}

double ChaosSpectrum::variance() const {
    Accumulator acc;
    for (const auto& [k, c] : coeffs_)
        if (k.trailing() != 0) acc.add(c * c);
    return acc.value();
}

std::string ChaosSpectrum::to_csv() const {
    std::string out;
    for (int i = 1; i <= grid_.N; ++i) {
        out += "k_" + std::to_string(i);
        out += ',';
    }
    out += "coeff\n";
    char buf[40];
    for (const auto& [k, c] : coeffs_) {
        for (int v : k.k) {
            out += std::to_string(v);
            out += ',';
        }
        std::snprintf(buf, sizeof(buf), "%.16e", c);
        out += buf;
        out += '\n';
    }
    return out;
}

} // namespace chaoskit
