#include "chaoskit/gaussian_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "chaoskit/accum.hpp"
#include "chaoskit/hermite.hpp"
#include "chaoskit/parallel.hpp"

namespace chaoskit {

namespace {

constexpr double kTensorBudget = 1e8;

void check_tensor_guard(const TimeGrid& grid, int n_max, int quad_order) {
    double nodes = std::pow(double(quad_order), grid.N);
    if (nodes > kTensorBudget)
        throw FeasibilityError("project_chaos: quad_order^N = " + std::to_string(nodes) +
                               " exceeds 1e8; use the 1-D or additive closed forms");
    if (count_multi_indices(grid.N, n_max) > kTensorBudget)
        throw FeasibilityError("project_chaos: multi-index count exceeds 1e8");
}

} // namespace

ChaosSpectrum project_chaos(const FunctionalSpec& x, const TimeGrid& grid, int n_max, int quad_order) {
    if (n_max < 0) throw std::invalid_argument("project_chaos: n_max must be >= 0");
    if (quad_order < n_max + 1)
        throw std::invalid_argument("project_chaos: quad_order must be >= n_max + 1");
    check_tensor_guard(grid, n_max, quad_order);

    const int N = grid.N;
    const double sdt = std::sqrt(grid.dt());
    QuadratureRule rule = gauss_hermite_rule(quad_order);

    // H_n(z_j) table, laid out [n][j]
    std::vector<double> htab(std::size_t(n_max + 1) * quad_order);
    {
        std::vector<double> col(n_max + 1);
        for (int j = 0; j < quad_order; ++j) {
            hermite_fill(n_max, rule.nodes[j], col.data());
            for (int n = 0; n <= n_max; ++n) htab[std::size_t(n) * quad_order + j] = col[n];
        }
    }

    std::vector<MultiIndex> indices;
    for_each_multi_index(N, n_max, [&](const MultiIndex& k) { indices.push_back(k); });

    std::size_t outer = std::size_t(quad_order);  // split on the first axis
    std::size_t inner = 1;
    for (int d = 1; d < N; ++d) inner *= quad_order;

    std::size_t nchunks = (outer + 3) / 4;
    std::vector<std::vector<Accumulator>> partial(nchunks);

    parallel_chunks(outer, 4, [&](std::size_t c, std::size_t jb, std::size_t je) {
        std::vector<Accumulator> acc(indices.size());
        std::vector<int> digit(N, 0);
        std::vector<double> dw(N);
        for (std::size_t j0 = jb; j0 < je; ++j0) {
            digit.assign(N, 0);
            digit[0] = static_cast<int>(j0);
            for (std::size_t step = 0; step < inner; ++step) {
                double w = 1.0;
                for (int d = 0; d < N; ++d) {
                    w *= rule.weights[digit[d]];
                    dw[d] = sdt * rule.nodes[digit[d]];
                }
                double fx = x(grid, dw);
                if (fx != 0.0) {
                    double wf = w * fx;
                    for (std::size_t i = 0; i < indices.size(); ++i) {
                        double p = wf;
                        const auto& k = indices[i].k;
                        for (int d = 0; d < N; ++d)
                            p *= htab[std::size_t(k[d]) * quad_order + digit[d]];
                        acc[i].add(p);
                    }
                }
                // odometer over axes 2..N
                int d = N - 1;
                while (d >= 1) {
                    if (++digit[d] < quad_order) break;
                    digit[d] = 0;
                    --d;
                }
                if (d < 1) break;
            }
        }
        partial[c] = std::move(acc);
    });

    ChaosSpectrum out(grid, n_max);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        Accumulator total;
        for (std::size_t c = 0; c < nchunks; ++c)
            if (!partial[c].empty()) total.add(partial[c][i].value());
        double v = total.value();
        if (v != 0.0) out.set(indices[i], v);
    }
    return out;
}

double tensor_expectation(const FunctionalSpec& x, const TimeGrid& grid, int quad_order) {
    check_tensor_guard(grid, 0, quad_order);
    const int N = grid.N;
    const double sdt = std::sqrt(grid.dt());
    QuadratureRule rule = gauss_hermite_rule(quad_order);

    std::vector<int> digit(N, 0);
    std::vector<double> dw(N);
    Accumulator acc;
    while (true) {
        double w = 1.0;
        for (int d = 0; d < N; ++d) {
            w *= rule.weights[digit[d]];
            dw[d] = sdt * rule.nodes[digit[d]];
        }
        acc.add(w * x(grid, dw));
        int d = N - 1;
        while (d >= 0) {
            if (++digit[d] < quad_order) break;
            digit[d] = 0;
            --d;
        }
        if (d < 0) break;
    }
    return acc.value();
}

double evaluate(const ChaosSpectrum& x, const std::vector<double>& point) {
    const TimeGrid& grid = x.grid();
    if (static_cast<int>(point.size()) != grid.N)
        throw std::invalid_argument("evaluate: point length != N");
    const double sdt = std::sqrt(grid.dt());

    std::vector<double> htab(std::size_t(grid.N) * (x.n_max() + 1));
    for (int d = 0; d < grid.N; ++d)
        hermite_fill(x.n_max(), point[d] / sdt, htab.data() + std::size_t(d) * (x.n_max() + 1));

    Accumulator acc;
    for (const auto& [k, c] : x.coeffs()) {
        double p = c;
        for (int d = 0; d < grid.N; ++d)
            p *= htab[std::size_t(d) * (x.n_max() + 1) + k.k[d]];
        acc.add(p);
    }
    return acc.value();
}

ChaosSpectrum conditional_expectation(const ChaosSpectrum& x, int l) {
    if (l < 0 || l > x.grid().N)
        throw std::invalid_argument("conditional_expectation: l out of range [0, N]");
    ChaosSpectrum out(x.grid(), x.n_max());
    for (const auto& [k, c] : x.coeffs())
        if (k.trailing() <= l) out.set(k, c);
    return out;
}

ChaosSpectrum derivative(const ChaosSpectrum& x, int l) {
    if (l < 1 || l > x.grid().N)
        throw std::invalid_argument("derivative: l out of range [1, N]");
    ChaosSpectrum out(x.grid(), std::max(0, x.n_max() - 1));
    const double dt = x.grid().dt();
    for (const auto& [k, c] : x.coeffs()) {
        int kl = k.k[l - 1];
        if (kl == 0) continue;
        MultiIndex down = k;
        down.k[l - 1] = kl - 1;
        out.set(down, std::sqrt(kl / dt) * c);
    }
    return out;
}

double sobolev_norm(const ChaosSpectrum& x, double s) {
    Accumulator acc;
    for (const auto& [k, c] : x.coeffs())
        acc.add(std::pow(1.0 + k.degree(), s) * c * c);
    return acc.value();
}

} // namespace chaoskit
