#pragma once

#include <functional>
#include <numeric>
#include <vector>

namespace chaoskit {

/// One tensor-Hermite basis index (k_1,...,k_N).
struct MultiIndex {
    std::vector<int> k;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries) : k(std::move(entries)) {}
    static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }

    int dim() const { return static_cast<int>(k.size()); }
    int degree() const { return std::accumulate(k.begin(), k.end(), 0); }

    /// Largest l (1-based) with k_l > 0; 0 for the zero index.
    int trailing() const {
        for (int l = dim(); l >= 1; --l)
            if (k[l - 1] > 0) return l;
        return 0;
    }

    /// Value of the trailing entry; 0 for the zero index.
    int trailing_value() const {
        int l = trailing();
        return l == 0 ? 0 : k[l - 1];
    }

    bool operator==(const MultiIndex& o) const { return k == o.k; }
    bool operator<(const MultiIndex& o) const { return k < o.k; }  // lexicographic
};

/// Calls fn(idx) for every multi-index over `dim` coordinates with
/// degree <= n_max, in lexicographic order.
void for_each_multi_index(int dim, int n_max, const std::function<void(const MultiIndex&)>& fn);

/// Number of multi-indices of degree <= n_max over dim coordinates,
/// i.e. C(dim + n_max, dim), saturating at a large cap.
double count_multi_indices(int dim, int n_max);

} // namespace chaoskit
