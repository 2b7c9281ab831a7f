#include "chaoskit/multi_index.hpp"

namespace chaoskit {

namespace {

void recurse(MultiIndex& idx, int pos, int budget,
             const std::function<void(const MultiIndex&)>& fn) {
    if (pos == idx.dim()) {
        fn(idx);
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        idx.k[pos] = v;
        recurse(idx, pos + 1, budget - v, fn);
    }
    idx.k[pos] = 0;
}

} // namespace

void for_each_multi_index(int dim, int n_max, const std::function<void(const MultiIndex&)>& fn) {
    MultiIndex idx = MultiIndex::zero(dim);
    recurse(idx, 0, n_max, fn);
}

double count_multi_indices(int dim, int n_max) {
    double c = 1.0;
    for (int j = 1; j <= dim; ++j) {
        c *= double(n_max + j) / j;
        if (c > 1e18) return 1e18;
    }
    return c;
}

} // namespace chaoskit
