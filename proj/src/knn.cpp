#include "rmscd/knn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rmscd/parallel.hpp"

namespace rmscd {

KnnIndex compute_knn_index(const SimilarityMatrix& s, int k, int threads) {
    if (k < 1) throw std::invalid_argument("k must be at least 1, got " + std::to_string(k));
    const int n = s.size();
    if (n < 1) throw std::invalid_argument("similarity matrix is empty");

    KnnIndex idx;
    idx.k = k;
    const int effective = std::min(k, n - 1);
    idx.clamped = effective < k;
    idx.nn.assign(n, {});
    idx.dl.assign(n, 0.0);

    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i_) {
        const int i = static_cast<int>(i_);
        std::vector<int> order(n - 1);
        int pos = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) order[pos++] = j;
        // similarity descending, index ascending
        std::partial_sort(order.begin(), order.begin() + effective, order.end(),
                          [&](int a, int b) {
                              const double sa = s.at(i, a);
                              const double sb = s.at(i, b);
                              if (sa != sb) return sa > sb;
                              return a < b;
                          });
        order.resize(effective);
        double sum = 0.0;
        for (int j : order) sum += s.at(i, j);
        idx.nn[i] = std::move(order);
        idx.dl[i] = sum;
    });
    return idx;
}

}  // namespace rmscd
