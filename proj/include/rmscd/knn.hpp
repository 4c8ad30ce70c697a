#pragma once

#include <vector>

#include "rmscd/matrix.hpp"

namespace rmscd {

// Per-node k-nearest-neighbor lists under a similarity matrix, plus the
// Similarity Sum DL(i) = sum of SimM(i,p) over p in NN(i). Neighbor order is
// canonical: similarity descending, node index ascending.
struct KnnIndex {
    int k = 0;             // requested neighbor count
    bool clamped = false;  // true when k exceeded n-1 and was reduced
    std::vector<std::vector<int>> nn;
    std::vector<double> dl;
};

KnnIndex compute_knn_index(const SimilarityMatrix& s, int k, int threads = 1);

}  // namespace rmscd
