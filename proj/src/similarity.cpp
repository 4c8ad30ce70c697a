#include "rmscd/similarity.hpp"

#include <algorithm>
#include <stdexcept>

#include "rmscd/errors.hpp"
#include "rmscd/parallel.hpp"

namespace rmscd {

SimilarityMatrix similarity_unweighted(const Graph& g, int threads) {
    const int n = g.num_nodes();
    SimilarityMatrix s(n);
    // Row i: two-pointer intersection of the sorted adjacency lists. Each
    // entry is computed independently, so the result does not depend on the
    // thread count.
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i_) {
        const int i = static_cast<int>(i_);
        const auto& ai = g.adj[i];
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const auto& aj = g.adj[j];
            int common = 0;
            std::size_t p = 0, q = 0;
            while (p < ai.size() && q < aj.size()) {
                const int a = ai[p].first;
                const int b = aj[q].first;
                if (a == b) {
                    ++common;
                    ++p;
                    ++q;
                } else if (a < b) {
                    ++p;
                } else {
                    ++q;
                }
            }
            s.at(i, j) = common;
        }
    });
    return s;
}

SimilarityMatrix similarity_weighted(const Graph& g, int threads) {
    (void)threads;
    SimilarityMatrix s(g.num_nodes());
    for (const Edge& e : g.edges) {
        s.at(e.u, e.v) = e.w;
        s.at(e.v, e.u) = e.w;
    }
    return s;
}

SimilarityMatrix build_similarity(const Graph& g, int threads) {
    return g.is_weighted ? similarity_weighted(g, threads) : similarity_unweighted(g, threads);
}

DistanceTransform parse_transform(const std::string& name) {
    if (name == "reciprocal") return DistanceTransform::reciprocal;
    if (name == "maxminus" || name == "max_minus") return DistanceTransform::max_minus;
    throw std::invalid_argument("unknown distance transform '" + name + "'");
}

std::string transform_name(DistanceTransform t) {
    return t == DistanceTransform::reciprocal ? "reciprocal" : "maxminus";
}

DistanceMatrix distance_from_similarity(const SimilarityMatrix& s, DistanceTransform transform) {
    const int n = s.size();
    if (n == 0) throw DataError("cannot derive distances from an empty similarity matrix");
    DistanceMatrix d(n);
    if (transform == DistanceTransform::reciprocal) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) d.at(i, j) = 1.0 / (1.0 + s.at(i, j));
    } else {
        double max_sim = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) max_sim = std::max(max_sim, s.at(i, j));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) d.at(i, j) = max_sim - s.at(i, j);
    }
    return d;
}

}  // namespace rmscd
