#include "rmscd/medoid_shift.hpp"

#include <cmath>
#include <stdexcept>

#include "rmscd/errors.hpp"
#include "rmscd/parallel.hpp"

namespace rmscd {

namespace {

inline double kernel_value(ShiftKernel kernel, double d) {
    return kernel == ShiftKernel::exp_half ? std::exp(-d / 2.0) : 1.0;
}

}  // namespace

std::vector<double> shift_scores(const DistanceMatrix& d, int i, double radius,
                                 ShiftKernel kernel) {
    const int n = d.size();
    std::vector<double> scores(n, 0.0);
    std::vector<double> phi(n, 0.0);
    for (int k = 0; k < n; ++k) {
        const double dik = d.at(i, k);
        if (dik <= radius) phi[k] = kernel_value(kernel, dik);
    }
    for (int j = 0; j < n; ++j) {
        double sum = 0.0;
        const double* row = d.row(j);
        for (int k = 0; k < n; ++k)
            if (phi[k] != 0.0) sum += row[k] * phi[k];
        scores[j] = sum;
    }
    return scores;
}

Clustering medoid_shift_on_distances(const DistanceMatrix& d, double radius, ShiftKernel kernel,
                                     int threads) {
    if (radius < 0.0) throw std::invalid_argument("radius must be nonnegative");
    const int n = d.size();
    if (n == 0) throw DataError("graph has no nodes");

    // The shift target of each point never changes, so compute the map once:
    // argmin of S(i,.) over the closed radius ball, ties to the lowest index.
    std::vector<int> next(n);
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i_) {
        const int i = static_cast<int>(i_);
        std::vector<double> scores = shift_scores(d, i, radius, kernel);
        int best = -1;
        double best_score = 0.0;
        for (int j = 0; j < n; ++j) {
            if (d.at(i, j) > radius) continue;
            if (best == -1 || scores[j] < best_score) {
                best = j;
                best_score = scores[j];
            }
        }
        next[i] = best;  // the ball always contains i itself
    });

    // Iterate the map in parallel rounds until every point sits on a fixed
    // point; cycles cannot stabilize and hit the safety bound.
    Clustering c;
    c.next_medoid = next;
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i;
    int rounds = 0;
    while (true) {
        if (rounds > n)
            throw ConvergenceError("medoid shift map did not stabilize within " +
                                   std::to_string(n) + " iterations (cycle in shift map)");
        ++rounds;
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            const int to = next[cur[i]];
            if (to != cur[i]) {
                cur[i] = to;
                changed = true;
            }
        }
        if (!changed) break;
    }
    c.iterations = rounds;

    assign_labels(c);
    c.centers = c.labels;
    std::sort(c.centers.begin(), c.centers.end());
    c.centers.erase(std::unique(c.centers.begin(), c.centers.end()), c.centers.end());
    return c;
}

Clustering run_medoid_shift(const Graph& g, const ShiftConfig& cfg) {
    if (g.num_nodes() == 0) throw DataError("graph has no nodes");
    SimilarityMatrix s = build_similarity(g, cfg.threads);
    DistanceMatrix d = distance_from_similarity(s, cfg.transform);
    return medoid_shift_on_distances(d, cfg.radius, cfg.kernel, cfg.threads);
}

}  // namespace rmscd
