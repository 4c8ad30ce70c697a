#include "rmscd/rms.hpp"

#include <algorithm>
#include <stdexcept>

#include "rmscd/errors.hpp"
#include "rmscd/parallel.hpp"
#include "rmscd/similarity.hpp"

namespace rmscd {

std::string tie_rule_name(TieRule t) {
    return t == TieRule::lowest_index ? "lowest_index" : "prefer_self";
}

TieRule parse_tie_rule(const std::string& name) {
    if (name == "lowest_index") return TieRule::lowest_index;
    if (name == "prefer_self") return TieRule::prefer_self;
    throw std::invalid_argument("unknown tie rule '" + name + "'");
}

namespace {

std::string set_preview(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size() && i < 8; ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    if (s.size() > 8) out += ",...";
    return out + "} (" + std::to_string(s.size()) + " nodes)";
}

}  // namespace

Clustering medoid_clustering(const SimilarityMatrix& s, int k, const MedoidOptions& opts) {
    const int n = s.size();
    KnnIndex knn = compute_knn_index(s, k, opts.threads);
    const int max_iterations = opts.max_iterations > 0 ? opts.max_iterations : n;

    // NN and DL never change across rounds, so each point's shift target is a
    // fixed function; compute it once. Candidates are the point itself plus
    // the positively-similar part of its KNN list.
    std::vector<int> target(n);
    parallel_for(static_cast<std::size_t>(n), opts.threads, [&](std::size_t i_) {
        const int i = static_cast<int>(i_);
        int best = i;
        double best_dl = knn.dl[i];
        for (int p : knn.nn[i]) {
            if (!(s.at(i, p) > 0.0)) continue;
            if (knn.dl[p] > best_dl || (knn.dl[p] == best_dl && p < best)) {
                best = p;
                best_dl = knn.dl[p];
            }
        }
        if (opts.tie_rule == TieRule::prefer_self && knn.dl[i] == best_dl) best = i;
        target[i] = best;
    });

    Clustering c;
    c.next_medoid.assign(n, -1);

    std::vector<int> set_a(n);
    for (int i = 0; i < n; ++i) set_a[i] = i;

    int rounds = 0;
    while (true) {
        if (rounds >= max_iterations) {
            std::vector<int> set_b;
            set_b.reserve(set_a.size());
            for (int i : set_a) set_b.push_back(target[i]);
            std::sort(set_b.begin(), set_b.end());
            set_b.erase(std::unique(set_b.begin(), set_b.end()), set_b.end());
            throw ConvergenceError("medoid clustering did not converge within " +
                                   std::to_string(max_iterations) + " iterations; last sets " +
                                   set_preview(set_a) + " -> " + set_preview(set_b));
        }
        ++rounds;
        std::vector<int> set_b;
        set_b.reserve(set_a.size());
        for (int i : set_a) {
            const int t = target[i];
            c.next_medoid[i] = t;
            set_b.push_back(t);
            if (opts.record_trace) c.trace.push_back({rounds, i, t});
        }
        std::sort(set_b.begin(), set_b.end());
        set_b.erase(std::unique(set_b.begin(), set_b.end()), set_b.end());
        if (set_b == set_a) {
            for (int i : set_a) c.next_medoid[i] = i;
            break;
        }
        set_a = std::move(set_b);
    }

    c.iterations = rounds;
    c.centers = set_a;
    return c;
}

void assign_labels(Clustering& c) {
    const int n = static_cast<int>(c.next_medoid.size());
    c.labels.assign(n, -1);
    std::vector<int> path;
    for (int i = 0; i < n; ++i) {
        if (c.labels[i] != -1) continue;
        path.clear();
        int cur = i;
        int steps = 0;
        while (c.labels[cur] == -1 && c.next_medoid[cur] != cur) {
            path.push_back(cur);
            cur = c.next_medoid[cur];
            if (++steps > n)
                throw InvariantError("cycle in medoid chain starting at node " +
                                     std::to_string(i));
        }
        const int root = c.labels[cur] != -1 ? c.labels[cur] : cur;
        c.labels[cur] = root;
        for (int p : path) c.labels[p] = root;
    }
    std::vector<int> distinct = c.labels;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    c.num_clusters = static_cast<int>(distinct.size());
}

Clustering run_rms(const Graph& g, int k, const MedoidOptions& opts) {
    if (g.num_nodes() == 0) throw DataError("graph has no nodes");
    SimilarityMatrix s = build_similarity(g, opts.threads);
    Clustering c = medoid_clustering(s, k, opts);
    assign_labels(c);
    return c;
}

void validate_clustering(const Clustering& c) {
    const int n = static_cast<int>(c.next_medoid.size());
    if (c.labels.size() != static_cast<std::size_t>(n))
        throw InvariantError("labels not assigned for every node");
    if (!std::is_sorted(c.centers.begin(), c.centers.end()) ||
        std::adjacent_find(c.centers.begin(), c.centers.end()) != c.centers.end())
        throw InvariantError("centers are not a sorted set");
    for (int center : c.centers)
        if (center < 0 || center >= n || c.next_medoid[center] != center)
            throw InvariantError("center " + std::to_string(center) + " is not a fixed point");
    std::vector<int> distinct = c.labels;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct != c.centers) throw InvariantError("labels do not match the center set");
    if (c.num_clusters != static_cast<int>(c.centers.size()))
        throw InvariantError("num_clusters disagrees with the center set");
    for (int i = 0; i < n; ++i) {
        int cur = i;
        int steps = 0;
        while (c.next_medoid[cur] != cur) {
            cur = c.next_medoid[cur];
            if (++steps > n)
                throw InvariantError("chain from node " + std::to_string(i) +
                                     " does not terminate");
        }
        if (cur != c.labels[i])
            throw InvariantError("label of node " + std::to_string(i) +
                                 " does not match its chain end");
    }
}

}  // namespace rmscd
