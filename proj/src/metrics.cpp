#include "rmscd/metrics.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rmscd/errors.hpp"

namespace rmscd {

namespace {

// counts per label, densely re-indexed
std::vector<int> label_counts(const std::vector<int>& labels, std::vector<int>* dense_out) {
    std::unordered_map<int, int> dense;
    std::vector<int> counts;
    if (dense_out) dense_out->resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = dense.emplace(labels[i], static_cast<int>(counts.size()));
        if (inserted) counts.push_back(0);
        ++counts[it->second];
        if (dense_out) (*dense_out)[i] = it->second;
    }
    return counts;
}

double entropy_of_counts(const std::vector<int>& counts, double total) {
    double h = 0.0;
    for (int c : counts) {
        if (c == 0) continue;
        const double p = c / total;
        h -= p * std::log2(p);
    }
    return h;
}

}  // namespace

double entropy(const std::vector<int>& labels) {
    if (labels.empty()) throw std::invalid_argument("entropy of empty label vector");
    return entropy_of_counts(label_counts(labels, nullptr), static_cast<double>(labels.size()));
}

double mutual_information(const std::vector<int>& y, const std::vector<int>& c) {
    if (y.size() != c.size())
        throw std::invalid_argument("label vectors differ in length: " + std::to_string(y.size()) +
                                    " vs " + std::to_string(c.size()));
    if (y.empty()) throw std::invalid_argument("mutual information of empty label vectors");
    const double n = static_cast<double>(y.size());

    // I(Y;C) = H(Y) - H(Y|C), with H(Y|C) accumulated per cluster of C.
    std::vector<int> y_dense, c_dense;
    std::vector<int> y_counts = label_counts(y, &y_dense);
    std::vector<int> c_counts = label_counts(c, &c_dense);

    std::vector<std::vector<int>> joint(c_counts.size(), std::vector<int>(y_counts.size(), 0));
    for (std::size_t i = 0; i < y.size(); ++i) ++joint[c_dense[i]][y_dense[i]];

    double h_y_given_c = 0.0;
    for (std::size_t cc = 0; cc < c_counts.size(); ++cc) {
        const double pc = c_counts[cc] / n;
        h_y_given_c += pc * entropy_of_counts(joint[cc], static_cast<double>(c_counts[cc]));
    }
    return entropy_of_counts(y_counts, n) - h_y_given_c;
}

double nmi(const std::vector<int>& y, const std::vector<int>& c) {
    const double hy = entropy(y);
    const double hc = entropy(c);
    if (hy + hc == 0.0) return 1.0;  // two trivial partitions are identical
    return 2.0 * mutual_information(y, c) / (hy + hc);
}

double modularity_adjacency(const Graph& g, const std::vector<int>& labels) {
    const int n = g.num_nodes();
    if (labels.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("labels do not cover all nodes");
    for (const Edge& e : g.edges)
        if (e.w != 1.0)
            throw DataError("adjacency-form modularity requires all weights 1; "
                            "use modularity_weighted for weighted graphs");
    const double m = static_cast<double>(g.num_edges());
    if (m == 0.0) return 0.0;

    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    std::vector<double> degree(n, 0.0);
    for (const Edge& e : g.edges) {
        a[e.u][e.v] = 1.0;
        a[e.v][e.u] = 1.0;
        degree[e.u] += 1.0;
        degree[e.v] += 1.0;
    }
    double q = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (labels[i] == labels[j]) q += a[i][j] - degree[i] * degree[j] / (2.0 * m);
    return q / (2.0 * m);
}

double modularity_weighted(const Graph& g, const std::vector<int>& labels) {
    const int n = g.num_nodes();
    if (labels.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("labels do not cover all nodes");
    const double m = g.total_weight();
    if (m == 0.0) return 0.0;

    std::map<int, double> intra;   // e_kk: each undirected edge once
    std::map<int, double> degree;  // d_k: sum of weighted degrees
    for (const Edge& e : g.edges) {
        if (labels[e.u] == labels[e.v]) intra[labels[e.u]] += e.w;
        degree[labels[e.u]] += e.w;
        degree[labels[e.v]] += e.w;
    }
    double q = 0.0;
    for (const auto& [community, d_k] : degree) {
        auto it = intra.find(community);
        const double e_kk = it == intra.end() ? 0.0 : it->second;
        q += e_kk / m - (d_k / (2.0 * m)) * (d_k / (2.0 * m));
    }
    return q;
}

MetricsReport evaluate(const Graph& g, const std::vector<int>& labels, const GroundTruth* truth) {
    MetricsReport report;
    report.modularity = modularity_weighted(g, labels);
    std::vector<int> distinct = labels;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    report.num_clusters = static_cast<int>(distinct.size());
    if (truth) report.nmi = nmi(truth->labels, labels);
    return report;
}

}  // namespace rmscd
