#pragma once

#include <optional>
#include <vector>

#include "rmscd/graph.hpp"

namespace rmscd {

// Shannon entropy of a label vector, in bits.
double entropy(const std::vector<int>& labels);

// I(Y;C) = H(Y) - H(Y|C), computed from the joint contingency table.
double mutual_information(const std::vector<int>& y, const std::vector<int>& c);

// 2*I/(H(Y)+H(C)). Two trivial partitions are identical, so the degenerate
// 0/0 case evaluates to 1.
double nmi(const std::vector<int>& y, const std::vector<int>& c);

// Adjacency-matrix modularity, direct double sum over ordered pairs.
// Requires all weights 1; weighted graphs must use modularity_weighted.
double modularity_adjacency(const Graph& g, const std::vector<int>& labels);

// Community-sum modularity over edge weights; on unweighted graphs it equals
// modularity_adjacency. Each undirected edge counts once in e_kk.
double modularity_weighted(const Graph& g, const std::vector<int>& labels);

struct MetricsReport {
    std::optional<double> nmi;
    std::optional<double> modularity;
    int num_clusters = 0;
};

MetricsReport evaluate(const Graph& g, const std::vector<int>& labels,
                       const GroundTruth* truth = nullptr);

}  // namespace rmscd
