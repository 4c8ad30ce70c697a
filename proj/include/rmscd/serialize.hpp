#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmscd/format.hpp"
#include "rmscd/graph.hpp"
#include "rmscd/metrics.hpp"
#include "rmscd/rms.hpp"
#include "rmscd/sweep.hpp"

namespace rmscd {

struct AlgorithmInfo {
    std::string algorithm;  // "rms" or "medoid-shift"
    std::optional<int> k;
    std::optional<double> radius;
    std::optional<std::string> transform;
    std::optional<std::string> kernel;
    std::optional<std::string> tie_rule;
};

// Clustering document: algorithm, parameters, centers and labels by node
// name, iteration count, metrics, and the effective run configuration.
nlohmann::json clustering_to_json(const Graph& g, const Clustering& c, const AlgorithmInfo& info,
                                  const MetricsReport& metrics,
                                  const nlohmann::json& config = nlohmann::json::object());

nlohmann::json metrics_to_json(const MetricsReport& m,
                               const nlohmann::json& config = nlohmann::json::object());

// Reads the labels map {node name -> center name} of a clustering document
// back into dense per-node labels for the given graph.
std::vector<int> labels_from_clustering_json(const nlohmann::json& doc, const Graph& g);

nlohmann::json report_to_json(const ReproduceReport& r);
std::string report_to_text(const ReproduceReport& r);

}  // namespace rmscd
