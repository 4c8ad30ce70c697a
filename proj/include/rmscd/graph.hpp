#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rmscd {

// Undirected edge between dense node ids, canonical orientation u < v.
struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;

    bool operator==(const Edge&) const = default;
};

// Edge as read from a source file: possibly directed, possibly duplicated.
struct RawEdge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// Immutable undirected weighted graph over dense node ids 0..n-1.
// Construct through the parse_* functions or build_graph; after finalize()
// the structure is safe to share across threads.
struct Graph {
    std::vector<std::string> node_names;  // index = dense node id
    std::vector<Edge> edges;              // u < v, one entry per unordered pair, sorted
    bool is_weighted = false;             // source data carried explicit weights
    int dropped_self_loops = 0;

    // Per-node attributes from GML sources ("label", "value"); empty otherwise.
    std::vector<std::map<std::string, std::string>> node_attrs;

    // Derived, filled by finalize().
    std::vector<std::vector<std::pair<int, double>>> adj;

    int num_nodes() const { return static_cast<int>(node_names.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    double total_weight() const;
    std::vector<double> weighted_degrees() const;

    // Sorts edges, validates invariants (unique names, no self-loops, unique
    // pairs, positive weights) and builds the adjacency lists.
    void finalize();
};

// Sums all directed/duplicate edges between each unordered pair into one
// undirected edge; self-loops are dropped and counted.
Graph fold_directed(std::vector<std::string> node_names, const std::vector<RawEdge>& raw,
                    bool is_weighted);

// Text edge list, lines "src dst [weight]" separated by whitespace or commas,
// '#' lines are comments. Node names get dense ids in lexicographic order.
Graph parse_edge_list(std::istream& text, bool directed, bool weighted);

// GML subset: graph [ directed 0|1  node [ id N label "..." value X ]
// edge [ source N target N value W ] ]. Dense ids follow ascending GML id;
// unknown keys and nested blocks are skipped.
Graph parse_gml(std::istream& text);

Graph load_graph_file(const std::string& path, const std::string& format, bool directed,
                      bool weighted);

// Canonical serialization: "u v w" lines with the pair ordered and the lines
// sorted lexicographically by name. Isolated nodes are not representable.
void write_canonical_edge_list(const Graph& g, std::ostream& out);

struct GroundTruth {
    std::vector<int> labels;  // dense node id -> community id 0..C-1
    int num_communities = 0;
};

// "name label" lines; every graph node must appear exactly once. Labels are
// re-mapped to dense integers by first appearance in node-id order.
GroundTruth ground_truth_from_stream(std::istream& text, const Graph& g);

// Reads the named GML node attribute (e.g. "value") off every node.
GroundTruth ground_truth_from_attr(const Graph& g, const std::string& attr);

GroundTruth load_ground_truth_file(const std::string& path, const Graph& g);

}  // namespace rmscd
