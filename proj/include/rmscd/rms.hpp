#pragma once

#include <string>
#include <vector>

#include "rmscd/graph.hpp"
#include "rmscd/knn.hpp"
#include "rmscd/matrix.hpp"

namespace rmscd {

// Resolution of equal Similarity Sums inside a candidate set. lowest_index is
// the production rule; prefer_self exists for sensitivity reports, it keeps a
// point in place whenever the point itself attains the maximum.
enum class TieRule { lowest_index, prefer_self };

std::string tie_rule_name(TieRule t);
TieRule parse_tie_rule(const std::string& name);

// One recorded shift decision: in round `round`, point `from` chose `to`.
struct ShiftStep {
    int round = 0;
    int from = 0;
    int to = 0;
};

struct Clustering {
    std::vector<int> next_medoid;  // converged medoid map, centers map to themselves
    std::vector<int> centers;      // sorted
    std::vector<int> labels;       // labels[i] = terminal center of i's chain
    int num_clusters = 0;
    int iterations = 0;            // outer rounds executed until set convergence

    std::vector<ShiftStep> trace;  // filled only when requested
};

struct MedoidOptions {
    int max_iterations = 0;  // 0 means n
    TieRule tie_rule = TieRule::lowest_index;
    int threads = 1;
    bool record_trace = false;
};

// Medoid clustering over {i} ∪ NN(i) candidate sets: every point repeatedly
// shifts to the candidate with the largest Similarity Sum until the medoid
// set stops changing. Zero-similarity entries in NN(i) are padding, not
// evidence — they are excluded from the candidate set, so a point with no
// positively-similar neighbor stays put. Labels are not assigned here.
Clustering medoid_clustering(const SimilarityMatrix& s, int k, const MedoidOptions& opts = {});

// Follows next_medoid chains to their fixed points and fills labels,
// num_clusters. Chains longer than n indicate a cycle and raise.
void assign_labels(Clustering& c);

// Full pipeline: similarity (per g.is_weighted), KNN index, medoid
// clustering, label assignment. Deterministic for any thread count.
Clustering run_rms(const Graph& g, int k, const MedoidOptions& opts = {});

// Checks the Clustering invariants (centers self-mapped, chains terminate,
// labels match chain ends, cluster count consistent); throws InvariantError.
void validate_clustering(const Clustering& c);

}  // namespace rmscd
