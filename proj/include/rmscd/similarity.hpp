#pragma once

#include <string>

#include "rmscd/graph.hpp"
#include "rmscd/matrix.hpp"

namespace rmscd {

// Common-neighbor similarity for unweighted graphs: SimM(i,j) counts the
// shared neighbors of i and j. Adjacent nodes with no common neighbor get 0;
// the diagonal is always 0 and a node is never its own neighbor.
SimilarityMatrix similarity_unweighted(const Graph& g, int threads = 1);

// Weight passthrough for weighted graphs: SimM(i,j) is the edge weight, or 0
// for non-adjacent pairs.
SimilarityMatrix similarity_weighted(const Graph& g, int threads = 1);

// Dispatches on g.is_weighted.
SimilarityMatrix build_similarity(const Graph& g, int threads = 1);

enum class DistanceTransform { reciprocal, max_minus };

DistanceTransform parse_transform(const std::string& name);
std::string transform_name(DistanceTransform t);

// reciprocal: D = 1/(1+SimM); max_minus: D = max off-diagonal SimM − SimM.
// Both keep a zero diagonal and are strictly decreasing in similarity.
DistanceMatrix distance_from_similarity(const SimilarityMatrix& s, DistanceTransform transform);

}  // namespace rmscd
