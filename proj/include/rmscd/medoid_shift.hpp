#pragma once

#include <string>
#include <vector>

#include "rmscd/graph.hpp"
#include "rmscd/rms.hpp"
#include "rmscd/similarity.hpp"

namespace rmscd {

// exp_half is the production kernel exp(-d/2); constant_one turns every
// in-radius point into an equal vote, which reduces the shift target to the
// plain 1-medoid of the neighborhood.
enum class ShiftKernel { exp_half, constant_one };

struct ShiftConfig {
    double radius = 0.0;
    DistanceTransform transform = DistanceTransform::reciprocal;
    ShiftKernel kernel = ShiftKernel::exp_half;
    int threads = 1;
};

// Score row S(i,·) with S(i,j) = sum over all k of D(j,k) * phi(D(i,k)),
// where phi is the kernel truncated to distances <= radius (closed ball).
std::vector<double> shift_scores(const DistanceMatrix& d, int i, double radius,
                                 ShiftKernel kernel = ShiftKernel::exp_half);

// Classic medoid shift: each point moves to the argmin of its score row,
// restricted to the closed radius ball around it (ties to the lowest index),
// and the map is iterated until it stabilizes.
Clustering run_medoid_shift(const Graph& g, const ShiftConfig& cfg);

// Same, starting from an existing distance matrix.
Clustering medoid_shift_on_distances(const DistanceMatrix& d, double radius,
                                     ShiftKernel kernel = ShiftKernel::exp_half, int threads = 1);

}  // namespace rmscd
