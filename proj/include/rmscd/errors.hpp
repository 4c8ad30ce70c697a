#pragma once

#include <stdexcept>
#include <string>

namespace rmscd {

// Malformed input files (edge lists, GML, ground truth, clustering JSON).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that violates a data contract (unknown node,
// missing label, weighted graph where an unweighted one is required).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed (cycle in a medoid chain).
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iteration safety bound exceeded before the medoid map stabilized.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rmscd
