#pragma once

#include <cstddef>
#include <vector>

namespace rmscd {

// Dense square matrix, row-major. Sized for the graphs this toolkit targets
// (a few thousand nodes); no sparse storage.
class SquareMatrix {
  public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n) : n_(n), values_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double at(int i, int j) const { return values_[static_cast<std::size_t>(i) * n_ + j]; }
    double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * n_ + j]; }
    const double* row(int i) const { return values_.data() + static_cast<std::size_t>(i) * n_; }

    const std::vector<double>& values() const { return values_; }

    bool operator==(const SquareMatrix& other) const = default;

  private:
    int n_ = 0;
    std::vector<double> values_;
};

// Symmetric, nonnegative, zero-diagonal affinity between node pairs.
struct SimilarityMatrix : SquareMatrix {
    using SquareMatrix::SquareMatrix;
};

// Symmetric, nonnegative, zero-diagonal dissimilarity between node pairs.
struct DistanceMatrix : SquareMatrix {
    using SquareMatrix::SquareMatrix;
};

}  // namespace rmscd
