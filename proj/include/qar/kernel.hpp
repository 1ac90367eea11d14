#pragma once

// Gaussian RBF kernel over stacked quaternion samples, k(a, b) =
// exp(-||a - b||^2 / delta). The high-dimensional map is never formed; all
// arguments are the real 4q-long embeddings.

#include "qar/embedding.hpp"

#include <vector>

namespace qar::kernel {

struct KernelParams {
  double delta = 1.0;

  void validate() const;
};

double rbf(const Vector& a, const Vector& b, KernelParams params);

/// L x L kernel matrix with one class label per row/column.
struct GramMatrix {
  Matrix K;
  std::vector<int> labels;

  Index size() const { return K.rows(); }
  LabeledMatrix labeled() const { return {K, labels}; }
};

/// Columns of `samples` are stacked embeddings. Rows are filled in parallel;
/// the result does not depend on the thread count.
GramMatrix gram(const Matrix& samples, KernelParams params, std::vector<int> labels = {});
GramMatrix gram(const std::vector<QuaternionVector>& samples, KernelParams params,
                std::vector<int> labels = {});
/// Single-threaded reference for gram().
GramMatrix gram_serial(const Matrix& samples, KernelParams params, std::vector<int> labels = {});

Vector kvec(const Matrix& samples, const Vector& x, KernelParams params);
Vector kvec(const std::vector<QuaternionVector>& samples, const QuaternionVector& x,
            KernelParams params);

/// delta = median of the nonzero pairwise squared distances. Throws
/// data_error with fewer than two samples or when every pair coincides.
KernelParams median_bandwidth(const Matrix& samples);
KernelParams median_bandwidth(const std::vector<QuaternionVector>& samples);

/// Stacks embed_vector(samples[i]) as columns.
Matrix stack_samples(const std::vector<QuaternionVector>& samples);

}  // namespace qar::kernel
