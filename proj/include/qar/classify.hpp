#pragma once

#include "qar/embedding.hpp"

#include <vector>

namespace qar {

/// Nearest-class decision over per-class reconstruction distances.
struct Classification {
  int label = -1;
  std::vector<int> classes;       ///< sorted
  std::vector<double> distances;  ///< aligned with `classes`

  double best_distance() const;
};

/// d_c = ||y - D_c code_c||_2, optionally divided by ||code_c||_2. With
/// normalization a class whose block is all zero gets d_c = +inf and
/// classification_error is thrown when that holds for every class.
/// Ties go to the lowest label.
Classification classify_residual(const RealBlockMatrix& D, const Vector& y, const Vector& code,
                                 bool normalize);
Classification classify_residual(const LabeledMatrix& D, const Vector& y, const Vector& code,
                                 bool normalize);

}  // namespace qar
