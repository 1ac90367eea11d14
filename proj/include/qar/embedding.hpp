#pragma once

// Real embeddings of quaternion data. Every coder in this library works on
// these: a quaternion matrix becomes a 4q x 4L real block matrix whose
// product with a stacked 4L vector reproduces the quaternion product.

#include "qar/quaternion.hpp"

#include <vector>

namespace qar {

/// Stacked [v0; v1; v2; v3], length 4q.
class RealStackVector {
 public:
  RealStackVector() = default;
  explicit RealStackVector(Vector stacked);

  const Vector& values() const { return values_; }
  Index pixels() const { return values_.size() / 4; }
  Index size() const { return values_.size(); }

 private:
  Vector values_;
};

/// The 4q x 4L left-multiplication embedding of a q x L quaternion matrix.
///
/// Block layout (each block q x L):
///
///     [ V0 -V1 -V2 -V3 ]
///     [ V1  V0 -V3  V2 ]
///     [ V2  V3  V0 -V1 ]
///     [ V3 -V2  V1  V0 ]
///
/// Column labels have length L; block-column b, column c carries labels[c].
class RealBlockMatrix {
 public:
  RealBlockMatrix() = default;
  RealBlockMatrix(Matrix dense, Index pixels, Index atoms, std::vector<int> labels);

  const Matrix& dense() const { return dense_; }
  Index pixels() const { return pixels_; }
  Index atoms() const { return atoms_; }
  const std::vector<int>& labels() const { return labels_; }

  /// Labels for all 4L dense columns.
  std::vector<int> expanded_labels() const;
  /// Sorted distinct labels.
  std::vector<int> classes() const;

  /// The (r, c) q x L block, r, c in [0, 4).
  Matrix block(int r, int c) const;

 private:
  Matrix dense_;
  Index pixels_ = 0;
  Index atoms_ = 0;
  std::vector<int> labels_;
};

/// A plain real design matrix with one class label per column (Gram
/// matrices, grayscale dictionaries).
struct LabeledMatrix {
  Matrix values;
  std::vector<int> labels;

  std::vector<int> classes() const;
};

/// Labels default to all-zero when empty.
RealBlockMatrix embed_matrix(const QuaternionMatrix& V, std::vector<int> labels = {});
RealStackVector embed_vector(const QuaternionVector& v);
QuaternionVector unembed_vector(const RealStackVector& v);
QuaternionVector unembed_vector(const Vector& stacked);

struct ClassBlock {
  RealBlockMatrix dictionary;
  Vector code;
};

struct ClassColumns {
  Matrix columns;
  Vector code;
};

/// Restricts D and a 4L-long code to the atoms labeled `label`, keeping the
/// four-block structure. Throws std::out_of_range for an unknown label.
ClassBlock gather_class(const RealBlockMatrix& D, const Vector& code, int label);

/// Restricts a labeled matrix and its L-long code to the columns labeled
/// `label`.
ClassColumns gather_class(const LabeledMatrix& D, const Vector& code, int label);

}  // namespace qar
