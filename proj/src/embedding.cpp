#include "qar/embedding.hpp"

#include "qar/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace qar {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Index> columns_with_label(const std::vector<int>& labels, int label) {
  std::vector<Index> out;
  for (std::size_t c = 0; c < labels.size(); ++c)
    if (labels[c] == label) out.push_back(static_cast<Index>(c));
  if (out.empty())
    throw std::out_of_range("gather_class: unknown class label " + std::to_string(label));
  return out;
}

}  // namespace

RealStackVector::RealStackVector(Vector stacked) : values_(std::move(stacked)) {
  if (values_.size() % 4 != 0)
    throw dimension_error("RealStackVector: length must be divisible by 4");
}

RealBlockMatrix::RealBlockMatrix(Matrix dense, Index pixels, Index atoms,
                                 std::vector<int> labels)
    : dense_(std::move(dense)), pixels_(pixels), atoms_(atoms), labels_(std::move(labels)) {
  if (dense_.rows() != 4 * pixels_ || dense_.cols() != 4 * atoms_)
    throw dimension_error("RealBlockMatrix: dense shape must be 4q x 4L");
  if (labels_.empty()) labels_.assign(static_cast<std::size_t>(atoms_), 0);
  if (static_cast<Index>(labels_.size()) != atoms_)
    throw dimension_error("RealBlockMatrix: need one label per atom");
}

std::vector<int> RealBlockMatrix::expanded_labels() const {
  std::vector<int> out;
  out.reserve(labels_.size() * 4);
  for (int b = 0; b < 4; ++b) out.insert(out.end(), labels_.begin(), labels_.end());
  return out;
}

std::vector<int> RealBlockMatrix::classes() const { return sorted_unique(labels_); }

Matrix RealBlockMatrix::block(int r, int c) const {
  return dense_.block(r * pixels_, c * atoms_, pixels_, atoms_);
}

std::vector<int> LabeledMatrix::classes() const { return sorted_unique(labels); }

RealBlockMatrix embed_matrix(const QuaternionMatrix& V, std::vector<int> labels) {
  V.validate();
  const Index q = V.rows();
  const Index L = V.cols();
  Matrix R(4 * q, 4 * L);
  // (row block, col block) -> (+/-, part)
  const Matrix* parts[4] = {&V.V0, &V.V1, &V.V2, &V.V3};
  static constexpr int kPart[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{1, -1, -1, -1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      R.block(r * q, c * L, q, L) = static_cast<double>(kSign[r][c]) * *parts[kPart[r][c]];
  return RealBlockMatrix(std::move(R), q, L, std::move(labels));
}

RealStackVector embed_vector(const QuaternionVector& v) {
  v.validate();
  const Index q = v.size();
  Vector out(4 * q);
  out << v.v0, v.v1, v.v2, v.v3;
  return RealStackVector(std::move(out));
}

QuaternionVector unembed_vector(const Vector& stacked) {
  if (stacked.size() == 0 || stacked.size() % 4 != 0)
    throw dimension_error("unembed_vector: length must be a positive multiple of 4");
  const Index q = stacked.size() / 4;
  return QuaternionVector(stacked.segment(0, q), stacked.segment(q, q),
                          stacked.segment(2 * q, q), stacked.segment(3 * q, q));
}

QuaternionVector unembed_vector(const RealStackVector& v) { return unembed_vector(v.values()); }

ClassBlock gather_class(const RealBlockMatrix& D, const Vector& code, int label) {
  const Index L = D.atoms();
  const Index q = D.pixels();
  if (code.size() != 4 * L)
    throw dimension_error("gather_class: code length must be 4L for a block dictionary");
  const std::vector<Index> cols = columns_with_label(D.labels(), label);
  const Index n = static_cast<Index>(cols.size());

  Matrix sub(4 * q, 4 * n);
  Vector sub_code(4 * n);
  for (int b = 0; b < 4; ++b) {
    for (Index t = 0; t < n; ++t) {
      sub.col(b * n + t) = D.dense().col(b * L + cols[static_cast<std::size_t>(t)]);
      sub_code(b * n + t) = code(b * L + cols[static_cast<std::size_t>(t)]);
    }
  }
  return {RealBlockMatrix(std::move(sub), q, n, std::vector<int>(static_cast<std::size_t>(n), label)),
          std::move(sub_code)};
}

ClassColumns gather_class(const LabeledMatrix& D, const Vector& code, int label) {
  if (static_cast<Index>(D.labels.size()) != D.values.cols() || code.size() != D.values.cols())
    throw dimension_error("gather_class: need one label and one coefficient per column");
  const std::vector<Index> cols = columns_with_label(D.labels, label);
  ClassColumns out{Matrix(D.values.rows(), static_cast<Index>(cols.size())),
                   Vector(static_cast<Index>(cols.size()))};
  for (std::size_t t = 0; t < cols.size(); ++t) {
    out.columns.col(static_cast<Index>(t)) = D.values.col(cols[t]);
    out.code(static_cast<Index>(t)) = code(cols[t]);
  }
  return out;
}

}  // namespace qar
