#include "qar/quaternion.hpp"

#include "qar/errors.hpp"

#include <string>
#include <utility>

namespace qar {

QuaternionVector::QuaternionVector(Index q)
    : v0(Vector::Zero(q)), v1(Vector::Zero(q)), v2(Vector::Zero(q)), v3(Vector::Zero(q)) {}

QuaternionVector::QuaternionVector(Vector p0, Vector p1, Vector p2, Vector p3)
    : v0(std::move(p0)), v1(std::move(p1)), v2(std::move(p2)), v3(std::move(p3)) {
  validate();
}

void QuaternionVector::set(Index r, const Quaternion& x) {
  v0(r) = x.q0;
  v1(r) = x.q1;
  v2(r) = x.q2;
  v3(r) = x.q3;
}

void QuaternionVector::validate() const {
  const Index q = v0.size();
  if (q < 1 || v1.size() != q || v2.size() != q || v3.size() != q)
    throw dimension_error("QuaternionVector: parts must share a length >= 1");
}

QuaternionMatrix::QuaternionMatrix(Index rows, Index cols)
    : V0(Matrix::Zero(rows, cols)),
      V1(Matrix::Zero(rows, cols)),
      V2(Matrix::Zero(rows, cols)),
      V3(Matrix::Zero(rows, cols)) {}

QuaternionMatrix::QuaternionMatrix(Matrix p0, Matrix p1, Matrix p2, Matrix p3)
    : V0(std::move(p0)), V1(std::move(p1)), V2(std::move(p2)), V3(std::move(p3)) {
  validate();
}

void QuaternionMatrix::set(Index r, Index c, const Quaternion& x) {
  V0(r, c) = x.q0;
  V1(r, c) = x.q1;
  V2(r, c) = x.q2;
  V3(r, c) = x.q3;
}

QuaternionVector QuaternionMatrix::col(Index c) const {
  return QuaternionVector(V0.col(c), V1.col(c), V2.col(c), V3.col(c));
}

void QuaternionMatrix::set_col(Index c, const QuaternionVector& v) {
  if (v.size() != rows())
    throw dimension_error("QuaternionMatrix::set_col: length mismatch");
  V0.col(c) = v.v0;
  V1.col(c) = v.v1;
  V2.col(c) = v.v2;
  V3.col(c) = v.v3;
}

void QuaternionMatrix::validate() const {
  const auto same = [&](const Matrix& m) {
    return m.rows() == V0.rows() && m.cols() == V0.cols();
  };
  if (!same(V1) || !same(V2) || !same(V3))
    throw dimension_error("QuaternionMatrix: parts must share dimensions");
}

QuaternionVector qmatvec(const QuaternionMatrix& X, const QuaternionVector& a) {
  if (X.cols() != a.size())
    throw dimension_error("qmatvec: matrix has " + std::to_string(X.cols()) +
                          " columns, vector has length " + std::to_string(a.size()));
  QuaternionVector out(X.rows());
  for (Index r = 0; r < X.rows(); ++r) {
    Quaternion acc;
    for (Index c = 0; c < X.cols(); ++c) acc = qadd(acc, qmul(X(r, c), a[c]));
    out.set(r, acc);
  }
  return out;
}

QuaternionMatrix qmatmul(const QuaternionMatrix& X, const QuaternionMatrix& Y) {
  if (X.cols() != Y.rows()) throw dimension_error("qmatmul: inner dimensions differ");
  QuaternionMatrix out(X.rows(), Y.cols());
  for (Index r = 0; r < X.rows(); ++r) {
    for (Index c = 0; c < Y.cols(); ++c) {
      Quaternion acc;
      for (Index t = 0; t < X.cols(); ++t) acc = qadd(acc, qmul(X(r, t), Y(t, c)));
      out.set(r, c, acc);
    }
  }
  return out;
}

QuaternionVector encode_rgb(const Vector& r, const Vector& g, const Vector& b) {
  if (r.size() != g.size() || r.size() != b.size())
    throw dimension_error("encode_rgb: channel lengths differ");
  return QuaternionVector(Vector::Zero(r.size()), r, g, b);
}

}  // namespace qar
