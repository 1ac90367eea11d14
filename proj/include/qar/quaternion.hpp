#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace qar {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// q0 + q1 i + q2 j + q3 k
struct Quaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  static constexpr Quaternion real(double x) { return {x, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  bool is_finite() const {
    return std::isfinite(q0) && std::isfinite(q1) && std::isfinite(q2) &&
           std::isfinite(q3);
  }

  constexpr bool operator==(const Quaternion&) const = default;
};

/// Hamilton product a*b. Non-commutative: qmul(i, j) = k, qmul(j, i) = -k.
constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {
      a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
      a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
      a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
      a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0,
  };
}

constexpr Quaternion qconj(const Quaternion& q) {
  return {q.q0, -q.q1, -q.q2, -q.q3};
}

constexpr Quaternion qadd(const Quaternion& a, const Quaternion& b) {
  return {a.q0 + b.q0, a.q1 + b.q1, a.q2 + b.q2, a.q3 + b.q3};
}

inline double qmod(const Quaternion& q) {
  return std::sqrt(q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3);
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return qmul(a, b);
}
constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return qadd(a, b);
}
constexpr Quaternion operator-(const Quaternion& q) {
  return {-q.q0, -q.q1, -q.q2, -q.q3};
}
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return qadd(a, -b);
}

/// A length-q quaternion signal stored as four real channel vectors.
struct QuaternionVector {
  Vector v0, v1, v2, v3;

  QuaternionVector() = default;
  explicit QuaternionVector(Index q);
  QuaternionVector(Vector p0, Vector p1, Vector p2, Vector p3);

  Index size() const { return v0.size(); }
  Quaternion operator[](Index r) const { return {v0(r), v1(r), v2(r), v3(r)}; }
  void set(Index r, const Quaternion& x);

  /// Throws dimension_error unless all parts share a length >= 1.
  void validate() const;
};

/// A q x L quaternion matrix stored as four real matrices.
struct QuaternionMatrix {
  Matrix V0, V1, V2, V3;

  QuaternionMatrix() = default;
  QuaternionMatrix(Index rows, Index cols);
  QuaternionMatrix(Matrix p0, Matrix p1, Matrix p2, Matrix p3);

  Index rows() const { return V0.rows(); }
  Index cols() const { return V0.cols(); }
  Quaternion operator()(Index r, Index c) const {
    return {V0(r, c), V1(r, c), V2(r, c), V3(r, c)};
  }
  void set(Index r, Index c, const Quaternion& x);

  QuaternionVector col(Index c) const;
  void set_col(Index c, const QuaternionVector& v);

  void validate() const;
};

/// Entry-wise quaternion matrix-vector product: (X a)_r = sum_c X(r,c) * a_c.
QuaternionVector qmatvec(const QuaternionMatrix& X, const QuaternionVector& a);

/// Quaternion matrix product (X Y)(r,c) = sum_t X(r,t) * Y(t,c).
QuaternionMatrix qmatmul(const QuaternionMatrix& X, const QuaternionMatrix& Y);

/// Pure quaternion r i + g j + b k per pixel.
QuaternionVector encode_rgb(const Vector& r, const Vector& g, const Vector& b);

}  // namespace qar
