#pragma once

#include "qar/embedding.hpp"
#include "qar/quaternion.hpp"

#include <cmath>
#include <random>

namespace qar::testing {

using Rng = std::mt19937_64;

inline Matrix gaussian(Index r, Index c, Rng& rng) {
  std::normal_distribution<double> n;
  return Matrix::NullaryExpr(r, c, [&] { return n(rng); });
}

inline Vector gaussian_vec(Index n, Rng& rng) { return gaussian(n, 1, rng); }

inline Quaternion random_quaternion(Rng& rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng), n(rng), n(rng)};
}

inline QuaternionMatrix random_qmatrix(Index r, Index c, Rng& rng) {
  return QuaternionMatrix(gaussian(r, c, rng), gaussian(r, c, rng), gaussian(r, c, rng),
                          gaussian(r, c, rng));
}

inline QuaternionVector random_qvector(Index n, Rng& rng) { return random_qmatrix(n, 1, rng).col(0); }

inline Index uniform_index(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

inline Quaternion scale(const Quaternion& q, double s) { return {q.q0 * s, q.q1 * s, q.q2 * s, q.q3 * s}; }

/// Quaternion Gram-Schmidt: columns satisfy X^H X = I, hence the embedding
/// has orthonormal columns. Uses only quaternion arithmetic.
inline QuaternionMatrix orthonormal_qmatrix(Index q, Index L, Rng& rng) {
  QuaternionMatrix X = random_qmatrix(q, L, rng);
  for (Index j = 0; j < L; ++j) {
    for (Index i = 0; i < j; ++i) {
      Quaternion c;
      for (Index r = 0; r < q; ++r) c = c + qconj(X(r, i)) * X(r, j);
      for (Index r = 0; r < q; ++r) X.set(r, j, X(r, j) - X(r, i) * c);
    }
    double norm2 = 0.0;
    for (Index r = 0; r < q; ++r) norm2 += qmod(X(r, j)) * qmod(X(r, j));
    const double inv = 1.0 / std::sqrt(norm2);
    for (Index r = 0; r < q; ++r) X.set(r, j, scale(X(r, j), inv));
  }
  return X;
}

/// L copies of one unit quaternion column.
inline QuaternionMatrix repeated_column_qmatrix(Index q, Index L, Rng& rng) {
  const QuaternionVector d = orthonormal_qmatrix(q, 1, rng).col(0);
  QuaternionMatrix X(q, L);
  for (Index c = 0; c < L; ++c) X.set_col(c, d);
  return X;
}

/// Random quaternion dictionary with unit-norm atoms.
inline QuaternionMatrix unit_atoms_qmatrix(Index q, Index L, Rng& rng) {
  QuaternionMatrix X = random_qmatrix(q, L, rng);
  for (Index c = 0; c < L; ++c) {
    double norm2 = 0.0;
    for (Index r = 0; r < q; ++r) norm2 += qmod(X(r, c)) * qmod(X(r, c));
    const double inv = 1.0 / std::sqrt(norm2);
    for (Index r = 0; r < q; ++r) X.set(r, c, scale(X(r, c), inv));
  }
  return X;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace qar::testing
