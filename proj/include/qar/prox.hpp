#pragma once

#include "qar/quaternion.hpp"

namespace qar::prox {

struct ProxTolerance {
  /// Relative cutoff: singular values below svd_cutoff * sigma_max count as zero.
  double svd_cutoff = 1e-12;
};

/// sign(v) * max(|v| - tau, 0), the prox of tau * ||.||_1.
Vector soft_threshold(const Vector& v, double tau);

/// Singular value thresholding, the prox of tau * ||.||_*.
Matrix svt(const Matrix& M, double tau);

/// Sum of singular values.
double nuclear_norm(const Matrix& M);

Index numerical_rank(const Matrix& M, ProxTolerance tol = {});

double l1(const Vector& v);
double l2(const Vector& v);
double linf(const Vector& v);
double frobenius(const Matrix& M);
/// Largest absolute entry; the "infinity norm" used in solver stopping tests.
double max_abs(const Matrix& M);

}  // namespace qar::prox
