#include "qar/prox.hpp"

#include "qar/errors.hpp"

#include <Eigen/SVD>

#include <stdexcept>

namespace qar::prox {

namespace {

void require_finite(const Matrix& M, const char* who) {
  if (!M.allFinite()) throw numerical_error(std::string(who) + ": non-finite input");
}

void require_tau(double tau, const char* who) {
  if (!(tau >= 0.0)) throw std::invalid_argument(std::string(who) + ": tau must be >= 0");
}

Vector singular_values(const Matrix& M) {
  if (M.size() == 0) return Vector();
  return Eigen::BDCSVD<Matrix>(M).singularValues();
}

}  // namespace

Vector soft_threshold(const Vector& v, double tau) {
  require_tau(tau, "soft_threshold");
  return v.unaryExpr([tau](double x) {
    if (x > tau) return x - tau;
    if (x < -tau) return x + tau;
    return 0.0;
  });
}

Matrix svt(const Matrix& M, double tau) {
  require_tau(tau, "svt");
  require_finite(M, "svt");
  if (M.size() == 0) return M;
  Eigen::BDCSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector shrunk = (svd.singularValues().array() - tau).max(0.0).matrix();
  Index rank = 0;
  while (rank < shrunk.size() && shrunk(rank) > 0.0) ++rank;
  if (rank == 0) return Matrix::Zero(M.rows(), M.cols());
  return svd.matrixU().leftCols(rank) * shrunk.head(rank).asDiagonal() *
         svd.matrixV().leftCols(rank).transpose();
}

double nuclear_norm(const Matrix& M) {
  require_finite(M, "nuclear_norm");
  return singular_values(M).sum();
}

Index numerical_rank(const Matrix& M, ProxTolerance tol) {
  require_finite(M, "numerical_rank");
  const Vector s = singular_values(M);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = tol.svd_cutoff * s(0);
  return (s.array() > cutoff).count();
}

double l1(const Vector& v) { return v.lpNorm<1>(); }
double l2(const Vector& v) { return v.norm(); }
double linf(const Vector& v) { return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>(); }
double frobenius(const Matrix& M) { return M.norm(); }
double max_abs(const Matrix& M) { return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff(); }

}  // namespace qar::prox
