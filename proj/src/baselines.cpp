#include "qar/baselines.hpp"

#include "qar/errors.hpp"

#include <utility>

namespace qar {

void RidgeConfig::validate() const {
  if (!(mu >= 0.0)) throw config_error("ridge mu must be >= 0");
}

RidgeSolver::RidgeSolver(Matrix design, RidgeConfig cfg) : D_(std::move(design)), cfg_(cfg) {
  cfg_.validate();
  if (D_.size() == 0) throw dimension_error("RidgeSolver: empty design matrix");
  Matrix normal = D_.transpose() * D_;
  normal.diagonal().array() += cfg_.mu;
  llt_.compute(normal);
  // LLT succeeds on some numerically singular matrices; also check the rank
  // when there is no ridge.
  singular_ = llt_.info() != Eigen::Success;
  if (!singular_ && cfg_.mu == 0.0) {
    Eigen::ColPivHouseholderQR<Matrix> qr(D_);
    singular_ = qr.rank() < D_.cols();
  }
  if (singular_) {
    if (cfg_.mu > 0.0) throw numerical_error("RidgeSolver: ridge system is not positive definite");
    cod_.compute(D_);
  }
}

RidgeResult RidgeSolver::solve(const Vector& y) const {
  if (y.size() != D_.rows()) throw dimension_error("RidgeSolver::solve: signal length mismatch");
  if (singular_) return {cod_.solve(y), true};
  return {llt_.solve(D_.transpose() * y), false};
}

RidgeResult qcrc_solve(const RealBlockMatrix& D, const RealStackVector& y, RidgeConfig cfg) {
  return RidgeSolver(D.dense(), cfg).solve(y.values());
}

RidgeResult crc_solve(const Matrix& X, const Vector& y, RidgeConfig cfg) {
  return RidgeSolver(X, cfg).solve(y);
}

CodingResult qsrc_solve(const RealBlockMatrix& D, const RealStackVector& y, const SolverConfig& cfg) {
  if (y.size() != D.dense().rows()) throw dimension_error("qsrc_solve: signal length mismatch");
  return ialm::L1Problem(D.dense()).solve(y.values(), cfg);
}

Classification classify_baseline(const RealBlockMatrix& D, const RealStackVector& y,
                                 const Vector& code, bool normalized) {
  return classify_residual(D, y.values(), code, normalized);
}

Classification classify_baseline(const LabeledMatrix& D, const Vector& y, const Vector& code,
                                 bool normalized) {
  return classify_residual(D, y, code, normalized);
}

}  // namespace qar
