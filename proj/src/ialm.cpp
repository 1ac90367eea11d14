#include "qar/ialm.hpp"

#include "qar/errors.hpp"
#include "qar/prox.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace qar {

void SolverConfig::validate() const {
  if (!(lambda > 0.0)) throw config_error("lambda must be > 0");
  if (!(u0 > 0.0)) throw config_error("u0 must be > 0");
  if (!(rho > 1.0 && rho <= 2.0)) throw config_error("rho must lie in (1, 2]");
  if (!(u0 <= u_max)) throw config_error("u0 must not exceed u_max");
  if (!(eps > 0.0)) throw config_error("eps must be > 0");
  if (max_iter < 1) throw config_error("max_iter must be >= 1");
}

IalmState IalmState::cold_start(Index rows, Index cols, double u0) {
  return {Matrix::Zero(rows, cols), Vector::Zero(rows), Vector::Zero(cols),
          Vector::Zero(rows),       Matrix::Zero(rows, cols), u0};
}

namespace ialm {

namespace {

Eigen::LLT<Matrix> factor(Matrix normal) {
  normal.diagonal().array() += kNormalRidge;
  Eigen::LLT<Matrix> llt(normal);
  if (llt.info() != Eigen::Success)
    throw numerical_error("normal matrix is not positive definite (zero or non-finite atoms?)");
  return llt;
}

void require_finite(const IalmState& s, int iter) {
  if (!s.Z.allFinite() || !s.z.allFinite() || !s.code.allFinite() || !s.m1.allFinite() ||
      !s.M2.allFinite())
    throw numerical_error("IALM iterate became non-finite at iteration " + std::to_string(iter));
}

// J * Diag(c): scales column j of J by c(j).
Matrix scale_columns(const Matrix& J, const Vector& c) { return J * c.asDiagonal(); }

double nuclear_subproblem(const Matrix& Z, const Matrix& target, double tau) {
  return tau * prox::nuclear_norm(Z) + 0.5 * (Z - target).squaredNorm();
}

}  // namespace

TraceLassoProblem::TraceLassoProblem(Matrix design) : J_(std::move(design)) {
  if (J_.size() == 0) throw dimension_error("TraceLassoProblem: empty design matrix");
  if (!J_.allFinite()) throw numerical_error("TraceLassoProblem: non-finite design matrix");
  const Matrix gram = J_.transpose() * J_;
  col_sq_norms_ = gram.diagonal();
  // a zero column leaves its coefficient pinned only by the ridge
  for (Index j = 0; j < col_sq_norms_.size(); ++j)
    if (col_sq_norms_(j) == 0.0)
      throw numerical_error("TraceLassoProblem: design column " + std::to_string(j) + " is zero");
  Matrix normal = gram;
  normal.diagonal() += col_sq_norms_;
  normal_ = factor(std::move(normal));
}

Vector TraceLassoProblem::code_update(const IalmState& s, const Vector& y) const {
  const double inv_u = 1.0 / s.u;
  Vector rhs = J_.transpose() * (inv_u * s.m1 + y - s.z);
  // diag(J'(M2/u + Z)) = column-wise dot products
  rhs += (J_.cwiseProduct(inv_u * s.M2 + s.Z)).colwise().sum().transpose();
  return normal_.solve(rhs);
}

CodingResult TraceLassoProblem::solve(const Vector& y, const SolverConfig& cfg) const {
  cfg.validate();
  if (y.size() != J_.rows())
    throw dimension_error("TraceLassoProblem::solve: signal length " + std::to_string(y.size()) +
                          " does not match design rows " + std::to_string(J_.rows()));
  if (!y.allFinite()) throw numerical_error("TraceLassoProblem::solve: non-finite signal");

  IalmState s = IalmState::cold_start(J_.rows(), J_.cols(), cfg.u0);
  CodingResult out;
  out.trace.rows.reserve(static_cast<std::size_t>(std::min(cfg.max_iter, 512)));

  for (int it = 1; it <= cfg.max_iter; ++it) {
    TraceRow row;
    row.iter = it;
    row.u = s.u;
    const double inv_u = 1.0 / s.u;

    // Z-step: prox of (lambda/u)||.||_* at J Diag(code) - M2/u
    const Matrix target = scale_columns(J_, s.code) - inv_u * s.M2;
    const double tau = cfg.lambda * inv_u;
    if (cfg.trace_subproblem) row.subproblem_before = nuclear_subproblem(s.Z, target, tau);
    s.Z = prox::svt(target, tau);
    if (cfg.trace_subproblem) row.subproblem_after = nuclear_subproblem(s.Z, target, tau);

    s.code = code_update(s, y);

    const Vector fit = y - J_ * s.code;
    s.z = prox::soft_threshold(fit + inv_u * s.m1, inv_u);

    const Vector r1 = fit - s.z;
    const Matrix r2 = s.Z - scale_columns(J_, s.code);
    s.m1 += s.u * r1;
    s.M2 += s.u * r2;
    s.u = std::min(cfg.rho * s.u, cfg.u_max);
    require_finite(s, it);

    row.fidelity_residual = prox::linf(r1);
    row.coupling_residual = prox::max_abs(r2);
    out.trace.rows.push_back(row);
    out.trace.iterations = it;
    if (row.fidelity_residual <= cfg.eps && row.coupling_residual <= cfg.eps) {
      out.trace.converged = true;
      break;
    }
  }
  out.code = std::move(s.code);
  return out;
}

L1Problem::L1Problem(Matrix design) : J_(std::move(design)) {
  if (J_.size() == 0) throw dimension_error("L1Problem: empty design matrix");
  if (!J_.allFinite()) throw numerical_error("L1Problem: non-finite design matrix");
  Matrix normal = J_.transpose() * J_;
  normal.diagonal().array() += 1.0;
  normal_ = factor(std::move(normal));
}

CodingResult L1Problem::solve(const Vector& y, const SolverConfig& cfg) const {
  cfg.validate();
  if (y.size() != J_.rows())
    throw dimension_error("L1Problem::solve: signal length does not match design rows");
  if (!y.allFinite()) throw numerical_error("L1Problem::solve: non-finite signal");

  const Index n = J_.cols();
  Vector w = Vector::Zero(n), code = Vector::Zero(n), m2 = Vector::Zero(n);
  Vector z = Vector::Zero(J_.rows()), m1 = Vector::Zero(J_.rows());
  double u = cfg.u0;

  CodingResult out;
  for (int it = 1; it <= cfg.max_iter; ++it) {
    TraceRow row;
    row.iter = it;
    row.u = u;
    const double inv_u = 1.0 / u;

    w = prox::soft_threshold(code - inv_u * m2, cfg.lambda * inv_u);
    code = normal_.solve(J_.transpose() * (inv_u * m1 + y - z) + w + inv_u * m2);
    const Vector fit = y - J_ * code;
    z = prox::soft_threshold(fit + inv_u * m1, inv_u);

    const Vector r1 = fit - z;
    const Vector r2 = w - code;
    m1 += u * r1;
    m2 += u * r2;
    u = std::min(cfg.rho * u, cfg.u_max);
    if (!code.allFinite() || !m1.allFinite() || !m2.allFinite())
      throw numerical_error("L1Problem: non-finite iterate at iteration " + std::to_string(it));

    row.fidelity_residual = prox::linf(r1);
    row.coupling_residual = prox::linf(r2);
    out.trace.rows.push_back(row);
    out.trace.iterations = it;
    if (row.fidelity_residual <= cfg.eps && row.coupling_residual <= cfg.eps) {
      out.trace.converged = true;
      break;
    }
  }
  out.code = std::move(code);
  return out;
}

}  // namespace ialm
}  // namespace qar
