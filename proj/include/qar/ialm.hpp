#pragma once

#include "qar/solver.hpp"

#include <Eigen/Cholesky>

namespace qar::ialm {

/// min lambda ||J Diag(code)||_* + ||y - J code||_1 by inexact augmented
/// Lagrange multipliers, split as Z = J Diag(code), z = y - J code.
///
/// The normal matrix J'J + Diag(diag(J'J)) does not depend on y, so it is
/// factored once here and shared by every solve. Instances are immutable
/// after construction and may be used from several threads at once.
class TraceLassoProblem {
 public:
  explicit TraceLassoProblem(Matrix design);

  const Matrix& design() const { return J_; }

  CodingResult solve(const Vector& y, const SolverConfig& cfg) const;

  /// Closed-form minimizer of the augmented Lagrangian over `code` with
  /// Z, z, m1, M2 held at their values in `s`:
  ///   (J'J + Diag(diag(J'J))) code = J'(m1/u + y - z) + diag(J'(M2/u + Z))
  Vector code_update(const IalmState& s, const Vector& y) const;

 private:
  Matrix J_;
  Vector col_sq_norms_;
  Eigen::LLT<Matrix> normal_;
};

/// min lambda ||code||_1 + ||y - J code||_1 on the same IALM scaffolding,
/// split as w = code, z = y - J code. With a small lambda this is an exact
/// penalty for basis pursuit (min ||code||_1 s.t. J code = y) whenever the
/// constraint is satisfiable.
class L1Problem {
 public:
  explicit L1Problem(Matrix design);

  const Matrix& design() const { return J_; }

  CodingResult solve(const Vector& y, const SolverConfig& cfg) const;

 private:
  Matrix J_;
  Eigen::LLT<Matrix> normal_;
};

/// Ridge added to both normal matrices before factoring.
inline constexpr double kNormalRidge = 1e-10;

}  // namespace qar::ialm
