#pragma once

// Reference coders: collaborative (ridge) representation in quaternion and
// plain real form, and quaternion sparse (l1) representation.

#include "qar/classify.hpp"
#include "qar/embedding.hpp"
#include "qar/ialm.hpp"
#include "qar/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>

namespace qar {

struct RidgeConfig {
  double mu = 1e-3;

  void validate() const;
};

struct RidgeResult {
  Vector code;
  /// mu = 0 and D'D singular: fell back to the minimum-norm least-squares
  /// solution.
  bool used_pseudo_inverse = false;
};

/// code = (D'D + mu I)^-1 D'y with the factorization cached for reuse.
class RidgeSolver {
 public:
  RidgeSolver(Matrix design, RidgeConfig cfg);

  RidgeResult solve(const Vector& y) const;

 private:
  Matrix D_;
  RidgeConfig cfg_;
  Eigen::LLT<Matrix> llt_;
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod_;
  bool singular_ = false;
};

/// Quaternion collaborative representation on the embedded dictionary.
RidgeResult qcrc_solve(const RealBlockMatrix& D, const RealStackVector& y, RidgeConfig cfg);
/// Real collaborative representation on a plain design matrix.
RidgeResult crc_solve(const Matrix& X, const Vector& y, RidgeConfig cfg);

/// Quaternion sparse representation: basis pursuit on the embedded
/// dictionary, solved as an l1 exact penalty (ialm::L1Problem).
/// Check result.trace.converged; non-convergence is not thrown.
CodingResult qsrc_solve(const RealBlockMatrix& D, const RealStackVector& y, const SolverConfig& cfg);

Classification classify_baseline(const RealBlockMatrix& D, const RealStackVector& y,
                                 const Vector& code, bool normalized = false);
Classification classify_baseline(const LabeledMatrix& D, const Vector& y, const Vector& code,
                                 bool normalized = false);

}  // namespace qar
