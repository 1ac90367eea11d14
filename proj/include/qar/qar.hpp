#pragma once

#include "qar/classify.hpp"
#include "qar/embedding.hpp"
#include "qar/ialm.hpp"
#include "qar/solver.hpp"

namespace qar {

/// Quaternion adaptive representation coder over a fixed dictionary.
///
/// Solves  min_code ||y - D code||_1 + lambda ||D Diag(code)||_*  where D is
/// the 4q x 4L embedding of the training quaternions and code the stacked
/// 4L coefficient vector. The trace-norm term behaves like ||code||_1 when
/// the atoms are orthogonal and like ||code||_2 when they coincide.
///
/// Dictionary atoms are expected to have unit l2 norm.
class QarSolver {
 public:
  explicit QarSolver(RealBlockMatrix D);

  const RealBlockMatrix& dictionary() const { return D_; }
  const ialm::TraceLassoProblem& problem() const { return problem_; }

  CodingResult solve(const RealStackVector& y, const SolverConfig& cfg) const;

 private:
  RealBlockMatrix D_;
  ialm::TraceLassoProblem problem_;
};

CodingResult solve_qar(const RealBlockMatrix& D, const RealStackVector& y, const SolverConfig& cfg);

/// d_c = ||y - D_c code_c||_2 per class, argmin wins (lowest label on ties).
/// `normalize` divides by ||code_c||_2 as HD-QAR does.
Classification classify_qar(const RealBlockMatrix& D, const RealStackVector& y, const Vector& code,
                            bool normalize = false);

}  // namespace qar
