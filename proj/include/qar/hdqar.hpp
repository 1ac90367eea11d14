#pragma once

#include "qar/classify.hpp"
#include "qar/ialm.hpp"
#include "qar/kernel.hpp"
#include "qar/solver.hpp"

namespace qar {

/// High-dimension QAR: the trace-lasso IALM loop driven by the Gram matrix
/// K (in place of the dictionary) and the kernel vector k (in place of the
/// signal), so min ||k - K gamma||_1 + lambda ||K Diag(gamma)||_*.
class HdqarSolver {
 public:
  explicit HdqarSolver(kernel::GramMatrix K);

  const kernel::GramMatrix& gram() const { return K_; }
  const ialm::TraceLassoProblem& problem() const { return problem_; }

  CodingResult solve(const Vector& k, const SolverConfig& cfg) const;

 private:
  kernel::GramMatrix K_;
  ialm::TraceLassoProblem problem_;
};

CodingResult solve_hdqar(const kernel::GramMatrix& K, const Vector& k, const SolverConfig& cfg);

/// d_c = ||k - K_c gamma_c|| / ||gamma_c||; classes with gamma_c = 0 get
/// +inf. Throws classification_error if that is every class.
Classification classify_hdqar(const kernel::GramMatrix& K, const Vector& k, const Vector& gamma);

}  // namespace qar
