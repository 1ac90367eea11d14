#pragma once

// Shared configuration, state and trace types for the trace-lasso IALM
// solvers (QAR on the embedded dictionary, HD-QAR on the Gram matrix) and
// the l1 coder built on the same loop.

#include "qar/quaternion.hpp"

#include <vector>

namespace qar {

struct SolverConfig {
  double lambda = 1e-3;  ///< weight on the nuclear-norm term
  double u0 = 1e-2;      ///< initial penalty
  double rho = 1.1;      ///< penalty growth factor
  double u_max = 1e8;    ///< penalty cap
  double eps = 1e-6;     ///< stopping tolerance on both residuals
  int max_iter = 2000;

  /// Divide per-class distances by ||code_c||_2 in classify_qar.
  bool normalize_distance = false;
  /// Record the nuclear-norm subproblem objective before/after every
  /// Z-update in the trace. Costs one extra SVD per iteration.
  bool trace_subproblem = false;

  /// Throws config_error if any invariant is violated.
  void validate() const;
};

struct TraceRow {
  int iter = 0;
  double fidelity_residual = 0.0;  ///< ||y - J code - z||_inf
  double coupling_residual = 0.0;  ///< max |Z - J Diag(code)|
  double u = 0.0;                  ///< penalty used during this iteration
  double subproblem_before = 0.0;  ///< only with trace_subproblem
  double subproblem_after = 0.0;
};

struct SolverTrace {
  std::vector<TraceRow> rows;
  bool converged = false;
  int iterations = 0;
};

struct CodingResult {
  Vector code;
  SolverTrace trace;
};

/// Iterates of the trace-lasso IALM loop. For QAR, J is the 4q x 4L
/// embedded dictionary; for HD-QAR, J is the L x L Gram matrix.
struct IalmState {
  Matrix Z;   ///< surrogate for J Diag(code)
  Vector z;   ///< surrogate for y - J code
  Vector code;
  Vector m1;
  Matrix M2;
  double u = 0.0;

  static IalmState cold_start(Index rows, Index cols, double u0);
};

}  // namespace qar
