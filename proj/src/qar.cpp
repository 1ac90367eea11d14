#include "qar/qar.hpp"

#include "qar/errors.hpp"

#include <utility>

namespace qar {

QarSolver::QarSolver(RealBlockMatrix D) : D_(std::move(D)), problem_(D_.dense()) {}

CodingResult QarSolver::solve(const RealStackVector& y, const SolverConfig& cfg) const {
  if (y.pixels() != D_.pixels())
    throw dimension_error("QarSolver::solve: signal has a different pixel count than the dictionary");
  return problem_.solve(y.values(), cfg);
}

CodingResult solve_qar(const RealBlockMatrix& D, const RealStackVector& y, const SolverConfig& cfg) {
  return QarSolver(D).solve(y, cfg);
}

Classification classify_qar(const RealBlockMatrix& D, const RealStackVector& y, const Vector& code,
                            bool normalize) {
  if (code.size() != 4 * D.atoms()) throw dimension_error("classify_qar: code length must be 4L");
  return classify_residual(D, y.values(), code, normalize);
}

}  // namespace qar
