#include "qar/hdqar.hpp"

#include "qar/errors.hpp"

#include <utility>

namespace qar {

HdqarSolver::HdqarSolver(kernel::GramMatrix K) : K_(std::move(K)), problem_(K_.K) {
  if (K_.K.rows() != K_.K.cols()) throw dimension_error("HdqarSolver: Gram matrix must be square");
  if (static_cast<Index>(K_.labels.size()) != K_.K.rows())
    throw dimension_error("HdqarSolver: need one label per Gram row");
}

CodingResult HdqarSolver::solve(const Vector& k, const SolverConfig& cfg) const {
  if (k.size() != K_.size()) throw dimension_error("HdqarSolver::solve: kernel vector length mismatch");
  return problem_.solve(k, cfg);
}

CodingResult solve_hdqar(const kernel::GramMatrix& K, const Vector& k, const SolverConfig& cfg) {
  return HdqarSolver(K).solve(k, cfg);
}

Classification classify_hdqar(const kernel::GramMatrix& K, const Vector& k, const Vector& gamma) {
  if (gamma.size() != K.size()) throw dimension_error("classify_hdqar: gamma length must be L");
  return classify_residual(K.labeled(), k, gamma, /*normalize=*/true);
}

}  // namespace qar
