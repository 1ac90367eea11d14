#include "qar/checks.hpp"

#include "qar/embedding.hpp"
#include "qar/hdqar.hpp"
#include "qar/kernel.hpp"
#include "qar/prox.hpp"
#include "qar/qar.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qar::checks {

namespace {

using Rng = std::mt19937_64;

Matrix gaussian(Index r, Index c, Rng& rng) {
  std::normal_distribution<double> n;
  return Matrix::NullaryExpr(r, c, [&] { return n(rng); });
}

QuaternionMatrix random_qmatrix(Index r, Index c, Rng& rng) {
  return QuaternionMatrix(gaussian(r, c, rng), gaussian(r, c, rng), gaussian(r, c, rng), gaussian(r, c, rng));
}

Index dim(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

struct Tracker {
  CheckResult r;
  Tracker(std::string name, double tol) { r.name = std::move(name); r.tolerance = tol; }
  void see(double violation) {
    ++r.instances;
    r.worst = std::max(r.worst, violation);
  }
  CheckResult done() {
    r.passed = r.worst <= r.tolerance;
    return r;
  }
};

}  // namespace

std::vector<CheckResult> run_all(int instances, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckResult> out;

  {
    Tracker hom("embedding homomorphism", 1e-12), rep("representation property", 1e-12);
    for (int t = 0; t < instances; ++t) {
      const Index q = dim(rng, 1, 5), L = dim(rng, 1, 5), P = dim(rng, 1, 5);
      const QuaternionMatrix X = random_qmatrix(q, L, rng);
      const QuaternionMatrix Y = random_qmatrix(L, P, rng);
      const QuaternionVector a = random_qmatrix(L, 1, rng).col(0);
      const Vector lhs = embed_vector(qmatvec(X, a)).values();
      const Vector rhs = embed_matrix(X).dense() * embed_vector(a).values();
      hom.see((lhs - rhs).cwiseAbs().maxCoeff());
      const Matrix prod = embed_matrix(qmatmul(X, Y)).dense();
      rep.see((prod - embed_matrix(X).dense() * embed_matrix(Y).dense()).cwiseAbs().maxCoeff());
    }
    out.push_back(hom.done());
    out.push_back(rep.done());
  }

  {
    Tracker l1("trace norm = l1 on orthonormal atoms", 1e-10);
    Tracker l2("trace norm = l2 on identical atoms", 1e-10);
    Tracker sandwich("||M||_F <= ||M||_* <= sqrt(rank) ||M||_F", 1e-10);
    for (int t = 0; t < instances; ++t) {
      const Index n = dim(rng, 2, 40), m = dim(rng, 1, std::min<Index>(n, 20));
      const Matrix Q = Eigen::HouseholderQR<Matrix>(gaussian(n, m, rng)).householderQ() * Matrix::Identity(n, m);
      const Vector v = gaussian(m, 1, rng);
      l1.see(std::abs(prox::nuclear_norm(Q * v.asDiagonal()) - prox::l1(v)));
      Vector d = gaussian(n, 1, rng);
      d.normalize();
      const Matrix same = d.replicate(1, m);
      l2.see(std::abs(prox::nuclear_norm(same * v.asDiagonal()) - prox::l2(v)));
      const Matrix M = gaussian(n, m, rng);
      const double nuc = prox::nuclear_norm(M), fro = prox::frobenius(M);
      const double rank = static_cast<double>(prox::numerical_rank(M));
      sandwich.see(std::max({0.0, fro - nuc, nuc - std::sqrt(rank) * fro}) / std::max(1.0, nuc));
    }
    out.push_back(l1.done());
    out.push_back(l2.done());
    out.push_back(sandwich.done());
  }

  {
    Tracker expand("svt is non-expansive", 1e-10), diag("soft threshold = svt on diagonals", 1e-12);
    std::uniform_real_distribution<double> tau_dist(0.0, 2.0);
    for (int t = 0; t < instances; ++t) {
      const Index r = dim(rng, 1, 8), c = dim(rng, 1, 8);
      const Matrix A = gaussian(r, c, rng), B = gaussian(r, c, rng);
      const double tau = tau_dist(rng);
      expand.see(std::max(0.0, (prox::svt(A, tau) - prox::svt(B, tau)).norm() - (A - B).norm()));
      const Vector v = gaussian(r, 1, rng);
      const Matrix s = prox::svt(Matrix(v.asDiagonal()), tau);
      diag.see((s.diagonal() - prox::soft_threshold(v, tau)).cwiseAbs().maxCoeff());
    }
    out.push_back(expand.done());
    out.push_back(diag.done());
  }

  {
    Tracker gram_check("Gram symmetric, unit diagonal, PSD", 1e-8);
    for (int t = 0; t < std::min(instances, 100); ++t) {
      const Matrix samples = gaussian(4 * dim(rng, 1, 6), dim(rng, 2, 30), rng);
      const auto K = kernel::gram(samples, kernel::median_bandwidth(samples)).K;
      const double asym = (K - K.transpose()).cwiseAbs().maxCoeff();
      const double diag_err = (K.diagonal().array() - 1.0).abs().maxCoeff();
      const double min_eig = Eigen::SelfAdjointEigenSolver<Matrix>(K).eigenvalues().minCoeff();
      gram_check.see(std::max({asym * 1e4, diag_err * 1e4, -min_eig}));
    }
    out.push_back(gram_check.done());
  }

  {
    Tracker feas("QAR feasibility at convergence", 1e-6);
    SolverConfig cfg;
    for (int t = 0; t < std::min(instances, 20); ++t) {
      const Index q = dim(rng, 2, 6), L = dim(rng, 2, 6);
      QuaternionMatrix X = random_qmatrix(q, L, rng);
      RealBlockMatrix D = embed_matrix(X);
      Matrix J = D.dense();
      J.colwise().normalize();
      const Vector y = gaussian(4 * q, 1, rng);
      const auto res = ialm::TraceLassoProblem(J).solve(y, cfg);
      if (!res.trace.converged) continue;
      const auto& last = res.trace.rows.back();
      feas.see(std::max(last.fidelity_residual, last.coupling_residual));
    }
    out.push_back(feas.done());
  }
  return out;
}

}  // namespace qar::checks
