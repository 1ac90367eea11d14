#include "qar/errors.hpp"
#include "qar/prox.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <Eigen/QR>

using namespace qar;
using namespace qar::testing;

namespace {

// Minimizes tau|z| + (z - v)^2 / 2 by a coarse grid followed by a fine
// grid around the coarse winner.
double grid_prox_l1(double v, double tau) {
  const auto f = [&](double z) { return tau * std::abs(z) + 0.5 * (z - v) * (z - v); };
  const auto scan = [&](double lo, double hi, double step) {
    double best = lo, best_f = f(lo);
    for (double z = lo; z <= hi; z += step)
      if (f(z) < best_f) {
        best_f = f(z);
        best = z;
      }
    // zero is a kink; include it exactly
    if (lo <= 0.0 && hi >= 0.0 && f(0.0) <= best_f) best = 0.0;
    return best;
  };
  const double coarse = scan(v - tau - 1.0, v + tau + 1.0, 1e-3);
  return scan(coarse - 2e-3, coarse + 2e-3, 1e-7);
}

double nuclear_objective(const Matrix& Z, const Matrix& M, double tau) {
  return tau * prox::nuclear_norm(Z) + 0.5 * (Z - M).squaredNorm();
}

}  // namespace

TEST_CASE("soft_threshold") {
  Vector v(2);
  v << 1.2, -0.3;
  const Vector out = prox::soft_threshold(v, 0.5);
  CHECK(out(0) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(out(1) == 0.0);
  CHECK(prox::soft_threshold(v, 0.0) == v);
  CHECK_THROWS_AS(prox::soft_threshold(v, -1.0), std::invalid_argument);

  Rng rng(4);
  std::uniform_real_distribution<double> tau_dist(0.0, 1.5);
  for (int t = 0; t < 20; ++t) {
    const Vector x = 2.0 * gaussian_vec(5, rng);
    const double tau = tau_dist(rng);
    const Vector z = prox::soft_threshold(x, tau);
    for (Index i = 0; i < x.size(); ++i) {
      CHECK(std::abs(z(i) - grid_prox_l1(x(i), tau)) <= 1e-6);
      // 0 in tau * d|z| + (z - x)
      if (z(i) != 0.0)
        CHECK(std::abs(tau * (z(i) > 0 ? 1.0 : -1.0) + z(i) - x(i)) <= 1e-12);
      else
        CHECK(std::abs(x(i)) <= tau);
    }
  }
}

TEST_CASE("svt") {
  Matrix M = Matrix::Zero(2, 2);
  M(0, 0) = 3;
  M(1, 1) = 1;
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1;
  CHECK(max_abs_diff(prox::svt(M, 2.0), expected) <= 1e-14);

  Rng rng(8);
  const Matrix A = gaussian(5, 3, rng);
  CHECK(max_abs_diff(prox::svt(A, 0.0), A) <= 1e-12);
  CHECK(prox::svt(A, 1e6).isZero(0.0));

  Matrix bad = A;
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(prox::svt(bad, 1.0), numerical_error);

  SUBCASE("beats random perturbations") {
    std::normal_distribution<double> n;
    for (int inst = 0; inst < 5; ++inst) {
      const Matrix X = gaussian(4, 3, rng);
      const double tau = 0.7;
      const Matrix Z = prox::svt(X, tau);
      const double best = nuclear_objective(Z, X, tau);
      for (int p = 0; p < 1000; ++p) {
        const double scale = std::pow(10.0, -4.0 + 4.0 * (p % 5) / 4.0);
        const Matrix probe = Z + scale * gaussian(4, 3, rng);
        CHECK(best <= nuclear_objective(probe, X, tau) + 1e-12);
      }
    }
  }

  SUBCASE("thin and wide shapes") {
    for (auto [r, c] : {std::pair<Index, Index>{7, 2}, {2, 7}, {1, 5}, {5, 1}}) {
      const Matrix X = gaussian(r, c, rng);
      const Matrix Z = prox::svt(X, 0.3);
      // compare with a full-SVD evaluation
      Eigen::JacobiSVD<Matrix> full(X, Eigen::ComputeFullU | Eigen::ComputeFullV);
      Matrix S = Matrix::Zero(r, c);
      for (Index i = 0; i < full.singularValues().size(); ++i)
        S(i, i) = std::max(full.singularValues()(i) - 0.3, 0.0);
      CHECK(max_abs_diff(Z, full.matrixU() * S * full.matrixV().transpose()) <= 1e-12);
    }
  }
}

TEST_CASE("nuclear_norm") {
  CHECK(prox::nuclear_norm(Matrix::Identity(3, 3)) == doctest::Approx(3.0).epsilon(1e-15));
  Rng rng(1);
  const Vector u = gaussian_vec(4, rng), v = gaussian_vec(3, rng);
  CHECK(prox::nuclear_norm(u * v.transpose()) == doctest::Approx(u.norm() * v.norm()).epsilon(1e-12));
  CHECK(prox::numerical_rank(u * v.transpose()) == 1);

  for (int t = 0; t < 200; ++t) {
    const Index r = uniform_index(rng, 1, 8), c = uniform_index(rng, 1, 8);
    Matrix M = gaussian(r, c, rng);
    if (t % 3 == 0) M = gaussian(r, 1, rng) * gaussian(1, c, rng) + gaussian(r, 1, rng) * gaussian(1, c, rng);
    const double nuc = prox::nuclear_norm(M), fro = prox::frobenius(M);
    const double rank = static_cast<double>(prox::numerical_rank(M));
    CHECK(fro <= nuc * (1 + 1e-12));
    CHECK(nuc <= std::sqrt(rank) * fro * (1 + 1e-12));
  }
}

TEST_CASE("vector and matrix norms") {
  Vector v(3);
  v << 1, -3, 2;
  CHECK(prox::linf(v) == 3.0);
  CHECK(prox::l1(v) == 6.0);
  CHECK(prox::frobenius(Matrix::Identity(2, 2)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(prox::max_abs(-4.0 * Matrix::Identity(2, 2)) == 4.0);

  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const Vector x = gaussian_vec(uniform_index(rng, 1, 10), rng);
    CHECK(prox::l1(x) >= prox::l2(x));
    CHECK(prox::l2(x) >= prox::linf(x));
  }
}

TEST_CASE("prox invariants") {
  Rng rng(10);
  std::uniform_real_distribution<double> tau_dist(0.0, 2.0);
  for (int t = 0; t < 200; ++t) {
    const Index r = uniform_index(rng, 1, 7), c = uniform_index(rng, 1, 7);
    const double tau = tau_dist(rng);
    const Matrix A = gaussian(r, c, rng), B = gaussian(r, c, rng);
    CHECK((prox::svt(A, tau) - prox::svt(B, tau)).norm() <= (A - B).norm() * (1 + 1e-12));

    const Vector d = gaussian_vec(r, rng);
    const Matrix S = prox::svt(Matrix(d.asDiagonal()), tau);
    CHECK(max_abs_diff(S.diagonal(), prox::soft_threshold(d, tau)) <= 1e-12);
  }

  SUBCASE("trace norm reduces to l1 on orthonormal atoms") {
    for (int t = 0; t < 50; ++t) {
      const Index n = uniform_index(rng, 2, 40);
      const Index m = uniform_index(rng, 1, std::min<Index>(n, 20));
      const Matrix Q = Eigen::HouseholderQR<Matrix>(gaussian(n, m, rng)).householderQ() * Matrix::Identity(n, m);
      const Vector v = gaussian_vec(m, rng);
      CHECK(std::abs(prox::nuclear_norm(Q * v.asDiagonal()) - prox::l1(v)) <= 1e-10);
    }
  }
  SUBCASE("trace norm reduces to l2 on identical atoms") {
    for (int t = 0; t < 50; ++t) {
      const Index n = uniform_index(rng, 1, 40);
      const Index m = uniform_index(rng, 1, 20);
      const Vector d = gaussian_vec(n, rng).normalized();
      const Vector v = gaussian_vec(m, rng);
      CHECK(std::abs(prox::nuclear_norm(d.replicate(1, m) * v.asDiagonal()) - prox::l2(v)) <= 1e-10);
    }
  }
}
