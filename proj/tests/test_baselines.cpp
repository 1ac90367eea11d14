#include "qar/baselines.hpp"
#include "qar/errors.hpp"
#include "qar/prox.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <Eigen/SVD>

using namespace qar;
using namespace qar::testing;

TEST_CASE("qcrc") {
  Rng rng(1);
  SUBCASE("orthonormal atoms shrink the projection") {
    const RealBlockMatrix D = embed_matrix(orthonormal_qmatrix(6, 3, rng));
    const RealStackVector y(gaussian_vec(24, rng));
    const RidgeResult r = qcrc_solve(D, y, {0.25});
    CHECK_FALSE(r.used_pseudo_inverse);
    CHECK(max_abs_diff(r.code, D.dense().transpose() * y.values() / 1.25) <= 1e-12);
  }
  SUBCASE("zero signal") {
    const RealBlockMatrix D = embed_matrix(unit_atoms_qmatrix(4, 3, rng));
    CHECK(qcrc_solve(D, RealStackVector(Vector::Zero(16)), {}).code.isZero(0.0));
  }
  SUBCASE("normal equations hold") {
    for (int t = 0; t < 20; ++t) {
      const Index q = uniform_index(rng, 1, 8), L = uniform_index(rng, 1, 8);
      const RealBlockMatrix D = embed_matrix(unit_atoms_qmatrix(q, L, rng));
      const RealStackVector y(gaussian_vec(4 * q, rng));
      const Vector c = qcrc_solve(D, y, {0.1}).code;
      const Vector lhs = D.dense().transpose() * (y.values() - D.dense() * c);
      CHECK(max_abs_diff(lhs, 0.1 * c) <= 1e-10);
    }
  }
  SUBCASE("no ridge on a rank-deficient dictionary") {
    const RealBlockMatrix D = embed_matrix(repeated_column_qmatrix(5, 3, rng));
    const RealStackVector y(gaussian_vec(20, rng));
    const RidgeResult r = qcrc_solve(D, y, {0.0});
    CHECK(r.used_pseudo_inverse);
    const Vector expected = Eigen::JacobiSVD<Matrix>(D.dense(), Eigen::ComputeThinU | Eigen::ComputeThinV)
                                .solve(y.values());
    CHECK(max_abs_diff(r.code, expected) <= 1e-10);
  }
  SUBCASE("no ridge on a full-rank dictionary is the pseudo-inverse solution") {
    for (int t = 0; t < 20; ++t) {
      const Index q = uniform_index(rng, 3, 8);
      const RealBlockMatrix D = embed_matrix(unit_atoms_qmatrix(q, uniform_index(rng, 1, q - 1), rng));
      const RealStackVector y(gaussian_vec(4 * q, rng));
      const RidgeResult r = qcrc_solve(D, y, {0.0});
      CHECK_FALSE(r.used_pseudo_inverse);
      const Matrix pinv = D.dense().completeOrthogonalDecomposition().pseudoInverse();
      CHECK(max_abs_diff(r.code, pinv * y.values()) <= 1e-10);
    }
  }
  SUBCASE("no ridge on a full-rank dictionary is least squares") {
    const Matrix X = gaussian(10, 4, rng);
    const Vector y = gaussian_vec(10, rng);
    const RidgeResult r = crc_solve(X, y, {0.0});
    CHECK_FALSE(r.used_pseudo_inverse);
    CHECK(max_abs_diff(X.transpose() * (y - X * r.code), Vector::Zero(4)) <= 1e-10);
  }
  CHECK_THROWS_AS(crc_solve(Matrix::Identity(2, 2), Vector::Zero(2), {-1.0}), config_error);
  CHECK_THROWS_AS(crc_solve(Matrix::Identity(2, 2), Vector::Zero(3), {}), dimension_error);
}

TEST_CASE("qsrc") {
  Rng rng(2);
  SUBCASE("atom reproduces itself") {
    const RealBlockMatrix D = embed_matrix(unit_atoms_qmatrix(10, 5, rng));
    for (Index j : {0, 7, 19}) {
      const CodingResult r = qsrc_solve(D, RealStackVector(D.dense().col(j)), SolverConfig{});
      REQUIRE(r.trace.converged);
      Vector e = Vector::Zero(20);
      e(j) = 1.0;
      CHECK(prox::linf(r.code - e) <= 1e-4);
    }
  }
  SUBCASE("zero signal") {
    const RealBlockMatrix D = embed_matrix(unit_atoms_qmatrix(3, 2, rng));
    const CodingResult r = qsrc_solve(D, RealStackVector(Vector::Zero(12)), SolverConfig{});
    CHECK(r.trace.converged);
    CHECK(r.code.isZero(0.0));
  }
  SUBCASE("one-sparse support found by exhaustive search") {
    for (int t = 0; t < 10; ++t) {
      const RealBlockMatrix D = embed_matrix(unit_atoms_qmatrix(10, 5, rng));
      const Index j = uniform_index(rng, 0, 19);
      const double amp = 0.5 + std::abs(gaussian_vec(1, rng)(0));
      const RealStackVector y(amp * D.dense().col(j));

      // the only single column that fits y exactly
      Index found = -1;
      double coef = 0.0;
      for (Index c = 0; c < 20; ++c) {
        const Vector col = D.dense().col(c);
        const double a = col.dot(y.values()) / col.squaredNorm();
        if ((y.values() - a * col).norm() <= 1e-12) {
          CHECK(found == -1);
          found = c;
          coef = a;
        }
      }
      REQUIRE(found == j);

      const CodingResult r = qsrc_solve(D, y, SolverConfig{});
      REQUIRE(r.trace.converged);
      Vector expected = Vector::Zero(20);
      expected(found) = coef;
      CHECK(prox::linf(r.code - expected) <= 1e-4);
    }
  }
  SUBCASE("l1 norm never exceeds another exact fit") {
    for (int t = 0; t < 10; ++t) {
      const RealBlockMatrix D = embed_matrix(unit_atoms_qmatrix(3, 6, rng));  // 12 x 24
      const RealStackVector y(gaussian_vec(12, rng));
      const Vector feasible = qcrc_solve(D, y, {0.0}).code;
      REQUIRE(prox::linf(D.dense() * feasible - y.values()) <= 1e-10);
      const CodingResult r = qsrc_solve(D, y, SolverConfig{});
      REQUIRE(r.trace.converged);
      CHECK(prox::l1(r.code) <= prox::l1(feasible) + 1e-5);
    }
  }
}

TEST_CASE("classify_baseline") {
  Rng rng(3);
  const QuaternionMatrix X = unit_atoms_qmatrix(4, 4, rng);
  const RealBlockMatrix D = embed_matrix(X, {0, 1, 1, 2});
  const RealStackVector y(D.dense().col(5));  // atom 1, i-part
  const Vector code = qcrc_solve(D, y, {1e-6}).code;
  const Classification c = classify_baseline(D, y, code);
  CHECK(c.label == 1);
  CHECK(c.best_distance() <= 1e-4);

  const Matrix G = gaussian(6, 3, rng);
  const LabeledMatrix L{G, {3, 4, 4}};
  Vector g(3);
  g << 0.0, 1.0, 0.0;
  CHECK(classify_baseline(L, G.col(1), g).label == 4);
  CHECK(std::isinf(classify_baseline(L, G.col(1), g, true).distances[0]));
}
