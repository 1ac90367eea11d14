#include "qar/errors.hpp"
#include "qar/kernel.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

using namespace qar;
using namespace qar::testing;

TEST_CASE("rbf") {
  Vector a(1), b(1);
  a << 0.0;
  b << 1.0;
  CHECK(kernel::rbf(a, b, {1.0}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  b << 2.0;
  CHECK(kernel::rbf(a, b, {2.0}) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(kernel::rbf(b, b, {0.5}) == 1.0);
  CHECK_THROWS_AS(kernel::rbf(a, b, {0.0}), config_error);
  CHECK_THROWS_AS(kernel::rbf(a, Vector::Zero(2), {1.0}), dimension_error);
}

TEST_CASE("gram agrees with pairwise rbf") {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const Index n = 4 * uniform_index(rng, 1, 5), L = uniform_index(rng, 1, 12);
    const Matrix S = gaussian(n, L, rng);
    const kernel::KernelParams p{std::exp(gaussian_vec(1, rng)(0))};
    const kernel::GramMatrix G = kernel::gram(S, p);
    for (Index i = 0; i < L; ++i)
      for (Index j = 0; j < L; ++j)
        CHECK(std::abs(G.K(i, j) - kernel::rbf(S.col(i), S.col(j), p)) <= 1e-15);
    CHECK(G.labels.size() == static_cast<std::size_t>(L));
  }
}

TEST_CASE("parallel gram matches the serial reference bit for bit") {
  Rng rng(2);
  const Matrix S = gaussian(64, 150, rng);
  const kernel::KernelParams p = kernel::median_bandwidth(S);
  const kernel::GramMatrix a = kernel::gram(S, p);
  const kernel::GramMatrix b = kernel::gram_serial(S, p);
  CHECK(a.K == b.K);
}

TEST_CASE("gram invariants") {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const Index L = uniform_index(rng, 2, 20);
    std::vector<QuaternionVector> samples;
    for (Index i = 0; i < L; ++i) samples.push_back(random_qvector(5, rng));
    const kernel::KernelParams p = kernel::median_bandwidth(samples);
    const Matrix K = kernel::gram(samples, p).K;
    CHECK(max_abs_diff(K, K.transpose()) == 0.0);
    CHECK(K.diagonal().isOnes(0.0));
    CHECK(K.minCoeff() > 0.0);
    CHECK(K.maxCoeff() <= 1.0);
    const double lo = Eigen::SelfAdjointEigenSolver<Matrix>(K, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
    CHECK(lo >= -1e-10);

    // kvec of a training sample is its Gram column
    const Index c = uniform_index(rng, 0, L - 1);
    CHECK(max_abs_diff(kernel::kvec(samples, samples[static_cast<std::size_t>(c)], p), K.col(c)) <= 1e-15);
  }
}

TEST_CASE("scaling samples and bandwidth together leaves K unchanged") {
  Rng rng(4);
  const Matrix S = gaussian(12, 8, rng);
  const double s = 3.0;
  const Matrix K1 = kernel::gram(S, {1.7}).K;
  const Matrix K2 = kernel::gram(s * S, {1.7 * s * s}).K;
  CHECK(max_abs_diff(K1, K2) <= 1e-14);
  CHECK(kernel::median_bandwidth(s * S).delta ==
        doctest::Approx(s * s * kernel::median_bandwidth(S).delta).epsilon(1e-13));
}

TEST_CASE("median_bandwidth") {
  SUBCASE("one pair") {
    Matrix S(2, 2);
    S << 0, 3, 0, 4;
    CHECK(kernel::median_bandwidth(S).delta == 25.0);
  }
  SUBCASE("simplex") {
    const Matrix S = Matrix::Identity(5, 5);
    CHECK(kernel::median_bandwidth(S).delta == 2.0);
  }
  SUBCASE("odd number of distances") {
    Matrix S(1, 3);
    S << 0, 1, 3;  // 1, 9, 4
    CHECK(kernel::median_bandwidth(S).delta == 4.0);
  }
  SUBCASE("even number of distances averages the middle pair") {
    Matrix S(1, 4);
    S << 0, 1, 3, 7;  // 1, 9, 49, 4, 36, 16
    CHECK(kernel::median_bandwidth(S).delta == 12.5);
  }
  SUBCASE("duplicates are ignored") {
    Matrix S(1, 3);
    S << 0, 0, 2;  // 0 dropped, 4, 4
    CHECK(kernel::median_bandwidth(S).delta == 4.0);
  }
  SUBCASE("degenerate input") {
    CHECK_THROWS_AS(kernel::median_bandwidth(Matrix::Zero(3, 1)), data_error);
    CHECK_THROWS_AS(kernel::median_bandwidth(Matrix::Ones(3, 4)), data_error);
  }
}

TEST_CASE("label and shape checks") {
  const Matrix S = Matrix::Identity(4, 3);
  CHECK_THROWS_AS(kernel::gram(S, {1.0}, {0, 1}), dimension_error);
  CHECK(kernel::gram(S, {1.0}, {0, 1, 1}).labels == std::vector<int>{0, 1, 1});
  CHECK_THROWS_AS(kernel::gram(Matrix(4, 0), {1.0}), dimension_error);
  CHECK_THROWS_AS(kernel::kvec(S, Vector::Zero(3), {1.0}), dimension_error);
}
