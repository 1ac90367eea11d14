#include "qar/kernel.hpp"

#include "qar/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qar::kernel {

namespace {

std::vector<int> resolve_labels(std::vector<int> labels, Index n) {
  if (labels.empty()) labels.assign(static_cast<std::size_t>(n), 0);
  if (static_cast<Index>(labels.size()) != n)
    throw dimension_error("gram: need one label per sample");
  return labels;
}

void require_samples(const Matrix& samples) {
  if (samples.cols() == 0 || samples.rows() == 0) throw dimension_error("gram: no samples");
}

}  // namespace

void KernelParams::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw config_error("kernel delta must be > 0");
}

double rbf(const Vector& a, const Vector& b, KernelParams params) {
  params.validate();
  if (a.size() != b.size()) throw dimension_error("rbf: length mismatch");
  return std::exp(-(a - b).squaredNorm() / params.delta);
}

Matrix stack_samples(const std::vector<QuaternionVector>& samples) {
  if (samples.empty()) throw dimension_error("stack_samples: no samples");
  const Index n = 4 * samples.front().size();
  Matrix out(n, static_cast<Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (4 * samples[i].size() != n) throw dimension_error("stack_samples: inconsistent sample lengths");
    out.col(static_cast<Index>(i)) = embed_vector(samples[i]).values();
  }
  return out;
}

GramMatrix gram_serial(const Matrix& samples, KernelParams params, std::vector<int> labels) {
  params.validate();
  require_samples(samples);
  const Index L = samples.cols();
  Matrix K(L, L);
  for (Index i = 0; i < L; ++i) {
    K(i, i) = 1.0;
    for (Index j = i + 1; j < L; ++j) {
      const double v = std::exp(-(samples.col(i) - samples.col(j)).squaredNorm() / params.delta);
      K(i, j) = v;
      K(j, i) = v;
    }
  }
  return {std::move(K), resolve_labels(std::move(labels), L)};
}

GramMatrix gram(const Matrix& samples, KernelParams params, std::vector<int> labels) {
  params.validate();
  require_samples(samples);
  const Index L = samples.cols();
  Matrix K(L, L);
  // each (i, j) is written by exactly one row task; values match gram_serial bit for bit
#pragma omp parallel for schedule(dynamic, 8)
  for (Index i = 0; i < L; ++i) {
    K(i, i) = 1.0;
    for (Index j = i + 1; j < L; ++j) {
      const double v = std::exp(-(samples.col(i) - samples.col(j)).squaredNorm() / params.delta);
      K(i, j) = v;
      K(j, i) = v;
    }
  }
  return {std::move(K), resolve_labels(std::move(labels), L)};
}

GramMatrix gram(const std::vector<QuaternionVector>& samples, KernelParams params,
                std::vector<int> labels) {
  return gram(stack_samples(samples), params, std::move(labels));
}

Vector kvec(const Matrix& samples, const Vector& x, KernelParams params) {
  params.validate();
  if (x.size() != samples.rows()) throw dimension_error("kvec: sample length mismatch");
  return ((samples.colwise() - x).colwise().squaredNorm().array() / -params.delta)
      .exp()
      .transpose()
      .matrix();
}

Vector kvec(const std::vector<QuaternionVector>& samples, const QuaternionVector& x,
            KernelParams params) {
  return kvec(stack_samples(samples), embed_vector(x).values(), params);
}

KernelParams median_bandwidth(const Matrix& samples) {
  const Index L = samples.cols();
  if (L < 2) throw data_error("median_bandwidth: need at least two samples");
  std::vector<double> d2;
  d2.reserve(static_cast<std::size_t>(L * (L - 1) / 2));
  for (Index i = 0; i < L; ++i)
    for (Index j = i + 1; j < L; ++j) {
      const double v = (samples.col(i) - samples.col(j)).squaredNorm();
      if (v > 0.0) d2.push_back(v);
    }
  if (d2.empty()) throw data_error("median_bandwidth: all samples are identical");
  const std::size_t mid = d2.size() / 2;
  std::nth_element(d2.begin(), d2.begin() + static_cast<std::ptrdiff_t>(mid), d2.end());
  double median = d2[mid];
  if (d2.size() % 2 == 0) {
    const double lower = *std::max_element(d2.begin(), d2.begin() + static_cast<std::ptrdiff_t>(mid));
    median = 0.5 * (median + lower);
  }
  return {median};
}

KernelParams median_bandwidth(const std::vector<QuaternionVector>& samples) {
  return median_bandwidth(stack_samples(samples));
}

}  // namespace qar::kernel
