#include "qar/classify.hpp"

#include "qar/errors.hpp"

#include <cmath>
#include <limits>

namespace qar {

namespace {

double class_distance(const Vector& residual, const Vector& code, bool normalize) {
  const double d = residual.norm();
  if (!normalize) return d;
  const double n = code.norm();
  if (n == 0.0) return std::numeric_limits<double>::infinity();
  return d / n;
}

Classification pick(std::vector<int> classes, std::vector<double> distances) {
  if (classes.empty()) throw classification_error("no classes to choose from");
  Classification out{-1, std::move(classes), std::move(distances)};
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    // strict '<' keeps the lowest label on ties
    if (out.distances[c] < best) {
      best = out.distances[c];
      out.label = out.classes[c];
    }
  }
  if (out.label < 0) throw classification_error("every class has a zero coefficient block");
  return out;
}

}  // namespace

double Classification::best_distance() const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c] == label) return distances[c];
  return std::numeric_limits<double>::quiet_NaN();
}

Classification classify_residual(const RealBlockMatrix& D, const Vector& y, const Vector& code,
                                 bool normalize) {
  if (y.size() != D.dense().rows()) throw dimension_error("classify: signal length mismatch");
  std::vector<int> classes = D.classes();
  std::vector<double> distances;
  distances.reserve(classes.size());
  for (int c : classes) {
    const ClassBlock part = gather_class(D, code, c);
    distances.push_back(
        class_distance(y - part.dictionary.dense() * part.code, part.code, normalize));
  }
  return pick(std::move(classes), std::move(distances));
}

Classification classify_residual(const LabeledMatrix& D, const Vector& y, const Vector& code,
                                 bool normalize) {
  if (y.size() != D.values.rows()) throw dimension_error("classify: signal length mismatch");
  std::vector<int> classes = D.classes();
  std::vector<double> distances;
  distances.reserve(classes.size());
  for (int c : classes) {
    const ClassColumns part = gather_class(D, code, c);
    distances.push_back(class_distance(y - part.columns * part.code, part.code, normalize));
  }
  return pick(std::move(classes), std::move(distances));
}

}  // namespace qar
