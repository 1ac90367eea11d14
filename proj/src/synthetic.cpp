#include "qar/dataset.hpp"

#include "qar/errors.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace qar::data {

Dataset synth_correlated(const SynthSpec& spec) {
  if (spec.classes < 1 || spec.per_class < 1 || spec.pixels < 1)
    throw config_error("synthetic dataset: classes, per_class and pixels must be positive");
  if (!(spec.channel_corr >= 0.0 && spec.channel_corr <= 1.0))
    throw config_error("synthetic dataset: channel_corr must lie in [0, 1]");
  if (!(spec.spread >= 0.0)) throw config_error("synthetic dataset: spread must be >= 0");

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> mean_dist(0.2, 0.8);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto draw = [&](auto& dist) {
    Vector v(spec.pixels);
    for (Index p = 0; p < v.size(); ++p) v(p) = dist(rng);
    return v;
  };

  const double a = spec.channel_corr;
  const double b = 1.0 - spec.channel_corr;
  const auto clamp01 = [](Vector v) { return v.cwiseMax(0.0).cwiseMin(1.0).eval(); };

  Dataset ds;
  ds.height = 1;
  ds.width = static_cast<int>(spec.pixels);
  for (int c = 0; c < spec.classes; ++c) {
    ds.class_names.push_back(std::to_string(c));
    const Vector shared_mean = draw(mean_dist);
    const Vector channel_mean[3] = {draw(mean_dist), draw(mean_dist), draw(mean_dist)};
    for (int n = 0; n < spec.per_class; ++n) {
      const Vector latent = draw(gauss);
      Vector channel[3];
      for (int k = 0; k < 3; ++k) {
        const Vector own = draw(gauss);
        channel[k] = clamp01(a * (shared_mean + spec.spread * latent) +
                             b * (channel_mean[k] + spec.spread * own));
      }
      ds.samples.push_back({encode_rgb(channel[0], channel[1], channel[2]), c, Split::unassigned});
    }
  }
  return ds;
}

}  // namespace qar::data
