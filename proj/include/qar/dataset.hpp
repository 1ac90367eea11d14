#pragma once

#include "qar/embedding.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qar::data {

/// Identifier of the generator behind every seeded operation, echoed in run
/// reports.
inline constexpr const char* kRngAlgorithm = "std::mt19937_64";

enum class Split { train, test, unassigned };

Split parse_split(const std::string& s);
const char* to_string(Split s);

struct ManifestRow {
  std::filesystem::path path;  ///< resolved against the manifest directory
  std::string label;
  Split split = Split::unassigned;
  int line = 0;  ///< 1-based line in the manifest file
};

/// CSV `path,label,split`; relative paths resolve against the manifest's
/// directory. `split` may be train, test or auto.
struct Manifest {
  std::filesystem::path source;
  std::vector<ManifestRow> rows;
  int height = 32;
  int width = 32;

  static Manifest read(const std::filesystem::path& csv);
  static Manifest parse(std::istream& in, const std::filesystem::path& root,
                        const std::string& source_name = "<manifest>");
};

struct Sample {
  QuaternionVector x;
  int label = 0;  ///< contiguous 0..M-1
  Split split = Split::unassigned;
};

struct Dataset {
  std::vector<Sample> samples;
  std::vector<std::string> class_names;  ///< index = label
  int height = 0;
  int width = 0;

  Index pixels() const { return samples.empty() ? 0 : samples.front().x.size(); }
  int num_classes() const { return static_cast<int>(class_names.size()); }
  std::vector<std::size_t> indices(Split s) const;
  std::vector<std::size_t> class_counts() const;

  /// Throws data_error on inconsistent pixel counts or labels.
  void validate() const;
};

/// Decodes to 8-bit RGB, resizes bilinearly to (height, width), scales to
/// [0,1] and encodes r i + g j + b k, pixels row-major.
QuaternionVector load_image(const std::filesystem::path& path, int height, int width);

Dataset load_dataset(const Manifest& manifest);

/// n_train samples per class drawn without replacement go to train, the rest
/// to test. Every class needs more than n_train samples.
Dataset split_per_class(Dataset ds, int n_train, std::uint64_t seed);

/// round(p * Nc / 100) per class, clamped to [1, Nc - 1], go to train.
Dataset split_percent(Dataset ds, double percent, std::uint64_t seed);

/// Adds N(0, sigma^2) to every channel value of test samples, clamped to
/// [0, 1]. Training samples are untouched.
Dataset add_gaussian_noise(Dataset ds, double sigma, std::uint64_t seed);

struct SynthSpec {
  int classes = 4;
  int per_class = 20;
  Index pixels = 32;
  double channel_corr = 0.9;
  /// Within-class spread relative to the [0,1] channel range. Small values
  /// give well-separated classes.
  double spread = 0.05;
  std::uint64_t seed = 1;
};

/// Per class: a shared mean and three per-channel means. Sample channel c is
///   corr * (shared_mean + spread * latent) + (1 - corr) * (mean_c + spread * noise_c)
/// clamped to [0, 1], with latent shared by the three channels. corr = 1
/// makes the channels identical.
Dataset synth_correlated(const SynthSpec& spec);

/// Unit-norm training atoms for the samples at `indices`, column order as
/// given.
struct Dictionary {
  QuaternionMatrix atoms;
  std::vector<int> labels;

  RealBlockMatrix embedded() const { return embed_matrix(atoms, labels); }
  /// 4q x L matrix of stacked atoms.
  Matrix stacked() const;
  /// q x L matrix of channel-averaged (r + g + b) / 3 atoms, unit columns.
  Matrix grayscale() const;
};

Dictionary build_dictionary(const Dataset& ds, const std::vector<std::size_t>& indices);

/// Scales a quaternion vector so its stacked embedding has unit l2 norm.
/// Zero vectors are returned unchanged.
QuaternionVector normalized(const QuaternionVector& v);
/// Channel average (v1 + v2 + v3) / 3 scaled to unit norm.
Vector grayscale(const QuaternionVector& v);

}  // namespace qar::data
