#pragma once

// Randomized recognition experiments: repeated splits, every configured
// coder trained on the split's training atoms and scored on its test set.

#include "qar/baselines.hpp"
#include "qar/dataset.hpp"
#include "qar/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qar::experiment {

enum class Method { qar, hdqar, qcrc, qsrc, crc };

Method parse_method(const std::string& name);
const char* to_string(Method m);
/// Display name used in markdown tables (QAR, HD-QAR, ...).
const char* display_name(Method m);

struct SplitSpec {
  enum class Kind { per_class, percent, fixed };
  Kind kind = Kind::per_class;
  int n_train = 5;
  double percent = 50.0;

  std::string describe() const;
};

struct RunConfig {
  std::string manifest;  ///< empty: use `synth`
  data::SynthSpec synth;
  int height = 32;
  int width = 32;

  std::vector<Method> methods{Method::qar};
  SplitSpec split;
  int trials = 10;
  std::uint64_t seed = 1;

  SolverConfig solver;
  RidgeConfig ridge;
  std::optional<double> delta;  ///< nullopt: median heuristic per trial
  double noise_sigma = 0.0;     ///< 0 disables test-image noise

  bool verbose = false;  ///< keep per-sample predictions
  bool timing = false;   ///< record wall time (makes reports run-dependent)
  bool parallel = true;  ///< code test samples concurrently

  /// Throws config_error.
  void validate() const;
};

struct Prediction {
  std::size_t sample_index = 0;
  int true_label = 0;
  int predicted_label = -1;  ///< -1: no class could be assigned
  double best_distance = 0.0;
};

struct TrialResult {
  Method method = Method::qar;
  int trial = 0;  ///< 1-based
  double accuracy = 0.0;
  double mean_iters = 0.0;
  std::optional<double> wall_ms;
  std::size_t tested = 0;
  std::size_t correct = 0;
  std::size_t nonconverged = 0;
  std::optional<double> delta;  ///< HD-QAR bandwidth actually used
  std::vector<Prediction> predictions;
};

struct MethodSummary {
  Method method = Method::qar;
  int trials = 0;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  ///< population standard deviation
  double mean_iters = 0.0;
  std::size_t nonconverged = 0;
};

struct RunReport {
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<TrialResult> trials;
  std::vector<MethodSummary> summaries;
};

/// Seed used for the split of trial t (1-based).
std::uint64_t trial_seed(std::uint64_t seed, int trial);
/// Seed used for test-image noise in trial t.
std::uint64_t noise_seed(std::uint64_t seed, int trial);

/// Loads (or synthesizes) the dataset named by cfg and runs every trial.
RunReport run_experiment(const RunConfig& cfg);
RunReport run_experiment(const RunConfig& cfg, const data::Dataset& dataset);

/// Codes and classifies every test sample of an already-split dataset.
TrialResult evaluate(Method method, const data::Dataset& ds, const RunConfig& cfg, int trial = 1);

std::vector<MethodSummary> summarize(const std::vector<TrialResult>& trials,
                                     const std::vector<Method>& methods);

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& cfg);

}  // namespace qar::experiment
