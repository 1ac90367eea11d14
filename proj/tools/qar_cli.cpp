// qar: recognition experiments with quaternion representation coders.
//
//   qar run   --manifest faces.csv --methods qar,qcrc --n-train 3 --trials 10
//   qar check --instances 1000
//   qar info  --manifest faces.csv
//
// Exit codes: 0 success, 1 config error, 2 data error, 3 numerical failure.

#include "qar/checks.hpp"
#include "qar/dataset.hpp"
#include "qar/errors.hpp"
#include "qar/experiment.hpp"
#include "qar/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

namespace ex = qar::experiment;
namespace fs = std::filesystem;

constexpr int kConfigError = 1;
constexpr int kDataError = 2;
constexpr int kNumericalError = 3;

struct DatasetOptions {
  std::string manifest;
  qar::data::SynthSpec synth;
  int height = 32;
  int width = 32;

  void add_to(CLI::App& app) {
    app.add_option("--manifest", manifest, "CSV manifest (path,label,split); omit for synthetic data");
    app.add_option("--height", height, "Working image height")->check(CLI::PositiveNumber);
    app.add_option("--width", width, "Working image width")->check(CLI::PositiveNumber);
    app.add_option("--classes", synth.classes, "Synthetic: number of classes")->check(CLI::PositiveNumber);
    app.add_option("--per-class", synth.per_class, "Synthetic: samples per class")->check(CLI::PositiveNumber);
    app.add_option("--pixels", synth.pixels, "Synthetic: pixels per sample")->check(CLI::PositiveNumber);
    app.add_option("--channel-corr", synth.channel_corr, "Synthetic: cross-channel correlation in [0,1]")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--spread", synth.spread, "Synthetic: within-class spread")->check(CLI::NonNegativeNumber);
    app.add_option("--synth-seed", synth.seed, "Synthetic: generator seed");
  }

  qar::data::Dataset load() const {
    if (manifest.empty()) return qar::data::synth_correlated(synth);
    auto m = qar::data::Manifest::read(manifest);
    m.height = height;
    m.width = width;
    return qar::data::load_dataset(m);
  }
};

fs::path default_output() {
  if (const char* dir = std::getenv("QAR_OUTPUT_DIR"); dir && *dir) return fs::path(dir) / "report";
  return "report";
}

int run_command(ex::RunConfig cfg, const DatasetOptions& data, const std::vector<std::string>& methods,
                int n_train, double percent, bool fixed_split, const std::string& delta,
                std::string output, const std::string& format) {
  cfg.manifest = data.manifest;
  cfg.synth = data.synth;
  cfg.height = data.height;
  cfg.width = data.width;
  cfg.methods.clear();
  for (const auto& m : methods) cfg.methods.push_back(ex::parse_method(m));

  const int chosen = (n_train > 0) + (percent > 0.0) + fixed_split;
  if (chosen > 1) throw qar::config_error("--n-train, --percent and --fixed-split are exclusive");
  if (percent > 0.0) {
    cfg.split.kind = ex::SplitSpec::Kind::percent;
    cfg.split.percent = percent;
  } else if (fixed_split) {
    cfg.split.kind = ex::SplitSpec::Kind::fixed;
  } else {
    cfg.split.kind = ex::SplitSpec::Kind::per_class;
    if (n_train > 0) cfg.split.n_train = n_train;
  }
  if (delta != "median") {
    try {
      cfg.delta = std::stod(delta);
    } catch (const std::exception&) {
      throw qar::config_error("--delta must be a positive number or 'median'");
    }
  }
  cfg.validate();

  const fs::path prefix = output.empty() ? default_output() : fs::path(output);
  if (prefix.has_parent_path()) fs::create_directories(prefix.parent_path());

  const ex::RunReport report = ex::run_experiment(cfg, data.load());

  const bool csv = format == "csv" || format == "both";
  const bool md = format == "markdown" || format == "md" || format == "both";
  if (!csv && !md) throw qar::config_error("--format must be csv, markdown or both");
  if (csv) ex::emit_report(report, ex::ReportFormat::csv, prefix.string() + ".csv");
  if (md) ex::emit_report(report, ex::ReportFormat::markdown, prefix.string() + ".md");
  if (cfg.verbose) {
    for (const auto& t : report.trials) {
      const fs::path p = prefix.string() + ".predictions." + ex::to_string(t.method) + ".trial" +
                         std::to_string(t.trial) + ".csv";
      std::ofstream out(p, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + p.string());
      ex::write_predictions(t, out);
    }
  }

  for (const auto& s : report.summaries) {
    std::cout << ex::display_name(s.method) << ": mean recognition rate " << 100.0 * s.mean_accuracy
              << "% (std " << 100.0 * s.std_accuracy << "%, " << s.trials << " trials";
    if (s.nonconverged > 0) std::cout << ", " << s.nonconverged << " non-converged solves";
    std::cout << ")\n";
  }
  return 0;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// key=value lines, '#' comments; keys are long flag names without dashes.
// Only options absent from the command line are filled in.
void apply_config_file(CLI::App& app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qar::config_error(path + ": cannot open config file");
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const std::string where = path + ":" + std::to_string(lineno) + ": ";
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw qar::config_error(where + "expected key=value");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "config") throw qar::config_error(where + "config files do not nest");
    CLI::Option* opt = nullptr;
    try {
      opt = app.get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
      throw qar::config_error(where + "unknown key '" + key + "'");
    }
    if (opt->count() > 0) continue;
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw qar::config_error(where + key + ": " + e.what());
    }
  }
}

int check_command(int instances, std::uint64_t seed) {
  bool ok = true;
  for (const auto& r : qar::checks::run_all(instances, seed)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.instances
              << " instances, worst " << r.worst << ", tol " << r.tolerance << ")\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : kNumericalError;
}

int info_command(const DatasetOptions& data) {
  const qar::data::Dataset ds = data.load();
  ds.validate();
  std::cout << "samples: " << ds.samples.size() << "\n"
            << "classes: " << ds.num_classes() << "\n"
            << "pixels:  " << ds.pixels() << " (" << ds.height << "x" << ds.width << ")\n"
            << "split:   train " << ds.indices(qar::data::Split::train).size() << ", test "
            << ds.indices(qar::data::Split::test).size() << ", auto "
            << ds.indices(qar::data::Split::unassigned).size() << "\n";
  const auto counts = ds.class_counts();
  std::size_t lo = counts.empty() ? 0 : counts.front(), hi = lo;
  for (auto c : counts) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  std::cout << "per class: min " << lo << ", max " << hi << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion adaptive representation classifiers"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Repeated randomized recognition trials");
  std::string config_file;
  run->add_option("--config", config_file, "Flat key=value file; command-line flags win");
  ex::RunConfig cfg;
  DatasetOptions run_data;
  run_data.add_to(*run);
  std::vector<std::string> methods{"qar"};
  int n_train = 0;
  double percent = 0.0;
  bool fixed_split = false;
  std::string delta = "median";
  std::string output;
  std::string format = "both";
  run->add_option("--methods", methods, "Comma-separated: qar,hdqar,qcrc,qsrc,crc")->delimiter(',');
  run->add_option("--n-train", n_train, "Training samples per class (default 5)");
  run->add_option("--percent", percent, "Training percentage per class");
  run->add_flag("--fixed-split", fixed_split, "Use the manifest's train/test column as is");
  run->add_option("--trials", cfg.trials, "Number of random trials")->check(CLI::PositiveNumber);
  run->add_option("--seed", cfg.seed, "Master seed");
  run->add_option("--lambda", cfg.solver.lambda, "Trace-norm weight");
  run->add_option("--u0", cfg.solver.u0, "Initial penalty");
  run->add_option("--rho", cfg.solver.rho, "Penalty growth factor");
  run->add_option("--u-max", cfg.solver.u_max, "Penalty cap");
  run->add_option("--eps", cfg.solver.eps, "Residual tolerance");
  run->add_option("--max-iter", cfg.solver.max_iter, "Iteration limit");
  run->add_flag("--normalize-distance", cfg.solver.normalize_distance,
                "Divide QAR class distances by the coefficient norm");
  run->add_option("--ridge-mu", cfg.ridge.mu, "Ridge weight for qcrc/crc");
  run->add_option("--delta", delta, "RBF bandwidth or 'median'");
  run->add_option("--noise-sigma", cfg.noise_sigma, "Gaussian noise added to test images");
  run->add_option("--output,-o", output, "Report path prefix (default $QAR_OUTPUT_DIR/report)");
  run->add_option("--format", format, "csv, markdown or both");
  run->add_flag("--verbose,-v", cfg.verbose, "Write per-sample prediction logs");
  run->add_flag("--timing", cfg.timing, "Record wall time (reports become run-dependent)");
  bool serial = false;
  run->add_flag("--serial", serial, "Code test samples on one thread");

  // check
  auto* check = app.add_subcommand("check", "Randomized invariant suite");
  int instances = 1000;
  std::uint64_t check_seed = 1;
  check->add_option("--instances", instances, "Random instances per invariant")->check(CLI::PositiveNumber);
  check->add_option("--seed", check_seed, "Seed");

  // info
  auto* info = app.add_subcommand("info", "Dataset statistics");
  DatasetOptions info_data;
  info_data.add_to(*info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  try {
    if (*run) {
      if (!config_file.empty()) apply_config_file(*run, config_file);
      cfg.parallel = !serial;
      return run_command(cfg, run_data, methods, n_train, percent, fixed_split, delta, output, format);
    }
    if (*check) return check_command(instances, check_seed);
    if (*info) return info_command(info_data);
  } catch (const qar::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const qar::data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataError;
  } catch (const qar::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalError;
  } catch (const qar::dimension_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return 0;
}
