#include "qar/experiment.hpp"

#include "qar/errors.hpp"
#include "qar/hdqar.hpp"
#include "qar/kernel.hpp"
#include "qar/qar.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <sstream>

namespace qar::experiment {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

struct Coded {
  Classification decision;
  int iterations = 0;
  bool converged = true;
  bool failed = false;  ///< classification_error: no class assignable
};

// Per-sample coder: maps a test sample to a decision. Shared read-only
// across threads.
using Coder = std::function<Coded(const QuaternionVector&)>;

Coded decide(const std::function<Classification()>& classify, int iterations, bool converged) {
  Coded out;
  out.iterations = iterations;
  out.converged = converged;
  try {
    out.decision = classify();
  } catch (const classification_error&) {
    out.failed = true;
  }
  return out;
}

TrialResult run_coder(Method method, const data::Dataset& ds, const std::vector<std::size_t>& test,
                      const Coder& coder, const RunConfig& cfg, int trial) {
  TrialResult r;
  r.method = method;
  r.trial = trial;
  r.tested = test.size();
  const auto n = static_cast<std::ptrdiff_t>(test.size());
  std::vector<Coded> coded(test.size());
  std::vector<std::exception_ptr> errors(test.size());

#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    const auto i = static_cast<std::size_t>(t);
    try {
      coded[i] = coder(ds.samples[test[i]].x);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  double iters = 0.0;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const auto& c = coded[i];
    const int truth = ds.samples[test[i]].label;
    const int predicted = c.failed ? -1 : c.decision.label;
    if (predicted == truth) ++r.correct;
    if (!c.converged) ++r.nonconverged;
    iters += c.iterations;
    if (cfg.verbose)
      r.predictions.push_back({test[i], truth, predicted,
                               c.failed ? std::numeric_limits<double>::infinity()
                                        : c.decision.best_distance()});
  }
  r.accuracy = test.empty() ? 0.0 : static_cast<double>(r.correct) / static_cast<double>(test.size());
  r.mean_iters = test.empty() ? 0.0 : iters / static_cast<double>(test.size());
  return r;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "qar") return Method::qar;
  if (name == "hdqar" || name == "hd-qar") return Method::hdqar;
  if (name == "qcrc") return Method::qcrc;
  if (name == "qsrc") return Method::qsrc;
  if (name == "crc") return Method::crc;
  throw config_error("unknown method '" + name + "' (expected qar, hdqar, qcrc, qsrc or crc)");
}

const char* to_string(Method m) {
  switch (m) {
    case Method::qar: return "qar";
    case Method::hdqar: return "hdqar";
    case Method::qcrc: return "qcrc";
    case Method::qsrc: return "qsrc";
    case Method::crc: return "crc";
  }
  return "?";
}

const char* display_name(Method m) {
  switch (m) {
    case Method::qar: return "QAR";
    case Method::hdqar: return "HD-QAR";
    case Method::qcrc: return "QCRC";
    case Method::qsrc: return "QSRC";
    case Method::crc: return "CRC";
  }
  return "?";
}

std::string SplitSpec::describe() const {
  switch (kind) {
    case Kind::per_class: return "per-class n=" + std::to_string(n_train);
    case Kind::percent: return "percent p=" + fmt_double(percent);
    case Kind::fixed: return "fixed (manifest)";
  }
  return "?";
}

void RunConfig::validate() const {
  if (methods.empty()) throw config_error("at least one method is required");
  if (trials < 1) throw config_error("trials must be >= 1");
  if (height < 1 || width < 1) throw config_error("image size must be positive");
  if (split.kind == SplitSpec::Kind::per_class && split.n_train < 1)
    throw config_error("per-class training count must be >= 1");
  if (split.kind == SplitSpec::Kind::percent && !(split.percent > 0.0 && split.percent < 100.0))
    throw config_error("split percent must lie in (0, 100)");
  if (!(noise_sigma >= 0.0)) throw config_error("noise sigma must be >= 0");
  if (delta && !(*delta > 0.0)) throw config_error("kernel delta must be > 0");
  solver.validate();
  ridge.validate();
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return seed * 1000003ULL + static_cast<std::uint64_t>(trial);
}

std::uint64_t noise_seed(std::uint64_t seed, int trial) {
  return trial_seed(seed, trial) ^ 0x9E3779B97F4A7C15ULL;
}

TrialResult evaluate(Method method, const data::Dataset& ds, const RunConfig& cfg, int trial) {
  const auto train = ds.indices(data::Split::train);
  const auto test = ds.indices(data::Split::test);
  if (train.empty()) throw data_error("split produced no training samples");
  const data::Dictionary dict = data::build_dictionary(ds, train);
  const SolverConfig solver_cfg = cfg.solver;

  const auto started = std::chrono::steady_clock::now();
  TrialResult r;
  switch (method) {
    case Method::qar: {
      const QarSolver solver(dict.embedded());
      r = run_coder(method, ds, test, [&](const QuaternionVector& x) {
        const RealStackVector y = embed_vector(data::normalized(x));
        const CodingResult c = solver.solve(y, solver_cfg);
        return decide([&] { return classify_qar(solver.dictionary(), y, c.code, solver_cfg.normalize_distance); },
                      c.trace.iterations, c.trace.converged);
      }, cfg, trial);
      break;
    }
    case Method::hdqar: {
      const Matrix atoms = dict.stacked();
      const kernel::KernelParams params =
          cfg.delta ? kernel::KernelParams{*cfg.delta} : kernel::median_bandwidth(atoms);
      const HdqarSolver solver(kernel::gram(atoms, params, dict.labels));
      r = run_coder(method, ds, test, [&](const QuaternionVector& x) {
        const Vector k = kernel::kvec(atoms, embed_vector(data::normalized(x)).values(), params);
        const CodingResult c = solver.solve(k, solver_cfg);
        return decide([&] { return classify_hdqar(solver.gram(), k, c.code); }, c.trace.iterations,
                      c.trace.converged);
      }, cfg, trial);
      r.delta = params.delta;
      break;
    }
    case Method::qcrc: {
      const RealBlockMatrix D = dict.embedded();
      const RidgeSolver solver(D.dense(), cfg.ridge);
      r = run_coder(method, ds, test, [&](const QuaternionVector& x) {
        const RealStackVector y = embed_vector(data::normalized(x));
        const RidgeResult c = solver.solve(y.values());
        return decide([&] { return classify_baseline(D, y, c.code); }, 0, true);
      }, cfg, trial);
      break;
    }
    case Method::qsrc: {
      const RealBlockMatrix D = dict.embedded();
      const ialm::L1Problem problem(D.dense());
      r = run_coder(method, ds, test, [&](const QuaternionVector& x) {
        const RealStackVector y = embed_vector(data::normalized(x));
        const CodingResult c = problem.solve(y.values(), solver_cfg);
        return decide([&] { return classify_baseline(D, y, c.code); }, c.trace.iterations, c.trace.converged);
      }, cfg, trial);
      break;
    }
    case Method::crc: {
      const LabeledMatrix gray{dict.grayscale(), dict.labels};
      const RidgeSolver solver(gray.values, cfg.ridge);
      r = run_coder(method, ds, test, [&](const QuaternionVector& x) {
        const Vector y = data::grayscale(x);
        const RidgeResult c = solver.solve(y);
        return decide([&] { return classify_baseline(gray, y, c.code); }, 0, true);
      }, cfg, trial);
      break;
    }
  }
  if (cfg.timing)
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

std::vector<MethodSummary> summarize(const std::vector<TrialResult>& trials,
                                     const std::vector<Method>& methods) {
  std::vector<MethodSummary> out;
  for (Method m : methods) {
    MethodSummary s;
    s.method = m;
    std::vector<double> acc;
    double iters = 0.0;
    for (const auto& t : trials) {
      if (t.method != m) continue;
      acc.push_back(t.accuracy);
      iters += t.mean_iters;
      s.nonconverged += t.nonconverged;
    }
    s.trials = static_cast<int>(acc.size());
    if (!acc.empty()) {
      double sum = 0.0;
      for (double a : acc) sum += a;
      s.mean_accuracy = sum / static_cast<double>(acc.size());
      double var = 0.0;
      for (double a : acc) var += (a - s.mean_accuracy) * (a - s.mean_accuracy);
      s.std_accuracy = std::sqrt(var / static_cast<double>(acc.size()));
      s.mean_iters = iters / static_cast<double>(acc.size());
    }
    out.push_back(s);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> kv;
  if (cfg.manifest.empty()) {
    kv.emplace_back("dataset", "synthetic");
    kv.emplace_back("synth_classes", std::to_string(cfg.synth.classes));
    kv.emplace_back("synth_per_class", std::to_string(cfg.synth.per_class));
    kv.emplace_back("synth_pixels", std::to_string(cfg.synth.pixels));
    kv.emplace_back("synth_channel_corr", fmt_double(cfg.synth.channel_corr));
    kv.emplace_back("synth_spread", fmt_double(cfg.synth.spread));
    kv.emplace_back("synth_seed", std::to_string(cfg.synth.seed));
  } else {
    kv.emplace_back("dataset", "manifest");
    kv.emplace_back("manifest", cfg.manifest);
    kv.emplace_back("image_size", std::to_string(cfg.height) + "x" + std::to_string(cfg.width));
  }
  std::string methods;
  for (Method m : cfg.methods) methods += (methods.empty() ? "" : ",") + std::string(to_string(m));
  kv.emplace_back("methods", methods);
  kv.emplace_back("split", cfg.split.describe());
  kv.emplace_back("trials", std::to_string(cfg.trials));
  kv.emplace_back("seed", std::to_string(cfg.seed));
  kv.emplace_back("rng", data::kRngAlgorithm);
  kv.emplace_back("lambda", fmt_double(cfg.solver.lambda));
  kv.emplace_back("u0", fmt_double(cfg.solver.u0));
  kv.emplace_back("rho", fmt_double(cfg.solver.rho));
  kv.emplace_back("u_max", fmt_double(cfg.solver.u_max));
  kv.emplace_back("eps", fmt_double(cfg.solver.eps));
  kv.emplace_back("max_iter", std::to_string(cfg.solver.max_iter));
  kv.emplace_back("normalize_distance", cfg.solver.normalize_distance ? "true" : "false");
  kv.emplace_back("ridge_mu", fmt_double(cfg.ridge.mu));
  kv.emplace_back("delta", cfg.delta ? fmt_double(*cfg.delta) : "median");
  kv.emplace_back("noise_sigma", fmt_double(cfg.noise_sigma));
  return kv;
}

RunReport run_experiment(const RunConfig& cfg, const data::Dataset& dataset) {
  cfg.validate();
  dataset.validate();
  if (dataset.num_classes() < 2) throw data_error("classification needs at least two classes");

  RunReport report;
  report.config = describe(cfg);
  for (int t = 1; t <= cfg.trials; ++t) {
    data::Dataset ds;
    switch (cfg.split.kind) {
      case SplitSpec::Kind::per_class:
        ds = data::split_per_class(dataset, cfg.split.n_train, trial_seed(cfg.seed, t));
        break;
      case SplitSpec::Kind::percent:
        ds = data::split_percent(dataset, cfg.split.percent, trial_seed(cfg.seed, t));
        break;
      case SplitSpec::Kind::fixed:
        ds = dataset;
        if (!ds.indices(data::Split::unassigned).empty())
          throw config_error("fixed split requested but the manifest has 'auto' rows");
        break;
    }
    ds = data::add_gaussian_noise(std::move(ds), cfg.noise_sigma, noise_seed(cfg.seed, t));
    for (Method m : cfg.methods) report.trials.push_back(evaluate(m, ds, cfg, t));
  }
  report.summaries = summarize(report.trials, cfg.methods);
  return report;
}

RunReport run_experiment(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.manifest.empty()) return run_experiment(cfg, data::synth_correlated(cfg.synth));
  data::Manifest manifest = data::Manifest::read(cfg.manifest);
  manifest.height = cfg.height;
  manifest.width = cfg.width;
  return run_experiment(cfg, data::load_dataset(manifest));
}

}  // namespace qar::experiment
