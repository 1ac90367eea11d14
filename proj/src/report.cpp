#include "qar/report.hpp"

#include "qar/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qar::experiment {

namespace {

std::string fixed(double v, int digits) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string percent(double v) { return fixed(100.0 * v, 2); }

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  throw config_error("unknown report format '" + name + "' (expected csv or markdown)");
}

void write_csv(const RunReport& report, std::ostream& out) {
  out << "method,trial,accuracy,mean_iters,wall_ms\n";
  for (const auto& t : report.trials) {
    out << to_string(t.method) << ',' << t.trial << ',' << fixed(t.accuracy, 6) << ','
        << fixed(t.mean_iters, 2) << ',' << (t.wall_ms ? fixed(*t.wall_ms, 1) : "") << '\n';
  }
  for (const auto& s : report.summaries) {
    std::string wall;
    double total = 0.0;
    int timed = 0;
    for (const auto& t : report.trials)
      if (t.method == s.method && t.wall_ms) {
        total += *t.wall_ms;
        ++timed;
      }
    if (timed > 0) wall = fixed(total / timed, 1);
    out << to_string(s.method) << ",mean," << fixed(s.mean_accuracy, 6) << ','
        << fixed(s.mean_iters, 2) << ',' << wall << '\n';
  }
}

void write_markdown(const RunReport& report, std::ostream& out) {
  out << "# Recognition report\n\n";
  out << "| Methods | Mean Recognition Rate (%) | Std (%) | Trials | Mean iterations | Non-converged |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& s : report.summaries) {
    out << "| " << display_name(s.method) << " | " << percent(s.mean_accuracy) << " | "
        << percent(s.std_accuracy) << " | " << s.trials << " | " << fixed(s.mean_iters, 2) << " | "
        << s.nonconverged << " |\n";
  }
  out << "\n## Trials\n\n";
  out << "| Method | Trial | Rate (%) | Correct / Tested | Mean iterations | Kernel delta |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& t : report.trials) {
    out << "| " << display_name(t.method) << " | " << t.trial << " | " << percent(t.accuracy) << " | "
        << t.correct << " / " << t.tested << " | " << fixed(t.mean_iters, 2) << " | "
        << (t.delta ? fixed(*t.delta, 6) : "-") << " |\n";
  }
  out << "\n## Configuration\n\n| Key | Value |\n|---|---|\n";
  for (const auto& [k, v] : report.config) out << "| " << k << " | " << v << " |\n";
}

void write_predictions(const TrialResult& trial, std::ostream& out) {
  out << "sample_index,true_label,predicted_label,best_distance\n";
  for (const auto& p : trial.predictions) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p.best_distance);
    out << p.sample_index << ',' << p.true_label << ',' << p.predicted_label << ',' << buf << '\n';
  }
}

void emit_report(const RunReport& report, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to " + path.string());
  if (format == ReportFormat::csv)
    write_csv(report, out);
  else
    write_markdown(report, out);
  if (!out) throw std::runtime_error("failed while writing " + path.string());
}

}  // namespace qar::experiment
