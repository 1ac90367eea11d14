#pragma once

#include "qar/experiment.hpp"

#include <filesystem>
#include <ostream>
#include <string>

namespace qar::experiment {

enum class ReportFormat { csv, markdown };

ReportFormat parse_format(const std::string& name);

/// `method,trial,accuracy,mean_iters,wall_ms`, one row per (method, trial)
/// followed by one `mean` row per method. wall_ms is empty unless timing
/// was recorded.
void write_csv(const RunReport& report, std::ostream& out);

/// Methods / mean recognition rate table, per-trial table and config echo.
void write_markdown(const RunReport& report, std::ostream& out);

/// `sample_index,true_label,predicted_label,best_distance` for one trial.
void write_predictions(const TrialResult& trial, std::ostream& out);

/// Writes the report to `path`; throws std::runtime_error if unwritable.
void emit_report(const RunReport& report, ReportFormat format, const std::filesystem::path& path);

}  // namespace qar::experiment
