#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fer/evaluation.hpp"

namespace fer {

/// Human-readable single-cell report: header line, run summary, per-class
/// precision/recall table and the best run's confusion matrix.
std::string render_report_text(const EvalReport& report);

/// Grid over many cells: one row per (backbone, train set) pair, one column
/// per test set, each cell "mean ± std" in percent. Incomplete cells are
/// starred and footnoted.
std::string render_suite_text(const std::vector<EvalReport>& reports);

/// Classifier-by-emotion accuracy grid for generated-image groups.
std::string render_gan_quality_text(const std::vector<GanQualityResult>& results);

std::string gan_quality_to_json(const std::vector<GanQualityResult>& results);
std::vector<GanQualityResult> gan_quality_from_json(const std::string& json_text);

/// Row-normalized confusion heatmap with per-cell counts.
void render_confusion_png(const RunResult& result,
                          const std::filesystem::path& path);

/// Mean-accuracy bars with ± std whiskers, one bar per report.
void render_accuracy_png(const std::vector<EvalReport>& reports,
                         const std::filesystem::path& path);

struct ReportFiles {
  std::filesystem::path json;
  std::filesystem::path text;
  std::filesystem::path confusion_png;  ///< empty when the report has no runs
};

/// Writes <name>.json, <name>.txt and <name>_confusion.png (best run) under
/// dir, creating it as needed.
ReportFiles write_report_files(const EvalReport& report,
                               const std::filesystem::path& dir);

/// Per-report files plus suite.txt and accuracy.png covering the whole set.
std::vector<ReportFiles> write_suite_files(
    const std::vector<EvalReport>& reports, const std::filesystem::path& dir);

}  // namespace fer
