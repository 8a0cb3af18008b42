#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fer/backbone.hpp"
#include "fer/finetune.hpp"
#include "fer/manifest.hpp"

namespace fer {

/// One train/evaluate execution: a 7x7 confusion matrix indexed
/// [true][predicted] plus its provenance.
struct RunResult {
  std::string run_id;
  std::uint64_t seed = 0;
  std::string train_set;
  std::string test_set;
  std::string backbone;
  double accuracy = 0.0;
  std::array<std::array<std::int64_t, kNumEmotions>, kNumEmotions> confusion{};

  std::int64_t total() const;
  std::int64_t diagonal() const;
  /// Checks non-negative cells and accuracy == trace/total.
  void validate() const;
};

/// Tallies (true, predicted) index pairs into a RunResult. The provenance
/// fields are left empty for the caller.
RunResult tally_predictions(const std::vector<int>& truths,
                            const std::vector<int>& preds);

/// Per-class precision/recall. A field is absent - not zero - when its
/// denominator is empty (no predictions for precision, no true samples for
/// recall).
struct ClassMetrics {
  std::optional<double> precision;
  std::optional<double> recall;
};

std::map<EmotionLabel, ClassMetrics> per_class_metrics(const RunResult& result);

/// Produces argmax class indices for every record of a manifest. The
/// model-backed implementation batches through the classifier; tests inject
/// scripted predictors.
using PredictFn = std::function<std::vector<int>(
    const DatasetManifest& manifest, const std::filesystem::path& dir)>;

PredictFn model_predictor(ClassifierModel& model, int batch_size = 32);

/// Evaluates a predictor over a test manifest. Empty test set ->
/// EvaluationError.
RunResult evaluate_predictions(const PredictFn& predict,
                               const DatasetManifest& test,
                               const std::filesystem::path& manifest_dir);

RunResult evaluate_model(ClassifierModel& model, const DatasetManifest& test,
                         const std::filesystem::path& manifest_dir,
                         int batch_size = 32);

/// Aggregate over the runs of one suite cell. Accuracy moments are
/// percentages; the sample (n-1) standard deviation convention applies and
/// a single run reports std 0 with the single_run flag. per_class comes from
/// the best run by accuracy.
struct EvalReport {
  std::string name;
  std::string train_set;
  std::string test_set;
  std::string backbone;
  int configured_runs = 0;
  double mean_accuracy = 0.0;  ///< percent
  double std_accuracy = 0.0;   ///< percent, sample convention
  bool single_run = false;
  bool incomplete = false;
  std::vector<std::string> failures;
  std::map<EmotionLabel, ClassMetrics> per_class;
  std::vector<RunResult> runs;

  /// Recomputes the moments from runs and checks them against the stored
  /// values (1e-9 relative); also validates each run.
  void validate() const;
};

EvalReport aggregate_runs(const std::string& name, const std::string& train_set,
                          const std::string& test_set,
                          const std::string& backbone, int configured_runs,
                          std::vector<RunResult> runs,
                          std::vector<std::string> failures = {});

/// JSON serialization; parse(emit(r)) == r.
std::string run_result_to_json(const RunResult& result);
RunResult run_result_from_json(const std::string& json_text);
std::string eval_report_to_json(const EvalReport& report);
EvalReport eval_report_from_json(const std::string& json_text);

/// A manifest on disk, named for report labeling.
struct ManifestRef {
  std::string name;
  std::filesystem::path path;
};

struct CrossSuiteOptions {
  std::vector<BackboneKind> backbones;
  std::vector<ManifestRef> train_sets;
  std::vector<ManifestRef> test_sets;
  int runs_per_cell = 10;
  std::uint64_t seed_base = 0;
  std::filesystem::path out_dir;  ///< run artifacts; empty disables resume
  TrainRunConfig train;           ///< template; seed is set per run
  WeightSource weights;
};

/// Trains one (train_set, backbone, seed) model and returns one RunResult per
/// test set, in test-set order. Tests inject scripted runners; failures are
/// signalled by throwing.
using CellRunner = std::function<std::vector<RunResult>(
    const std::string& train_set, BackboneKind backbone, std::uint64_t seed)>;

/// The cross-database protocol: for every (train_set, backbone) cell,
/// runs_per_cell seeds starting at seed_base, each model evaluated on every
/// test set. Returns one report per (train_set, backbone, test_set). A
/// throwing run marks all its cells incomplete rather than shrinking the
/// average silently. With an out_dir, per-run results are content-addressed
/// JSON files and finished runs are reused on re-entry.
std::vector<EvalReport> cross_database_suite(const CrossSuiteOptions& options,
                                             const CellRunner& runner);
/// As above with the real runner: load manifests, assemble, fit_two_stage,
/// evaluate.
std::vector<EvalReport> cross_database_suite(const CrossSuiteOptions& options);

/// Deterministic stratified partition: per-label round robin after a seeded
/// per-label shuffle, with the label's starting fold rotating so remainders
/// spread across folds. Per-label fold counts differ by at most one.
/// A label with fewer records than k (the seven-class task expects every
/// label present) -> PartitionError.
std::vector<std::vector<int>> stratified_folds(const DatasetManifest& manifest,
                                               int k, std::uint64_t seed);

struct KfoldOptions {
  BackboneKind backbone = BackboneKind::kCompact;
  int k = 5;
  std::uint64_t seed = 0;
  TrainRunConfig train;  ///< template; seed is set per fold
  WeightSource weights;
  std::filesystem::path out_dir;  ///< as in CrossSuiteOptions
};

/// Intra-database protocol: stratified k folds, each serving as the held-out
/// set exactly once, aggregated like a suite cell.
EvalReport kfold_suite(const DatasetManifest& union_manifest,
                       const std::filesystem::path& manifest_dir,
                       const KfoldOptions& options);

/// A manifest already in memory plus the directory its relative paths
/// resolve against.
struct ManifestSource {
  DatasetManifest manifest;
  std::filesystem::path dir;
};

struct GanQualityResult {
  std::string classifier;
  EmotionLabel emotion = EmotionLabel::kAngry;
  std::int64_t correct = 0;
  std::int64_t total = 0;
  double accuracy = 0.0;
};

/// Scores every classifier over every per-emotion group of generated images:
/// accuracy is the fraction predicted as the group's emotion. A group whose
/// size differs from expected_size is logged as a warning and scored at its
/// actual size.
std::vector<GanQualityResult> gan_quality_check(
    const std::vector<std::pair<std::string, PredictFn>>& classifiers,
    const std::map<EmotionLabel, ManifestSource>& groups,
    std::int64_t expected_size = 150);

}  // namespace fer
