#include "fer/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "fer/errors.hpp"
#include "fer/logging.hpp"
#include "fer/rng.hpp"

namespace fer {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

std::string train_config_tag(const TrainRunConfig& cfg,
                             const WeightSource& weights) {
  std::ostringstream os;
  os << cfg.stage1_epochs << '/' << cfg.stage1_lr << '|' << cfg.stage2_epochs
     << '/' << cfg.stage2_lr << '|' << cfg.batch_size << '|' << cfg.unfreeze
     << '|'
     << (weights.kind == WeightSource::Kind::kBuiltin ? "builtin"
                                                      : weights.path);
  return os.str();
}

int argmax_row(const nn::Tensor& t, int row) {
  int best = 0;
  for (int c = 1; c < t.dim(1); ++c) {
    if (t.at2(row, c) > t.at2(row, best)) best = c;
  }
  return best;
}

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_std_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

}  // namespace

std::int64_t RunResult::total() const {
  std::int64_t t = 0;
  for (const auto& row : confusion)
    for (std::int64_t v : row) t += v;
  return t;
}

std::int64_t RunResult::diagonal() const {
  std::int64_t t = 0;
  for (int c = 0; c < kNumEmotions; ++c)
    t += confusion[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
  return t;
}

void RunResult::validate() const {
  for (const auto& row : confusion) {
    for (std::int64_t v : row) {
      if (v < 0)
        throw EvaluationError("run " + run_id +
                              ": negative confusion cell " + std::to_string(v));
    }
  }
  const std::int64_t n = total();
  if (n == 0) throw EvaluationError("run " + run_id + ": empty confusion matrix");
  const double expect =
      static_cast<double>(diagonal()) / static_cast<double>(n);
  if (std::abs(accuracy - expect) > 1e-12) {
    throw EvaluationError("run " + run_id + ": accuracy " +
                          std::to_string(accuracy) +
                          " does not equal trace/total " +
                          std::to_string(expect));
  }
}

RunResult tally_predictions(const std::vector<int>& truths,
                            const std::vector<int>& preds) {
  if (truths.size() != preds.size()) {
    throw EvaluationError("tally: " + std::to_string(truths.size()) +
                          " truths vs " + std::to_string(preds.size()) +
                          " predictions");
  }
  RunResult result;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    const int t = truths[i], p = preds[i];
    if (t < 0 || t >= kNumEmotions || p < 0 || p >= kNumEmotions) {
      throw RangeError("tally: class index outside [0, 7) at position " +
                       std::to_string(i));
    }
    ++result.confusion[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
  }
  const std::int64_t n = result.total();
  result.accuracy =
      n == 0 ? 0.0
             : static_cast<double>(result.diagonal()) / static_cast<double>(n);
  return result;
}

std::map<EmotionLabel, ClassMetrics> per_class_metrics(const RunResult& result) {
  std::map<EmotionLabel, ClassMetrics> out;
  for (int c = 0; c < kNumEmotions; ++c) {
    std::int64_t predicted = 0, actual = 0;
    for (int r = 0; r < kNumEmotions; ++r) {
      predicted += result.confusion[static_cast<std::size_t>(r)]
                                   [static_cast<std::size_t>(c)];
      actual += result.confusion[static_cast<std::size_t>(c)]
                                [static_cast<std::size_t>(r)];
    }
    const std::int64_t hit =
        result.confusion[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    ClassMetrics m;
    if (predicted > 0)
      m.precision = static_cast<double>(hit) / static_cast<double>(predicted);
    if (actual > 0)
      m.recall = static_cast<double>(hit) / static_cast<double>(actual);
    out[emotion_from_index(c)] = m;
  }
  return out;
}

PredictFn model_predictor(ClassifierModel& model, int batch_size) {
  if (batch_size <= 0)
    throw ConfigurationError("predictor batch size must be positive");
  return [&model, batch_size](const DatasetManifest& manifest,
                              const fs::path& dir) {
    std::vector<int> preds;
    preds.reserve(static_cast<std::size_t>(manifest.size()));
    const NormalizationScheme scheme = model.profile().preprocessing;
    std::vector<int> indices;
    for (int start = 0; start < manifest.size();
         start += batch_size) {
      const int end = std::min<int>(manifest.size(), start + batch_size);
      indices.clear();
      for (int i = start; i < end; ++i) indices.push_back(i);
      NormalizedBatch batch =
          load_normalized_batch(manifest, dir, indices, scheme);
      nn::Tensor probs = model.predict_normalized(batch);
      for (int r = 0; r < probs.dim(0); ++r) preds.push_back(argmax_row(probs, r));
    }
    return preds;
  };
}

RunResult evaluate_predictions(const PredictFn& predict,
                               const DatasetManifest& test,
                               const fs::path& manifest_dir) {
  if (test.empty()) {
    throw EvaluationError("test manifest " + test.name + " is empty");
  }
  const std::vector<int> preds = predict(test, manifest_dir);
  if (preds.size() != test.records.size()) {
    throw EvaluationError("predictor returned " + std::to_string(preds.size()) +
                          " labels for " + std::to_string(test.size()) +
                          " records");
  }
  std::vector<int> truths;
  truths.reserve(preds.size());
  for (const auto& rec : test.records) truths.push_back(emotion_index(rec.label));
  RunResult result = tally_predictions(truths, preds);
  result.test_set = test.name;
  return result;
}

RunResult evaluate_model(ClassifierModel& model, const DatasetManifest& test,
                         const fs::path& manifest_dir, int batch_size) {
  RunResult result =
      evaluate_predictions(model_predictor(model, batch_size), test, manifest_dir);
  result.backbone = backbone_name(model.backbone());
  return result;
}

EvalReport aggregate_runs(const std::string& name, const std::string& train_set,
                          const std::string& test_set,
                          const std::string& backbone, int configured_runs,
                          std::vector<RunResult> runs,
                          std::vector<std::string> failures) {
  EvalReport report;
  report.name = name;
  report.train_set = train_set;
  report.test_set = test_set;
  report.backbone = backbone;
  report.configured_runs = configured_runs;
  report.failures = std::move(failures);
  report.runs = std::move(runs);
  report.incomplete =
      static_cast<int>(report.runs.size()) != configured_runs;
  if (!report.runs.empty()) {
    std::vector<double> accs;
    accs.reserve(report.runs.size());
    for (const auto& r : report.runs) accs.push_back(r.accuracy);
    report.mean_accuracy = 100.0 * mean_of(accs);
    report.std_accuracy = 100.0 * sample_std_of(accs);
    report.single_run = report.runs.size() == 1;
    const auto best = std::max_element(
        report.runs.begin(), report.runs.end(),
        [](const RunResult& a, const RunResult& b) {
          return a.accuracy < b.accuracy;
        });
    report.per_class = per_class_metrics(*best);
  }
  return report;
}

void EvalReport::validate() const {
  for (const auto& r : runs) r.validate();
  if (runs.empty()) return;
  std::vector<double> accs;
  accs.reserve(runs.size());
  for (const auto& r : runs) accs.push_back(r.accuracy);
  const double mean = 100.0 * mean_of(accs);
  const double std = 100.0 * sample_std_of(accs);
  const auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  if (!close(mean, mean_accuracy) || !close(std, std_accuracy)) {
    throw EvaluationError("report " + name +
                          ": stored moments do not match recomputation");
  }
}

namespace {

json run_to_json_obj(const RunResult& r) {
  json j;
  j["run_id"] = r.run_id;
  j["seed"] = r.seed;
  j["train_set"] = r.train_set;
  j["test_set"] = r.test_set;
  j["backbone"] = r.backbone;
  j["accuracy"] = r.accuracy;
  json rows = json::array();
  for (const auto& row : r.confusion) {
    json cells = json::array();
    for (std::int64_t v : row) cells.push_back(v);
    rows.push_back(std::move(cells));
  }
  j["confusion"] = std::move(rows);
  return j;
}

RunResult run_from_json_obj(const json& j) {
  RunResult r;
  r.run_id = j.at("run_id").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.train_set = j.at("train_set").get<std::string>();
  r.test_set = j.at("test_set").get<std::string>();
  r.backbone = j.at("backbone").get<std::string>();
  r.accuracy = j.at("accuracy").get<double>();
  const json& rows = j.at("confusion");
  if (!rows.is_array() || rows.size() != kNumEmotions) {
    throw EvaluationError("run json: confusion must be 7x7");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != kNumEmotions) {
      throw EvaluationError("run json: confusion must be 7x7");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      r.confusion[i][c] = row[c].get<std::int64_t>();
    }
  }
  return r;
}

json metrics_to_json_obj(const std::map<EmotionLabel, ClassMetrics>& metrics) {
  json j = json::object();
  for (const auto& [label, m] : metrics) {
    json entry = json::object();
    if (m.precision) entry["precision"] = *m.precision;
    if (m.recall) entry["recall"] = *m.recall;
    j[std::string(emotion_name(label))] = std::move(entry);
  }
  return j;
}

std::map<EmotionLabel, ClassMetrics> metrics_from_json_obj(const json& j) {
  std::map<EmotionLabel, ClassMetrics> out;
  for (const auto& [key, entry] : j.items()) {
    const auto label = try_parse_emotion(key);
    if (!label) throw EvaluationError("report json: unknown class '" + key + "'");
    ClassMetrics m;
    if (entry.contains("precision")) m.precision = entry["precision"].get<double>();
    if (entry.contains("recall")) m.recall = entry["recall"].get<double>();
    out[*label] = m;
  }
  return out;
}

}  // namespace

std::string run_result_to_json(const RunResult& result) {
  return run_to_json_obj(result).dump(2);
}

RunResult run_result_from_json(const std::string& json_text) {
  try {
    return run_from_json_obj(json::parse(json_text));
  } catch (const json::exception& e) {
    throw EvaluationError(std::string("run json: ") + e.what());
  }
}

std::string eval_report_to_json(const EvalReport& report) {
  json j;
  j["name"] = report.name;
  j["train_set"] = report.train_set;
  j["test_set"] = report.test_set;
  j["backbone"] = report.backbone;
  j["configured_runs"] = report.configured_runs;
  j["mean_accuracy"] = report.mean_accuracy;
  j["std_accuracy"] = report.std_accuracy;
  j["single_run"] = report.single_run;
  j["incomplete"] = report.incomplete;
  j["failures"] = report.failures;
  j["per_class"] = metrics_to_json_obj(report.per_class);
  json runs = json::array();
  for (const auto& r : report.runs) runs.push_back(run_to_json_obj(r));
  j["runs"] = std::move(runs);
  return j.dump(2);
}

EvalReport eval_report_from_json(const std::string& json_text) {
  try {
    const json j = json::parse(json_text);
    EvalReport report;
    report.name = j.at("name").get<std::string>();
    report.train_set = j.at("train_set").get<std::string>();
    report.test_set = j.at("test_set").get<std::string>();
    report.backbone = j.at("backbone").get<std::string>();
    report.configured_runs = j.at("configured_runs").get<int>();
    report.mean_accuracy = j.at("mean_accuracy").get<double>();
    report.std_accuracy = j.at("std_accuracy").get<double>();
    report.single_run = j.at("single_run").get<bool>();
    report.incomplete = j.at("incomplete").get<bool>();
    report.failures = j.at("failures").get<std::vector<std::string>>();
    report.per_class = metrics_from_json_obj(j.at("per_class"));
    for (const auto& r : j.at("runs")) report.runs.push_back(run_from_json_obj(r));
    return report;
  } catch (const json::exception& e) {
    throw EvaluationError(std::string("report json: ") + e.what());
  }
}

namespace {

// Content address of one run artifact: every input that determines the
// result feeds the digest.
std::string run_digest(const std::string& train_set, const std::string& backbone,
                       const std::string& test_set, std::uint64_t seed,
                       const std::string& config_tag) {
  std::uint64_t h = fnv1a64(train_set);
  h = fnv1a64("|" + backbone + "|" + test_set + "|" + std::to_string(seed) +
                  "|" + config_tag,
              h);
  return hex16(h);
}

std::optional<RunResult> try_load_run(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    RunResult r = run_result_from_json(ss.str());
    r.validate();
    return r;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void store_run(const fs::path& path, const RunResult& result) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write run artifact '" + path.string() + "'");
  out << run_result_to_json(result) << "\n";
}

}  // namespace

std::vector<EvalReport> cross_database_suite(const CrossSuiteOptions& options,
                                             const CellRunner& runner) {
  if (options.backbones.empty() || options.train_sets.empty() ||
      options.test_sets.empty()) {
    throw ConfigurationError(
        "cross suite needs at least one backbone, train set and test set");
  }
  if (options.runs_per_cell <= 0) {
    throw ConfigurationError("runs_per_cell must be positive");
  }
  const std::string config_tag = train_config_tag(options.train, options.weights);
  const bool resumable = !options.out_dir.empty();
  std::vector<EvalReport> reports;

  for (const auto& train : options.train_sets) {
    for (BackboneKind backbone : options.backbones) {
      const std::string bname(backbone_name(backbone));
      const std::size_t tests = options.test_sets.size();
      std::vector<std::vector<RunResult>> cell_runs(tests);
      std::vector<std::vector<std::string>> cell_failures(tests);

      for (int r = 0; r < options.runs_per_cell; ++r) {
        const std::uint64_t seed = options.seed_base + static_cast<std::uint64_t>(r);
        std::vector<fs::path> artifact_paths(tests);
        bool all_cached = resumable;
        std::vector<RunResult> cached;
        if (resumable) {
          for (std::size_t t = 0; t < tests; ++t) {
            artifact_paths[t] =
                options.out_dir / "runs" /
                (run_digest(train.name, bname, options.test_sets[t].name, seed,
                            config_tag) +
                 ".json");
          }
          for (std::size_t t = 0; t < tests && all_cached; ++t) {
            auto loaded = try_load_run(artifact_paths[t]);
            if (loaded) {
              cached.push_back(std::move(*loaded));
            } else {
              all_cached = false;
            }
          }
        }
        if (resumable && all_cached) {
          for (std::size_t t = 0; t < tests; ++t) {
            cell_runs[t].push_back(cached[t]);
          }
          logs::event("eval", "run_cached",
                      {logs::str("train", train.name), logs::str("model", bname),
                       logs::num("seed", static_cast<std::int64_t>(seed))});
          continue;
        }
        std::vector<RunResult> results;
        try {
          results = runner(train.name, backbone, seed);
        } catch (const std::exception& e) {
          const std::string why = "seed " + std::to_string(seed) + ": " + e.what();
          for (std::size_t t = 0; t < tests; ++t) cell_failures[t].push_back(why);
          logs::event("eval", "run_failed",
                      {logs::str("train", train.name), logs::str("model", bname),
                       logs::num("seed", static_cast<std::int64_t>(seed)),
                       logs::str("error", e.what())});
          continue;
        }
        if (results.size() != tests) {
          throw EvaluationError("runner returned " +
                                std::to_string(results.size()) +
                                " results for " + std::to_string(tests) +
                                " test sets");
        }
        for (std::size_t t = 0; t < tests; ++t) {
          results[t].validate();
          if (resumable) store_run(artifact_paths[t], results[t]);
          cell_runs[t].push_back(std::move(results[t]));
        }
      }

      for (std::size_t t = 0; t < tests; ++t) {
        const std::string& test_name = options.test_sets[t].name;
        EvalReport report = aggregate_runs(
            train.name + "__" + bname + "__" + test_name, train.name, test_name,
            bname, options.runs_per_cell, std::move(cell_runs[t]),
            std::move(cell_failures[t]));
        logs::event("eval", "cell_done",
                    {logs::str("cell", report.name),
                     logs::real("mean", report.mean_accuracy),
                     logs::real("std", report.std_accuracy),
                     logs::num("runs", static_cast<std::int64_t>(report.runs.size())),
                     logs::str("incomplete", report.incomplete ? "yes" : "no")});
        reports.push_back(std::move(report));
      }
    }
  }
  return reports;
}

std::vector<EvalReport> cross_database_suite(const CrossSuiteOptions& options) {
  // The real runner: train once per (train set, backbone, seed), evaluate on
  // every test set.
  CellRunner runner = [&options](const std::string& train_name,
                                 BackboneKind backbone, std::uint64_t seed) {
    const auto it = std::find_if(
        options.train_sets.begin(), options.train_sets.end(),
        [&](const ManifestRef& m) { return m.name == train_name; });
    if (it == options.train_sets.end()) {
      throw ConfigurationError("unknown train set '" + train_name + "'");
    }
    DatasetManifest train_m = read_manifest(it->path, it->name);
    ClassifierModel model = assemble(backbone, options.weights, seed);
    TrainRunConfig cfg = options.train;
    cfg.seed = seed;
    fit_two_stage(model, train_m, it->path.parent_path(), cfg);
    std::vector<RunResult> out;
    for (const auto& test : options.test_sets) {
      DatasetManifest test_m = read_manifest(test.path, test.name);
      RunResult r =
          evaluate_model(model, test_m, test.path.parent_path(), cfg.batch_size);
      r.seed = seed;
      r.train_set = train_name;
      r.run_id = run_digest(train_name, std::string(backbone_name(backbone)),
                            test.name, seed,
                            train_config_tag(options.train, options.weights));
      out.push_back(std::move(r));
    }
    return out;
  };
  return cross_database_suite(options, runner);
}

std::vector<std::vector<int>> stratified_folds(const DatasetManifest& manifest,
                                               int k, std::uint64_t seed) {
  if (k < 2) throw ConfigurationError("k must be at least 2, got " + std::to_string(k));
  std::array<std::vector<int>, kNumEmotions> by_label;
  for (int i = 0; i < manifest.size(); ++i) {
    by_label[static_cast<std::size_t>(
                 emotion_index(manifest.records[static_cast<std::size_t>(i)].label))]
        .push_back(i);
  }
  for (int c = 0; c < kNumEmotions; ++c) {
    if (static_cast<int>(by_label[static_cast<std::size_t>(c)].size()) < k) {
      throw PartitionError(
          "stratified " + std::to_string(k) + "-fold needs at least " +
          std::to_string(k) + " records of every class; '" +
          std::string(emotion_name(emotion_from_index(c))) + "' has " +
          std::to_string(by_label[static_cast<std::size_t>(c)].size()));
    }
  }
  std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
  for (int c = 0; c < kNumEmotions; ++c) {
    auto& members = by_label[static_cast<std::size_t>(c)];
    Rng rng(derive_seed(seed, "kfold_shuffle", static_cast<std::uint64_t>(c)));
    for (std::size_t i = members.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
      std::swap(members[i - 1], members[j]);
    }
    // The starting fold rotates with the class so remainders spread over
    // folds instead of piling onto the low ones.
    const int offset = c % k;
    for (std::size_t i = 0; i < members.size(); ++i) {
      folds[static_cast<std::size_t>(
                (static_cast<int>(i) + offset) % k)]
          .push_back(members[i]);
    }
  }
  for (auto& fold : folds) std::sort(fold.begin(), fold.end());
  return folds;
}

EvalReport kfold_suite(const DatasetManifest& union_manifest,
                       const fs::path& manifest_dir,
                       const KfoldOptions& options) {
  const std::vector<std::vector<int>> folds =
      stratified_folds(union_manifest, options.k, options.seed);
  const std::string bname(backbone_name(options.backbone));
  const std::string config_tag =
      train_config_tag(options.train, options.weights) + "|k" +
      std::to_string(options.k) + "|s" + std::to_string(options.seed);
  const bool resumable = !options.out_dir.empty();

  std::vector<RunResult> runs;
  std::vector<std::string> failures;
  for (int f = 0; f < options.k; ++f) {
    const std::string fold_name = "fold" + std::to_string(f);
    fs::path artifact;
    if (resumable) {
      artifact = options.out_dir / "runs" /
                 (run_digest(union_manifest.name, bname, fold_name,
                             static_cast<std::uint64_t>(f), config_tag) +
                  ".json");
      if (auto cached = try_load_run(artifact)) {
        runs.push_back(std::move(*cached));
        logs::event("eval", "fold_cached", {logs::num("fold", f)});
        continue;
      }
    }
    DatasetManifest train_m, test_m;
    train_m.name = union_manifest.name + "_minus_" + fold_name;
    test_m.name = fold_name;
    std::vector<char> in_fold(union_manifest.records.size(), 0);
    for (int idx : folds[static_cast<std::size_t>(f)])
      in_fold[static_cast<std::size_t>(idx)] = 1;
    for (std::size_t i = 0; i < union_manifest.records.size(); ++i) {
      (in_fold[i] ? test_m : train_m)
          .records.push_back(union_manifest.records[i]);
    }
    train_m.recount();
    test_m.recount();
    try {
      ClassifierModel model =
          assemble(options.backbone, options.weights,
                   derive_seed(options.seed, "kfold_run",
                               static_cast<std::uint64_t>(f)));
      TrainRunConfig cfg = options.train;
      cfg.seed = derive_seed(options.seed, "kfold_run",
                             static_cast<std::uint64_t>(f));
      fit_two_stage(model, train_m, manifest_dir, cfg);
      RunResult r = evaluate_model(model, test_m, manifest_dir, cfg.batch_size);
      r.seed = cfg.seed;
      r.train_set = train_m.name;
      r.run_id = fold_name;
      r.validate();
      if (resumable) store_run(artifact, r);
      logs::event("eval", "fold_done",
                  {logs::num("fold", f), logs::real("accuracy", r.accuracy)});
      runs.push_back(std::move(r));
    } catch (const std::exception& e) {
      failures.push_back(fold_name + ": " + e.what());
      logs::event("eval", "fold_failed",
                  {logs::num("fold", f), logs::str("error", e.what())});
    }
  }
  return aggregate_runs("kfold_" + union_manifest.name + "__" + bname,
                        union_manifest.name, "folds", bname, options.k,
                        std::move(runs), std::move(failures));
}

std::vector<GanQualityResult> gan_quality_check(
    const std::vector<std::pair<std::string, PredictFn>>& classifiers,
    const std::map<EmotionLabel, ManifestSource>& groups,
    std::int64_t expected_size) {
  std::vector<GanQualityResult> out;
  for (const auto& [name, predict] : classifiers) {
    for (const auto& [emotion, source] : groups) {
      const DatasetManifest& manifest = source.manifest;
      if (manifest.size() != expected_size) {
        logs::event("eval", "gan_group_size",
                    {logs::str("classifier", name),
                     logs::str("emotion", std::string(emotion_name(emotion))),
                     logs::num("size", manifest.size()),
                     logs::num("expected", expected_size)});
      }
      GanQualityResult r;
      r.classifier = name;
      r.emotion = emotion;
      r.total = manifest.size();
      if (manifest.size() > 0) {
        const std::vector<int> preds = predict(manifest, source.dir);
        if (preds.size() != manifest.records.size()) {
          throw EvaluationError("predictor returned " +
                                std::to_string(preds.size()) + " labels for " +
                                std::to_string(manifest.size()) + " records");
        }
        const int want = emotion_index(emotion);
        for (int p : preds) {
          if (p == want) ++r.correct;
        }
        r.accuracy = static_cast<double>(r.correct) /
                     static_cast<double>(r.total);
      }
      logs::event("eval", "gan_quality",
                  {logs::str("classifier", name),
                   logs::str("emotion", std::string(emotion_name(emotion))),
                   logs::real("accuracy", r.accuracy)});
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace fer
