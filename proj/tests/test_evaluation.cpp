#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "fer/errors.hpp"
#include "fer/evaluation.hpp"
#include "fer/fixture.hpp"
#include "test_util.hpp"

using namespace fer;

namespace {

std::vector<int> random_labels(int n, std::uint64_t seed) {
  std::vector<int> v(std::size_t(n));
  Rng rng(seed);
  for (auto& x : v) x = int(rng.next_below(kNumEmotions));
  return v;
}

// Deliberately separate counting code: one nested loop per question.
struct BruteForce {
  std::array<std::array<std::int64_t, kNumEmotions>, kNumEmotions> m{};
  explicit BruteForce(const std::vector<int>& t, const std::vector<int>& p) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      m[std::size_t(t[i])][std::size_t(p[i])] += 1;
    }
  }
  double accuracy() const {
    std::int64_t hit = 0, all = 0;
    for (int r = 0; r < kNumEmotions; ++r) {
      for (int c = 0; c < kNumEmotions; ++c) {
        all += m[std::size_t(r)][std::size_t(c)];
        if (r == c) hit += m[std::size_t(r)][std::size_t(c)];
      }
    }
    return all ? double(hit) / double(all) : 0.0;
  }
  std::int64_t row(int r) const {
    std::int64_t s = 0;
    for (int c = 0; c < kNumEmotions; ++c) s += m[std::size_t(r)][std::size_t(c)];
    return s;
  }
  std::int64_t col(int c) const {
    std::int64_t s = 0;
    for (int r = 0; r < kNumEmotions; ++r) s += m[std::size_t(r)][std::size_t(c)];
    return s;
  }
};

RunResult make_run(std::uint64_t seed, int n = 60) {
  RunResult r = tally_predictions(random_labels(n, seed * 2 + 1),
                                  random_labels(n, seed * 2 + 2));
  r.run_id = "run" + std::to_string(seed);
  r.seed = seed;
  r.train_set = "train_a";
  r.test_set = "test_b";
  r.backbone = "compact";
  return r;
}

}  // namespace

TEST_CASE("tallies agree with a brute-force recount on 1000 random sets") {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const int n = 1 + int(s % 200);
    auto truths = random_labels(n, s * 3 + 1);
    auto preds = random_labels(n, s * 3 + 2);
    RunResult r = tally_predictions(truths, preds);
    BruteForce bf(truths, preds);

    CHECK(r.confusion == bf.m);
    CHECK(r.accuracy == bf.accuracy());
    CHECK(r.total() == n);
    CHECK_NOTHROW(r.validate());

    auto metrics = per_class_metrics(r);
    for (EmotionLabel label : kAllEmotions) {
      const int c = emotion_index(label);
      const auto& mc = metrics.at(label);
      if (bf.col(c) == 0) {
        CHECK_FALSE(mc.precision.has_value());
      } else {
        CHECK(*mc.precision ==
              double(bf.m[std::size_t(c)][std::size_t(c)]) / double(bf.col(c)));
      }
      if (bf.row(c) == 0) {
        CHECK_FALSE(mc.recall.has_value());
      } else {
        CHECK(*mc.recall ==
              double(bf.m[std::size_t(c)][std::size_t(c)]) / double(bf.row(c)));
      }
    }
  }
}

TEST_CASE("tally rejects ragged or out-of-range prediction lists") {
  CHECK_THROWS_AS(tally_predictions({0, 1}, {0}), EvaluationError);
  CHECK_THROWS_AS(tally_predictions({0, 7}, {0, 0}), RangeError);
  CHECK_THROWS_AS(tally_predictions({0, 1}, {0, -1}), RangeError);
}

TEST_CASE("run validation catches fudged accuracies and negative cells") {
  RunResult r = make_run(1);
  RunResult bad = r;
  bad.accuracy = r.accuracy + 0.01;
  CHECK_THROWS_AS(bad.validate(), EvaluationError);
  bad = r;
  bad.confusion[0][0] = -1;
  CHECK_THROWS_AS(bad.validate(), EvaluationError);
}

TEST_CASE("aggregation moments match direct recomputation to 1e-12") {
  for (int n : {1, 2, 5, 10}) {
    std::vector<RunResult> runs;
    for (int i = 0; i < n; ++i) runs.push_back(make_run(std::uint64_t(i) + 50));
    EvalReport rep = aggregate_runs("cell", "train_a", "test_b", "compact", n,
                                    runs);
    CHECK_NOTHROW(rep.validate());

    double mean = 0.0;
    for (const auto& r : runs) mean += r.accuracy * 100.0;
    mean /= n;
    double var = 0.0;
    for (const auto& r : runs) {
      var += (r.accuracy * 100.0 - mean) * (r.accuracy * 100.0 - mean);
    }
    const double stdev = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;

    CHECK(std::abs(rep.mean_accuracy - mean) <=
          1e-12 * std::max(1.0, std::abs(mean)));
    CHECK(std::abs(rep.std_accuracy - stdev) <=
          1e-12 * std::max(1.0, std::abs(stdev)));
    CHECK(rep.single_run == (n == 1));
    CHECK_FALSE(rep.incomplete);

    // Per-class metrics come from the best run by accuracy.
    const RunResult* best = &runs[0];
    for (const auto& r : runs) {
      if (r.accuracy > best->accuracy) best = &r;
    }
    auto want = per_class_metrics(*best);
    for (EmotionLabel label : kAllEmotions) {
      CHECK(rep.per_class.at(label).precision == want.at(label).precision);
      CHECK(rep.per_class.at(label).recall == want.at(label).recall);
    }
  }
}

TEST_CASE("missing runs mark a report incomplete, with reasons kept") {
  std::vector<RunResult> runs = {make_run(3), make_run(4)};
  EvalReport rep = aggregate_runs("cell", "t", "e", "compact", 5, runs,
                                  {"seed 7: exploded"});
  CHECK(rep.incomplete);
  CHECK(rep.configured_runs == 5);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0] == "seed 7: exploded");

  EvalReport tampered = rep;
  tampered.mean_accuracy += 0.5;
  CHECK_THROWS_AS(tampered.validate(), EvaluationError);
}

TEST_CASE("run and report JSON round-trip exactly") {
  RunResult r = make_run(9);
  RunResult back = run_result_from_json(run_result_to_json(r));
  CHECK(back.run_id == r.run_id);
  CHECK(back.seed == r.seed);
  CHECK(back.train_set == r.train_set);
  CHECK(back.test_set == r.test_set);
  CHECK(back.backbone == r.backbone);
  CHECK(back.accuracy == r.accuracy);
  CHECK(back.confusion == r.confusion);

  EvalReport rep = aggregate_runs("cell", "train_a", "test_b", "compact", 3,
                                  {make_run(1), make_run(2)}, {"seed 9: died"});
  EvalReport rb = eval_report_from_json(eval_report_to_json(rep));
  CHECK_NOTHROW(rb.validate());
  CHECK(rb.name == rep.name);
  CHECK(rb.configured_runs == 3);
  CHECK(rb.mean_accuracy == rep.mean_accuracy);
  CHECK(rb.std_accuracy == rep.std_accuracy);
  CHECK(rb.incomplete == rep.incomplete);
  CHECK(rb.failures == rep.failures);
  CHECK(rb.runs.size() == rep.runs.size());
  for (EmotionLabel label : kAllEmotions) {
    CHECK(rb.per_class.at(label).precision == rep.per_class.at(label).precision);
    CHECK(rb.per_class.at(label).recall == rep.per_class.at(label).recall);
  }
}

namespace {

DatasetManifest labeled_manifest(const std::vector<int>& per_label) {
  DatasetManifest m;
  m.name = "folds";
  int id = 0;
  for (int c = 0; c < int(per_label.size()); ++c) {
    for (int i = 0; i < per_label[std::size_t(c)]; ++i) {
      ImageRecord rec;
      rec.id = "r" + std::to_string(id++);
      rec.path = rec.id + ".png";
      rec.label = emotion_from_index(c);
      m.records.push_back(std::move(rec));
    }
  }
  m.recount();
  return m;
}

}  // namespace

TEST_CASE("stratified folds are disjoint, covering, balanced within one") {
  Rng rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 2 + int(rng.next_below(5));
    std::vector<int> per_label(kNumEmotions);
    for (auto& n : per_label) n = k + int(rng.next_below(30));
    DatasetManifest m = labeled_manifest(per_label);

    auto folds = stratified_folds(m, k, trial);
    REQUIRE(int(folds.size()) == k);

    std::set<int> seen;
    for (const auto& fold : folds) {
      for (int idx : fold) {
        CHECK(seen.insert(idx).second);  // disjoint
        CHECK(idx >= 0);
        CHECK(idx < m.size());
      }
    }
    CHECK(std::int64_t(seen.size()) == m.size());  // covering

    for (int c = 0; c < kNumEmotions; ++c) {
      std::vector<int> counts(std::size_t(k), 0);
      for (int f = 0; f < k; ++f) {
        for (int idx : folds[std::size_t(f)]) {
          if (m.records[std::size_t(idx)].label == emotion_from_index(c)) {
            counts[std::size_t(f)]++;
          }
        }
      }
      const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
      CHECK(*hi - *lo <= 1);  // stratified within one per label
    }
  }
}

TEST_CASE("fold assignment is a pure function of manifest, k and seed") {
  DatasetManifest m = labeled_manifest({5, 5, 5, 5, 5, 5, 5});
  CHECK(stratified_folds(m, 5, 9) == stratified_folds(m, 5, 9));
  CHECK(stratified_folds(m, 5, 9) != stratified_folds(m, 5, 10));
}

TEST_CASE("fold construction rejects impossible requests") {
  DatasetManifest thin = labeled_manifest({5, 5, 2, 5, 5, 5, 5});
  CHECK_THROWS_AS(stratified_folds(thin, 3, 1), PartitionError);
  DatasetManifest m = labeled_manifest({5, 5, 5, 5, 5, 5, 5});
  CHECK_THROWS_AS(stratified_folds(m, 1, 1), ConfigurationError);
}

namespace {

// Scripted cell runner: accuracy is a pure function of (train, seed, test),
// so reruns are detectable and results reproducible.
struct ScriptedRunner {
  std::vector<ManifestRef> tests;
  int* calls = nullptr;
  std::set<std::uint64_t> throw_seeds;

  std::vector<RunResult> operator()(const std::string& train, BackboneKind kind,
                                    std::uint64_t seed) const {
    if (calls) ++(*calls);
    if (throw_seeds.count(seed)) {
      throw TrainingError("scripted failure");
    }
    std::vector<RunResult> out;
    for (std::size_t t = 0; t < tests.size(); ++t) {
      const int n = 20;
      std::vector<int> truths = random_labels(n, seed + t * 1000 + 7);
      std::vector<int> preds = truths;
      // Miss a deterministic share so accuracies differ per seed.
      for (int i = 0; i < int(seed % 5) + int(t); ++i) {
        preds[std::size_t(i % n)] = (preds[std::size_t(i % n)] + 1) % kNumEmotions;
      }
      RunResult r = tally_predictions(truths, preds);
      r.run_id = train + "_" + std::to_string(seed) + "_" + std::to_string(t);
      r.seed = seed;
      r.train_set = train;
      r.test_set = tests[t].name;
      r.backbone = backbone_name(kind);
      out.push_back(std::move(r));
    }
    return out;
  }
};

CrossSuiteOptions scripted_options(const std::filesystem::path& out_dir) {
  CrossSuiteOptions opt;
  opt.backbones = {BackboneKind::kCompact};
  opt.train_sets = {{"train_a", "unused.tsv"}, {"train_b", "unused.tsv"}};
  opt.test_sets = {{"test_x", "unused.tsv"}, {"test_y", "unused.tsv"}};
  opt.runs_per_cell = 3;
  opt.seed_base = 100;
  opt.out_dir = out_dir;
  return opt;
}

}  // namespace

TEST_CASE("the cross-database grid visits every cell with every seed") {
  CrossSuiteOptions opt = scripted_options({});  // no resume
  int calls = 0;
  ScriptedRunner runner{opt.test_sets, &calls, {}};
  auto reports = cross_database_suite(opt, runner);

  REQUIRE(reports.size() == 4);  // 2 train sets x 1 backbone x 2 test sets
  CHECK(calls == 6);             // 2 train sets x 3 seeds
  for (const auto& rep : reports) {
    CHECK(rep.runs.size() == 3);
    CHECK_FALSE(rep.incomplete);
    CHECK_NOTHROW(rep.validate());
    std::set<std::uint64_t> seeds;
    for (const auto& r : rep.runs) seeds.insert(r.seed);
    CHECK(seeds == std::set<std::uint64_t>{100, 101, 102});
  }
  CHECK(reports[0].name == "train_a__compact__test_x");
}

TEST_CASE("failed seeds mark all of their cells incomplete") {
  CrossSuiteOptions opt = scripted_options({});
  ScriptedRunner runner{opt.test_sets, nullptr, {101}};
  auto reports = cross_database_suite(opt, runner);
  for (const auto& rep : reports) {
    CHECK(rep.incomplete);
    CHECK(rep.runs.size() == 2);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].find("seed 101") != std::string::npos);
    CHECK(rep.failures[0].find("scripted failure") != std::string::npos);
  }
}

TEST_CASE("a runner that loses a test set is an error, not a short report") {
  CrossSuiteOptions opt = scripted_options({});
  ScriptedRunner good{opt.test_sets, nullptr, {}};
  auto drop_one = [&](const std::string& train, BackboneKind kind,
                      std::uint64_t seed) {
    auto out = good(train, kind, seed);
    out.pop_back();
    return out;
  };
  CHECK_THROWS_AS(cross_database_suite(opt, drop_one), EvaluationError);
}

TEST_CASE("stored runs are reused; only the missing seed is re-executed") {
  test::TempDir tmp("fer_suite");
  CrossSuiteOptions opt = scripted_options(tmp.path());

  int calls1 = 0;
  ScriptedRunner failing{opt.test_sets, &calls1, {101}};
  auto first = cross_database_suite(opt, failing);
  CHECK(calls1 == 6);
  for (const auto& rep : first) CHECK(rep.incomplete);

  int calls2 = 0;
  ScriptedRunner healthy{opt.test_sets, &calls2, {}};
  auto second = cross_database_suite(opt, healthy);
  CHECK(calls2 == 2);  // seed 101 for each train set; the rest come from disk
  for (const auto& rep : second) {
    CHECK_FALSE(rep.incomplete);
    CHECK(rep.runs.size() == 3);
  }

  // Equal inputs hit the cache completely.
  int calls3 = 0;
  ScriptedRunner idle{opt.test_sets, &calls3, {}};
  auto third = cross_database_suite(opt, idle);
  CHECK(calls3 == 0);
  for (std::size_t i = 0; i < second.size(); ++i) {
    CHECK(third[i].mean_accuracy == second[i].mean_accuracy);
  }

  // A corrupted artifact is silently recomputed, not trusted.
  int corrupted = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(tmp.path() / "runs")) {
    std::ofstream(entry.path(), std::ios::trunc) << "{ not json";
    ++corrupted;
    break;
  }
  REQUIRE(corrupted == 1);
  int calls4 = 0;
  ScriptedRunner again{opt.test_sets, &calls4, {}};
  auto fourth = cross_database_suite(opt, again);
  CHECK(calls4 == 1);
  for (const auto& rep : fourth) CHECK_FALSE(rep.incomplete);
}

TEST_CASE("a changed training configuration does not reuse old artifacts") {
  test::TempDir tmp("fer_suite");
  CrossSuiteOptions opt = scripted_options(tmp.path());
  int calls1 = 0;
  ScriptedRunner r1{opt.test_sets, &calls1, {}};
  cross_database_suite(opt, r1);
  CHECK(calls1 == 6);

  opt.train.stage2_epochs += 1;
  int calls2 = 0;
  ScriptedRunner r2{opt.test_sets, &calls2, {}};
  cross_database_suite(opt, r2);
  CHECK(calls2 == 6);
}

TEST_CASE("suite options are validated before any work") {
  CrossSuiteOptions opt = scripted_options({});
  opt.backbones.clear();
  ScriptedRunner runner{opt.test_sets, nullptr, {}};
  CHECK_THROWS_AS(cross_database_suite(opt, runner), ConfigurationError);
  opt = scripted_options({});
  opt.runs_per_cell = 0;
  CHECK_THROWS_AS(cross_database_suite(opt, runner), ConfigurationError);
}

TEST_CASE("scripted predictors flow through evaluate_predictions") {
  DatasetManifest m = labeled_manifest({2, 2, 2, 2, 2, 2, 2});
  PredictFn perfect = [&](const DatasetManifest& manifest,
                          const std::filesystem::path&) {
    std::vector<int> out;
    for (const auto& rec : manifest.records) {
      out.push_back(emotion_index(rec.label));
    }
    return out;
  };
  RunResult r = evaluate_predictions(perfect, m, ".");
  CHECK(r.accuracy == 1.0);
  CHECK(r.test_set == "folds");

  PredictFn short_preds = [](const DatasetManifest&,
                             const std::filesystem::path&) {
    return std::vector<int>{0};
  };
  CHECK_THROWS_AS(evaluate_predictions(short_preds, m, "."), EvaluationError);

  DatasetManifest empty;
  empty.name = "none";
  empty.recount();
  CHECK_THROWS_AS(evaluate_predictions(perfect, empty, "."), EvaluationError);
}

TEST_CASE("generated-image groups are scored per classifier and emotion") {
  std::map<EmotionLabel, ManifestSource> groups;
  groups[EmotionLabel::kAngry] = {labeled_manifest({10, 0, 0, 0, 0, 0, 0}), "."};
  groups[EmotionLabel::kHappy] = {labeled_manifest({0, 0, 0, 4, 0, 0, 0}), "."};
  groups[EmotionLabel::kSad] = {labeled_manifest({}), "."};  // empty group

  PredictFn perfect = [](const DatasetManifest& m, const std::filesystem::path&) {
    std::vector<int> out;
    for (const auto& rec : m.records) out.push_back(emotion_index(rec.label));
    return out;
  };
  PredictFn always_angry = [](const DatasetManifest& m,
                              const std::filesystem::path&) {
    return std::vector<int>(m.records.size(), 0);
  };

  auto results = gan_quality_check(
      {{"perfect", perfect}, {"grim", always_angry}}, groups, 10);
  REQUIRE(results.size() == 6);

  auto find = [&](const std::string& c, EmotionLabel e) -> const GanQualityResult& {
    for (const auto& r : results) {
      if (r.classifier == c && r.emotion == e) return r;
    }
    FAIL("missing result");
    return results[0];
  };
  CHECK(find("perfect", EmotionLabel::kAngry).accuracy == 1.0);
  CHECK(find("perfect", EmotionLabel::kHappy).accuracy == 1.0);
  CHECK(find("grim", EmotionLabel::kAngry).accuracy == 1.0);
  CHECK(find("grim", EmotionLabel::kHappy).accuracy == 0.0);
  CHECK(find("perfect", EmotionLabel::kSad).total == 0);
  CHECK(find("perfect", EmotionLabel::kSad).accuracy == 0.0);
  CHECK(find("grim", EmotionLabel::kHappy).total == 4);  // scored at actual size
}

TEST_CASE("a trained model evaluates identically via the batched predictor") {
  test::TempDir tmp("fer_eval_model");
  FixtureSpec spec;
  spec.images_per_class = 2;
  spec.seed = 13;
  DatasetManifest m = generate_fixture(spec, tmp.path());

  ClassifierModel model = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 3);
  RunResult via_model = evaluate_model(model, m, tmp.path(), 5);
  PredictFn pred = model_predictor(model, 5);
  RunResult via_pred = evaluate_predictions(pred, m, tmp.path());
  CHECK(via_model.confusion == via_pred.confusion);
  CHECK(via_model.accuracy == via_pred.accuracy);
  CHECK(via_model.backbone == "compact");
  CHECK(via_model.total() == m.size());
}

TEST_CASE("five folds of real training aggregate like one suite cell") {
  test::TempDir tmp("fer_kfold");
  FixtureSpec spec;
  spec.images_per_class = 3;
  spec.seed = 21;
  DatasetManifest m = generate_fixture(spec, tmp.path());

  KfoldOptions opt;
  opt.backbone = BackboneKind::kCompact;
  opt.k = 3;
  opt.seed = 5;
  opt.train.stage1_epochs = 1;
  opt.train.stage2_epochs = 1;
  opt.train.batch_size = 8;

  EvalReport rep = kfold_suite(m, tmp.path(), opt);
  CHECK_NOTHROW(rep.validate());
  CHECK(rep.configured_runs == 3);
  CHECK(rep.runs.size() == 3);
  CHECK_FALSE(rep.incomplete);
  CHECK(rep.backbone == "compact");
  CHECK(rep.name == "kfold_" + m.name + "__compact");

  // Each fold holds out exactly its share: 7 records per fold here.
  std::int64_t held_out = 0;
  for (const auto& r : rep.runs) held_out += r.total();
  CHECK(held_out == m.size());
}
