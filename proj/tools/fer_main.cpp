// fer: command line front end for the expression-recognition pipeline.
// Exit codes: 0 success, 2 validation failure, 3 runtime failure.

#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fer/augment.hpp"
#include "fer/config.hpp"
#include "fer/data_registry.hpp"
#include "fer/dcgan.hpp"
#include "fer/errors.hpp"
#include "fer/evaluation.hpp"
#include "fer/finetune.hpp"
#include "fer/fixture.hpp"
#include "fer/logging.hpp"
#include "fer/manifest.hpp"
#include "fer/preprocess.hpp"
#include "fer/report.hpp"

namespace fs = std::filesystem;
using namespace fer;

namespace {

// Keeps relative record paths meaningful when a manifest is written
// somewhere other than the directory its rows were read from. Root-variable
// and absolute paths pass through.
void re_anchor_records(DatasetManifest& m, const fs::path& from,
                       const fs::path& to) {
  if (from == to) return;
  for (auto& rec : m.records) {
    if (rec.path.empty() || rec.path.front() == '$') continue;
    const fs::path p(rec.path);
    if (p.is_absolute()) continue;
    const fs::path resolved = (from / p).lexically_normal();
    const fs::path rebased = resolved.lexically_relative(to.empty() ? "." : to);
    rec.path = rebased.empty() ? resolved.string() : rebased.string();
  }
}

void print_counts(const DatasetManifest& m) {
  std::cout << m.name << ": " << m.size() << " records";
  for (int c = 0; c < kNumEmotions; ++c) {
    const EmotionLabel label = emotion_from_index(c);
    std::cout << (c == 0 ? "  (" : ", ") << emotion_name(label) << " "
              << m.count(label);
  }
  std::cout << ")\n";
}

EmotionLabel parse_emotion_arg(const std::string& text) {
  const auto label = try_parse_emotion(text);
  if (!label) throw ConfigurationError("unknown emotion '" + text + "'");
  return *label;
}

// ---------------------------------------------------------------- ingest

struct IngestArgs {
  std::string dataset;
  fs::path manifest;
  fs::path out;
  bool check_files = false;
  bool dry = false;
};

void run_ingest(const IngestArgs& a) {
  const LoadOptions options{a.check_files};
  DatasetManifest m;
  if (a.dataset == "kdef") m = load_kdef(a.manifest, options);
  else if (a.dataset == "ckplus") m = load_ckplus(a.manifest, options);
  else if (a.dataset == "jaffe") m = load_jaffe(a.manifest, options);
  else if (a.dataset == "actors") m = load_actors(a.manifest, options);
  else throw ConfigurationError("unknown dataset '" + a.dataset + "'");
  re_anchor_records(m, a.manifest.parent_path(), a.out.parent_path());
  print_counts(m);
  if (a.dry) {
    std::cout << "plan: would write " << a.out << "\n";
    return;
  }
  write_manifest(m, a.out);
  std::cout << "wrote " << a.out << "\n";
}

// ---------------------------------------------------------------- compose

struct ComposeArgs {
  std::string name;
  std::vector<fs::path> parts;
  fs::path out;
  bool dry = false;
};

void run_compose(const ComposeArgs& a) {
  std::vector<DatasetManifest> parts;
  for (const auto& p : a.parts) {
    DatasetManifest part = read_manifest(p);
    re_anchor_records(part, p.parent_path(), a.out.parent_path());
    parts.push_back(std::move(part));
  }
  const DatasetManifest m = compose(a.name, parts);
  print_counts(m);
  if (a.dry) {
    std::cout << "plan: would write " << a.out << "\n";
    return;
  }
  write_manifest(m, a.out);
  std::cout << "wrote " << a.out << "\n";
}

// ------------------------------------------------------------- preprocess

struct PreprocessArgs {
  fs::path manifest;
  fs::path out_dir;
  std::string detector = "bright_region";
  double threshold = 0.5;
  int workers = 1;
  bool dry = false;
};

void run_preprocess_cmd(const PreprocessArgs& a) {
  const DatasetManifest m = read_manifest(a.manifest);
  if (a.dry) {
    std::cout << "plan: preprocess " << m.size() << " records with detector '"
              << a.detector << "' into " << a.out_dir << "\n";
    return;
  }
  PreprocessResult result = run_preprocess(
      m, a.manifest.parent_path(), a.detector, a.threshold, a.out_dir, a.workers);
  re_anchor_records(result.processed, "", a.out_dir);
  write_manifest(result.processed, a.out_dir / "manifest.tsv");
  print_counts(result.processed);
  if (!result.excluded_ids.empty()) {
    std::cout << "excluded " << result.excluded_ids.size()
              << " records (no face found)\n";
  }
  std::cout << "wrote " << a.out_dir / "manifest.tsv" << "\n";
}

// ---------------------------------------------------------------- augment

struct AugmentArgs {
  fs::path manifest;
  fs::path out_dir;
  AugmentParams params;
  std::uint64_t seed = 0;
  int workers = 1;
  bool dry = false;
};

void run_augment(const AugmentArgs& a) {
  a.params.validate();
  const DatasetManifest m = read_manifest(a.manifest);
  if (a.dry) {
    std::cout << "plan: " << m.size() << " records x " << a.params.replicas
              << " replicas -> " << m.size() * a.params.replicas
              << " augmented images in " << a.out_dir << "\n";
    return;
  }
  DatasetManifest expanded = expand(m, a.manifest.parent_path(), a.params,
                                    a.seed, a.out_dir, a.workers);
  re_anchor_records(expanded, "", a.out_dir);
  write_manifest(expanded, a.out_dir / "manifest.tsv");
  print_counts(expanded);
  std::cout << "wrote " << a.out_dir / "manifest.tsv" << "\n";
}

// -------------------------------------------------------------------- gan

struct GanTrainArgs {
  fs::path manifest;
  std::string emotion = "neutral";
  fs::path out_dir;
  bool reduced = false;
  int epochs = 0;  // 0 keeps the spec default
  std::uint64_t seed = 0;
  bool stable_variant = false;
  bool resize_inputs = false;
  bool dry = false;
};

void run_gan_train(const GanTrainArgs& a) {
  const DatasetManifest group = read_manifest(a.manifest);
  DcganSpec spec = a.reduced ? reduced_dcgan_spec() : full_dcgan_spec();
  spec.stable_variant = a.stable_variant;
  DcganTrainOptions options;
  options.emotion = parse_emotion_arg(a.emotion);
  if (a.epochs > 0) options.epochs = a.epochs;
  options.seed = a.seed;
  options.out_dir = a.out_dir;
  options.resize_inputs = a.resize_inputs;
  if (a.dry) {
    std::cout << "plan: train " << (a.reduced ? "reduced" : "full")
              << " pair on " << group.size() << " images of '" << a.emotion
              << "' for " << options.epochs << " epochs into " << a.out_dir
              << "\n";
    return;
  }
  const DcganTrainResult result = train_dcgan(group, a.manifest.parent_path(),
                                              spec, options);
  std::cout << "trained: " << result.checkpoints.size() << " checkpoints, "
            << "first step d=" << result.first_step.discriminator
            << " g=" << result.first_step.generator << "\n";
}

struct GanSampleArgs {
  fs::path checkpoint;
  int count = 150;
  std::uint64_t seed = 0;
  fs::path out_dir;
  bool dry = false;
};

void run_gan_sample(const GanSampleArgs& a) {
  if (a.count < 1) throw ConfigurationError("--count must be positive");
  if (a.dry) {
    std::cout << "plan: sample " << a.count << " images from " << a.checkpoint
              << " into " << a.out_dir << "\n";
    return;
  }
  DatasetManifest m = sample_dcgan(a.checkpoint, a.count, a.seed, a.out_dir);
  re_anchor_records(m, "", a.out_dir);
  write_manifest(m, a.out_dir / "manifest.tsv");
  print_counts(m);
  std::cout << "wrote " << a.out_dir / "manifest.tsv" << "\n";
}

// --------------------------------------------------------------- finetune

struct FinetuneArgs {
  fs::path manifest;
  std::string backbone = "compact";
  std::string weights_file;  // empty -> builtin snapshot
  std::string dataset_name;  // empty -> manifest name
  std::uint64_t seed = 0;
  fs::path out;
  TrainRunConfig train;
  std::string config_digest;
  bool dry = false;
};

void run_finetune(const FinetuneArgs& a) {
  const BackboneKind kind = backbone_from_name(a.backbone);
  TrainRunConfig cfg = a.train;
  cfg.seed = a.seed;
  cfg.validate();
  const DatasetManifest m = read_manifest(a.manifest);
  if (a.dry) {
    std::cout << "plan: fine-tune " << a.backbone << " on " << m.size()
              << " records (" << cfg.stage1_epochs << "+" << cfg.stage2_epochs
              << " epochs, batch " << cfg.batch_size << ", seed " << a.seed
              << ") -> " << a.out << "\n";
    return;
  }
  const WeightSource weights = a.weights_file.empty()
                                   ? WeightSource::builtin()
                                   : WeightSource::file(a.weights_file);
  ClassifierModel model = assemble(kind, weights, a.seed);
  const TrainingLog log = fit_two_stage(model, m, a.manifest.parent_path(), cfg);
  const std::string dataset = a.dataset_name.empty() ? m.name : a.dataset_name;
  save_classifier(model, a.out.string(), dataset, a.seed, a.config_digest);
  const EpochStat& last = log.epochs.back();
  std::cout << "trained " << a.backbone << " on " << dataset << ": final loss "
            << last.loss << ", train accuracy " << last.accuracy << "\n";
  std::cout << "wrote " << a.out << "\n";
}

// ------------------------------------------------------------------- eval

struct EvalCrossArgs {
  fs::path config;
  fs::path out_dir;  // empty -> <output_root>/cross
  int runs = 0;      // 0 keeps config value
  bool dry = false;
};

CrossSuiteOptions cross_options_from_config(const ExperimentConfig& cfg,
                                            const fs::path& out_dir_override,
                                            int runs_override) {
  CrossSuiteOptions options;
  options.backbones = cfg.backbones;
  for (const auto& name : cfg.train_sets)
    options.train_sets.push_back({name, cfg.manifests.at(name)});
  for (const auto& name : cfg.test_sets)
    options.test_sets.push_back({name, cfg.manifests.at(name)});
  options.runs_per_cell = runs_override > 0 ? runs_override : cfg.runs_per_cell;
  options.seed_base = cfg.seed_base;
  options.out_dir =
      out_dir_override.empty() ? cfg.output_root / "cross" : out_dir_override;
  options.train = cfg.train;
  options.weights = cfg.weights;
  return options;
}

void run_eval_cross(const EvalCrossArgs& a) {
  const ExperimentConfig cfg = validate_config(a.config);
  const CrossSuiteOptions options =
      cross_options_from_config(cfg, a.out_dir, a.runs);
  if (options.backbones.empty() || options.train_sets.empty() ||
      options.test_sets.empty()) {
    throw ConfigurationError(
        "config must list eval.backbones, eval.train_sets and eval.test_sets");
  }
  if (a.dry) {
    const std::size_t cells = options.backbones.size() *
                              options.train_sets.size() *
                              options.test_sets.size();
    std::cout << "plan: " << cells << " cells x " << options.runs_per_cell
              << " runs, artifacts in " << options.out_dir << "\n";
    return;
  }
  const std::vector<EvalReport> reports = cross_database_suite(options);
  write_suite_files(reports, options.out_dir / "reports");
  std::cout << render_suite_text(reports);
  std::cout << "reports in " << options.out_dir / "reports" << "\n";
}

struct EvalKfoldArgs {
  fs::path config;
  std::string union_name;  // empty -> config value
  int k = 0;               // 0 keeps config value
  bool dry = false;
};

void run_eval_kfold(const EvalKfoldArgs& a) {
  const ExperimentConfig cfg = validate_config(a.config);
  const std::string union_name =
      a.union_name.empty() ? cfg.kfold_union : a.union_name;
  if (union_name.empty())
    throw ConfigurationError("no union manifest: set eval.kfold.union or --union");
  const auto it = cfg.manifests.find(union_name);
  if (it == cfg.manifests.end())
    throw ConfigurationError("no manifest named '" + union_name + "'");
  if (cfg.backbones.empty())
    throw ConfigurationError("config must list eval.backbones");
  const DatasetManifest union_m = read_manifest(it->second, union_name);
  const int k = a.k > 0 ? a.k : cfg.kfold_k;
  if (a.dry) {
    std::cout << "plan: " << k << "-fold over " << union_m.size()
              << " records for " << cfg.backbones.size() << " backbone(s)\n";
    return;
  }
  std::vector<EvalReport> reports;
  for (BackboneKind backbone : cfg.backbones) {
    KfoldOptions options;
    options.backbone = backbone;
    options.k = k;
    options.seed = cfg.seed;
    options.train = cfg.train;
    options.weights = cfg.weights;
    options.out_dir = cfg.output_root / "kfold";
    reports.push_back(kfold_suite(union_m, it->second.parent_path(), options));
  }
  write_suite_files(reports, cfg.output_root / "kfold" / "reports");
  std::cout << render_suite_text(reports);
  std::cout << "reports in " << cfg.output_root / "kfold" / "reports" << "\n";
}

struct EvalGanQualityArgs {
  fs::path classifiers_dir;
  fs::path gan_sets_dir;
  fs::path out_dir = ".";
  std::int64_t expected = 150;
  bool dry = false;
};

void run_eval_gan_quality(const EvalGanQualityArgs& a) {
  std::vector<fs::path> classifier_files;
  if (fs::is_directory(a.classifiers_dir)) {
    for (const auto& entry : fs::directory_iterator(a.classifiers_dir)) {
      if (entry.path().extension() == ".ferw")
        classifier_files.push_back(entry.path());
    }
    std::sort(classifier_files.begin(), classifier_files.end());
  } else if (fs::exists(a.classifiers_dir)) {
    classifier_files.push_back(a.classifiers_dir);
  }
  if (classifier_files.empty())
    throw ConfigurationError("no .ferw classifiers under '" +
                             a.classifiers_dir.string() + "'");

  std::map<EmotionLabel, ManifestSource> groups;
  for (int c = 0; c < kNumEmotions; ++c) {
    const EmotionLabel label = emotion_from_index(c);
    const fs::path dir = a.gan_sets_dir / std::string(emotion_name(label));
    if (fs::exists(dir / "manifest.tsv")) {
      groups[label] = {read_manifest(dir / "manifest.tsv"), dir};
    }
  }
  if (groups.empty())
    throw ConfigurationError("no <emotion>/manifest.tsv groups under '" +
                             a.gan_sets_dir.string() + "'");
  if (a.dry) {
    std::cout << "plan: score " << classifier_files.size()
              << " classifier(s) over " << groups.size() << " group(s)\n";
    return;
  }

  std::deque<ClassifierModel> models;
  std::vector<std::pair<std::string, PredictFn>> classifiers;
  for (const auto& file : classifier_files) {
    models.push_back(load_classifier(file.string()));
    classifiers.emplace_back(file.stem().string(),
                             model_predictor(models.back()));
  }
  const std::vector<GanQualityResult> results =
      gan_quality_check(classifiers, groups, a.expected);
  std::cout << render_gan_quality_text(results);
  fs::create_directories(a.out_dir);
  std::ofstream json_out(a.out_dir / "gan_quality.json", std::ios::trunc);
  json_out << gan_quality_to_json(results) << "\n";
  std::ofstream text_out(a.out_dir / "gan_quality.txt", std::ios::trunc);
  text_out << render_gan_quality_text(results);
  std::cout << "wrote " << a.out_dir / "gan_quality.json" << "\n";
}

// ----------------------------------------------------------------- report

struct ReportArgs {
  fs::path in;
  fs::path out;
  bool dry = false;
};

void run_report(const ReportArgs& a) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.in)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<EvalReport> reports;
  for (const auto& file : files) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      EvalReport report = eval_report_from_json(ss.str());
      report.validate();
      reports.push_back(std::move(report));
    } catch (const Error& e) {
      logs::event("report", "skipped",
                  {logs::str("file", file.string()), logs::str("why", e.what())});
    }
  }
  if (reports.empty())
    throw ConfigurationError("no parseable reports under '" + a.in.string() + "'");
  if (a.dry) {
    std::cout << "plan: render " << reports.size() << " report(s) into "
              << a.out << "\n";
    return;
  }
  write_suite_files(reports, a.out);
  std::cout << render_suite_text(reports);
  std::cout << "wrote " << reports.size() << " report(s) to " << a.out << "\n";
}

// ---------------------------------------------------------------- fixture

struct FixtureArgs {
  fs::path out_dir;
  int images_per_class = 20;
  double separability = 1.0;
  std::uint64_t seed = 1;
  std::string as;  // empty: standard fixture; else kdef|ckplus|jaffe|actor
  bool full_kdef_rows = false;
  bool dry = false;
};

void run_fixture(const FixtureArgs& a) {
  if (a.full_kdef_rows) {
    if (a.dry) {
      std::cout << "plan: write the 4900-row raw listing into " << a.out_dir
                << "\n";
      return;
    }
    const fs::path path = write_full_kdef_rows(a.out_dir);
    std::cout << "wrote " << path << "\n";
    return;
  }
  FixtureSpec spec;
  spec.images_per_class = a.images_per_class;
  spec.separability = a.separability;
  spec.seed = a.seed;
  spec.validate();
  if (a.dry) {
    std::cout << "plan: " << kNumEmotions * spec.images_per_class
              << " synthetic images into " << a.out_dir
              << (a.as.empty() ? "" : " masquerading as " + a.as) << "\n";
    return;
  }
  if (a.as.empty()) {
    const DatasetManifest m = generate_fixture(spec, a.out_dir);
    print_counts(m);
    std::cout << "wrote " << a.out_dir / "manifest.tsv" << "\n";
    return;
  }
  const auto source = try_parse_source(a.as);
  if (!source) throw ConfigurationError("unknown source '" + a.as + "'");
  const fs::path path = generate_fixture_as(spec, *source, a.out_dir);
  std::cout << "wrote " << path << "\n";
}

// -------------------------------------------------------------- reproduce

struct ReproduceArgs {
  fs::path config;
  bool dry = false;
};

void run_reproduce(const ReproduceArgs& a) {
  const ExperimentConfig cfg = validate_config(a.config);
  const bool cross = !cfg.backbones.empty() && !cfg.train_sets.empty() &&
                     !cfg.test_sets.empty();
  const bool kfold = !cfg.kfold_union.empty() && !cfg.backbones.empty();
  if (!cross && !kfold)
    throw ConfigurationError("config drives neither the cross suite nor k-fold");
  if (a.dry) {
    if (cross) {
      std::cout << "plan: cross suite, "
                << cfg.backbones.size() * cfg.train_sets.size() *
                       cfg.test_sets.size()
                << " cells x " << cfg.runs_per_cell << " runs\n";
    }
    if (kfold) {
      std::cout << "plan: " << cfg.kfold_k << "-fold over '" << cfg.kfold_union
                << "' for " << cfg.backbones.size() << " backbone(s)\n";
    }
    std::cout << "plan: reports under " << cfg.output_root << "\n";
    return;
  }
  if (cross) {
    EvalCrossArgs args;
    args.config = a.config;
    run_eval_cross(args);
  }
  if (kfold) {
    EvalKfoldArgs args;
    args.config = a.config;
    run_eval_kfold(args);
  }
  std::cout << "artifacts under " << cfg.output_root << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"facial expression recognition pipeline"};
  app.require_subcommand(1);
  std::string log_file;
  bool quiet = false;
  app.add_option("--log-file", log_file, "append structured JSONL events here");
  app.add_flag("--quiet", quiet, "silence stderr event echo");

  std::function<void()> chosen;

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "load a raw dataset listing");
  ingest_cmd->add_option("--dataset", ingest.dataset, "kdef|ckplus|jaffe|actors")
      ->required();
  ingest_cmd->add_option("--manifest", ingest.manifest, "raw listing file")
      ->required();
  ingest_cmd->add_option("--out", ingest.out, "typed manifest to write")
      ->required();
  ingest_cmd->add_flag("--check-files", ingest.check_files,
                       "require every image file to exist");
  ingest_cmd->add_flag("--dry-run", ingest.dry);
  ingest_cmd->callback([&] { chosen = [&] { run_ingest(ingest); }; });

  ComposeArgs compose_args;
  auto* compose_cmd =
      app.add_subcommand("compose", "concatenate manifests into a named set");
  compose_cmd->add_option("--name", compose_args.name)->required();
  compose_cmd->add_option("--parts", compose_args.parts, "manifest files")
      ->required()
      ->expected(-1);
  compose_cmd->add_option("--out", compose_args.out)->required();
  compose_cmd->add_flag("--dry-run", compose_args.dry);
  compose_cmd->callback([&] { chosen = [&] { run_compose(compose_args); }; });

  PreprocessArgs preprocess;
  auto* preprocess_cmd =
      app.add_subcommand("preprocess", "detect, crop and standardize faces");
  preprocess_cmd->add_option("--manifest", preprocess.manifest)->required();
  preprocess_cmd->add_option("--out-dir", preprocess.out_dir)->required();
  preprocess_cmd->add_option("--detector", preprocess.detector,
                             "face detector name");
  preprocess_cmd->add_option("--threshold", preprocess.threshold,
                             "detector confidence threshold");
  preprocess_cmd->add_option("--workers", preprocess.workers);
  preprocess_cmd->add_flag("--dry-run", preprocess.dry);
  preprocess_cmd->callback([&] { chosen = [&] { run_preprocess_cmd(preprocess); }; });

  AugmentArgs augment;
  auto* augment_cmd =
      app.add_subcommand("augment", "offline geometric replica expansion");
  augment_cmd->add_option("--manifest", augment.manifest)->required();
  augment_cmd->add_option("--out-dir", augment.out_dir)->required();
  augment_cmd->add_option("--seed", augment.seed)->required();
  augment_cmd->add_option("--rho", augment.params.rho, "rotation bound");
  augment_cmd->add_option("--zeta", augment.params.zeta, "zoom bound");
  augment_cmd->add_option("--theta", augment.params.theta, "height bound");
  augment_cmd->add_option("--omega", augment.params.omega, "width bound");
  augment_cmd->add_option("--gamma", augment.params.gamma, "contrast bound");
  augment_cmd->add_flag("!--no-flip", augment.params.flip_enabled);
  augment_cmd->add_option("--replicas", augment.params.replicas);
  augment_cmd->add_option("--workers", augment.workers);
  augment_cmd->add_flag("--dry-run", augment.dry);
  augment_cmd->callback([&] { chosen = [&] { run_augment(augment); }; });

  auto* gan_cmd = app.add_subcommand("gan", "per-emotion generative pair");
  gan_cmd->require_subcommand(1);
  GanTrainArgs gan_train;
  auto* gan_train_cmd = gan_cmd->add_subcommand("train", "train one emotion");
  gan_train_cmd->add_option("--manifest", gan_train.manifest, "training group")
      ->required();
  gan_train_cmd->add_option("--emotion", gan_train.emotion)->required();
  gan_train_cmd->add_option("--out-dir", gan_train.out_dir)->required();
  gan_train_cmd->add_flag("--reduced", gan_train.reduced,
                          "reduced geometry for tests");
  gan_train_cmd->add_option("--epochs", gan_train.epochs);
  gan_train_cmd->add_option("--seed", gan_train.seed);
  gan_train_cmd->add_flag("--stable-variant", gan_train.stable_variant);
  gan_train_cmd->add_flag("--resize-inputs", gan_train.resize_inputs,
                          "bilinear-resize inputs to the spec side");
  gan_train_cmd->add_flag("--dry-run", gan_train.dry);
  gan_train_cmd->callback([&] { chosen = [&] { run_gan_train(gan_train); }; });

  GanSampleArgs gan_sample;
  auto* gan_sample_cmd =
      gan_cmd->add_subcommand("sample", "draw images from a checkpoint");
  gan_sample_cmd->add_option("--checkpoint", gan_sample.checkpoint)->required();
  gan_sample_cmd->add_option("--count", gan_sample.count);
  gan_sample_cmd->add_option("--seed", gan_sample.seed);
  gan_sample_cmd->add_option("--out-dir", gan_sample.out_dir)->required();
  gan_sample_cmd->add_flag("--dry-run", gan_sample.dry);
  gan_sample_cmd->callback([&] { chosen = [&] { run_gan_sample(gan_sample); }; });

  FinetuneArgs finetune;
  auto* finetune_cmd =
      app.add_subcommand("finetune", "two-stage transfer training");
  finetune_cmd->add_option("--manifest", finetune.manifest)->required();
  finetune_cmd->add_option("--backbone", finetune.backbone);
  finetune_cmd->add_option("--weights", finetune.weights_file,
                           "weight archive; omitted uses the built-in snapshot");
  finetune_cmd->add_option("--name", finetune.dataset_name,
                           "dataset label in saved metadata");
  finetune_cmd->add_option("--seed", finetune.seed);
  finetune_cmd->add_option("--out", finetune.out)->required();
  finetune_cmd->add_option("--stage1-epochs", finetune.train.stage1_epochs);
  finetune_cmd->add_option("--stage1-lr", finetune.train.stage1_lr);
  finetune_cmd->add_option("--stage2-epochs", finetune.train.stage2_epochs);
  finetune_cmd->add_option("--stage2-lr", finetune.train.stage2_lr);
  finetune_cmd->add_option("--batch", finetune.train.batch_size);
  finetune_cmd->add_option("--unfreeze", finetune.train.unfreeze,
                           "stage-2 layer count; -1 = backbone default");
  finetune_cmd->add_option("--config-digest", finetune.config_digest);
  finetune_cmd->add_flag("--dry-run", finetune.dry);
  finetune_cmd->callback([&] { chosen = [&] { run_finetune(finetune); }; });

  auto* eval_cmd = app.add_subcommand("eval", "evaluation protocols");
  eval_cmd->require_subcommand(1);
  EvalCrossArgs eval_cross;
  auto* eval_cross_cmd =
      eval_cmd->add_subcommand("cross", "cross-database suite");
  eval_cross_cmd->add_option("--config", eval_cross.config)->required();
  eval_cross_cmd->add_option("--out-dir", eval_cross.out_dir);
  eval_cross_cmd->add_option("--runs", eval_cross.runs, "override runs per cell");
  eval_cross_cmd->add_flag("--dry-run", eval_cross.dry);
  eval_cross_cmd->callback([&] { chosen = [&] { run_eval_cross(eval_cross); }; });

  EvalKfoldArgs eval_kfold;
  auto* eval_kfold_cmd =
      eval_cmd->add_subcommand("kfold", "intra-database cross validation");
  eval_kfold_cmd->add_option("--config", eval_kfold.config)->required();
  eval_kfold_cmd->add_option("--union", eval_kfold.union_name,
                             "union manifest name");
  eval_kfold_cmd->add_option("--k", eval_kfold.k);
  eval_kfold_cmd->add_flag("--dry-run", eval_kfold.dry);
  eval_kfold_cmd->callback([&] { chosen = [&] { run_eval_kfold(eval_kfold); }; });

  EvalGanQualityArgs gan_quality;
  auto* gan_quality_cmd = eval_cmd->add_subcommand(
      "gan-quality", "score classifiers on generated groups");
  gan_quality_cmd->add_option("--classifiers", gan_quality.classifiers_dir,
                              ".ferw file or directory of them")
      ->required();
  gan_quality_cmd->add_option("--gan-sets", gan_quality.gan_sets_dir,
                              "directory of <emotion>/manifest.tsv groups")
      ->required();
  gan_quality_cmd->add_option("--out-dir", gan_quality.out_dir);
  gan_quality_cmd->add_option("--expected", gan_quality.expected,
                              "expected group size");
  gan_quality_cmd->add_flag("--dry-run", gan_quality.dry);
  gan_quality_cmd->callback(
      [&] { chosen = [&] { run_eval_gan_quality(gan_quality); }; });

  ReportArgs report;
  auto* report_cmd =
      app.add_subcommand("report", "render stored reports into tables and plots");
  report_cmd->add_option("--in", report.in, "directory of report JSON files")
      ->required();
  report_cmd->add_option("--out", report.out)->required();
  report_cmd->add_flag("--dry-run", report.dry);
  report_cmd->callback([&] { chosen = [&] { run_report(report); }; });

  FixtureArgs fixture;
  auto* fixture_cmd =
      app.add_subcommand("fixture", "deterministic synthetic dataset");
  fixture_cmd->add_option("--out-dir", fixture.out_dir)->required();
  fixture_cmd->add_option("--images-per-class", fixture.images_per_class);
  fixture_cmd->add_option("--separability", fixture.separability);
  fixture_cmd->add_option("--seed", fixture.seed);
  fixture_cmd->add_option("--as", fixture.as,
                          "emit a raw listing masquerading as a source dataset");
  fixture_cmd->add_flag("--full-kdef-rows", fixture.full_kdef_rows,
                        "write the 4900-row raw listing instead of images");
  fixture_cmd->add_flag("--dry-run", fixture.dry);
  fixture_cmd->callback([&] { chosen = [&] { run_fixture(fixture); }; });

  ReproduceArgs reproduce;
  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "run every suite a config describes");
  reproduce_cmd->add_option("--config", reproduce.config)->required();
  reproduce_cmd->add_flag("--dry-run", reproduce.dry);
  reproduce_cmd->callback([&] { chosen = [&] { run_reproduce(reproduce); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  logs::set_quiet(quiet);
  if (!log_file.empty()) logs::set_log_file(log_file);

  try {
    if (chosen) chosen();
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
