#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "fer/backbone.hpp"
#include "fer/errors.hpp"
#include "fer/finetune.hpp"
#include "fer/fixture.hpp"
#include "fer/nn/graph.hpp"
#include "test_util.hpp"

using namespace fer;

namespace {

// Per-layer snapshot of every parameter blob (moving statistics included).
std::map<std::string, std::vector<std::vector<float>>> snapshot_backbone(
    ClassifierModel& model) {
  std::map<std::string, std::vector<std::vector<float>>> snap;
  for (const auto& name : model.backbone_layers()) {
    if (!model.graph().has_layer(name)) continue;
    for (auto& p : model.graph().layer(name).params()) {
      snap[name].push_back(p.value->data);
    }
  }
  return snap;
}

std::vector<std::string> changed_layers(
    ClassifierModel& model,
    const std::map<std::string, std::vector<std::vector<float>>>& snap) {
  std::vector<std::string> changed;
  for (const auto& name : model.backbone_layers()) {
    if (!model.graph().has_layer(name)) continue;
    auto& layer = model.graph().layer(name);
    auto params = layer.params();
    const auto& before = snap.at(name);
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i].value->data != before[i]) {
        changed.push_back(name);
        break;
      }
    }
  }
  return changed;
}

// A handful of gradient steps against random data, using whatever parameters
// are currently trainable — stage semantics in miniature.
void train_steps(ClassifierModel& model, int steps, std::uint64_t seed) {
  nn::Tensor x({4, 28, 28, 3});
  Rng rng(seed);
  for (auto& v : x.data) v = float(rng.uniform(0.0, 1.0));
  const std::vector<int> labels = {0, 2, 4, 6};
  nn::Adam opt({.lr = 1e-2f});
  for (int s = 0; s < steps; ++s) {
    nn::Tensor logits = model.graph().forward(x, true);
    auto loss = nn::softmax_cross_entropy(logits, labels);
    model.graph().backward(loss.dlogits);
    opt.step(model.graph().trainable_params());
  }
}

}  // namespace

TEST_CASE("backbone profiles carry the reference structure") {
  CHECK(backbone_profile(BackboneKind::kVgg16).layer_count == 19);
  CHECK(backbone_profile(BackboneKind::kVgg19).layer_count == 22);
  CHECK(backbone_profile(BackboneKind::kInceptionV3).layer_count == 311);
  CHECK(backbone_profile(BackboneKind::kInceptionResnetV2).layer_count == 780);
  CHECK(backbone_profile(BackboneKind::kCompact).layer_count == 5);

  CHECK(backbone_profile(BackboneKind::kVgg16).preprocessing ==
        NormalizationScheme::kBgrMeanCentered);
  CHECK(backbone_profile(BackboneKind::kVgg19).preprocessing ==
        NormalizationScheme::kBgrMeanCentered);
  CHECK(backbone_profile(BackboneKind::kInceptionV3).preprocessing ==
        NormalizationScheme::kUnitInterval);
  CHECK(backbone_profile(BackboneKind::kInceptionResnetV2).preprocessing ==
        NormalizationScheme::kUnitInterval);

  for (BackboneKind kind : reference_backbones()) {
    const BackboneProfile& p = backbone_profile(kind);
    CHECK(p.default_unfreeze > 0);
    CHECK(p.default_unfreeze < p.layer_count);
    CHECK(p.published_total_params > 0);
    CHECK(backbone_from_name(backbone_name(kind)) == kind);
  }
  CHECK_THROWS_AS(backbone_from_name("resnet50"), ValidationError);
}

TEST_CASE("descriptor tables sum to the published parameter totals") {
  for (BackboneKind kind : reference_backbones()) {
    auto counts = descriptor_param_counts(kind);
    CHECK(counts.size() ==
          std::size_t(backbone_profile(kind).layer_count - 1));  // input has none
    std::int64_t total = 0;
    for (const auto& [name, n] : counts) total += n;
    CHECK(total == backbone_profile(kind).published_total_params);
  }
}

TEST_CASE("built graphs reproduce the published totals exactly") {
  // The deep pair is cheap to build (no forward pass); counting parameters
  // from real tensor shapes cross-checks the descriptor tables.
  for (BackboneKind kind :
       {BackboneKind::kVgg16, BackboneKind::kInceptionResnetV2}) {
    nn::Graph g = build_backbone(kind, 1);
    g.build({1, 224, 224, 3});
    CHECK(g.param_count() == backbone_profile(kind).published_total_params);
  }
}

TEST_CASE("assembly attaches the head and freezes the backbone") {
  ClassifierModel model = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 3);
  CHECK(model.backbone() == BackboneKind::kCompact);
  CHECK(model.stage() == TrainStage::kHeadOnly);
  CHECK(model.unfrozen() == 0);
  CHECK(model.backbone_layers().size() == 5);
  CHECK(model.graph().has_layer("head_gap"));
  CHECK(model.graph().has_layer("head_fc"));
  CHECK(model.graph().has_layer("head_logits"));

  CHECK(model.backbone_param_count() == 5032);
  CHECK(model.backbone_trainable_param_count() == 0);
  // Only the head is visible to an optimizer: gap (0) + 16*256+256 + 256*7+7.
  CHECK(model.graph().trainable_param_count() == 16 * 256 + 256 + 256 * 7 + 7);
}

TEST_CASE("builtin backbone weights do not move with the head seed") {
  ClassifierModel a = assemble(BackboneKind::kCompact, WeightSource::builtin(), 1);
  ClassifierModel b = assemble(BackboneKind::kCompact, WeightSource::builtin(), 2);
  auto sa = snapshot_backbone(a);
  auto sb = snapshot_backbone(b);
  CHECK(sa == sb);

  auto head = [](ClassifierModel& m) {
    for (auto& p : m.graph().params()) {
      if (p.name == "head_fc/kernel") return p.value->data;
    }
    return std::vector<float>{};
  };
  CHECK(head(a) != head(b));
}

TEST_CASE("head-only training leaves every backbone tensor bit-identical") {
  ClassifierModel model = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 7);
  auto pretrained = snapshot_backbone(model);
  train_steps(model, 5, 11);
  CHECK(changed_layers(model, pretrained).empty());
}

TEST_CASE("partial unfreezing trains exactly the last-k layer set") {
  ClassifierModel model = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 7);
  train_steps(model, 3, 11);  // stage 1
  auto pretrained = snapshot_backbone(model);

  auto unfrozen = model.unfreeze_last(2, false);
  CHECK(unfrozen == std::vector<std::string>{"feat1", "feat2"});
  CHECK(model.stage() == TrainStage::kPartialUnfrozen);
  CHECK(model.backbone_trainable_param_count() == 1168 + 2320);

  train_steps(model, 3, 13);  // stage 2
  CHECK(changed_layers(model, pretrained) == unfrozen);

  model.freeze_all_backbone();
  CHECK(model.stage() == TrainStage::kHeadOnly);
  CHECK(model.backbone_trainable_param_count() == 0);
}

TEST_CASE("unfreeze depth is bounded by the layer list") {
  ClassifierModel model = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 1);
  CHECK_THROWS_AS(model.unfreeze_last(0, false), ConfigurationError);
  CHECK_THROWS_AS(model.unfreeze_last(5, false), ConfigurationError);
  CHECK_NOTHROW(model.unfreeze_last(4, false));
}

TEST_CASE("the deep stacks expose their published trainable share") {
  ClassifierModel model = assemble(BackboneKind::kVgg16,
                                   WeightSource::builtin(), 1);
  const BackboneProfile& p = model.profile();
  CHECK(model.backbone_param_count() == p.published_total_params);
  model.unfreeze_last(p.default_unfreeze, false);
  CHECK(model.backbone_trainable_param_count() == p.published_trainable_params);
}

TEST_CASE("softmax output rows are probability vectors") {
  ClassifierModel model = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 5);
  std::vector<Image> images = {test::random_image(28, 28, 3, 1),
                               test::random_image(28, 28, 3, 2),
                               test::random_image(28, 28, 3, 3)};
  nn::Tensor probs = model.predict(images);
  REQUIRE(probs.shape == std::vector<int>{3, kNumEmotions});
  for (int r = 0; r < 3; ++r) {
    double sum = 0.0;
    for (int c = 0; c < kNumEmotions; ++c) {
      CHECK(probs.at2(r, c) >= 0.0f);
      sum += probs.at2(r, c);
    }
    CHECK(std::abs(sum - 1.0) <= 1e-6);
  }
}

TEST_CASE("the input scheme tag is enforced at the model boundary") {
  ClassifierModel model = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 5);
  std::vector<Image> images = {test::random_image(28, 28, 3, 1)};
  NormalizedBatch wrong =
      normalize_batch(images, NormalizationScheme::kBgrMeanCentered);
  CHECK_THROWS_AS(model.predict_normalized(wrong), ValidationError);
}

TEST_CASE("two-stage fit runs both schedules and logs them") {
  test::TempDir tmp("fer_fit");
  FixtureSpec spec;
  spec.images_per_class = 1;
  spec.seed = 9;
  DatasetManifest m = generate_fixture(spec, tmp.path());

  ClassifierModel model = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 21);
  TrainRunConfig cfg;
  cfg.stage1_epochs = 2;
  cfg.stage2_epochs = 1;
  cfg.batch_size = 4;
  cfg.seed = 3;
  TrainingLog log = fit_two_stage(model, m, tmp.path(), cfg);

  REQUIRE(log.epochs.size() == 3);
  CHECK(log.epochs[0].stage == TrainStage::kHeadOnly);
  CHECK(log.epochs[2].stage == TrainStage::kPartialUnfrozen);
  CHECK(log.stage1_steps == 2 * 2);  // ceil(7/4) batches per epoch
  CHECK(log.stage2_steps == 2);
  CHECK(log.unfrozen == std::vector<std::string>{"feat1", "feat2"});
  CHECK(model.unfrozen() == 2);
  for (const auto& e : log.epochs) CHECK(std::isfinite(e.loss));
}

TEST_CASE("fit rejects empty manifests and bad schedules") {
  DatasetManifest empty;
  empty.name = "none";
  empty.recount();
  ClassifierModel model = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 1);
  TrainRunConfig cfg;
  CHECK_THROWS_AS(fit_two_stage(model, empty, ".", cfg), ConfigurationError);

  TrainRunConfig bad;
  bad.stage1_epochs = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigurationError);
  bad = TrainRunConfig{};
  bad.batch_size = -1;
  CHECK_THROWS_AS(bad.validate(), ConfigurationError);
}

TEST_CASE("classifier persistence round-trips predictions bit-exactly") {
  test::TempDir tmp("fer_save");
  ClassifierModel model = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 21);
  model.unfreeze_last(2, false);
  const std::string path = (tmp / "clf.ferw").string();
  save_classifier(model, path, "train_set_x", 42, "digest123");

  ClassifierInfo info = read_classifier_info(path);
  CHECK(info.backbone == "compact");
  CHECK(info.stage == "partial_unfrozen");
  CHECK(info.unfreeze == 2);
  CHECK(info.seed == 42);
  CHECK(info.dataset == "train_set_x");
  CHECK(info.config_digest == "digest123");

  ClassifierModel back = load_classifier(path);
  CHECK(back.backbone() == BackboneKind::kCompact);
  CHECK(back.stage() == TrainStage::kPartialUnfrozen);
  CHECK(back.unfrozen() == 2);

  std::vector<Image> images = {test::random_image(28, 28, 3, 4),
                               test::random_image(28, 28, 3, 5)};
  nn::Tensor a = model.predict(images);
  nn::Tensor b = back.predict(images);
  CHECK(a.data == b.data);
}

TEST_CASE("loading something that is not a classifier fails cleanly") {
  test::TempDir tmp("fer_save");
  std::ofstream(tmp / "junk.ferw") << "not an archive";
  CHECK_THROWS_AS(load_classifier((tmp / "junk.ferw").string()),
                  IncompatibilityError);
  CHECK_THROWS_AS(read_classifier_info((tmp / "junk.ferw").string()),
                  IncompatibilityError);
}

TEST_CASE("file weight sources restore over the backbone") {
  test::TempDir tmp("fer_filew");
  // Export a trained-ish model, then assemble a sibling from its archive.
  ClassifierModel donor = assemble(BackboneKind::kCompact,
                                   WeightSource::builtin(), 2);
  train_steps(donor, 2, 5);
  const std::string path = (tmp / "donor.ferw").string();
  save_classifier(donor, path, "donor_set", 1, "");

  ClassifierModel fresh = assemble(BackboneKind::kCompact,
                                   WeightSource::file(path), 9);
  auto donor_snap = snapshot_backbone(donor);
  auto fresh_snap = snapshot_backbone(fresh);
  CHECK(donor_snap == fresh_snap);

  CHECK_THROWS_AS(
      assemble(BackboneKind::kVgg16, WeightSource::file(path), 1),
      AssemblyError);
}
