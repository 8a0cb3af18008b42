#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fer/backbone.hpp"
#include "fer/manifest.hpp"
#include "fer/nn/graph.hpp"
#include "fer/normalize.hpp"

namespace fer {

/// Where a model's backbone weights come from.  kBuiltin fills them from the
/// deterministic per-backbone generator (constant across run seeds, so it
/// plays the role of a fixed pretrained snapshot); kFile restores a weight
/// archive over the backbone layers.
struct WeightSource {
  enum class Kind { kBuiltin, kFile };
  Kind kind = Kind::kBuiltin;
  std::string path;

  static WeightSource builtin() { return {}; }
  static WeightSource file(std::string p) {
    return {Kind::kFile, std::move(p)};
  }
};

enum class TrainStage { kHeadOnly, kPartialUnfrozen };

std::string_view train_stage_name(TrainStage s);

/// A backbone with the 7-way classification head attached: global average
/// pooling, a 256-unit rectified dense layer, and a 7-unit output read through
/// softmax.  Assembly leaves every backbone layer frozen.
class ClassifierModel {
 public:
  ClassifierModel(BackboneKind kind, const WeightSource& weights,
                  std::uint64_t head_seed);

  ClassifierModel(ClassifierModel&&) = default;
  ClassifierModel& operator=(ClassifierModel&&) = default;

  BackboneKind backbone() const { return kind_; }
  const BackboneProfile& profile() const;
  TrainStage stage() const { return stage_; }
  /// Layers unfrozen by the last unfreeze_last call; 0 while head-only.
  int unfrozen() const { return unfrozen_; }
  std::uint64_t head_seed() const { return head_seed_; }
  nn::Graph& graph() { return graph_; }

  /// The backbone's canonical layer list (input placeholder included), the
  /// ordering that defines "the last k layers".
  const std::vector<std::string>& backbone_layers() const {
    return backbone_layers_;
  }

  /// Returns to the stage-1 state: backbone fully frozen, head trainable.
  void freeze_all_backbone();

  /// Unfreezes the last k entries of the backbone layer list and freezes the
  /// rest.  The full index -> layer -> frozen/unfrozen mapping goes to the
  /// structured log when announce is set, so the boundary is auditable.
  /// Returns the names that became trainable.
  std::vector<std::string> unfreeze_last(int k, bool announce = true);

  /// Parameter counts attributed to backbone layers only (head excluded),
  /// the figures comparable to the published per-model numbers.
  std::int64_t backbone_param_count();
  std::int64_t backbone_trainable_param_count();

  /// (batch, H, W, 3) normalized input -> (batch, 7) probability rows.
  /// The batch's scheme tag must match the backbone's; that is the boundary
  /// that keeps unit-interval input out of a mean-centered model.
  nn::Tensor predict_normalized(const NormalizedBatch& batch);
  /// Raw images; normalization is applied internally per the backbone scheme.
  nn::Tensor predict(std::span<const Image> images);

 private:
  friend ClassifierModel load_classifier(const std::string& path);

  BackboneKind kind_;
  std::uint64_t head_seed_ = 0;
  TrainStage stage_ = TrainStage::kHeadOnly;
  int unfrozen_ = 0;
  std::vector<std::string> backbone_layers_;
  nn::Graph graph_;
};

/// Builds the model: backbone from the weight source, freshly seeded head,
/// all backbone layers frozen.  Weight/architecture mismatches in a file
/// source raise AssemblyError.
ClassifierModel assemble(BackboneKind kind, const WeightSource& weights,
                         std::uint64_t head_seed);

struct TrainRunConfig {
  int stage1_epochs = 10;
  float stage1_lr = 1e-3f;
  int stage2_epochs = 65;
  float stage2_lr = 1e-4f;
  int batch_size = 32;
  std::uint64_t seed = 0;
  /// Backbone layers unfrozen in stage 2; -1 means the backbone's default k.
  int unfreeze = -1;

  void validate() const;
};

struct EpochStat {
  TrainStage stage = TrainStage::kHeadOnly;
  int epoch = 0;  ///< 1-based within its stage
  double loss = 0.0;
  double accuracy = 0.0;
};

struct TrainingLog {
  std::vector<EpochStat> epochs;
  std::vector<std::string> unfrozen;  ///< layer names trainable in stage 2
  std::int64_t stage1_steps = 0;
  std::int64_t stage2_steps = 0;
};

/// The two-stage schedule: the head alone at the stage-1 rate, then the last
/// k backbone layers at the reduced stage-2 rate, each stage with a fresh
/// optimizer.  Images are read through the manifest; per-epoch training
/// loss/accuracy land in the returned log.  Empty manifest -> configuration
/// error; non-finite loss -> training abort.
TrainingLog fit_two_stage(ClassifierModel& model,
                          const DatasetManifest& manifest,
                          const std::filesystem::path& manifest_dir,
                          const TrainRunConfig& cfg);

/// Reads the indexed records' images and stacks them normalized under the
/// given scheme; labels (when requested) arrive as class indices.
NormalizedBatch load_normalized_batch(const DatasetManifest& manifest,
                                      const std::filesystem::path& manifest_dir,
                                      std::span<const int> indices,
                                      NormalizationScheme scheme,
                                      std::vector<int>* labels_out = nullptr);

/// Whole-model persistence: one weight archive whose metadata records the
/// backbone, stage, unfreeze depth, seed, dataset name and config digest.
void save_classifier(ClassifierModel& model, const std::string& path,
                     const std::string& dataset_name, std::uint64_t seed,
                     const std::string& config_digest);

struct ClassifierInfo {
  std::string backbone;
  std::string stage;
  int unfreeze = 0;
  std::uint64_t seed = 0;
  std::string dataset;
  std::string config_digest;
};

/// Metadata only, without rebuilding the graph.
ClassifierInfo read_classifier_info(const std::string& path);

ClassifierModel load_classifier(const std::string& path);

}  // namespace fer
