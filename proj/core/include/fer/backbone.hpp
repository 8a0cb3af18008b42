#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fer/nn/graph.hpp"
#include "fer/normalize.hpp"

namespace fer {

// The four reference stacks, plus a small in-repo stand-in with the same
// structural contract (layer list, unfreeze boundary, preprocessing scheme)
// that keeps tests fast and self-contained.
enum class BackboneKind {
  kVgg16,
  kVgg19,
  kInceptionV3,
  kInceptionResnetV2,
  kCompact,
};

const char* backbone_name(BackboneKind kind);
BackboneKind backbone_from_name(const std::string& name);
std::vector<BackboneKind> reference_backbones();

struct BackboneProfile {
  BackboneKind kind;
  int layer_count = 0;        // n: entries in the layer list, input included
  int default_unfreeze = 0;   // k: layers unfrozen in the second stage
  NormalizationScheme preprocessing = NormalizationScheme::kUnitInterval;
  // Published parameter counts for the reference stacks (0 when not applicable).
  std::int64_t published_total_params = 0;
  std::int64_t published_trainable_params = 0;
};

const BackboneProfile& backbone_profile(BackboneKind kind);

// Headless feature extractor over 224x224x3 input (28x28 for kCompact's
// stride plan; any square input works).  Weights are seeded deterministically;
// real pretrained weights can be loaded over the graph afterwards.
nn::Graph build_backbone(BackboneKind kind, std::uint64_t init_seed);

// Per-layer parameter counts recorded alongside the architecture, keyed by
// layer name, for integrity checks against a built graph.
std::vector<std::pair<std::string, std::int64_t>> descriptor_param_counts(
    BackboneKind kind);

}  // namespace fer
