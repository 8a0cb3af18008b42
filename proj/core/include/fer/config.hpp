#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fer/augment.hpp"
#include "fer/backbone.hpp"
#include "fer/dcgan.hpp"
#include "fer/emotion.hpp"
#include "fer/finetune.hpp"

namespace fer {

/// One declarative experiment file driving the full pipeline. Schema is
/// versioned JSON ("format": "fer-experiment", "version": 1); relative paths
/// resolve against the config file's directory, and the ${FER_DATA_ROOT} /
/// ${FER_WEIGHTS_ROOT} environment variables may prefix dataset and weight
/// paths (the only environment lookups in the system).
struct ExperimentConfig {
  int version = 1;
  std::filesystem::path output_root = "out";
  std::uint64_t seed = 0;

  /// Named dataset manifests; eval set lists refer to these names.
  std::map<std::string, std::filesystem::path> manifests;

  AugmentParams augment;

  DcganSpec gan;
  int gan_epochs = 2000;
  /// Checkpoint epoch pinned per emotion after human inspection of the
  /// monitor grids. Valid epochs: 1000..2000 in steps of 100.
  std::map<EmotionLabel, int> pinned_checkpoints;

  TrainRunConfig train;
  WeightSource weights;

  std::vector<BackboneKind> backbones;
  std::vector<std::string> train_sets;
  std::vector<std::string> test_sets;
  int runs_per_cell = 10;
  std::uint64_t seed_base = 0;

  std::string kfold_union;  ///< manifest name; empty disables the k-fold suite
  int kfold_k = 5;

  /// Content hash of the config file, recorded into trained-model metadata.
  std::string digest;
};

/// Outcome of loading a config: either a resolved config or every problem
/// found, not just the first.
struct ConfigResult {
  std::optional<ExperimentConfig> config;
  std::vector<std::string> errors;  ///< "field: message"

  bool ok() const { return errors.empty(); }
};

/// Parses and validates; collects all errors (missing files, range
/// violations, unknown backbone names, malformed checkpoints...).
ConfigResult load_config(const std::filesystem::path& path);

/// As load_config but throwing: ConfigurationError whose message lists every
/// collected problem.
ExperimentConfig validate_config(const std::filesystem::path& path);

/// Serializes a config back to schema JSON (digest excluded).
std::string config_to_json(const ExperimentConfig& config);

}  // namespace fer
