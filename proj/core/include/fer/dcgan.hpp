#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fer/emotion.hpp"
#include "fer/manifest.hpp"
#include "fer/nn/graph.hpp"
#include "fer/nn/weights.hpp"
#include "fer/rng.hpp"

namespace fer {

// Architecture and schedule of one per-emotion adversarial pair.  All spatial
// arithmetic derives from (image_side, stages): the generator seeds a
// (image_side >> stages)^2 grid and doubles it `stages` times.
struct DcganSpec {
  int latent_dim = 100;
  int image_side = 224;
  int channels = 3;
  int stages = 5;          // strided stages in both networks
  int base_filters = 32;   // first discriminator stage; doubles per stage
  int stem_kernel = 3;     // non-strided convolutions
  int stride_kernel = 4;   // strided and transposed convolutions
  float leaky_slope = 0.2f;
  float learning_rate = 2e-4f;
  float beta1 = 0.5f;
  int batch_size = 16;
  int monitor_every = 100;      // image grids, no weights
  int checkpoint_from = 1000;   // first persisted weight checkpoint
  int checkpoint_every = 100;
  int monitor_grid = 4;         // monitor image is grid x grid tiles
  bool stable_variant = false;  // batch norm in the first two upsampling
                                // stages + pooled discriminator head

  int seed_side() const { return image_side >> stages; }
  int seed_channels() const { return base_filters << (stages - 1); }
  void validate() const;  // SpecError when the arithmetic does not close
  std::string canonical_json() const;
  std::uint64_t digest() const;
};

DcganSpec full_dcgan_spec();
// Small closure (side 32 = 4 * 2^3) that trains in seconds; used by tests.
DcganSpec reduced_dcgan_spec();

struct DcganStepLosses {
  double discriminator = 0.0;
  double generator = 0.0;
};

// The adversarial pair.  Both graphs end at logits; `generate` applies the
// output squash and `discriminate` the sigmoid.
class Dcgan {
 public:
  Dcgan(DcganSpec spec, std::uint64_t init_seed);

  const DcganSpec& spec() const { return spec_; }
  nn::Graph& generator() { return gen_; }
  nn::Graph& discriminator() { return disc_; }

  nn::Tensor make_noise(int batch, Rng& rng) const;
  nn::Tensor generate(const nn::Tensor& noise);             // (N, S, S, C) in [-1,1]
  nn::Tensor discriminate_logits(const nn::Tensor& images);
  nn::Tensor discriminate(const nn::Tensor& images);        // (N, 1) in (0,1)

  // One alternating update.  The discriminator trains on the concatenation of
  // `real` and as many generated images; the generator then trains through the
  // frozen discriminator.  Each returns the minimized loss.
  double discriminator_step(const nn::Tensor& real, Rng& rng, nn::Adam& opt);
  double generator_step(int batch, Rng& rng, nn::Adam& opt);

 private:
  DcganSpec spec_;
  nn::Graph gen_;
  nn::Graph disc_;
};

struct DcganCheckpointInfo {
  std::filesystem::path path;
  int epoch = 0;
  EmotionLabel emotion = EmotionLabel::kNeutral;
};

struct DcganCheckpoint {
  DcganSpec spec;
  int epoch = 0;
  EmotionLabel emotion = EmotionLabel::kNeutral;
  std::uint64_t spec_hash = 0;
  nn::WeightArchive generator_weights;
  nn::WeightArchive discriminator_weights;
};

void save_checkpoint(const std::filesystem::path& path, Dcgan& model, int epoch,
                     EmotionLabel emotion);
DcganCheckpoint load_checkpoint(const std::filesystem::path& path);
// Rebuilds the pair from the checkpoint's own spec and restores all weights.
Dcgan restore_dcgan(const DcganCheckpoint& checkpoint);

struct DcganTrainOptions {
  EmotionLabel emotion = EmotionLabel::kNeutral;
  int epochs = 2000;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;  // receives monitor/ and checkpoints/
  // Off: inputs must already match spec.image_side (IncompatibilityError
  // otherwise). On: bilinear-resize them, for running reduced geometries
  // against full-size processed images.
  bool resize_inputs = false;
};

struct DcganTrainResult {
  std::vector<DcganCheckpointInfo> checkpoints;
  DcganStepLosses first_step;  // losses of the very first update, for
                               // determinism checks
  DcganStepLosses last_epoch;  // mean losses over the final epoch
};

// Trains one emotion's pair on the given manifest (images are read via
// `manifest_dir` resolution, normalized to [-1,1]).  Persists monitoring grids
// and checkpoints per the schedule in `spec`.
DcganTrainResult train_dcgan(const DatasetManifest& group,
                             const std::filesystem::path& manifest_dir,
                             const DcganSpec& spec, const DcganTrainOptions& options);

// Samples `count` images from a checkpoint into out_dir and returns their
// manifest (source GAN_Q, labeled with the checkpoint's emotion).
DatasetManifest sample_dcgan(const std::filesystem::path& checkpoint_path, int count,
                             std::uint64_t seed, const std::filesystem::path& out_dir);

}  // namespace fer
