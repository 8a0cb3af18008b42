#include "fer/dcgan.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <memory>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>

#include "fer/errors.hpp"
#include "fer/image.hpp"
#include "fer/logging.hpp"
#include "fer/normalize.hpp"

namespace fer {

namespace {

using nlohmann::json;
using nn::Activation;
using nn::Padding;
using nn::Tensor;

constexpr char kCheckpointMagic[] = "FERCKPT1\n";

std::string two_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

void DcganSpec::validate() const {
  if (latent_dim <= 0 || image_side <= 0 || stages <= 0 || base_filters <= 0 ||
      stem_kernel <= 0 || stride_kernel <= 0 || batch_size <= 0 ||
      monitor_every <= 0 || checkpoint_every <= 0 || checkpoint_from <= 0 ||
      monitor_grid <= 0) {
    throw SpecError("adversarial spec fields must be positive");
  }
  if (channels != 3) {
    throw SpecError("adversarial spec requires 3-channel images");
  }
  if (leaky_slope <= 0.0f || leaky_slope >= 1.0f) {
    throw SpecError("leaky slope must lie in (0, 1)");
  }
  if (learning_rate <= 0.0f || beta1 < 0.0f || beta1 >= 1.0f) {
    throw SpecError("invalid optimizer schedule");
  }
  if ((seed_side() << stages) != image_side || seed_side() < 1) {
    throw SpecError("generator spatial arithmetic does not close: " +
                    std::to_string(image_side) + " is not (side/2^" +
                    std::to_string(stages) + ") * 2^" + std::to_string(stages));
  }
  if (base_filters % 2 != 0) {
    throw SpecError("base filter count must be even (final stage halves it)");
  }
}

std::string DcganSpec::canonical_json() const {
  json j;
  j["latent_dim"] = latent_dim;
  j["image_side"] = image_side;
  j["channels"] = channels;
  j["stages"] = stages;
  j["base_filters"] = base_filters;
  j["stem_kernel"] = stem_kernel;
  j["stride_kernel"] = stride_kernel;
  j["leaky_slope"] = leaky_slope;
  j["learning_rate"] = learning_rate;
  j["beta1"] = beta1;
  j["batch_size"] = batch_size;
  j["monitor_every"] = monitor_every;
  j["checkpoint_from"] = checkpoint_from;
  j["checkpoint_every"] = checkpoint_every;
  j["monitor_grid"] = monitor_grid;
  j["stable_variant"] = stable_variant;
  return j.dump();
}

std::uint64_t DcganSpec::digest() const { return fnv1a64(canonical_json()); }

DcganSpec full_dcgan_spec() { return DcganSpec{}; }

DcganSpec reduced_dcgan_spec() {
  DcganSpec spec;
  spec.latent_dim = 16;
  spec.image_side = 32;
  spec.stages = 3;
  spec.base_filters = 8;
  spec.batch_size = 8;
  spec.monitor_grid = 2;
  return spec;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

nn::Graph build_generator(const DcganSpec& spec, std::uint64_t init_seed) {
  spec.validate();
  nn::Graph g("generator", init_seed);
  const int side = spec.seed_side();
  const int ch = spec.seed_channels();
  g.add_input("noise");
  g.add(std::make_unique<nn::DenseLayer>("gen_dense", side * side * ch,
                                         Activation::kLeakyRelu, true,
                                         spec.leaky_slope));
  g.add(std::make_unique<nn::ReshapeLayer>("gen_reshape",
                                           std::vector<int>{side, side, ch}));
  std::string prev = "gen_reshape";
  for (int i = 1; i <= spec.stages; ++i) {
    const int filters = std::max(ch >> i, 1);
    const std::string name = "gen_up" + std::to_string(i);
    const bool with_bn = spec.stable_variant && i <= 2;
    if (with_bn) {
      g.add(std::make_unique<nn::Conv2DTransposeLayer>(
                name, filters, spec.stride_kernel, spec.stride_kernel, 2, 2,
                Padding::kSame, Activation::kLinear, true, spec.leaky_slope),
            {prev});
      g.add(std::make_unique<nn::BatchNormLayer>(name + "_bn"), {name});
      g.add(std::make_unique<nn::ActivationLayer>(name + "_act",
                                                  Activation::kLeakyRelu,
                                                  spec.leaky_slope),
            {name + "_bn"});
      prev = name + "_act";
    } else {
      g.add(std::make_unique<nn::Conv2DTransposeLayer>(
                name, filters, spec.stride_kernel, spec.stride_kernel, 2, 2,
                Padding::kSame, Activation::kLeakyRelu, true, spec.leaky_slope),
            {prev});
      prev = name;
    }
  }
  g.add(std::make_unique<nn::Conv2DLayer>("gen_rgb", spec.channels, spec.stem_kernel,
                                          spec.stem_kernel, 1, 1, Padding::kSame,
                                          Activation::kTanh, true),
        {prev});
  return g;
}

nn::Graph build_discriminator(const DcganSpec& spec, std::uint64_t init_seed) {
  spec.validate();
  nn::Graph g("discriminator", init_seed);
  g.add_input("image");
  g.add(std::make_unique<nn::Conv2DLayer>("disc_stem", spec.base_filters,
                                          spec.stem_kernel, spec.stem_kernel, 1, 1,
                                          Padding::kSame, Activation::kLeakyRelu, true,
                                          spec.leaky_slope));
  for (int i = 0; i < spec.stages; ++i) {
    g.add(std::make_unique<nn::Conv2DLayer>(
        "disc_down" + std::to_string(i + 1), spec.base_filters << i,
        spec.stride_kernel, spec.stride_kernel, 2, 2, Padding::kSame,
        Activation::kLeakyRelu, true, spec.leaky_slope));
  }
  if (spec.stable_variant) {
    g.add(std::make_unique<nn::GlobalAvgPoolLayer>("disc_pool"));
  } else {
    g.add(std::make_unique<nn::FlattenLayer>("disc_flatten"));
  }
  g.add(std::make_unique<nn::DenseLayer>("disc_out", 1, Activation::kLinear));
  return g;
}

}  // namespace

Dcgan::Dcgan(DcganSpec spec, std::uint64_t init_seed)
    : spec_(std::move(spec)),
      gen_(build_generator(spec_, derive_seed(init_seed, "generator", 0))),
      disc_(build_discriminator(spec_, derive_seed(init_seed, "discriminator", 0))) {
  spec_.validate();
  gen_.build({1, spec_.latent_dim});
  disc_.build({1, spec_.image_side, spec_.image_side, spec_.channels});
}

nn::Tensor Dcgan::make_noise(int batch, Rng& rng) const {
  Tensor noise({batch, spec_.latent_dim});
  for (float& v : noise.data) v = static_cast<float>(rng.next_gaussian());
  return noise;
}

nn::Tensor Dcgan::generate(const nn::Tensor& noise) {
  return gen_.forward(noise, false);
}

nn::Tensor Dcgan::discriminate_logits(const nn::Tensor& images) {
  if (images.ndim() != 4 || images.shape[1] != spec_.image_side ||
      images.shape[2] != spec_.image_side || images.shape[3] != spec_.channels) {
    throw RangeError("discriminator input shape " + images.shape_str() +
                     " does not match spec side " + std::to_string(spec_.image_side));
  }
  return disc_.forward(images, false);
}

nn::Tensor Dcgan::discriminate(const nn::Tensor& images) {
  Tensor logits = discriminate_logits(images);
  nn::apply_activation(Activation::kSigmoid, 0.0f, logits.data.data(), logits.numel());
  return logits;
}

double Dcgan::discriminator_step(const nn::Tensor& real, Rng& rng, nn::Adam& opt) {
  const int n_real = real.shape[0];
  Tensor noise = make_noise(n_real, rng);
  // The generator is frozen for this step: inference forward, no updates, so
  // its weights and statistics stay bit-identical.
  Tensor fake = gen_.forward(noise, false);
  Tensor batch({n_real * 2, spec_.image_side, spec_.image_side, spec_.channels});
  const std::size_t half = real.data.size();
  std::memcpy(batch.data.data(), real.data.data(), half * sizeof(float));
  std::memcpy(batch.data.data() + half, fake.data.data(), half * sizeof(float));
  Tensor labels({n_real * 2, 1});
  for (int i = 0; i < n_real; ++i) labels.data[static_cast<std::size_t>(i)] = 1.0f;
  Tensor logits = disc_.forward(batch, true);
  nn::LossResult loss = nn::sigmoid_binary_cross_entropy(logits, labels);
  if (!std::isfinite(loss.value)) {
    throw TrainingError("training aborted: non-finite discriminator loss");
  }
  disc_.backward(loss.dlogits);
  opt.step(disc_.trainable_params());
  return loss.value;
}

double Dcgan::generator_step(int batch, Rng& rng, nn::Adam& opt) {
  Tensor noise = make_noise(batch, rng);
  Tensor fake = gen_.forward(noise, true);
  // Frozen discriminator: inference forward; gradients flow through it but its
  // parameters are not stepped.
  Tensor logits = disc_.forward(fake, false);
  Tensor labels({batch, 1});
  std::fill(labels.data.begin(), labels.data.end(), 1.0f);
  nn::LossResult loss = nn::sigmoid_binary_cross_entropy(logits, labels);
  if (!std::isfinite(loss.value)) {
    throw TrainingError("training aborted: non-finite generator loss");
  }
  Tensor dimages = disc_.backward(loss.dlogits);
  gen_.backward(dimages);
  opt.step(gen_.trainable_params());
  return loss.value;
}

// ---------------------------------------------------------------------------
// Checkpoints

void save_checkpoint(const std::filesystem::path& path, Dcgan& model, int epoch,
                     EmotionLabel emotion) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IngestionError("cannot open checkpoint for writing: " + path.string());
  os.write(kCheckpointMagic, static_cast<std::streamsize>(std::strlen(kCheckpointMagic)));
  json header;
  header["spec"] = json::parse(model.spec().canonical_json());
  header["spec_hash"] = two_hex(model.spec().digest());
  header["epoch"] = epoch;
  header["emotion"] = emotion_name(emotion);
  const std::string head = header.dump();
  const std::uint32_t len = static_cast<std::uint32_t>(head.size());
  os.write(reinterpret_cast<const char*>(&len), sizeof(len));
  os.write(head.data(), static_cast<std::streamsize>(head.size()));
  std::vector<std::pair<std::string, const Tensor*>> gen_entries, disc_entries;
  for (const auto& p : model.generator().params()) gen_entries.emplace_back(p.name, p.value);
  for (const auto& p : model.discriminator().params()) disc_entries.emplace_back(p.name, p.value);
  nn::save_weights_stream(os, gen_entries);
  nn::save_weights_stream(os, disc_entries);
  if (!os) throw IngestionError("failed writing checkpoint: " + path.string());
}

namespace {

DcganSpec spec_from_json(const json& j) {
  DcganSpec spec;
  spec.latent_dim = j.at("latent_dim");
  spec.image_side = j.at("image_side");
  spec.channels = j.at("channels");
  spec.stages = j.at("stages");
  spec.base_filters = j.at("base_filters");
  spec.stem_kernel = j.at("stem_kernel");
  spec.stride_kernel = j.at("stride_kernel");
  spec.leaky_slope = j.at("leaky_slope");
  spec.learning_rate = j.at("learning_rate");
  spec.beta1 = j.at("beta1");
  spec.batch_size = j.at("batch_size");
  spec.monitor_every = j.at("monitor_every");
  spec.checkpoint_from = j.at("checkpoint_from");
  spec.checkpoint_every = j.at("checkpoint_every");
  spec.monitor_grid = j.at("monitor_grid");
  spec.stable_variant = j.at("stable_variant");
  return spec;
}

}  // namespace

DcganCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IngestionError("cannot open checkpoint: " + path.string());
  char magic[sizeof(kCheckpointMagic)] = {};
  const std::size_t magic_len = std::strlen(kCheckpointMagic);
  if (!is.read(magic, static_cast<std::streamsize>(magic_len)) ||
      std::memcmp(magic, kCheckpointMagic, magic_len) != 0) {
    throw IncompatibilityError("not a checkpoint file: " + path.string());
  }
  std::uint32_t len = 0;
  if (!is.read(reinterpret_cast<char*>(&len), sizeof(len))) {
    throw IncompatibilityError("checkpoint truncated: " + path.string());
  }
  std::string head(len, '\0');
  if (!is.read(head.data(), static_cast<std::streamsize>(len))) {
    throw IncompatibilityError("checkpoint truncated: " + path.string());
  }
  json header;
  try {
    header = json::parse(head);
  } catch (const json::exception&) {
    throw IncompatibilityError("checkpoint header is not valid JSON: " + path.string());
  }
  DcganCheckpoint out;
  out.spec = spec_from_json(header.at("spec"));
  out.epoch = header.at("epoch");
  const std::string emo = header.at("emotion");
  const auto parsed = try_parse_emotion(emo);
  if (!parsed) throw IncompatibilityError("checkpoint has unknown emotion: " + emo);
  out.emotion = *parsed;
  const std::string stored_hash = header.at("spec_hash");
  out.spec_hash = std::stoull(stored_hash, nullptr, 16);
  if (out.spec_hash != out.spec.digest()) {
    throw IncompatibilityError("checkpoint spec hash mismatch: " + path.string());
  }
  out.generator_weights = nn::load_weights_stream(is);
  out.discriminator_weights = nn::load_weights_stream(is);
  return out;
}

Dcgan restore_dcgan(const DcganCheckpoint& checkpoint) {
  Dcgan model(checkpoint.spec, 0);
  nn::load_graph_weights(model.generator(), checkpoint.generator_weights);
  nn::load_graph_weights(model.discriminator(), checkpoint.discriminator_weights);
  return model;
}

// ---------------------------------------------------------------------------
// Training

namespace {

Image tile_grid(const std::vector<Image>& tiles, int grid) {
  const int side = tiles.empty() ? 1 : tiles[0].height;
  Image out;
  out.height = grid * side;
  out.width = grid * side;
  out.channels = kStandardChannels;
  out.data.assign(static_cast<std::size_t>(out.height) * out.width * out.channels, 0.0f);
  for (int t = 0; t < static_cast<int>(tiles.size()) && t < grid * grid; ++t) {
    const Image& tile = tiles[static_cast<std::size_t>(t)];
    const int oy = (t / grid) * side;
    const int ox = (t % grid) * side;
    for (int y = 0; y < tile.height; ++y) {
      for (int x = 0; x < tile.width; ++x) {
        for (int c = 0; c < tile.channels; ++c) {
          out.at(oy + y, ox + x, c) = tile.at(y, x, c);
        }
      }
    }
  }
  return out;
}

std::vector<Image> tensor_to_images(const Tensor& batch) {
  std::vector<Image> out;
  const int n = batch.shape[0];
  const std::int64_t per = batch.numel() / n;
  for (int i = 0; i < n; ++i) {
    Tensor one({batch.shape[1], batch.shape[2], batch.shape[3]});
    std::copy_n(batch.data.begin() + static_cast<std::int64_t>(i) * per, per,
                one.data.begin());
    out.push_back(denormalize_symmetric(one));
  }
  return out;
}

}  // namespace

DcganTrainResult train_dcgan(const DatasetManifest& group,
                             const std::filesystem::path& manifest_dir,
                             const DcganSpec& spec, const DcganTrainOptions& options) {
  spec.validate();
  if (group.empty()) {
    throw ConfigurationError("adversarial training group is empty");
  }
  if (options.epochs <= 0) throw ConfigurationError("epochs must be positive");

  // Load and normalize the whole group once; groups are small by design.
  std::vector<Tensor> reals;
  reals.reserve(group.records.size());
  for (const auto& rec : group.records) {
    Image img = read_image(resolve_record_path(rec.path, manifest_dir));
    if (img.height != spec.image_side || img.width != spec.image_side) {
      if (!options.resize_inputs) {
        throw IncompatibilityError("record " + rec.id + " is " +
                                   std::to_string(img.height) + "x" +
                                   std::to_string(img.width) + ", spec wants " +
                                   std::to_string(spec.image_side));
      }
      img = resize_bilinear(img, spec.image_side, spec.image_side);
    }
    reals.push_back(normalize(img, NormalizationScheme::kSymmetricUnit));
  }

  Dcgan model(spec, derive_seed(options.seed, "dcgan_init", 0));
  nn::Adam::Config opt_cfg;
  opt_cfg.lr = spec.learning_rate;
  opt_cfg.beta1 = spec.beta1;
  nn::Adam d_opt(opt_cfg), g_opt(opt_cfg);

  Rng shuffle_rng(derive_seed(options.seed, "dcgan_shuffle", 0));
  Rng noise_rng(derive_seed(options.seed, "dcgan_noise", 0));
  Rng monitor_rng(derive_seed(options.seed, "dcgan_monitor", 0));
  const Tensor monitor_noise =
      model.make_noise(spec.monitor_grid * spec.monitor_grid, monitor_rng);

  DcganTrainResult result;
  std::vector<int> order(reals.size());
  std::iota(order.begin(), order.end(), 0);
  bool first_step_done = false;

  for (int epoch = 1; epoch <= options.epochs; ++epoch) {
    // Fisher-Yates on the deterministic stream.
    for (std::size_t i = order.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(shuffle_rng.next_below(i));
      std::swap(order[i - 1], order[j]);
    }
    double d_sum = 0.0, g_sum = 0.0;
    int steps = 0;
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(spec.batch_size)) {
      const int n = static_cast<int>(
          std::min<std::size_t>(spec.batch_size, order.size() - start));
      Tensor real({n, spec.image_side, spec.image_side, spec.channels});
      const std::int64_t per = real.numel() / n;
      for (int i = 0; i < n; ++i) {
        const Tensor& src = reals[static_cast<std::size_t>(order[start + static_cast<std::size_t>(i)])];
        std::copy_n(src.data.begin(), per, real.data.begin() + i * per);
      }
      const double d_loss = model.discriminator_step(real, noise_rng, d_opt);
      const double g_loss = model.generator_step(n, noise_rng, g_opt);
      if (!first_step_done) {
        result.first_step = {d_loss, g_loss};
        first_step_done = true;
      }
      d_sum += d_loss;
      g_sum += g_loss;
      ++steps;
    }
    result.last_epoch = {d_sum / steps, g_sum / steps};
    logs::event("gan", "epoch",
                {logs::str("emotion", std::string(emotion_name(options.emotion))),
                 logs::num("epoch", epoch), logs::real("d_loss", d_sum / steps),
                 logs::real("g_loss", g_sum / steps)});

    if (!options.out_dir.empty() && epoch % spec.monitor_every == 0) {
      Tensor grid_batch = model.generate(monitor_noise);
      const Image grid = tile_grid(tensor_to_images(grid_batch), spec.monitor_grid);
      write_image(grid, options.out_dir / "monitor" /
                            ("epoch_" + std::to_string(epoch) + ".png"));
    }
    if (!options.out_dir.empty() && epoch >= spec.checkpoint_from &&
        (epoch - spec.checkpoint_from) % spec.checkpoint_every == 0) {
      const auto path = options.out_dir / "checkpoints" /
                        ("epoch_" + std::to_string(epoch) + ".ckpt");
      save_checkpoint(path, model, epoch, options.emotion);
      result.checkpoints.push_back({path, epoch, options.emotion});
    }
  }
  logs::event("gan", "done",
              {logs::str("emotion", std::string(emotion_name(options.emotion))),
               logs::num("epochs", options.epochs),
               logs::num("checkpoints", static_cast<std::int64_t>(result.checkpoints.size()))});
  return result;
}

DatasetManifest sample_dcgan(const std::filesystem::path& checkpoint_path, int count,
                             std::uint64_t seed, const std::filesystem::path& out_dir) {
  if (count < 0) throw RangeError("sample count must be non-negative");
  const DcganCheckpoint ckpt = load_checkpoint(checkpoint_path);
  Dcgan model = restore_dcgan(ckpt);
  const std::string emo(emotion_name(ckpt.emotion));
  Rng rng(derive_seed(seed, "dcgan_sample", static_cast<std::uint64_t>(emotion_index(ckpt.emotion))));

  DatasetManifest manifest;
  manifest.name = "gan_q_" + emo;
  const int batch = std::max(1, model.spec().batch_size);
  int produced = 0;
  while (produced < count) {
    const int n = std::min(batch, count - produced);
    Tensor noise = model.make_noise(n, rng);
    Tensor images = model.generate(noise);
    for (Image& img : tensor_to_images(images)) {
      const std::string id = "gan_q_" + emo + "_" + std::to_string(produced);
      const auto path = out_dir / (id + ".png");
      write_image(img, path);
      ImageRecord rec;
      rec.id = id;
      rec.path = path.string();
      rec.label = ckpt.emotion;
      rec.source = Source::kGanQ;
      manifest.records.push_back(std::move(rec));
      ++produced;
      if (produced >= count) break;
    }
  }
  manifest.recount();
  manifest.validate();
  logs::event("gan", "sampled",
              {logs::str("emotion", emo), logs::num("count", count),
               logs::str("checkpoint", checkpoint_path.string())});
  return manifest;
}

}  // namespace fer
