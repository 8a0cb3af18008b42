#include <cmath>
#include <filesystem>
#include <set>

#include "doctest.h"
#include "fer/dcgan.hpp"
#include "fer/errors.hpp"
#include "fer/image.hpp"
#include "test_util.hpp"

using namespace fer;

namespace {

// Tiny on-disk corpus at the requested side; contents just need to vary.
DatasetManifest small_corpus(const std::filesystem::path& dir, int count,
                             int side) {
  std::filesystem::create_directories(dir);
  DatasetManifest m;
  m.name = "gan_group";
  for (int i = 0; i < count; ++i) {
    ImageRecord rec;
    rec.id = "g" + std::to_string(i);
    rec.path = rec.id + ".png";
    rec.label = EmotionLabel::kHappy;
    rec.source = Source::kFixture;
    write_image(test::random_image(side, side, 3, std::uint64_t(i) + 1),
                dir / rec.path);
    m.records.push_back(std::move(rec));
  }
  m.recount();
  return m;
}

}  // namespace

TEST_CASE("spec arithmetic closes for both reference geometries") {
  DcganSpec full = full_dcgan_spec();
  CHECK(full.latent_dim == 100);
  CHECK(full.image_side == 224);
  CHECK(full.stages == 5);
  CHECK(full.seed_side() == 7);
  CHECK(full.seed_channels() == 512);
  CHECK(full.checkpoint_from == 1000);
  CHECK(full.checkpoint_every == 100);
  CHECK(full.monitor_every == 100);
  CHECK_NOTHROW(full.validate());

  DcganSpec reduced = reduced_dcgan_spec();
  CHECK(reduced.image_side == 32);
  CHECK(reduced.seed_side() == 4);
  CHECK(reduced.seed_side() << reduced.stages == reduced.image_side);
  CHECK_NOTHROW(reduced.validate());

  DcganSpec broken = full;
  broken.image_side = 30;
  CHECK_THROWS_AS(broken.validate(), SpecError);
  broken = full;
  broken.latent_dim = 0;
  CHECK_THROWS_AS(broken.validate(), SpecError);
  broken = full;
  broken.leaky_slope = 1.5f;
  CHECK_THROWS_AS(broken.validate(), SpecError);
}

TEST_CASE("spec digests track content") {
  DcganSpec a = reduced_dcgan_spec();
  DcganSpec b = reduced_dcgan_spec();
  CHECK(a.digest() == b.digest());
  CHECK(a.canonical_json() == b.canonical_json());
  b.base_filters *= 2;
  CHECK(a.digest() != b.digest());
}

TEST_CASE("generator and discriminator close over shapes and ranges") {
  DcganSpec spec = reduced_dcgan_spec();
  Dcgan gan(spec, 11);
  Rng rng(4);
  nn::Tensor z = gan.make_noise(3, rng);
  REQUIRE(z.shape == std::vector<int>{3, spec.latent_dim});

  nn::Tensor imgs = gan.generate(z);
  REQUIRE(imgs.shape == std::vector<int>{3, 32, 32, 3});
  for (float v : imgs.data) {
    CHECK(v >= -1.0f);
    CHECK(v <= 1.0f);
  }

  nn::Tensor p = gan.discriminate(imgs);
  REQUIRE(p.shape == std::vector<int>{3, 1});
  for (float v : p.data) {
    CHECK(v > 0.0f);
    CHECK(v < 1.0f);
  }
}

TEST_CASE("noise draws are deterministic per seed") {
  DcganSpec spec = reduced_dcgan_spec();
  Dcgan gan(spec, 11);
  Rng r1(9), r2(9), r3(10);
  CHECK(gan.make_noise(2, r1).data == gan.make_noise(2, r2).data);
  CHECK(gan.make_noise(2, r1).data != gan.make_noise(2, r3).data);
}

TEST_CASE("adversarial training honors the checkpoint policy bit-for-bit") {
  test::TempDir tmp("fer_gan");
  DcganSpec spec = reduced_dcgan_spec();
  spec.monitor_every = 5;
  spec.checkpoint_from = 12;
  spec.checkpoint_every = 4;

  DatasetManifest group = small_corpus(tmp / "imgs", 8, spec.image_side);

  DcganTrainOptions opt;
  opt.emotion = EmotionLabel::kHappy;
  opt.epochs = 20;
  opt.seed = 31;
  opt.out_dir = tmp / "runA";
  DcganTrainResult a = train_dcgan(group, tmp / "imgs", spec, opt);

  CHECK(std::isfinite(a.first_step.discriminator));
  CHECK(std::isfinite(a.first_step.generator));
  CHECK(std::isfinite(a.last_epoch.discriminator));
  CHECK(std::isfinite(a.last_epoch.generator));

  // Weight checkpoints only from the threshold epoch onward.
  std::set<int> epochs;
  for (const auto& info : a.checkpoints) {
    epochs.insert(info.epoch);
    CHECK(info.emotion == EmotionLabel::kHappy);
    CHECK(std::filesystem::exists(info.path));
  }
  CHECK(epochs == std::set<int>{12, 16, 20});
  CHECK_FALSE(std::filesystem::exists(tmp / "runA" / "checkpoints" /
                                      "epoch_8.ckpt"));
  for (int e : {5, 10, 15, 20}) {
    CHECK(std::filesystem::exists(tmp / "runA" / "monitor" /
                                  ("epoch_" + std::to_string(e) + ".png")));
  }
  CHECK_FALSE(std::filesystem::exists(tmp / "runA" / "monitor" / "epoch_4.png"));

  // Same seed, same data: identical first step and identical weights on disk.
  DcganTrainOptions opt_b = opt;
  opt_b.out_dir = tmp / "runB";
  DcganTrainResult b = train_dcgan(group, tmp / "imgs", spec, opt_b);
  CHECK(a.first_step.discriminator == b.first_step.discriminator);
  CHECK(a.first_step.generator == b.first_step.generator);
  CHECK(test::same_bytes(tmp / "runA" / "checkpoints" / "epoch_20.ckpt",
                         tmp / "runB" / "checkpoints" / "epoch_20.ckpt"));

  // A different seed must not replay the same run.
  DcganTrainOptions opt_c = opt;
  opt_c.seed = 32;
  opt_c.out_dir = tmp / "runC";
  DcganTrainResult c = train_dcgan(group, tmp / "imgs", spec, opt_c);
  CHECK(a.first_step.discriminator != c.first_step.discriminator);

  // Restoring a checkpoint reproduces the archived generator exactly.
  DcganCheckpoint ck = load_checkpoint(tmp / "runA" / "checkpoints" /
                                       "epoch_20.ckpt");
  CHECK(ck.epoch == 20);
  CHECK(ck.emotion == EmotionLabel::kHappy);
  CHECK(ck.spec.digest() == spec.digest());
  Dcgan r1 = restore_dcgan(ck);
  Dcgan r2 = restore_dcgan(ck);
  Rng noise(77);
  nn::Tensor z = r1.make_noise(2, noise);
  CHECK(r1.generate(z).data == r2.generate(z).data);
}

TEST_CASE("inputs of the wrong size are rejected unless resizing is on") {
  test::TempDir tmp("fer_gan");
  DcganSpec spec = reduced_dcgan_spec();
  DatasetManifest big = small_corpus(tmp / "imgs", 8, 64);

  DcganTrainOptions opt;
  opt.emotion = EmotionLabel::kSad;
  opt.epochs = 1;
  opt.out_dir = tmp / "out";
  CHECK_THROWS_AS(train_dcgan(big, tmp / "imgs", spec, opt),
                  IncompatibilityError);

  opt.resize_inputs = true;
  DcganTrainResult r = train_dcgan(big, tmp / "imgs", spec, opt);
  CHECK(std::isfinite(r.first_step.discriminator));
}

TEST_CASE("sampling a checkpoint yields a labeled deterministic manifest") {
  test::TempDir tmp("fer_gansample");
  DcganSpec spec = reduced_dcgan_spec();
  spec.checkpoint_from = 2;
  spec.checkpoint_every = 1;
  DatasetManifest group = small_corpus(tmp / "imgs", 8, spec.image_side);

  DcganTrainOptions opt;
  opt.emotion = EmotionLabel::kSurprise;
  opt.epochs = 2;
  opt.seed = 5;
  opt.out_dir = tmp / "train";
  train_dcgan(group, tmp / "imgs", spec, opt);
  const auto ckpt = tmp / "train" / "checkpoints" / "epoch_2.ckpt";
  REQUIRE(std::filesystem::exists(ckpt));

  DatasetManifest s1 = sample_dcgan(ckpt, 6, 100, tmp / "genA");
  CHECK(s1.name == "gan_q_surprise");
  CHECK(s1.size() == 6);
  CHECK(s1.count(EmotionLabel::kSurprise) == 6);
  for (const auto& rec : s1.records) {
    CHECK(rec.source == Source::kGanQ);
    Image img = read_image(tmp / "genA" / rec.path);
    CHECK(img.height == spec.image_side);
    CHECK(img.width == spec.image_side);
  }

  DatasetManifest s2 = sample_dcgan(ckpt, 6, 100, tmp / "genB");
  for (const auto& rec : s1.records) {
    CHECK(test::same_bytes(tmp / "genA" / rec.path, tmp / "genB" / rec.path));
  }
  DatasetManifest s3 = sample_dcgan(ckpt, 6, 101, tmp / "genC");
  bool differs = false;
  for (const auto& rec : s3.records) {
    if (!test::same_bytes(tmp / "genA" / rec.path, tmp / "genC" / rec.path)) {
      differs = true;
      break;
    }
  }
  CHECK(differs);
}

TEST_CASE("sampling refuses junk checkpoints") {
  test::TempDir tmp("fer_gansample");
  std::ofstream(tmp / "junk.ckpt") << "zzz";
  CHECK_THROWS_AS(sample_dcgan(tmp / "junk.ckpt", 2, 1, tmp / "out"),
                  IncompatibilityError);
}

TEST_CASE("training an empty group is a configuration error") {
  test::TempDir tmp("fer_gan");
  DatasetManifest empty;
  empty.name = "none";
  empty.recount();
  DcganTrainOptions opt;
  opt.epochs = 1;
  CHECK_THROWS_AS(train_dcgan(empty, tmp.path(), reduced_dcgan_spec(), opt),
                  ConfigurationError);
}
