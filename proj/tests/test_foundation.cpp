#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "fer/emotion.hpp"
#include "fer/errors.hpp"
#include "fer/image.hpp"
#include "fer/logging.hpp"
#include "fer/manifest.hpp"
#include "fer/normalize.hpp"
#include "fer/rng.hpp"
#include "test_util.hpp"

using namespace fer;

TEST_CASE("emotion indices are alphabetical and stable") {
  CHECK(emotion_index(EmotionLabel::kAngry) == 0);
  CHECK(emotion_index(EmotionLabel::kDisgust) == 1);
  CHECK(emotion_index(EmotionLabel::kFear) == 2);
  CHECK(emotion_index(EmotionLabel::kHappy) == 3);
  CHECK(emotion_index(EmotionLabel::kNeutral) == 4);
  CHECK(emotion_index(EmotionLabel::kSad) == 5);
  CHECK(emotion_index(EmotionLabel::kSurprise) == 6);
  CHECK(kNumEmotions == 7);
  for (int i = 0; i < kNumEmotions; ++i) {
    CHECK(emotion_index(kAllEmotions[static_cast<std::size_t>(i)]) == i);
  }
}

TEST_CASE("emotion names round-trip through the parser") {
  for (EmotionLabel label : kAllEmotions) {
    auto parsed = try_parse_emotion(emotion_name(label));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == label);
  }
}

TEST_CASE("emotion parser accepts variants and rejects junk") {
  CHECK(try_parse_emotion("Afraid") == EmotionLabel::kFear);
  CHECK(try_parse_emotion("SURPRISED") == EmotionLabel::kSurprise);
  CHECK(try_parse_emotion("happiness") == EmotionLabel::kHappy);
  CHECK(try_parse_emotion("AF") == EmotionLabel::kFear);
  CHECK(try_parse_emotion("AN") == EmotionLabel::kAngry);
  CHECK(try_parse_emotion("DI") == EmotionLabel::kDisgust);
  CHECK(try_parse_emotion("HA") == EmotionLabel::kHappy);
  CHECK(try_parse_emotion("NE") == EmotionLabel::kNeutral);
  CHECK(try_parse_emotion("SA") == EmotionLabel::kSad);
  CHECK(try_parse_emotion("SU") == EmotionLabel::kSurprise);
  CHECK_FALSE(try_parse_emotion("contempt").has_value());
  CHECK_FALSE(try_parse_emotion("").has_value());
  CHECK_FALSE(try_parse_emotion("smirk").has_value());
  CHECK(is_contempt_label("Contempt"));
  CHECK_FALSE(is_contempt_label("sad"));
}

TEST_CASE("source names parse back, including the CKPLUS alias") {
  for (int i = 0; i <= static_cast<int>(Source::kFixture); ++i) {
    Source s = static_cast<Source>(i);
    auto parsed = try_parse_source(source_name(s));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == s);
  }
  CHECK(try_parse_source("ckplus") == Source::kCkPlus);
  CHECK(try_parse_source("CK+") == Source::kCkPlus);
  CHECK_FALSE(try_parse_source("imagenet").has_value());
}

TEST_CASE("rng matches the splitmix64 reference sequence") {
  Rng r0(0);
  CHECK(r0.next_u64() == 0xE220A8397B1DCDAFull);
  CHECK(r0.next_u64() == 0x6E789E6AA1B965F4ull);
  CHECK(r0.next_u64() == 0x06C45D188009454Full);
  Rng r42(42);
  CHECK(r42.next_u64() == 0xBDD732262FEB6E95ull);
}

TEST_CASE("rng uniform draws stay inside their interval") {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    double v = rng.uniform(-0.25, 0.25);
    CHECK(v >= -0.25);
    CHECK(v < 0.25);
  }
  CHECK(rng.uniform(3.5, 3.5) == 3.5);
  for (int i = 0; i < 200; ++i) CHECK(rng.next_below(13) < 13);
}

TEST_CASE("fnv1a64 matches the published test vectors") {
  CHECK(fnv1a64("") == 0xCBF29CE484222325ull);
  CHECK(fnv1a64("abc") == 0xE71FA2190541574Bull);
}

TEST_CASE("derive_seed is pure and separates keys and indices") {
  CHECK(derive_seed(1, "aug", 0) == derive_seed(1, "aug", 0));
  CHECK(derive_seed(1, "aug", 0) != derive_seed(1, "aug", 1));
  CHECK(derive_seed(1, "aug", 0) != derive_seed(1, "gan", 0));
  CHECK(derive_seed(1, "aug", 0) != derive_seed(2, "aug", 0));
}

TEST_CASE("png write/read round-trips integer pixel values") {
  test::TempDir tmp("fer_img");
  Image img = test::random_image(17, 23, 3, 5);
  write_image(img, tmp / "a.png");
  Image back = read_image(tmp / "a.png");
  REQUIRE(back.height == 17);
  REQUIRE(back.width == 23);
  REQUIRE(back.channels == 3);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    CHECK(back.data[i] == img.data[i]);
  }
}

TEST_CASE("reading a missing image raises IngestionError") {
  CHECK_THROWS_AS(read_image("/nonexistent/nowhere.png"), IngestionError);
}

TEST_CASE("resize and crop basics") {
  Image img = test::random_image(8, 8, 3, 11);
  Image same = resize_bilinear(img, 8, 8);
  CHECK(same.data == img.data);
  Image up = resize_bilinear(img, 16, 12);
  CHECK(up.height == 16);
  CHECK(up.width == 12);

  Image c = crop(img, 2, 1, 4, 5);
  CHECK(c.height == 5);
  CHECK(c.width == 4);
  CHECK(c.at(0, 0, 0) == img.at(1, 2, 0));
  CHECK(c.at(4, 3, 2) == img.at(5, 5, 2));
}

TEST_CASE("require_standard rejects non-224 rasters") {
  Image ok(224, 224, 3, 10.0f);
  CHECK_NOTHROW(require_standard(ok, "test"));
  Image small(64, 64, 3);
  CHECK_THROWS_AS(require_standard(small, "test"), RangeError);
  Image bad(224, 224, 3, 300.0f);
  CHECK_THROWS_AS(require_standard(bad, "test"), RangeError);
}

namespace {

DatasetManifest tiny_manifest() {
  DatasetManifest m;
  m.name = "tiny";
  ImageRecord a{"a1", "images/a1.png", EmotionLabel::kHappy, Source::kKdef,
                "F01", "1", "straight", ""};
  ImageRecord b{"b2", "images/b2.png", EmotionLabel::kSad, Source::kGeomAug,
                "", "", "", "a1"};
  m.records = {a, b};
  m.recount();
  return m;
}

}  // namespace

TEST_CASE("manifest write/read round-trips every field") {
  test::TempDir tmp("fer_manifest");
  DatasetManifest m = tiny_manifest();
  write_manifest(m, tmp / "m.tsv");

  std::string text = test::slurp(tmp / "m.tsv");
  CHECK(text.rfind(std::string(kManifestVersionLine), 0) == 0);

  DatasetManifest back = read_manifest(tmp / "m.tsv", "tiny");
  REQUIRE(back.size() == 2);
  CHECK(back.name == "tiny");
  CHECK(back.records[0].id == "a1");
  CHECK(back.records[0].path == "images/a1.png");
  CHECK(back.records[0].label == EmotionLabel::kHappy);
  CHECK(back.records[0].source == Source::kKdef);
  CHECK(back.records[0].subject_id == "F01");
  CHECK(back.records[0].session == "1");
  CHECK(back.records[0].angle == "straight");
  CHECK(back.records[0].parent_id.empty());
  CHECK(back.records[1].parent_id == "a1");
  CHECK(back.records[1].source == Source::kGeomAug);
  CHECK(back.count(EmotionLabel::kHappy) == 1);
  CHECK(back.count(EmotionLabel::kSad) == 1);
}

TEST_CASE("read_manifest names the set after the file stem by default") {
  test::TempDir tmp("fer_manifest");
  write_manifest(tiny_manifest(), tmp / "kdef_q.tsv");
  CHECK(read_manifest(tmp / "kdef_q.tsv").name == "kdef_q");
}

TEST_CASE("manifest validation flags duplicate ids and stale counts") {
  DatasetManifest m = tiny_manifest();
  CHECK_NOTHROW(m.validate());
  m.records.push_back(m.records[0]);
  m.recount();
  CHECK_THROWS_AS(m.validate(), CompositionError);

  DatasetManifest stale = tiny_manifest();
  stale.counts_by_label[0] = 99;
  CHECK_THROWS_AS(stale.validate(), Error);
}

TEST_CASE("raw manifest reader rejects an alien version line") {
  test::TempDir tmp("fer_manifest");
  std::ofstream(tmp / "bad.tsv") << "# other-format v9\n";
  CHECK_THROWS_AS(read_raw_manifest(tmp / "bad.tsv"), IngestionError);
}

TEST_CASE("record paths resolve against the manifest directory") {
  CHECK(resolve_record_path("images/x.png", "/data/set") ==
        std::filesystem::path("/data/set/images/x.png"));
  CHECK(resolve_record_path("/abs/x.png", "/data/set") ==
        std::filesystem::path("/abs/x.png"));
}

TEST_CASE("the data root variable expands, and unset references fail") {
  unsetenv("FER_DATA_ROOT");
  CHECK_THROWS_AS(resolve_record_path("${FER_DATA_ROOT}/x.png", "/m"),
                  IngestionError);
  setenv("FER_DATA_ROOT", "/roots/data", 1);
  CHECK(resolve_record_path("${FER_DATA_ROOT}/x.png", "/m") ==
        std::filesystem::path("/roots/data/x.png"));
  unsetenv("FER_DATA_ROOT");
}

TEST_CASE("unit-interval normalization is division by 255") {
  Image img(2, 2, 3);
  img.at(0, 0, 0) = 0.0f;
  img.at(0, 0, 1) = 255.0f;
  img.at(0, 0, 2) = 51.0f;
  nn::Tensor t = normalize(img, NormalizationScheme::kUnitInterval);
  REQUIRE(t.shape == std::vector<int>{2, 2, 3});
  CHECK(t.data[0] == 0.0f);
  CHECK(t.data[1] == 1.0f);
  CHECK(t.data[2] == doctest::Approx(51.0f / 255.0f).epsilon(1e-7));
}

TEST_CASE("symmetric normalization maps [0,255] onto [-1,1] and back") {
  Image img = test::random_image(5, 4, 3, 3);
  img.at(0, 0, 0) = 0.0f;
  img.at(0, 0, 1) = 255.0f;
  nn::Tensor t = normalize(img, NormalizationScheme::kSymmetricUnit);
  CHECK(t.data[0] == doctest::Approx(-1.0).epsilon(1e-7));
  CHECK(t.data[1] == doctest::Approx(1.0).epsilon(1e-7));
  for (float v : t.data) {
    CHECK(v >= -1.0f);
    CHECK(v <= 1.0f);
  }
  Image back = denormalize_symmetric(t);
  REQUIRE(back.data.size() == img.data.size());
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    CHECK(std::abs(back.data[i] - img.data[i]) <= 1.0f / 255.0f);
  }
}

TEST_CASE("bgr mean centering swaps channels and subtracts the means") {
  CHECK(kBgrMeans[0] == 103.939f);
  CHECK(kBgrMeans[1] == 116.779f);
  CHECK(kBgrMeans[2] == 123.68f);
  Image img(1, 1, 3);
  img.at(0, 0, 0) = 10.0f;  // R
  img.at(0, 0, 1) = 20.0f;  // G
  img.at(0, 0, 2) = 30.0f;  // B
  nn::Tensor t = normalize(img, NormalizationScheme::kBgrMeanCentered);
  CHECK(t.data[0] == doctest::Approx(30.0f - 103.939f));
  CHECK(t.data[1] == doctest::Approx(20.0f - 116.779f));
  CHECK(t.data[2] == doctest::Approx(10.0f - 123.68f));
}

TEST_CASE("batch normalization carries the scheme tag and stacks shapes") {
  std::vector<Image> images = {test::random_image(6, 6, 3, 1),
                               test::random_image(6, 6, 3, 2)};
  NormalizedBatch batch =
      normalize_batch(images, NormalizationScheme::kUnitInterval);
  CHECK(batch.scheme == NormalizationScheme::kUnitInterval);
  CHECK(batch.values.shape == std::vector<int>{2, 6, 6, 3});
}

TEST_CASE("denormalize rejects values far outside the unit range") {
  nn::Tensor t({1, 2, 2, 3}, 0.0f);
  t.data[0] = 1.5f;
  CHECK_THROWS_AS(denormalize_symmetric(t), RangeError);
  t.data[0] = 1.0005f;  // within the clip slack
  CHECK_NOTHROW(denormalize_symmetric(t));
}

TEST_CASE("structured events land in the log file as one JSON per line") {
  test::TempDir tmp("fer_log");
  logs::set_quiet(true);
  logs::set_log_file(tmp / "events.jsonl");
  logs::event("teststage", "probe",
              {logs::str("key", "value"), logs::num("n", 42)});
  logs::set_log_file({});
  logs::set_quiet(false);

  std::ifstream in(tmp / "events.jsonl");
  std::string line;
  REQUIRE(std::getline(in, line));
  auto j = nlohmann::json::parse(line);
  CHECK(j.at("stage") == "teststage");
  CHECK(j.at("event") == "probe");
  CHECK(j.at("key") == "value");
  CHECK(j.at("n") == "42");
}
