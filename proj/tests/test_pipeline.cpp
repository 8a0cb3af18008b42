#include <cmath>
#include <filesystem>
#include <set>

#include "doctest.h"
#include "fer/augment.hpp"
#include "fer/errors.hpp"
#include "fer/face_detect.hpp"
#include "fer/fixture.hpp"
#include "fer/preprocess.hpp"
#include "test_util.hpp"

using namespace fer;

TEST_CASE("the bright-region detector boxes a fixture face") {
  Rng rng(3);
  Image face = render_fixture_face(EmotionLabel::kHappy, 1.0, rng);
  BrightRegionDetector det;
  auto boxes = det.detect(face);
  REQUIRE(boxes.size() == 1);
  CHECK(boxes[0].w > 40);
  CHECK(boxes[0].h > 40);
  CHECK(boxes[0].confidence > 0.5);

  Image blank(64, 64, 3, 0.0f);
  CHECK(det.detect(blank).empty());
}

TEST_CASE("detect_and_crop prefers confidence, then area") {
  Image img = test::random_image(100, 120, 3, 9);
  ScriptedDetector det({{10, 10, 20, 20, 0.9},
                        {40, 40, 50, 50, 0.9},   // same confidence, larger
                        {0, 0, 10, 10, 0.95}});  // highest confidence wins
  Image out = detect_and_crop(img, det, 0.5);
  CHECK(out.is_standard());
  // The winning box is the 10x10 at (0,0); its upscale must match a direct
  // crop-and-resize of that region.
  Image direct = resize_bilinear(crop(img, 0, 0, 10, 10), 224, 224);
  CHECK(out.data == direct.data);
}

TEST_CASE("detection below threshold raises with the record id") {
  Image img = test::random_image(64, 64, 3, 2);
  ScriptedDetector det({{5, 5, 20, 20, 0.3}});
  try {
    detect_and_crop(img, det, 0.5, "rec42");
    FAIL("expected FaceNotFoundError");
  } catch (const FaceNotFoundError& e) {
    CHECK(e.record_id() == "rec42");
  }
  CHECK_THROWS_AS(detect_and_crop(img, det, 0.0), RangeError);
  CHECK_THROWS_AS(detect_and_crop(img, det, 1.0), RangeError);
}

TEST_CASE("preprocess standardizes a corpus and skips blank frames") {
  test::TempDir tmp("fer_prep");
  FixtureSpec spec;
  spec.images_per_class = 1;
  spec.seed = 4;
  DatasetManifest m = generate_fixture(spec, tmp / "raw");

  // A frame with no bright region: excluded, not fatal.
  write_image(Image(64, 64, 3, 0.0f), tmp / "raw" / "images" / "blank.png");
  ImageRecord blank;
  blank.id = "blank";
  blank.path = "images/blank.png";
  blank.label = EmotionLabel::kNeutral;
  blank.source = Source::kFixture;
  m.records.push_back(blank);
  m.recount();

  PreprocessResult result = run_preprocess(m, tmp / "raw", "bright_region",
                                           0.5, tmp / "prep");
  CHECK(result.processed.size() == 7);
  REQUIRE(result.excluded_ids.size() == 1);
  CHECK(result.excluded_ids[0] == "blank");
  for (const auto& rec : result.processed.records) {
    Image img = read_image(tmp / "prep" / (rec.id + ".png"));
    CHECK(img.is_standard());
  }

  // Same manifest, more workers: byte-identical outputs.
  PreprocessResult par = run_preprocess(m, tmp / "raw", "bright_region", 0.5,
                                        tmp / "prep3", 3);
  CHECK(par.processed.size() == 7);
  for (const auto& rec : result.processed.records) {
    CHECK(test::same_bytes(tmp / "prep" / (rec.id + ".png"),
                           tmp / "prep3" / (rec.id + ".png")));
  }
}

TEST_CASE("unreadable inputs abort preprocessing") {
  test::TempDir tmp("fer_prep");
  DatasetManifest m;
  m.name = "broken";
  ImageRecord rec;
  rec.id = "gone";
  rec.path = "missing.png";
  m.records.push_back(rec);
  m.recount();
  CHECK_THROWS_AS(
      run_preprocess(m, tmp.path(), "bright_region", 0.5, tmp / "out"),
      IngestionError);
}

TEST_CASE("every kernel is an exact identity at its neutral parameter") {
  Image img = test::random_image(31, 29, 3, 1);
  CHECK(rotate_about_center(img, 0.0).data == img.data);
  CHECK(zoom_about_center(img, 1.0).data == img.data);
  CHECK(scale_height(img, 1.0).data == img.data);
  CHECK(scale_width(img, 1.0).data == img.data);
  CHECK(adjust_contrast(img, 1.0).data == img.data);
  DrawnFactors neutral;
  CHECK(neutral.is_identity());
  CHECK(apply_kernels(img, neutral).data == img.data);
}

TEST_CASE("horizontal flip is an involution") {
  Image img = test::random_image(16, 21, 3, 8);
  Image once = flip_horizontal(img);
  CHECK(once.data != img.data);
  CHECK(flip_horizontal(once).data == img.data);
  CHECK(once.at(3, 0, 1) == img.at(3, 20, 1));
}

TEST_CASE("contrast is mean-anchored per channel") {
  // Two-level image: half 100, half 200 -> mean 150.
  Image img(2, 2, 1);
  img.at(0, 0, 0) = 100.0f;
  img.at(0, 1, 0) = 100.0f;
  img.at(1, 0, 0) = 200.0f;
  img.at(1, 1, 0) = 200.0f;

  Image stretched = adjust_contrast(img, 1.2);
  CHECK(stretched.at(0, 0, 0) == 90.0f);
  CHECK(stretched.at(1, 1, 0) == 210.0f);

  Image flattened = adjust_contrast(img, 0.5);
  CHECK(flattened.at(0, 0, 0) == 125.0f);
  CHECK(flattened.at(1, 0, 0) == 175.0f);

  // Extreme factors clamp into [0, 255].
  Image wide = adjust_contrast(img, 4.0);
  CHECK(wide.at(0, 0, 0) == 0.0f);
  CHECK(wide.at(1, 0, 0) == 255.0f);
}

TEST_CASE("factor draws are deterministic and bounded") {
  AugmentParams p;
  DrawnFactors f = draw_factors(p, 123);
  CHECK(f.rotation_angle == doctest::Approx(0.25948452212945672).epsilon(1e-12));
  CHECK(f.zoom == doctest::Approx(1.0953193296650054).epsilon(1e-12));
  CHECK(f.height_scale == doctest::Approx(1.1438648955734405).epsilon(1e-12));
  CHECK(f.width_scale == doctest::Approx(1.0747193348188724).epsilon(1e-12));
  CHECK(f.flip == false);
  CHECK(f.contrast == doctest::Approx(1.0668362262644915).epsilon(1e-12));

  const double two_pi = 2.0 * 3.14159265358979323846;
  bool saw_flip = false, saw_no_flip = false;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    DrawnFactors d = draw_factors(p, seed);
    CHECK(std::abs(d.rotation_angle) <= two_pi * p.rho);
    CHECK(d.zoom >= 1.0 - p.zeta);
    CHECK(d.zoom <= 1.0 + p.zeta);
    CHECK(d.height_scale >= 1.0 - p.theta);
    CHECK(d.height_scale <= 1.0 + p.theta);
    CHECK(d.width_scale >= 1.0 - p.omega);
    CHECK(d.width_scale <= 1.0 + p.omega);
    CHECK(d.contrast >= 1.0 - p.gamma);
    CHECK(d.contrast <= 1.0 + p.gamma);
    (d.flip ? saw_flip : saw_no_flip) = true;
  }
  CHECK(saw_flip);
  CHECK(saw_no_flip);

  AugmentParams no_flip = p;
  no_flip.flip_enabled = false;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK_FALSE(draw_factors(no_flip, seed).flip);
  }
}

TEST_CASE("augment bounds are validated") {
  AugmentParams p;
  p.rho = 1.5;
  CHECK_THROWS_AS(p.validate(), RangeError);
  p.rho = 0.1;
  p.gamma = 1.0;
  CHECK_THROWS_AS(p.validate(), RangeError);
  p.gamma = 0.2;
  p.replicas = 0;
  CHECK_THROWS_AS(p.validate(), RangeError);
}

TEST_CASE("offline expansion: 5N records, lineage intact, worker-invariant") {
  test::TempDir tmp("fer_expand");
  FixtureSpec spec;
  spec.images_per_class = 2;
  spec.seed = 6;
  DatasetManifest m = generate_fixture(spec, tmp / "src");
  AugmentParams params;

  DatasetManifest exp1 = expand(m, tmp / "src", params, 99, tmp / "a", 1);
  CHECK(exp1.name == m.name + "_DA_OL");
  CHECK(exp1.size() == m.size() * params.replicas);
  for (EmotionLabel label : kAllEmotions) {
    CHECK(exp1.count(label) == m.count(label) * params.replicas);
  }
  std::set<std::string> parents;
  for (const auto& rec : exp1.records) {
    CHECK(rec.source == Source::kGeomAug);
    REQUIRE_FALSE(rec.parent_id.empty());
    CHECK(rec.id.rfind(rec.parent_id + "_aug", 0) == 0);
    parents.insert(rec.parent_id);
  }
  CHECK(parents.size() == static_cast<std::size_t>(m.size()));

  DatasetManifest exp3 = expand(m, tmp / "src", params, 99, tmp / "b", 3);
  REQUIRE(exp3.size() == exp1.size());
  for (const auto& rec : exp1.records) {
    CHECK(test::same_bytes(tmp / "a" / (rec.id + ".png"),
                           tmp / "b" / (rec.id + ".png")));
  }

  DatasetManifest other = expand(m, tmp / "src", params, 100, tmp / "c", 1);
  bool differs = false;
  for (const auto& rec : other.records) {
    if (!test::same_bytes(tmp / "a" / (rec.id + ".png"),
                          tmp / "c" / (rec.id + ".png"))) {
      differs = true;
      break;
    }
  }
  CHECK(differs);
}

TEST_CASE("expansion aborts when a processed image is unreadable") {
  test::TempDir tmp("fer_expand");
  DatasetManifest m;
  m.name = "ghost";
  ImageRecord rec;
  rec.id = "ghost0";
  rec.path = "no_such.png";
  m.records.push_back(rec);
  m.recount();
  AugmentParams params;
  try {
    expand(m, tmp.path(), params, 1, tmp / "out");
    FAIL("expected IngestionError");
  } catch (const IngestionError& e) {
    CHECK(std::string(e.what()).find("ghost0") != std::string::npos);
  }
}

TEST_CASE("single replicas reproduce from their derived seed") {
  CHECK(replica_seed(7, "rec", 0) == replica_seed(7, "rec", 0));
  CHECK(replica_seed(7, "rec", 0) != replica_seed(7, "rec", 1));
  CHECK(replica_seed(7, "rec", 0) != replica_seed(8, "rec", 0));
  CHECK(replica_seed(7, "rec", 0) != replica_seed(7, "other", 0));
}
