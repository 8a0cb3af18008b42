#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fer/augment.hpp"
#include "fer/data_registry.hpp"
#include "fer/errors.hpp"
#include "fer/fixture.hpp"
#include "test_util.hpp"

using namespace fer;

namespace {

// In-memory manifest shaped like a dataset of `total` records; labels cycle
// so totals never depend on an even class split.
DatasetManifest synth(const std::string& name, Source source, int total,
                      const std::string& prefix) {
  DatasetManifest m;
  m.name = name;
  for (int i = 0; i < total; ++i) {
    ImageRecord rec;
    rec.id = prefix + std::to_string(i);
    rec.path = "images/" + rec.id + ".png";
    rec.label = emotion_from_index(i % kNumEmotions);
    rec.source = source;
    m.records.push_back(std::move(rec));
  }
  m.recount();
  return m;
}

DatasetManifest replicate_offline(const DatasetManifest& parents,
                                  int replicas) {
  DatasetManifest m;
  m.name = parents.name + "_DA";
  for (const auto& rec : parents.records) {
    for (int k = 0; k < replicas; ++k) {
      ImageRecord aug = rec;
      aug.id = rec.id + "_aug" + std::to_string(k);
      aug.path = "aug/" + aug.id + ".png";
      aug.source = Source::kGeomAug;
      aug.parent_id = rec.id;
      m.records.push_back(std::move(aug));
    }
  }
  m.recount();
  return m;
}

}  // namespace

TEST_CASE("full grid rows load to 980 straight records, 140 per class") {
  test::TempDir tmp("fer_kdefgrid");
  auto path = write_full_kdef_rows(tmp.path());
  CHECK(read_raw_manifest(path).size() == 4900);

  DatasetManifest m = load_kdef(path);
  CHECK(m.size() == 980);
  for (EmotionLabel label : kAllEmotions) CHECK(m.count(label) == 140);
  for (const auto& rec : m.records) {
    CHECK(rec.angle == "straight");
    CHECK(rec.source == Source::kKdef);
    CHECK_FALSE(rec.subject_id.empty());
  }
}

TEST_CASE("check_files rejects rows whose images are absent") {
  test::TempDir tmp("fer_kdefgrid");
  auto path = write_full_kdef_rows(tmp.path());
  CHECK_THROWS_AS(load_kdef(path, {.check_files = true}), IngestionError);
}

TEST_CASE("masqueraded fixture trees feed every loader") {
  test::TempDir tmp("fer_masq");
  FixtureSpec spec;
  spec.images_per_class = 2;
  spec.seed = 5;

  SUBCASE("kdef drops non-straight angles") {
    auto path = generate_fixture_as(spec, Source::kKdef, tmp / "kdef");
    DatasetManifest m = load_kdef(path, {.check_files = true});
    CHECK(m.size() == 14);
    for (EmotionLabel label : kAllEmotions) CHECK(m.count(label) == 2);
  }
  SUBCASE("ckplus drops contempt rows") {
    auto path = generate_fixture_as(spec, Source::kCkPlus, tmp / "ck");
    CHECK(read_raw_manifest(path).size() == 16);  // 14 + 2 contempt
    DatasetManifest m = load_ckplus(path, {.check_files = true});
    CHECK(m.size() == 14);
    for (const auto& rec : m.records) CHECK(rec.source == Source::kCkPlus);
  }
  SUBCASE("jaffe loads each coded row") {
    auto path = generate_fixture_as(spec, Source::kJaffe, tmp / "jaffe");
    DatasetManifest m = load_jaffe(path, {.check_files = true});
    CHECK(m.size() == 14);
  }
  SUBCASE("actors load with their source intact") {
    auto path = generate_fixture_as(spec, Source::kActor, tmp / "actors");
    DatasetManifest m = load_actors(path, {.check_files = true});
    CHECK(m.size() == 14);
    for (const auto& rec : m.records) CHECK(rec.source == Source::kActor);
  }
}

TEST_CASE("unknown expression codes abort the kdef loader") {
  test::TempDir tmp("fer_badcode");
  std::ofstream out(tmp / "bad.tsv");
  out << "# fer-manifest v1\n";
  out << "# fields: id\tpath\tdataset\tlabel\tangle\tsubject\tsession\tparent\n";
  out << "x1\timages/x1.png\tKDEF\tXX\tS\tF01\tA\t-\n";
  out.close();
  CHECK_THROWS_AS(load_kdef(tmp / "bad.tsv"), LabeledDataError);
}

TEST_CASE("compose concatenates and recounts; collisions are fatal") {
  DatasetManifest a = synth("a", Source::kKdef, 10, "a");
  DatasetManifest b = synth("b", Source::kJaffe, 4, "b");
  DatasetManifest u = compose("ab", {a, b});
  CHECK(u.name == "ab");
  CHECK(u.size() == 14);
  for (EmotionLabel label : kAllEmotions) {
    CHECK(u.count(label) == a.count(label) + b.count(label));
  }

  DatasetManifest clash = synth("c", Source::kCkPlus, 3, "a");  // reuses ids
  CHECK_THROWS_AS(compose("bad", {a, clash}), CompositionError);
}

TEST_CASE("per-emotion training groups hold 140 + 4 records") {
  DatasetManifest kdef = synth("kdef", Source::kKdef, 980, "k");
  DatasetManifest actors = synth("actors", Source::kActor, 28, "act");
  REQUIRE(kdef.count(EmotionLabel::kHappy) == 140);
  REQUIRE(actors.count(EmotionLabel::kHappy) == 4);

  for (EmotionLabel label : kAllEmotions) {
    DatasetManifest group = gan_training_group(kdef, actors, label);
    CHECK(group.size() == 144);
    CHECK(group.count(label) == 144);
  }
}

TEST_CASE("training groups demand exactly four actor images") {
  DatasetManifest kdef = synth("kdef", Source::kKdef, 980, "k");
  DatasetManifest few = synth("actors", Source::kActor, 21, "act");  // 3 per class
  CHECK_THROWS_AS(gan_training_group(kdef, few, EmotionLabel::kAngry),
                  ConfigurationError);

  DatasetManifest actors = synth("actors", Source::kActor, 28, "act");
  DatasetManifest empty_kdef;
  empty_kdef.name = "empty";
  empty_kdef.recount();
  CHECK_THROWS_AS(gan_training_group(empty_kdef, actors, EmotionLabel::kAngry),
                  ConfigurationError);
}

TEST_CASE("composed dataset totals close exactly at reference sizes") {
  const DatasetManifest kdef = synth("kdef", Source::kKdef, 980, "k");
  const DatasetManifest ck = synth("ck", Source::kCkPlus, 902, "c");
  const DatasetManifest jaffe = synth("jaffe", Source::kJaffe, 213, "j");

  const int replicas = AugmentParams{}.replicas;  // default x5 expansion
  const DatasetManifest geom = replicate_offline(kdef, replicas);
  CHECK(geom.size() == 4900);

  // One generated variant per original face.
  DatasetManifest pfa = synth("gan_pfa", Source::kGanPfa, 980, "p");
  // Default quality-checked sampling: 150 images per emotion group.
  DatasetManifest gan_q = synth("gan_q", Source::kGanQ, 150 * kNumEmotions, "q");
  CHECK(gan_q.size() == 1050);

  DatasetManifest da_ol = compose("KDEF_DA_OL", {kdef, geom});
  CHECK(da_ol.size() == 5880);

  CHECK(compose("KDEF_PFA", {kdef, geom, pfa}).size() == 6860);
  CHECK(compose("KDEF_Q", {kdef, geom, gan_q}).size() == 6930);
  DatasetManifest pfa_q = compose("KDEF_PFA_Q", {kdef, geom, pfa, gan_q});
  CHECK(pfa_q.size() == 7910);

  CHECK(compose("UNION", {pfa_q, ck, jaffe}).size() == 9025);
}

TEST_CASE("fixture generation is deterministic for a fixed spec") {
  test::TempDir tmp("fer_fixture");
  FixtureSpec spec;
  spec.images_per_class = 1;
  spec.seed = 77;
  DatasetManifest a = generate_fixture(spec, tmp / "a");
  DatasetManifest b = generate_fixture(spec, tmp / "b");
  REQUIRE(a.size() == 7);
  REQUIRE(b.size() == 7);
  CHECK(test::same_bytes(tmp / "a" / "manifest.tsv", tmp / "b" / "manifest.tsv"));
  for (const auto& rec : a.records) {
    CHECK(test::same_bytes(tmp / "a" / rec.path, tmp / "b" / rec.path));
  }

  FixtureSpec other = spec;
  other.seed = 78;
  generate_fixture(other, tmp / "c");
  bool any_differs = false;
  for (const auto& rec : a.records) {
    if (!test::same_bytes(tmp / "a" / rec.path, tmp / "c" / rec.path)) {
      any_differs = true;
    }
  }
  CHECK(any_differs);
}

TEST_CASE("fixture spec validation") {
  FixtureSpec spec;
  spec.images_per_class = 0;
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  spec.images_per_class = 5;
  spec.separability = 0.0;
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  spec.separability = 1.5;
  CHECK_THROWS_AS(spec.validate(), ValidationError);
}
