#include "fer/fixture.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "fer/errors.hpp"
#include "fer/logging.hpp"

namespace fer {
namespace {

namespace fs = std::filesystem;

// One distinct color-cube corner per class; the mean interior color alone
// separates the classes linearly, and it survives every geometric transform
// the pipeline applies.
constexpr std::array<std::array<float, 3>, kNumEmotions> kTints = {{
    {1.f, 0.f, 0.f},  // angry
    {0.f, 1.f, 0.f},  // disgust
    {0.f, 0.f, 1.f},  // fear
    {1.f, 1.f, 0.f},  // happy
    {1.f, 0.f, 1.f},  // neutral
    {0.f, 1.f, 1.f},  // sad
    {1.f, 1.f, 1.f},  // surprise
}};

// Off-simplex gray used for masquerade-only contempt rows.
constexpr std::array<float, 3> kContemptTint = {0.5f, 0.5f, 0.5f};

constexpr float kInteriorBase = 132.0f;
constexpr float kTintAmp = 58.0f;
constexpr float kStripeAmp = 14.0f;

Image render_face(const std::array<float, 3>& tint, int stripes, double sep,
                  Rng& rng) {
  Image img(kStandardSide, kStandardSide, kStandardChannels);
  const double cx = 112.0 + rng.uniform(-10.0, 10.0);
  const double cy = 112.0 + rng.uniform(-10.0, 10.0);
  const double ra = 62.0 + rng.uniform(-6.0, 6.0);
  const double rb = 84.0 + rng.uniform(-6.0, 6.0);
  const float glow = static_cast<float>(rng.uniform(-8.0, 8.0));
  const float tint_amp = static_cast<float>(kTintAmp * sep);
  const float stripe_amp = static_cast<float>(kStripeAmp * sep);
  const double band_h = 2.0 * rb / stripes;

  const double eye_dx = ra * 0.42, eye_y = cy - rb * 0.35, eye_r = ra * 0.13;
  const double mouth_y = cy + rb * 0.42, mouth_rx = ra * 0.38,
               mouth_ry = rb * 0.10;

  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const double nx = (x - cx) / ra, ny = (y - cy) / rb;
      if (nx * nx + ny * ny > 1.0) {
        const float ground =
            20.0f + static_cast<float>(((x / 16) + (y / 16)) % 2) * 6.0f;
        for (int c = 0; c < 3; ++c) img.at(y, x, c) = ground;
        continue;
      }
      const long long band =
          static_cast<long long>(std::floor((y - cy) / band_h)) + 1000;
      const float stripe = (band % 2 == 0) ? stripe_amp : -stripe_amp;
      float dark = 0.0f;
      for (double ex : {cx - eye_dx, cx + eye_dx}) {
        const double ddx = x - ex, ddy = y - eye_y;
        if (ddx * ddx + ddy * ddy <= eye_r * eye_r) dark = 76.0f;
      }
      const double mx = (x - cx) / mouth_rx, my = (y - mouth_y) / mouth_ry;
      if (mx * mx + my * my <= 1.0) dark = 76.0f;
      for (int c = 0; c < 3; ++c) {
        const float v = kInteriorBase + tint_amp * tint[static_cast<std::size_t>(c)] +
                        stripe + glow - dark;
        img.at(y, x, c) = std::clamp(v, 0.0f, 255.0f);
      }
    }
  }
  return img;
}

// KDEF-style two-letter expression codes in class-index order.
constexpr std::array<const char*, kNumEmotions> kKdefCodes = {
    "AN", "DI", "AF", "HA", "NE", "SA", "SU"};

constexpr std::array<const char*, 5> kKdefAngles = {"FL", "HL", "S", "HR",
                                                    "FR"};

std::string two_digits(int n) {
  std::string s = std::to_string(n);
  return s.size() < 2 ? "0" + s : s;
}

void write_raw_rows(const fs::path& path,
                    const std::vector<std::array<std::string, 8>>& rows) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write manifest file '" + path.string() + "'");
  out << kManifestVersionLine << "\n";
  out << "# fields: id\tpath\tdataset\tlabel\tangle\tsubject\tsession\tparent\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out << '\t';
      out << (r[i].empty() ? "-" : r[i]);
    }
    out << "\n";
  }
  if (!out) throw Error("short write to manifest file '" + path.string() + "'");
}

}  // namespace

void FixtureSpec::validate() const {
  if (images_per_class <= 0) {
    throw ConfigurationError("fixture images_per_class must be positive, got " +
                             std::to_string(images_per_class));
  }
  if (!(separability > 0.0) || separability > 1.0) {
    throw ConfigurationError("fixture separability must lie in (0, 1], got " +
                             std::to_string(separability));
  }
}

Image render_fixture_face(EmotionLabel label, double separability, Rng& rng) {
  const int idx = emotion_index(label);
  return render_face(kTints[static_cast<std::size_t>(idx)], 3 + idx,
                     separability, rng);
}

DatasetManifest generate_fixture(const FixtureSpec& spec,
                                 const std::filesystem::path& out_dir) {
  spec.validate();
  fs::create_directories(out_dir / "images");
  DatasetManifest manifest;
  manifest.name = "fixture";
  for (EmotionLabel label : kAllEmotions) {
    const std::string lname(emotion_name(label));
    for (int i = 0; i < spec.images_per_class; ++i) {
      ImageRecord rec;
      rec.id = "fx_" + lname + "_" + std::to_string(i);
      rec.path = "images/" + rec.id + ".png";
      rec.label = label;
      rec.source = Source::kFixture;
      rec.subject_id = "s" + std::to_string(i % 5);
      Rng rng(derive_seed(spec.seed, rec.id, 0));
      write_image(render_fixture_face(label, spec.separability, rng),
                  out_dir / rec.path);
      manifest.records.push_back(std::move(rec));
    }
  }
  manifest.recount();
  manifest.validate();
  write_manifest(manifest, out_dir / "manifest.tsv");
  logs::event("fixture", "generated",
              {logs::num("records", manifest.size()),
               logs::num("per_class", spec.images_per_class),
               logs::real("separability", spec.separability),
               logs::num("seed", static_cast<std::int64_t>(spec.seed)),
               logs::str("dir", out_dir.string())});
  return manifest;
}

std::filesystem::path generate_fixture_as(const FixtureSpec& spec, Source as,
                                          const std::filesystem::path& out_dir) {
  spec.validate();
  fs::create_directories(out_dir / "images");
  const std::string dataset(source_name(as));
  std::vector<std::array<std::string, 8>> rows;

  auto emit = [&](const std::string& id, EmotionLabel label,
                  const std::string& raw_label, const std::string& angle,
                  const std::string& subject, const std::string& session) {
    const std::string rel = "images/" + id + ".png";
    Rng rng(derive_seed(spec.seed, id, 0));
    write_image(render_fixture_face(label, spec.separability, rng),
                out_dir / rel);
    rows.push_back({id, rel, dataset, raw_label, angle, subject, session, ""});
  };

  switch (as) {
    case Source::kKdef:
      // Straight-angle rows plus one profile row per class, which the loader
      // must drop.
      for (int ci = 0; ci < kNumEmotions; ++ci) {
        const EmotionLabel label = emotion_from_index(ci);
        const std::string code = kKdefCodes[static_cast<std::size_t>(ci)];
        for (int i = 0; i < spec.images_per_class; ++i) {
          const std::string subject =
              (i % 2 ? "M" : "F") + two_digits(1 + i / 2);
          const std::string session = i % 2 ? "B" : "A";
          emit(session + subject + code + "S", label, code, "S", subject,
               session);
        }
        const std::string rel = "images/" + dataset + code + "HL.png";
        rows.push_back({"AF90" + code + "HL", rel, dataset, code, "HL", "F90",
                        "A", ""});
      }
      break;
    case Source::kCkPlus:
      for (int ci = 0; ci < kNumEmotions; ++ci) {
        const EmotionLabel label = emotion_from_index(ci);
        const std::string lname(emotion_name(label));
        for (int i = 0; i < spec.images_per_class; ++i) {
          emit("ck_" + lname + "_" + std::to_string(i), label, lname, "",
               "S" + std::to_string(100 + i), "001");
        }
      }
      // Contempt rows: present in the raw tree, dropped by the loader.
      for (int i = 0; i < spec.images_per_class; ++i) {
        const std::string id = "ck_contempt_" + std::to_string(i);
        const std::string rel = "images/" + id + ".png";
        Rng rng(derive_seed(spec.seed, id, 0));
        write_image(render_face(kContemptTint, 10, spec.separability, rng),
                    out_dir / rel);
        rows.push_back({id, rel, dataset, "contempt", "",
                        "S" + std::to_string(200 + i), "001", ""});
      }
      break;
    case Source::kJaffe:
      for (int ci = 0; ci < kNumEmotions; ++ci) {
        const EmotionLabel label = emotion_from_index(ci);
        const std::string code = kKdefCodes[static_cast<std::size_t>(ci)];
        for (int i = 0; i < spec.images_per_class; ++i) {
          const std::string subject = "J" + std::to_string(1 + i % 10);
          emit("jf_" + subject + "_" + code + std::to_string(i), label, code,
               "", subject, "");
        }
      }
      break;
    case Source::kActor:
      for (int ci = 0; ci < kNumEmotions; ++ci) {
        const EmotionLabel label = emotion_from_index(ci);
        const std::string lname(emotion_name(label));
        for (int i = 0; i < spec.images_per_class; ++i) {
          emit("actor_" + lname + "_" + std::to_string(i), label, lname, "",
               "actor" + std::to_string(i), "");
        }
      }
      break;
    default:
      throw ConfigurationError(
          "fixture masquerade supports KDEF, CK+, JAFFE and ACTOR, not " +
          dataset);
  }

  const fs::path manifest_path = out_dir / "raw_manifest.tsv";
  write_raw_rows(manifest_path, rows);
  logs::event("fixture", "generated_as",
              {logs::str("dataset", dataset),
               logs::num("rows", static_cast<std::int64_t>(rows.size())),
               logs::num("per_class", spec.images_per_class),
               logs::str("dir", out_dir.string())});
  return manifest_path;
}

std::filesystem::path write_full_kdef_rows(const std::filesystem::path& out_dir) {
  std::vector<std::array<std::string, 8>> rows;
  rows.reserve(4900);
  for (char gender : {'F', 'M'}) {
    for (int subj = 1; subj <= 35; ++subj) {
      const std::string subject = gender + two_digits(subj);
      for (char session : {'A', 'B'}) {
        for (int ci = 0; ci < kNumEmotions; ++ci) {
          const std::string code = kKdefCodes[static_cast<std::size_t>(ci)];
          for (const char* angle : kKdefAngles) {
            const std::string id =
                std::string(1, session) + subject + code + angle;
            rows.push_back({id, "images/" + id + ".png", "KDEF", code, angle,
                            subject, std::string(1, session), ""});
          }
        }
      }
    }
  }
  const fs::path manifest_path = out_dir / "kdef_full.tsv";
  write_raw_rows(manifest_path, rows);
  logs::event("fixture", "kdef_rows",
              {logs::num("rows", static_cast<std::int64_t>(rows.size())),
               logs::str("path", manifest_path.string())});
  return manifest_path;
}

}  // namespace fer
