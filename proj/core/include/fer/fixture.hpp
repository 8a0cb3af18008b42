#pragma once

#include <cstdint>
#include <filesystem>

#include "fer/image.hpp"
#include "fer/manifest.hpp"
#include "fer/rng.hpp"

namespace fer {

/// Parameters for the synthetic test corpus: seven classes of face-like
/// images (bright ellipse on a dark ground, eyes and mouth marks) carrying a
/// class-coded color tint and stripe texture, so a small classifier can
/// separate them after any of the pipeline's geometric transforms.
struct FixtureSpec {
  int images_per_class = 20;
  /// (0, 1]: scales the class-coded signal; 1 is fully separable, smaller
  /// values blur the classes together for harder tests.
  double separability = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// One synthetic face. Geometry and brightness jitter come from the rng;
/// the label picks the tint direction and stripe frequency.
Image render_fixture_face(EmotionLabel label, double separability, Rng& rng);

/// Writes 7 x images_per_class PNGs under out_dir/images plus a v1 manifest
/// at out_dir/manifest.tsv with relative paths. Same spec, same bytes.
DatasetManifest generate_fixture(const FixtureSpec& spec,
                                 const std::filesystem::path& out_dir);

/// Like generate_fixture, but emits a raw manifest in the named source
/// dataset's conventions (KDEF expression codes and angles, CK+ with extra
/// contempt rows, JAFFE, ACTOR) so the ingest loaders can be exercised
/// against a synthetic tree. Returns the raw manifest path.
std::filesystem::path generate_fixture_as(const FixtureSpec& spec, Source as,
                                          const std::filesystem::path& out_dir);

/// The complete KDEF grid as rows only — 70 subjects x 2 sessions x
/// 7 expressions x 5 angles = 4900 rows, no image files — for exercising
/// dataset arithmetic at full scale. Returns the manifest path.
std::filesystem::path write_full_kdef_rows(const std::filesystem::path& out_dir);

}  // namespace fer
