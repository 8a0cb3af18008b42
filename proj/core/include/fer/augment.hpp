#pragma once

#include <cstdint>
#include <filesystem>

#include "fer/image.hpp"
#include "fer/manifest.hpp"

namespace fer {

/// Bounds for the six stochastic label-preserving transforms. Each bound is
/// a fraction in [0, 1); rho is a fraction of a full turn.
struct AugmentParams {
  double rho = 0.1;    ///< rotation bound, fraction of 2*pi
  double zeta = 0.1;   ///< zoom bound
  double theta = 0.2;  ///< height-resize bound
  double omega = 0.2;  ///< width-resize bound
  double gamma = 0.2;  ///< contrast bound
  bool flip_enabled = true;
  int replicas = 5;

  /// Throws RangeError when a bound is outside [0, 1) or replicas < 1.
  void validate() const;
};

/// One concrete draw of the six factors.
struct DrawnFactors {
  double rotation_angle = 0.0;  ///< radians in [-2*pi*rho, 2*pi*rho]
  double zoom = 1.0;            ///< in [1 - zeta, 1 + zeta]
  double height_scale = 1.0;    ///< in [1 - theta, 1 + theta]
  double width_scale = 1.0;     ///< in [1 - omega, 1 + omega]
  bool flip = false;
  double contrast = 1.0;        ///< in [1 - gamma, 1 + gamma]

  bool is_identity() const {
    return rotation_angle == 0.0 && zoom == 1.0 && height_scale == 1.0 &&
           width_scale == 1.0 && !flip && contrast == 1.0;
  }
};

/// Draws each factor uniformly within its interval. Deterministic for a
/// fixed seed; flip is a fair coin when enabled. Draw order is fixed:
/// rotation, zoom, height, width, flip, contrast.
DrawnFactors draw_factors(const AugmentParams& params, std::uint64_t seed);

// Individual kernels. Each maps a valid [0,255] image to one of the same
// shape and range, and is an exact identity at its neutral parameter.
Image rotate_about_center(const Image& image, double angle_rad);
Image zoom_about_center(const Image& image, double factor);
Image scale_height(const Image& image, double factor);  ///< crop-or-pad back
Image scale_width(const Image& image, double factor);   ///< crop-or-pad back
Image flip_horizontal(const Image& image);
Image adjust_contrast(const Image& image, double factor);  ///< mean-anchored

/// Applies the kernels in the fixed documented order:
/// rotation -> zoom -> height -> width -> flip -> contrast.
Image apply_kernels(const Image& image, const DrawnFactors& factors);

/// Derives the seed for (record, replica) under a master seed. Exposed so
/// tests can reproduce single replicas.
std::uint64_t replica_seed(std::uint64_t master_seed,
                           const std::string& record_id, int replica_index);

/// Offline x-replicas expansion. Reads each record's processed image,
/// writes `replicas` augmented PNGs to out_dir and returns the GEOM_AUG
/// manifest (id "<parent>_aug<k>", label and subject inherited, parent_id
/// set). Output is bit-identical for a fixed master_seed regardless of the
/// worker count. Throws IngestionError naming the record when a processed
/// image cannot be read.
DatasetManifest expand(const DatasetManifest& manifest,
                       const std::filesystem::path& manifest_dir,
                       const AugmentParams& params, std::uint64_t master_seed,
                       const std::filesystem::path& out_dir, int workers = 1);

}  // namespace fer
