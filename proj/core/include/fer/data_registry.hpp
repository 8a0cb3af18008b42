#pragma once

#include <filesystem>
#include <vector>

#include "fer/manifest.hpp"

namespace fer {

struct LoadOptions {
  /// When set, every record's resolved path must exist on disk.
  bool check_files = false;
};

/// Loads a KDEF manifest, keeping only straight-angle rows. The full KDEF
/// (70 subjects x 2 sessions x 7 emotions x 5 angles = 4900 rows) yields 980
/// records, 140 per emotion. Throws LabeledDataError on unknown expression
/// codes and IngestionError on unreadable rows or (with check_files) missing
/// image files.
DatasetManifest load_kdef(const std::filesystem::path& manifest_path,
                          const LoadOptions& options = {});

/// Loads a CK+ manifest, dropping contempt rows. The full CK+ yields 902
/// records.
DatasetManifest load_ckplus(const std::filesystem::path& manifest_path,
                            const LoadOptions& options = {});

/// Loads a JAFFE manifest; the full set yields 213 records.
DatasetManifest load_jaffe(const std::filesystem::path& manifest_path,
                           const LoadOptions& options = {});

/// Loads an actors manifest: web images of actors posing each expression,
/// used to widen the per-emotion GAN training groups. Expects source ACTOR.
DatasetManifest load_actors(const std::filesystem::path& manifest_path,
                            const LoadOptions& options = {});

/// Concatenates parts into a named manifest with recomputed counts.
/// Throws CompositionError on id collisions.
DatasetManifest compose(const std::string& name,
                        const std::vector<DatasetManifest>& parts);

/// Builds the per-emotion GAN training group: all KDEF records of the given
/// label plus the four actor images of the same label (144 records in the
/// full-KDEF configuration). Throws ConfigurationError when the KDEF side is
/// empty for the label or the actors manifest does not have exactly four
/// images of it.
DatasetManifest gan_training_group(const DatasetManifest& kdef,
                                   const DatasetManifest& actors,
                                   EmotionLabel label);

}  // namespace fer
