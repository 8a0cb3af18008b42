#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fer/face_detect.hpp"
#include "fer/image.hpp"
#include "fer/manifest.hpp"

namespace fer {

/// Crops the highest-confidence face rectangle (ties broken by larger area)
/// and resizes it to 224x224x3. Throws FaceNotFoundError when no detection
/// reaches the threshold, RangeError for a threshold outside (0, 1).
Image detect_and_crop(const Image& raw, const FaceDetector& detector,
                      double confidence_threshold = 0.5,
                      const std::string& record_id = {});

struct PreprocessResult {
  DatasetManifest processed;               ///< records now point at out_dir PNGs
  std::vector<std::string> excluded_ids;   ///< face-not-found records
};

/// Runs detect_and_crop over a manifest, writing one lossless PNG per record
/// into out_dir keyed by record id. Records whose faces cannot be found are
/// logged and excluded; unreadable input files abort with IngestionError.
/// Safe to parallelize: each worker gets its own detector via the factory
/// name.
PreprocessResult run_preprocess(const DatasetManifest& manifest,
                                const std::filesystem::path& manifest_dir,
                                const std::string& detector_name,
                                double confidence_threshold,
                                const std::filesystem::path& out_dir,
                                int workers = 1);

}  // namespace fer
