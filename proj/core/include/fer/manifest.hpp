#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fer/emotion.hpp"

namespace fer {

/// Where a record came from.
enum class Source : int {
  kKdef = 0,
  kCkPlus,
  kJaffe,
  kGeomAug,
  kGanQ,
  kGanPfa,
  kActor,
  kFixture,
};

std::string_view source_name(Source s);
std::optional<Source> try_parse_source(std::string_view text);

/// One labeled face image with provenance and, for augmented images, lineage.
struct ImageRecord {
  std::string id;
  std::string path;  ///< raw path string, possibly with ${FER_DATA_ROOT}
  EmotionLabel label = EmotionLabel::kNeutral;
  Source source = Source::kFixture;
  std::string subject_id;  ///< empty when absent
  std::string session;     ///< empty when absent
  std::string angle;       ///< empty when absent; "straight" for KDEF rows
  std::string parent_id;   ///< empty for originals; set for GEOM_AUG records
};

/// Orderered collection of records plus per-label counts.
struct DatasetManifest {
  std::string name;
  std::vector<ImageRecord> records;
  std::array<std::int64_t, kNumEmotions> counts_by_label{};

  std::int64_t size() const {
    return static_cast<std::int64_t>(records.size());
  }
  bool empty() const { return records.empty(); }
  std::int64_t count(EmotionLabel label) const {
    return counts_by_label[emotion_index(label)];
  }

  /// Recomputes counts_by_label from the record list.
  void recount();
  /// Throws CompositionError on duplicate ids; checks the counts invariant.
  void validate() const;
};

/// A manifest row as found on disk, before label/angle interpretation.
struct RawManifestRow {
  std::string id, path, dataset, label, angle, subject, session, parent;
  int line_no = 0;
};

inline constexpr std::string_view kManifestVersionLine = "# fer-manifest v1";

/// Reads a v1 manifest file: a version line, a "# fields:" header naming the
/// tab-separated columns, then one record per line with "-" for empty fields.
std::vector<RawManifestRow> read_raw_manifest(
    const std::filesystem::path& path);

/// Writes a manifest in the v1 format.
void write_manifest(const DatasetManifest& manifest,
                    const std::filesystem::path& path);

/// Reads a manifest written by write_manifest back into typed records.
/// Rows must parse cleanly (known dataset, known label); contempt is not
/// expected in persisted manifests.
DatasetManifest read_manifest(const std::filesystem::path& path,
                              const std::string& name = "");

/// Resolves a record path for file access: substitutes ${FER_DATA_ROOT}
/// from the environment (error if referenced but unset) and resolves
/// relative paths against the directory of the manifest they came from.
std::filesystem::path resolve_record_path(
    const std::string& raw, const std::filesystem::path& manifest_dir);

}  // namespace fer
