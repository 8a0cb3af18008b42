#include "fer/data_registry.hpp"

#include <algorithm>
#include <cctype>

#include "fer/errors.hpp"

namespace fer {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool is_straight_angle(const std::string& angle) {
  const std::string a = lower(angle);
  return a == "straight" || a == "s";
}

void check_file(const ImageRecord& rec,
                const std::filesystem::path& manifest_dir) {
  auto p = resolve_record_path(rec.path, manifest_dir);
  if (!std::filesystem::exists(p))
    throw IngestionError("record '" + rec.id + "': missing file '" +
                         p.string() + "'");
}

ImageRecord typed_record(const RawManifestRow& row, Source expected,
                         EmotionLabel label) {
  ImageRecord rec;
  rec.id = row.id;
  rec.path = row.path;
  rec.label = label;
  rec.source = expected;
  rec.subject_id = row.subject;
  rec.session = row.session;
  rec.angle = row.angle;
  rec.parent_id = row.parent;
  return rec;
}

void require_dataset(const RawManifestRow& row, Source expected) {
  auto src = try_parse_source(row.dataset);
  if (!src || *src != expected)
    throw IngestionError("record '" + row.id + "': dataset is '" +
                         row.dataset + "', expected " +
                         std::string(source_name(expected)));
}

EmotionLabel parse_label_or_throw(const RawManifestRow& row) {
  auto label = try_parse_emotion(row.label);
  if (!label)
    throw LabeledDataError("record '" + row.id +
                           "': unknown expression code '" + row.label + "'");
  return *label;
}

}  // namespace

DatasetManifest load_kdef(const std::filesystem::path& manifest_path,
                          const LoadOptions& options) {
  DatasetManifest m;
  m.name = "KDEF";
  const auto dir = manifest_path.parent_path();
  for (const auto& row : read_raw_manifest(manifest_path)) {
    require_dataset(row, Source::kKdef);
    if (!is_straight_angle(row.angle)) continue;
    ImageRecord rec = typed_record(row, Source::kKdef, parse_label_or_throw(row));
    rec.angle = "straight";
    if (options.check_files) check_file(rec, dir);
    m.records.push_back(std::move(rec));
  }
  m.recount();
  m.validate();
  return m;
}

DatasetManifest load_ckplus(const std::filesystem::path& manifest_path,
                            const LoadOptions& options) {
  DatasetManifest m;
  m.name = "CK+";
  const auto dir = manifest_path.parent_path();
  for (const auto& row : read_raw_manifest(manifest_path)) {
    require_dataset(row, Source::kCkPlus);
    if (is_contempt_label(row.label)) continue;
    ImageRecord rec =
        typed_record(row, Source::kCkPlus, parse_label_or_throw(row));
    if (options.check_files) check_file(rec, dir);
    m.records.push_back(std::move(rec));
  }
  m.recount();
  m.validate();
  return m;
}

DatasetManifest load_jaffe(const std::filesystem::path& manifest_path,
                           const LoadOptions& options) {
  DatasetManifest m;
  m.name = "JAFFE";
  const auto dir = manifest_path.parent_path();
  for (const auto& row : read_raw_manifest(manifest_path)) {
    require_dataset(row, Source::kJaffe);
    ImageRecord rec =
        typed_record(row, Source::kJaffe, parse_label_or_throw(row));
    if (options.check_files) check_file(rec, dir);
    m.records.push_back(std::move(rec));
  }
  m.recount();
  m.validate();
  return m;
}

DatasetManifest load_actors(const std::filesystem::path& manifest_path,
                            const LoadOptions& options) {
  DatasetManifest m;
  m.name = "ACTORS";
  const auto dir = manifest_path.parent_path();
  for (const auto& row : read_raw_manifest(manifest_path)) {
    require_dataset(row, Source::kActor);
    ImageRecord rec =
        typed_record(row, Source::kActor, parse_label_or_throw(row));
    if (options.check_files) check_file(rec, dir);
    m.records.push_back(std::move(rec));
  }
  m.recount();
  m.validate();
  return m;
}

DatasetManifest compose(const std::string& name,
                        const std::vector<DatasetManifest>& parts) {
  DatasetManifest out;
  out.name = name;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.records.size();
  out.records.reserve(total);
  for (const auto& p : parts)
    out.records.insert(out.records.end(), p.records.begin(), p.records.end());
  out.recount();
  out.validate();  // throws CompositionError on id collisions
  return out;
}

DatasetManifest gan_training_group(const DatasetManifest& kdef,
                                   const DatasetManifest& actors,
                                   EmotionLabel label) {
  DatasetManifest out;
  out.name = "gan_group_" + std::string(emotion_name(label));
  for (const auto& r : kdef.records)
    if (r.label == label) out.records.push_back(r);
  if (out.records.empty())
    throw ConfigurationError("gan_training_group: no KDEF images of label '" +
                             std::string(emotion_name(label)) +
                             "'; a GAN cannot be trained on actor images "
                             "alone");
  std::int64_t actor_count = 0;
  for (const auto& r : actors.records)
    if (r.label == label) {
      out.records.push_back(r);
      ++actor_count;
    }
  if (actor_count != 4)
    throw ConfigurationError(
        "gan_training_group: expected exactly 4 actor images of label '" +
        std::string(emotion_name(label)) + "', found " +
        std::to_string(actor_count));
  out.recount();
  out.validate();
  return out;
}

}  // namespace fer
