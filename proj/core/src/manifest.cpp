#include "fer/manifest.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fer/errors.hpp"

namespace fer {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string field_or_dash(const std::string& s) { return s.empty() ? "-" : s; }

std::string undash(const std::string& s) { return s == "-" ? "" : s; }

}  // namespace

std::string_view source_name(Source s) {
  switch (s) {
    case Source::kKdef:
      return "KDEF";
    case Source::kCkPlus:
      return "CK+";
    case Source::kJaffe:
      return "JAFFE";
    case Source::kGeomAug:
      return "GEOM_AUG";
    case Source::kGanQ:
      return "GAN_Q";
    case Source::kGanPfa:
      return "GAN_PFA";
    case Source::kActor:
      return "ACTOR";
    case Source::kFixture:
      return "FIXTURE";
  }
  return "unknown";
}

std::optional<Source> try_parse_source(std::string_view text) {
  std::string t(text);
  for (auto& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t == "KDEF") return Source::kKdef;
  if (t == "CK+" || t == "CKPLUS") return Source::kCkPlus;
  if (t == "JAFFE") return Source::kJaffe;
  if (t == "GEOM_AUG") return Source::kGeomAug;
  if (t == "GAN_Q") return Source::kGanQ;
  if (t == "GAN_PFA") return Source::kGanPfa;
  if (t == "ACTOR") return Source::kActor;
  if (t == "FIXTURE") return Source::kFixture;
  return std::nullopt;
}

void DatasetManifest::recount() {
  counts_by_label.fill(0);
  for (const auto& r : records) ++counts_by_label[emotion_index(r.label)];
}

void DatasetManifest::validate() const {
  std::unordered_set<std::string_view> seen;
  seen.reserve(records.size());
  for (const auto& r : records) {
    if (!seen.insert(r.id).second)
      throw CompositionError("manifest '" + name + "': duplicate id '" + r.id +
                             "'");
  }
  std::int64_t total = 0;
  for (auto c : counts_by_label) total += c;
  if (total != size())
    throw CompositionError("manifest '" + name +
                           "': counts_by_label does not sum to record count");
}

std::vector<RawManifestRow> read_raw_manifest(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw IngestionError("cannot open manifest file '" + path.string() + "'");

  std::string line;
  if (!std::getline(in, line))
    throw IngestionError("manifest '" + path.string() + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kManifestVersionLine)
    throw IngestionError("manifest '" + path.string() +
                         "': first line must be '" +
                         std::string(kManifestVersionLine) + "'");

  if (!std::getline(in, line))
    throw IngestionError("manifest '" + path.string() + "': missing field header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::string prefix = "# fields:";
  if (line.rfind(prefix, 0) != 0)
    throw IngestionError("manifest '" + path.string() +
                         "': second line must start with '# fields:'");
  std::string header = line.substr(prefix.size());
  while (!header.empty() && (header.front() == ' ' || header.front() == '\t'))
    header.erase(header.begin());
  std::vector<std::string> cols = split_tabs(header);
  std::unordered_map<std::string, int> col_index;
  for (int i = 0; i < static_cast<int>(cols.size()); ++i) col_index[cols[i]] = i;
  for (const char* required : {"id", "path", "dataset", "label"}) {
    if (!col_index.count(required))
      throw IngestionError("manifest '" + path.string() +
                           "': missing required column '" + required + "'");
  }

  auto get = [&](const std::vector<std::string>& fields, const char* col) {
    auto it = col_index.find(col);
    if (it == col_index.end() || it->second >= static_cast<int>(fields.size()))
      return std::string();
    return undash(fields[it->second]);
  };

  std::vector<RawManifestRow> rows;
  int line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields = split_tabs(line);
    RawManifestRow row;
    row.line_no = line_no;
    row.id = get(fields, "id");
    row.path = get(fields, "path");
    row.dataset = get(fields, "dataset");
    row.label = get(fields, "label");
    row.angle = get(fields, "angle");
    row.subject = get(fields, "subject");
    row.session = get(fields, "session");
    row.parent = get(fields, "parent");
    if (row.id.empty())
      throw IngestionError("manifest '" + path.string() + "' line " +
                           std::to_string(line_no) + ": empty id");
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_manifest(const DatasetManifest& manifest,
                    const std::filesystem::path& path) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw Error("cannot write manifest file '" + path.string() + "'");
  out << kManifestVersionLine << "\n";
  out << "# fields: id\tpath\tdataset\tlabel\tangle\tsubject\tsession\tparent\n";
  for (const auto& r : manifest.records) {
    out << r.id << '\t' << field_or_dash(r.path) << '\t'
        << source_name(r.source) << '\t' << emotion_name(r.label) << '\t'
        << field_or_dash(r.angle) << '\t' << field_or_dash(r.subject_id)
        << '\t' << field_or_dash(r.session) << '\t'
        << field_or_dash(r.parent_id) << "\n";
  }
  if (!out)
    throw Error("short write to manifest file '" + path.string() + "'");
}

DatasetManifest read_manifest(const std::filesystem::path& path,
                              const std::string& name) {
  DatasetManifest m;
  m.name = name.empty() ? path.stem().string() : name;
  for (const auto& row : read_raw_manifest(path)) {
    ImageRecord rec;
    rec.id = row.id;
    rec.path = row.path;
    auto src = try_parse_source(row.dataset);
    if (!src)
      throw IngestionError("record '" + row.id + "': unknown dataset '" +
                           row.dataset + "'");
    rec.source = *src;
    auto label = try_parse_emotion(row.label);
    if (!label)
      throw LabeledDataError("record '" + row.id + "': unknown label '" +
                             row.label + "'");
    rec.label = *label;
    rec.angle = row.angle;
    rec.subject_id = row.subject;
    rec.session = row.session;
    rec.parent_id = row.parent;
    m.records.push_back(std::move(rec));
  }
  m.recount();
  m.validate();
  return m;
}

std::filesystem::path resolve_record_path(
    const std::string& raw, const std::filesystem::path& manifest_dir) {
  std::string s = raw;
  const std::string var = "${FER_DATA_ROOT}";
  auto pos = s.find(var);
  if (pos != std::string::npos) {
    const char* root = std::getenv("FER_DATA_ROOT");
    if (!root)
      throw IngestionError(
          "path '" + raw +
          "' references ${FER_DATA_ROOT} but the variable is not set");
    s.replace(pos, var.size(), root);
  }
  std::filesystem::path p(s);
  if (p.is_relative()) p = manifest_dir / p;
  return p;
}

}  // namespace fer
