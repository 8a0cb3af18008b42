#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace fer {

/// One structured event per line: stage, event name, and key/value details.
/// Events go to stderr and, when configured, to a JSONL file, so dataset
/// arithmetic and seeds are auditable after a run.
namespace logs {

using Field = std::pair<std::string, std::string>;

Field str(const std::string& key, const std::string& value);
Field num(const std::string& key, std::int64_t value);
Field real(const std::string& key, double value);

void set_log_file(const std::filesystem::path& path);  ///< empty path disables
void set_quiet(bool quiet);                            ///< silences stderr echo

void event(const std::string& stage, const std::string& name,
           const std::vector<Field>& fields = {});

}  // namespace logs

}  // namespace fer
