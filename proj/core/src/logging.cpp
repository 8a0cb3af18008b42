#include "fer/logging.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fer::logs {

namespace {

std::mutex g_mutex;
std::ofstream g_file;
bool g_quiet = false;

std::string timestamp() {
  using namespace std::chrono;
  auto now = system_clock::now();
  auto t = system_clock::to_time_t(now);
  auto ms = duration_cast<milliseconds>(now.time_since_epoch()) % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", &tm);
  std::ostringstream os;
  os << buf << '.' << ms.count() << 'Z';
  return os.str();
}

}  // namespace

Field str(const std::string& key, const std::string& value) {
  return {key, value};
}

Field num(const std::string& key, std::int64_t value) {
  return {key, std::to_string(value)};
}

Field real(const std::string& key, double value) {
  std::ostringstream os;
  os.precision(10);
  os << value;
  return {key, os.str()};
}

void set_log_file(const std::filesystem::path& path) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_file.is_open()) g_file.close();
  if (!path.empty()) {
    if (path.has_parent_path())
      std::filesystem::create_directories(path.parent_path());
    g_file.open(path, std::ios::app);
  }
}

void set_quiet(bool quiet) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_quiet = quiet;
}

void event(const std::string& stage, const std::string& name,
           const std::vector<Field>& fields) {
  nlohmann::json j;
  j["ts"] = timestamp();
  j["stage"] = stage;
  j["event"] = name;
  for (const auto& [k, v] : fields) j[k] = v;
  const std::string line = j.dump();
  std::lock_guard<std::mutex> lock(g_mutex);
  if (!g_quiet) std::cerr << line << '\n';
  if (g_file.is_open()) g_file << line << '\n' << std::flush;
}

}  // namespace fer::logs
