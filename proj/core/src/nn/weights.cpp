#include "fer/nn/weights.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "fer/errors.hpp"
#include "fer/rng.hpp"

namespace fer::nn {

namespace {

class Digest {
 public:
  void feed(const void* data, std::size_t n) {
    h_ = fnv1a64(std::string_view(static_cast<const char*>(data), n), h_);
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xCBF29CE484222325ULL;
};

void put_u32(std::ostream& os, Digest& d, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
  d.feed(&v, sizeof(v));
}

void put_bytes(std::ostream& os, Digest& d, const void* data, std::size_t n) {
  os.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
  d.feed(data, n);
}

std::uint32_t take_u32(std::istream& is, Digest& d) {
  std::uint32_t v = 0;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(v))) {
    throw IncompatibilityError("weight archive truncated");
  }
  d.feed(&v, sizeof(v));
  return v;
}

void take_bytes(std::istream& is, Digest& d, void* data, std::size_t n) {
  if (!is.read(static_cast<char*>(data), static_cast<std::streamsize>(n))) {
    throw IncompatibilityError("weight archive truncated");
  }
  d.feed(data, n);
}

}  // namespace

void save_weights_stream(std::ostream& os,
                         const std::vector<std::pair<std::string, const Tensor*>>& entries,
                         const std::string& meta_json) {
  os.write(kWeightMagic, static_cast<std::streamsize>(std::strlen(kWeightMagic)));
  Digest d;
  put_u32(os, d, static_cast<std::uint32_t>(meta_json.size()));
  put_bytes(os, d, meta_json.data(), meta_json.size());
  put_u32(os, d, static_cast<std::uint32_t>(entries.size()));
  for (const auto& [name, tensor] : entries) {
    put_u32(os, d, static_cast<std::uint32_t>(name.size()));
    put_bytes(os, d, name.data(), name.size());
    put_u32(os, d, static_cast<std::uint32_t>(tensor->shape.size()));
    for (int dim : tensor->shape) {
      put_u32(os, d, static_cast<std::uint32_t>(dim));
    }
    put_bytes(os, d, tensor->data.data(), tensor->data.size() * sizeof(float));
  }
  const std::uint64_t digest = d.value();
  os.write(reinterpret_cast<const char*>(&digest), sizeof(digest));
}

void save_weights(const std::string& path,
                  const std::vector<std::pair<std::string, const Tensor*>>& entries,
                  const std::string& meta_json) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IngestionError("cannot open for writing: " + path);
  save_weights_stream(os, entries, meta_json);
  if (!os) throw IngestionError("failed writing weight archive: " + path);
}

WeightArchive load_weights_stream(std::istream& is) {
  char magic[sizeof(kWeightMagic)] = {};
  const std::size_t magic_len = std::strlen(kWeightMagic);
  if (!is.read(magic, static_cast<std::streamsize>(magic_len)) ||
      std::memcmp(magic, kWeightMagic, magic_len) != 0) {
    throw IncompatibilityError("stream is not a weight archive");
  }
  Digest d;
  WeightArchive out;
  const std::uint32_t meta_len = take_u32(is, d);
  out.meta_json.resize(meta_len);
  take_bytes(is, d, out.meta_json.data(), meta_len);
  const std::uint32_t count = take_u32(is, d);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t name_len = take_u32(is, d);
    std::string name(name_len, '\0');
    take_bytes(is, d, name.data(), name_len);
    const std::uint32_t ndim = take_u32(is, d);
    std::vector<int> shape(ndim);
    for (std::uint32_t k = 0; k < ndim; ++k) {
      shape[k] = static_cast<int>(take_u32(is, d));
    }
    Tensor t(shape);
    take_bytes(is, d, t.data.data(), t.data.size() * sizeof(float));
    if (!out.tensors.emplace(std::move(name), std::move(t)).second) {
      throw IncompatibilityError("duplicate tensor in weight archive");
    }
  }
  std::uint64_t stored = 0;
  if (!is.read(reinterpret_cast<char*>(&stored), sizeof(stored))) {
    throw IncompatibilityError("weight archive truncated");
  }
  if (stored != d.value()) {
    throw IncompatibilityError("weight archive checksum mismatch");
  }
  return out;
}

WeightArchive load_weights(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IngestionError("cannot open weight archive: " + path);
  try {
    return load_weights_stream(is);
  } catch (const IncompatibilityError& e) {
    throw IncompatibilityError(std::string(e.what()) + ": " + path);
  }
}

void save_graph_weights(Graph& graph, const std::string& path,
                        const std::string& meta_json) {
  std::vector<std::pair<std::string, const Tensor*>> entries;
  for (const auto& p : graph.params()) entries.emplace_back(p.name, p.value);
  save_weights(path, entries, meta_json);
}

void load_graph_weights(Graph& graph, const WeightArchive& archive) {
  std::set<std::string> used;
  for (auto& p : graph.params()) {
    auto it = archive.tensors.find(p.name);
    if (it == archive.tensors.end()) {
      throw IncompatibilityError("archive is missing parameter " + p.name);
    }
    if (it->second.shape != p.value->shape) {
      throw IncompatibilityError("shape mismatch for " + p.name + ": archive " +
                                 it->second.shape_str() + " vs model " +
                                 p.value->shape_str());
    }
    *p.value = it->second;
    used.insert(p.name);
  }
  for (const auto& [name, tensor] : archive.tensors) {
    (void)tensor;
    if (!used.count(name)) {
      throw IncompatibilityError("archive has parameter unknown to the model: " + name);
    }
  }
}

}  // namespace fer::nn
