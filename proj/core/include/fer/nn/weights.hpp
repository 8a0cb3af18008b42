#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fer/nn/graph.hpp"
#include "fer/nn/tensor.hpp"

namespace fer::nn {

// Binary tensor archive: magic, a free-form JSON metadata string, named
// shaped float blobs, and a trailing checksum.
inline constexpr char kWeightMagic[] = "FERW1\n";

struct WeightArchive {
  std::string meta_json;
  std::map<std::string, Tensor> tensors;
};

void save_weights(const std::string& path,
                  const std::vector<std::pair<std::string, const Tensor*>>& entries,
                  const std::string& meta_json = "{}");

WeightArchive load_weights(const std::string& path);

// Stream forms, for embedding archives inside larger container files.  The
// archive is self-delimiting, so several can be concatenated.
void save_weights_stream(std::ostream& os,
                         const std::vector<std::pair<std::string, const Tensor*>>& entries,
                         const std::string& meta_json = "{}");
WeightArchive load_weights_stream(std::istream& is);

// Every graph parameter (moving statistics included) into one archive.
void save_graph_weights(Graph& graph, const std::string& path,
                        const std::string& meta_json = "{}");

// Strict by-name restore: unknown, missing or reshaped parameters are errors.
void load_graph_weights(Graph& graph, const WeightArchive& archive);

}  // namespace fer::nn
