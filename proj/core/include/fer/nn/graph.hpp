#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "fer/nn/layers.hpp"
#include "fer/nn/tensor.hpp"

namespace fer::nn {

// A single-input, single-output DAG of layers.  Nodes must be added in
// topological order; the last node added is the output.
class Graph {
 public:
  explicit Graph(std::string name = "model", std::uint64_t init_seed = 0);

  // The entry placeholder; exactly one per graph, added first.
  void add_input(const std::string& name);
  Layer& add(std::unique_ptr<Layer> layer, const std::vector<std::string>& inputs);
  // Convenience for chains: wires to the most recently added node.
  Layer& add(std::unique_ptr<Layer> layer);

  /// True for nodes backed by a Layer; the input placeholder is not one.
  bool has_layer(const std::string& name) const;
  Layer& layer(const std::string& name);
  // Node names in insertion (topological) order, input placeholder included.
  std::vector<std::string> node_names() const;
  std::size_t node_count() const { return nodes_.size(); }
  const std::string& name() const { return name_; }
  const std::string& input_name() const;

  // Builds all layers for the given full input shape (batch dim included) and
  // fills weights from the seeded initializer.  Forward builds lazily too.
  void build(const std::vector<int>& input_shape);
  bool built() const { return built_; }

  Tensor forward(const Tensor& x, bool training);
  // Propagates dy from the output node; zeroes parameter gradients first and
  // returns the gradient at the input placeholder.
  Tensor backward(const Tensor& dy);
  void zero_grads();

  std::vector<ParamView> params();
  // Learnable params of trainable layers only: what an optimizer may touch.
  std::vector<ParamView> trainable_params();
  std::int64_t param_count();
  std::int64_t trainable_param_count();

  void set_trainable_all(bool value);

 private:
  struct Node {
    std::string name;
    std::unique_ptr<Layer> layer;  // null for the input placeholder
    std::vector<int> inputs;
    Tensor output;
    Tensor grad;
    bool grad_set = false;
  };

  int index_of(const std::string& name) const;
  void ensure_built(const std::vector<int>& input_shape);

  std::string name_;
  std::uint64_t init_seed_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> by_name_;
  int input_node_ = -1;
  bool built_ = false;
  bool forward_done_ = false;
};

// Adam with bias correction.  Slots are keyed by parameter name, so a
// parameter that is frozen never acquires state, and one unfrozen later starts
// from fresh moments.
class Adam {
 public:
  struct Config {
    float lr = 1e-3f;
    float beta1 = 0.9f;
    float beta2 = 0.999f;
    float eps = 1e-7f;
  };

  explicit Adam(Config cfg);
  void step(const std::vector<ParamView>& params);
  void reset();
  std::int64_t iterations() const { return t_; }
  const Config& config() const { return cfg_; }
  void set_lr(float lr) { cfg_.lr = lr; }

 private:
  struct Slot {
    std::vector<float> m, v;
  };
  Config cfg_;
  std::int64_t t_ = 0;
  std::unordered_map<std::string, Slot> slots_;
};

struct LossResult {
  double value = 0.0;
  Tensor dlogits;
};

// Mean categorical cross-entropy over the batch, computed from logits.
LossResult softmax_cross_entropy(const Tensor& logits, const std::vector<int>& labels);

// Mean binary cross-entropy over the batch, computed from logits.
// targets has the same shape as logits with values in [0, 1].
LossResult sigmoid_binary_cross_entropy(const Tensor& logits, const Tensor& targets);

}  // namespace fer::nn
