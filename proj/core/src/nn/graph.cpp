#include "fer/nn/graph.hpp"

#include <algorithm>
#include <cmath>

#include "fer/errors.hpp"

namespace fer::nn {

Graph::Graph(std::string name, std::uint64_t init_seed)
    : name_(std::move(name)), init_seed_(init_seed) {}

void Graph::add_input(const std::string& name) {
  if (input_node_ >= 0) throw ConfigurationError(name_ + ": graph already has an input");
  if (by_name_.count(name)) throw ConfigurationError(name_ + ": duplicate node " + name);
  Node node;
  node.name = name;
  by_name_[name] = static_cast<int>(nodes_.size());
  input_node_ = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
}

Layer& Graph::add(std::unique_ptr<Layer> layer, const std::vector<std::string>& inputs) {
  if (input_node_ < 0) throw ConfigurationError(name_ + ": add an input node first");
  if (by_name_.count(layer->name())) {
    throw ConfigurationError(name_ + ": duplicate node " + layer->name());
  }
  if (inputs.size() != layer->arity()) {
    throw ConfigurationError(name_ + ": " + layer->name() + " expects " +
                             std::to_string(layer->arity()) + " inputs, got " +
                             std::to_string(inputs.size()));
  }
  Node node;
  node.name = layer->name();
  for (const auto& in : inputs) node.inputs.push_back(index_of(in));
  node.layer = std::move(layer);
  by_name_[node.name] = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
  return *nodes_.back().layer;
}

Layer& Graph::add(std::unique_ptr<Layer> layer) {
  if (nodes_.empty()) throw ConfigurationError(name_ + ": add an input node first");
  return add(std::move(layer), {nodes_.back().name});
}

bool Graph::has_layer(const std::string& name) const {
  auto it = by_name_.find(name);
  return it != by_name_.end() &&
         nodes_[static_cast<std::size_t>(it->second)].layer != nullptr;
}

Layer& Graph::layer(const std::string& name) {
  const int idx = index_of(name);
  if (!nodes_[static_cast<std::size_t>(idx)].layer) {
    throw ConfigurationError(name_ + ": " + name + " is the input placeholder");
  }
  return *nodes_[static_cast<std::size_t>(idx)].layer;
}

std::vector<std::string> Graph::node_names() const {
  std::vector<std::string> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back(n.name);
  return out;
}

const std::string& Graph::input_name() const {
  if (input_node_ < 0) throw ConfigurationError(name_ + ": graph has no input");
  return nodes_[static_cast<std::size_t>(input_node_)].name;
}

int Graph::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw ConfigurationError(name_ + ": unknown node " + name);
  return it->second;
}

void Graph::ensure_built(const std::vector<int>& input_shape) {
  if (built_) return;
  build(input_shape);
}

void Graph::build(const std::vector<int>& input_shape) {
  if (built_) return;
  if (input_node_ < 0) throw ConfigurationError(name_ + ": graph has no input");
  const Initializer init = make_glorot_initializer(init_seed_);
  // Dry forward with a zero batch of one to size every layer.
  std::vector<int> shape = input_shape;
  shape[0] = 1;
  std::vector<Tensor> outs(nodes_.size());
  outs[static_cast<std::size_t>(input_node_)] = Tensor(shape);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    Node& node = nodes_[i];
    if (!node.layer) continue;
    std::vector<const Tensor*> xs;
    xs.reserve(node.inputs.size());
    for (int in : node.inputs) xs.push_back(&outs[static_cast<std::size_t>(in)]);
    if (!node.layer->built()) node.layer->build(xs[0]->shape, init);
    outs[i] = node.layer->forward(xs, false);
  }
  built_ = true;
}

Tensor Graph::forward(const Tensor& x, bool training) {
  ensure_built(x.shape);
  nodes_[static_cast<std::size_t>(input_node_)].output = x;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    Node& node = nodes_[i];
    if (!node.layer) continue;
    std::vector<const Tensor*> xs;
    xs.reserve(node.inputs.size());
    for (int in : node.inputs) xs.push_back(&nodes_[static_cast<std::size_t>(in)].output);
    node.output = node.layer->forward(xs, training);
  }
  forward_done_ = true;
  return nodes_.back().output;
}

Tensor Graph::backward(const Tensor& dy) {
  if (!forward_done_) throw TrainingError(name_ + ": backward before forward");
  zero_grads();
  for (auto& node : nodes_) {
    node.grad = Tensor();
    node.grad_set = false;
  }
  Node& out_node = nodes_.back();
  if (!dy.same_shape(out_node.output)) {
    throw RangeError(name_ + ": dy shape " + dy.shape_str() + " != output " +
                     out_node.output.shape_str());
  }
  out_node.grad = dy;
  out_node.grad_set = true;
  for (std::size_t ri = nodes_.size(); ri-- > 0;) {
    Node& node = nodes_[ri];
    if (!node.layer || !node.grad_set) continue;
    std::vector<const Tensor*> xs;
    xs.reserve(node.inputs.size());
    for (int in : node.inputs) xs.push_back(&nodes_[static_cast<std::size_t>(in)].output);
    std::vector<Tensor> dxs = node.layer->backward(xs, node.output, node.grad);
    if (dxs.size() != node.inputs.size()) {
      throw TrainingError(name_ + ": " + node.name + " returned wrong gradient count");
    }
    for (std::size_t k = 0; k < dxs.size(); ++k) {
      Node& src = nodes_[static_cast<std::size_t>(node.inputs[k])];
      if (!src.grad_set) {
        src.grad = std::move(dxs[k]);
        src.grad_set = true;
      } else {
        for (std::int64_t j = 0; j < src.grad.numel(); ++j) {
          src.grad.data[static_cast<std::size_t>(j)] += dxs[k].data[static_cast<std::size_t>(j)];
        }
      }
    }
    node.grad = Tensor();  // release as soon as consumed
    node.grad_set = false;
  }
  Node& in_node = nodes_[static_cast<std::size_t>(input_node_)];
  if (!in_node.grad_set) {
    in_node.grad = Tensor(in_node.output.shape);
  }
  return std::move(in_node.grad);
}

void Graph::zero_grads() {
  for (auto& p : params()) {
    if (p.grad) std::fill(p.grad->data.begin(), p.grad->data.end(), 0.0f);
  }
}

std::vector<ParamView> Graph::params() {
  std::vector<ParamView> out;
  for (auto& node : nodes_) {
    if (!node.layer) continue;
    for (auto& p : node.layer->params()) out.push_back(p);
  }
  return out;
}

std::vector<ParamView> Graph::trainable_params() {
  std::vector<ParamView> out;
  for (auto& node : nodes_) {
    if (!node.layer || !node.layer->trainable()) continue;
    for (auto& p : node.layer->params()) {
      if (p.learnable) out.push_back(p);
    }
  }
  return out;
}

std::int64_t Graph::param_count() {
  std::int64_t total = 0;
  for (auto& p : params()) total += p.value->numel();
  return total;
}

std::int64_t Graph::trainable_param_count() {
  std::int64_t total = 0;
  for (auto& node : nodes_) {
    if (!node.layer || !node.layer->trainable()) continue;
    for (auto& p : node.layer->params()) {
      if (p.learnable) total += p.value->numel();
    }
  }
  return total;
}

void Graph::set_trainable_all(bool value) {
  for (auto& node : nodes_) {
    if (node.layer) node.layer->set_trainable(value);
  }
}

// ---------------------------------------------------------------------------
// Adam

Adam::Adam(Config cfg) : cfg_(cfg) {
  if (cfg.lr <= 0 || cfg.beta1 < 0 || cfg.beta1 >= 1 || cfg.beta2 < 0 ||
      cfg.beta2 >= 1 || cfg.eps <= 0) {
    throw ConfigurationError("invalid optimizer configuration");
  }
}

void Adam::step(const std::vector<ParamView>& params) {
  ++t_;
  const double bc1 = 1.0 - std::pow(static_cast<double>(cfg_.beta1), static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(static_cast<double>(cfg_.beta2), static_cast<double>(t_));
  for (const auto& p : params) {
    if (!p.learnable || !p.grad) continue;
    Slot& slot = slots_[p.name];
    const std::size_t n = p.value->data.size();
    if (slot.m.size() != n) {
      slot.m.assign(n, 0.0f);
      slot.v.assign(n, 0.0f);
    }
    float* w = p.value->data.data();
    const float* g = p.grad->data.data();
    for (std::size_t i = 0; i < n; ++i) {
      slot.m[i] = cfg_.beta1 * slot.m[i] + (1.0f - cfg_.beta1) * g[i];
      slot.v[i] = cfg_.beta2 * slot.v[i] + (1.0f - cfg_.beta2) * g[i] * g[i];
      const double mhat = slot.m[i] / bc1;
      const double vhat = slot.v[i] / bc2;
      w[i] -= static_cast<float>(cfg_.lr * mhat / (std::sqrt(vhat) + cfg_.eps));
    }
  }
}

void Adam::reset() {
  slots_.clear();
  t_ = 0;
}

// ---------------------------------------------------------------------------
// Losses

LossResult softmax_cross_entropy(const Tensor& logits, const std::vector<int>& labels) {
  if (logits.ndim() != 2) throw RangeError("cross-entropy expects rank-2 logits");
  const int n = logits.shape[0];
  const int classes = logits.shape[1];
  if (static_cast<int>(labels.size()) != n) {
    throw RangeError("label count does not match batch size");
  }
  LossResult res;
  res.dlogits = softmax_rows(logits);
  double loss = 0.0;
  const float inv_n = 1.0f / static_cast<float>(n);
  for (int r = 0; r < n; ++r) {
    const int lbl = labels[static_cast<std::size_t>(r)];
    if (lbl < 0 || lbl >= classes) throw RangeError("label out of range");
    float* row = res.dlogits.data.data() + static_cast<std::int64_t>(r) * classes;
    loss -= std::log(std::max(row[lbl], 1e-12f));
    row[lbl] -= 1.0f;
    for (int c = 0; c < classes; ++c) row[c] *= inv_n;
  }
  res.value = loss / n;
  return res;
}

LossResult sigmoid_binary_cross_entropy(const Tensor& logits, const Tensor& targets) {
  if (!logits.same_shape(targets)) {
    throw RangeError("logits/targets shape mismatch: " + logits.shape_str() + " vs " +
                     targets.shape_str());
  }
  const std::int64_t n = logits.numel();
  const std::int64_t batch = logits.shape.empty() ? 1 : logits.shape[0];
  LossResult res;
  res.dlogits = Tensor(logits.shape);
  double loss = 0.0;
  const float inv = 1.0f / static_cast<float>(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const float z = logits.data[static_cast<std::size_t>(i)];
    const float t = targets.data[static_cast<std::size_t>(i)];
    // max(z,0) - z*t + log(1 + exp(-|z|)), the overflow-safe BCE form.
    loss += std::max(z, 0.0f) - z * t + std::log1p(std::exp(-std::abs(z)));
    const float sig = z >= 0.0f ? 1.0f / (1.0f + std::exp(-z))
                                : std::exp(z) / (1.0f + std::exp(z));
    res.dlogits.data[static_cast<std::size_t>(i)] = (sig - t) * inv;
  }
  (void)batch;
  res.value = loss / static_cast<double>(n);
  return res;
}

}  // namespace fer::nn
