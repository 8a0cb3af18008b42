#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fer/nn/ops.hpp"
#include "fer/nn/tensor.hpp"

namespace fer::nn {

// One named parameter of a layer.  `learnable` distinguishes optimizable
// weights from state that is persisted but never stepped (moving statistics).
struct ParamView {
  std::string name;
  Tensor* value = nullptr;
  Tensor* grad = nullptr;
  bool learnable = true;
};

using Initializer = std::function<void(const std::string& param_name, Tensor& value)>;

class Layer {
 public:
  explicit Layer(std::string name) : name_(std::move(name)) {}
  virtual ~Layer() = default;

  // xs outlive the call; layers must not retain the pointers past backward.
  virtual Tensor forward(const std::vector<const Tensor*>& xs, bool training) = 0;
  // Gradients w.r.t. each input, given the cached inputs, own output and dy.
  virtual std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                                       const Tensor& y, const Tensor& dy) = 0;

  virtual void build(const std::vector<int>& input_shape, const Initializer& init);
  virtual std::vector<ParamView> params() { return {}; }
  virtual std::size_t arity() const { return 1; }
  virtual std::string describe() const = 0;

  std::int64_t param_count() const;
  std::int64_t learnable_param_count() const;

  const std::string& name() const { return name_; }
  bool trainable() const { return trainable_; }
  void set_trainable(bool value) { trainable_ = value; }
  bool built() const { return built_; }

 protected:
  std::string name_;
  bool trainable_ = true;
  bool built_ = false;
};

class DenseLayer final : public Layer {
 public:
  DenseLayer(std::string name, int units, Activation act = Activation::kLinear,
             bool use_bias = true, float alpha = 0.2f);
  void build(const std::vector<int>& input_shape, const Initializer& init) override;
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::vector<ParamView> params() override;
  std::string describe() const override;

 private:
  int units_, in_features_ = 0;
  Activation act_;
  bool use_bias_;
  float alpha_;
  Tensor w_, b_, dw_, db_;
};

class Conv2DLayer final : public Layer {
 public:
  Conv2DLayer(std::string name, int filters, int kernel_h, int kernel_w,
              int stride_h, int stride_w, Padding padding,
              Activation act = Activation::kLinear, bool use_bias = true,
              float alpha = 0.2f);
  void build(const std::vector<int>& input_shape, const Initializer& init) override;
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::vector<ParamView> params() override;
  std::string describe() const override;

 private:
  int filters_, kernel_h_, kernel_w_, stride_h_, stride_w_;
  Padding padding_;
  Activation act_;
  bool use_bias_;
  float alpha_;
  int in_channels_ = 0;
  ConvGeom geom_;
  Tensor w_, b_, dw_, db_;
  std::vector<float> cols_;
};

// Stride-s upsampling convolution; only 'same' padding is supported, for which
// the output side is exactly in*stride (the only regime exercised here).
class Conv2DTransposeLayer final : public Layer {
 public:
  Conv2DTransposeLayer(std::string name, int filters, int kernel_h, int kernel_w,
                       int stride_h, int stride_w, Padding padding,
                       Activation act = Activation::kLinear, bool use_bias = true,
                       float alpha = 0.2f);
  void build(const std::vector<int>& input_shape, const Initializer& init) override;
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::vector<ParamView> params() override;
  std::string describe() const override;

 private:
  int filters_, kernel_h_, kernel_w_, stride_h_, stride_w_;
  Activation act_;
  bool use_bias_;
  float alpha_;
  int in_channels_ = 0, out_h_ = 0, out_w_ = 0;
  ConvGeom mirror_;  // geometry of the conv this op is the adjoint of
  Tensor w_, b_, dw_, db_;
  std::vector<float> cols_;
};

class BatchNormLayer final : public Layer {
 public:
  BatchNormLayer(std::string name, double epsilon = 1e-3, double momentum = 0.99,
                 bool scale = true, bool center = true);
  void build(const std::vector<int>& input_shape, const Initializer& init) override;
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::vector<ParamView> params() override;
  std::string describe() const override;

 private:
  double epsilon_, momentum_;
  bool scale_, center_;
  int channels_ = 0;
  Tensor gamma_, beta_, moving_mean_, moving_var_;
  Tensor dgamma_, dbeta_;
  std::vector<float> mean_, inv_std_;  // stats used by the last forward
  bool used_batch_stats_ = false;
};

class MaxPool2DLayer final : public Layer {
 public:
  MaxPool2DLayer(std::string name, int pool_h, int pool_w, int stride_h,
                 int stride_w, Padding padding);
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::string describe() const override;

 private:
  int pool_h_, pool_w_, stride_h_, stride_w_;
  Padding padding_;
  std::vector<std::int64_t> argmax_;
};

class AvgPool2DLayer final : public Layer {
 public:
  AvgPool2DLayer(std::string name, int pool_h, int pool_w, int stride_h,
                 int stride_w, Padding padding);
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::string describe() const override;

 private:
  int pool_h_, pool_w_, stride_h_, stride_w_;
  Padding padding_;
};

class GlobalAvgPoolLayer final : public Layer {
 public:
  explicit GlobalAvgPoolLayer(std::string name);
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::string describe() const override;
};

class FlattenLayer final : public Layer {
 public:
  explicit FlattenLayer(std::string name);
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::string describe() const override;
};

// Per-sample reshape; target excludes the batch dimension.
class ReshapeLayer final : public Layer {
 public:
  ReshapeLayer(std::string name, std::vector<int> target);
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::string describe() const override;

 private:
  std::vector<int> target_;
};

class ActivationLayer final : public Layer {
 public:
  ActivationLayer(std::string name, Activation act, float alpha = 0.2f);
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::string describe() const override;

 private:
  Activation act_;
  float alpha_;
};

// Concatenation along the trailing (channel) axis.
class ConcatLayer final : public Layer {
 public:
  ConcatLayer(std::string name, std::size_t arity);
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::size_t arity() const override { return arity_; }
  std::string describe() const override;

 private:
  std::size_t arity_;
};

// y = x0 + scale * x1 (residual merge with a fixed coefficient).
class ScaledAddLayer final : public Layer {
 public:
  ScaledAddLayer(std::string name, float scale);
  Tensor forward(const std::vector<const Tensor*>& xs, bool training) override;
  std::vector<Tensor> backward(const std::vector<const Tensor*>& xs,
                               const Tensor& y, const Tensor& dy) override;
  std::size_t arity() const override { return 2; }
  std::string describe() const override;

 private:
  float scale_;
};

// Glorot/Xavier uniform fill with the fan rule used by the reference stacks:
// receptive field = product of all dims but the last two.
void glorot_uniform_fill(Tensor& value, std::uint64_t seed);

Initializer make_glorot_initializer(std::uint64_t master_seed);

}  // namespace fer::nn
