#include "fer/nn/layers.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#include "fer/errors.hpp"
#include "fer/rng.hpp"

namespace fer::nn {

namespace {

void require_rank(const Tensor& t, int rank, const std::string& who) {
  if (t.ndim() != rank) {
    throw RangeError(who + " expects a rank-" + std::to_string(rank) +
                     " tensor, got " + t.shape_str());
  }
}

std::int64_t sample_numel(const Tensor& t) {
  std::int64_t n = 1;
  for (std::size_t i = 1; i < t.shape.size(); ++i) n *= t.shape[i];
  return n;
}

}  // namespace

void Layer::build(const std::vector<int>&, const Initializer&) { built_ = true; }

std::int64_t Layer::param_count() const {
  std::int64_t total = 0;
  for (const auto& p : const_cast<Layer*>(this)->params()) total += p.value->numel();
  return total;
}

std::int64_t Layer::learnable_param_count() const {
  std::int64_t total = 0;
  for (const auto& p : const_cast<Layer*>(this)->params()) {
    if (p.learnable) total += p.value->numel();
  }
  return total;
}

// ---------------------------------------------------------------------------
// Dense

DenseLayer::DenseLayer(std::string name, int units, Activation act, bool use_bias,
                       float alpha)
    : Layer(std::move(name)), units_(units), act_(act), use_bias_(use_bias),
      alpha_(alpha) {
  if (units <= 0) throw RangeError("dense units must be positive");
}

void DenseLayer::build(const std::vector<int>& input_shape, const Initializer& init) {
  if (built_) return;
  if (input_shape.size() != 2) {
    throw RangeError(name_ + ": dense input must be rank 2");
  }
  in_features_ = input_shape[1];
  w_ = Tensor({in_features_, units_});
  dw_ = Tensor({in_features_, units_});
  init(name_ + "/kernel", w_);
  if (use_bias_) {
    b_ = Tensor({units_});
    db_ = Tensor({units_});
  }
  built_ = true;
}

Tensor DenseLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  const Tensor& x = *xs[0];
  require_rank(x, 2, name_);
  const int n = x.shape[0];
  Tensor y({n, units_});
  matmul(x.data.data(), w_.data.data(), y.data.data(), n, in_features_, units_,
         false, false, false);
  if (use_bias_) {
    for (int r = 0; r < n; ++r) {
      float* row = y.data.data() + static_cast<std::int64_t>(r) * units_;
      for (int c = 0; c < units_; ++c) row[c] += b_.data[c];
    }
  }
  apply_activation(act_, alpha_, y.data.data(), y.numel());
  return y;
}

std::vector<Tensor> DenseLayer::backward(const std::vector<const Tensor*>& xs,
                                         const Tensor& y, const Tensor& dy) {
  const Tensor& x = *xs[0];
  const int n = x.shape[0];
  Tensor dz = dy;
  activation_backward(act_, alpha_, y.data.data(), dz.data.data(), dz.numel());
  matmul(x.data.data(), dz.data.data(), dw_.data.data(), in_features_, n, units_,
         true, false, true);
  if (use_bias_) {
    for (int r = 0; r < n; ++r) {
      const float* row = dz.data.data() + static_cast<std::int64_t>(r) * units_;
      for (int c = 0; c < units_; ++c) db_.data[c] += row[c];
    }
  }
  Tensor dx(x.shape);
  matmul(dz.data.data(), w_.data.data(), dx.data.data(), n, units_, in_features_,
         false, true, false);
  return {std::move(dx)};
}

std::vector<ParamView> DenseLayer::params() {
  std::vector<ParamView> out{{name_ + "/kernel", &w_, &dw_, true}};
  if (use_bias_) out.push_back({name_ + "/bias", &b_, &db_, true});
  return out;
}

std::string DenseLayer::describe() const {
  return "Dense(" + std::to_string(units_) + ", " + activation_name(act_) + ")";
}

// ---------------------------------------------------------------------------
// Conv2D

Conv2DLayer::Conv2DLayer(std::string name, int filters, int kernel_h, int kernel_w,
                         int stride_h, int stride_w, Padding padding, Activation act,
                         bool use_bias, float alpha)
    : Layer(std::move(name)), filters_(filters), kernel_h_(kernel_h),
      kernel_w_(kernel_w), stride_h_(stride_h), stride_w_(stride_w),
      padding_(padding), act_(act), use_bias_(use_bias), alpha_(alpha) {
  if (filters <= 0 || kernel_h <= 0 || kernel_w <= 0 || stride_h <= 0 || stride_w <= 0) {
    throw RangeError("conv parameters must be positive");
  }
}

void Conv2DLayer::build(const std::vector<int>& input_shape, const Initializer& init) {
  if (built_) return;
  if (input_shape.size() != 4) throw RangeError(name_ + ": conv input must be rank 4");
  in_channels_ = input_shape[3];
  w_ = Tensor({kernel_h_, kernel_w_, in_channels_, filters_});
  dw_ = Tensor(w_.shape);
  init(name_ + "/kernel", w_);
  if (use_bias_) {
    b_ = Tensor({filters_});
    db_ = Tensor({filters_});
  }
  built_ = true;
}

Tensor Conv2DLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  const Tensor& x = *xs[0];
  require_rank(x, 4, name_);
  const int n = x.shape[0];
  geom_ = make_conv_geom(x.shape[1], x.shape[2], kernel_h_, kernel_w_, stride_h_,
                         stride_w_, padding_);
  const std::int64_t patch = static_cast<std::int64_t>(kernel_h_) * kernel_w_ * in_channels_;
  const std::int64_t cells = static_cast<std::int64_t>(geom_.out_h) * geom_.out_w;
  cols_.resize(static_cast<std::size_t>(patch * cells));
  Tensor y({n, geom_.out_h, geom_.out_w, filters_});
  const std::int64_t in_stride = sample_numel(x);
  const std::int64_t out_stride = cells * filters_;
  for (int i = 0; i < n; ++i) {
    im2col(x.data.data() + i * in_stride, in_channels_, geom_, cols_.data());
    matmul(cols_.data(), w_.data.data(), y.data.data() + i * out_stride,
           static_cast<int>(cells), static_cast<int>(patch), filters_, false, false,
           false);
  }
  if (use_bias_) {
    float* p = y.data.data();
    for (std::int64_t i = 0, rows = n * cells; i < rows; ++i, p += filters_) {
      for (int c = 0; c < filters_; ++c) p[c] += b_.data[c];
    }
  }
  apply_activation(act_, alpha_, y.data.data(), y.numel());
  return y;
}

std::vector<Tensor> Conv2DLayer::backward(const std::vector<const Tensor*>& xs,
                                          const Tensor& y, const Tensor& dy) {
  const Tensor& x = *xs[0];
  const int n = x.shape[0];
  Tensor dz = dy;
  activation_backward(act_, alpha_, y.data.data(), dz.data.data(), dz.numel());
  const std::int64_t patch = static_cast<std::int64_t>(kernel_h_) * kernel_w_ * in_channels_;
  const std::int64_t cells = static_cast<std::int64_t>(geom_.out_h) * geom_.out_w;
  const std::int64_t in_stride = sample_numel(x);
  const std::int64_t out_stride = cells * filters_;
  std::vector<float> dcols(static_cast<std::size_t>(patch * cells));
  Tensor dx(x.shape);
  for (int i = 0; i < n; ++i) {
    const float* dz_i = dz.data.data() + i * out_stride;
    im2col(x.data.data() + i * in_stride, in_channels_, geom_, cols_.data());
    matmul(cols_.data(), dz_i, dw_.data.data(), static_cast<int>(patch),
           static_cast<int>(cells), filters_, true, false, true);
    matmul(dz_i, w_.data.data(), dcols.data(), static_cast<int>(cells), filters_,
           static_cast<int>(patch), false, true, false);
    col2im(dcols.data(), in_channels_, geom_, dx.data.data() + i * in_stride);
  }
  if (use_bias_) {
    const float* p = dz.data.data();
    for (std::int64_t i = 0, rows = n * cells; i < rows; ++i, p += filters_) {
      for (int c = 0; c < filters_; ++c) db_.data[c] += p[c];
    }
  }
  return {std::move(dx)};
}

std::vector<ParamView> Conv2DLayer::params() {
  std::vector<ParamView> out{{name_ + "/kernel", &w_, &dw_, true}};
  if (use_bias_) out.push_back({name_ + "/bias", &b_, &db_, true});
  return out;
}

std::string Conv2DLayer::describe() const {
  return "Conv2D(" + std::to_string(filters_) + ", " + std::to_string(kernel_h_) +
         "x" + std::to_string(kernel_w_) + ", s" + std::to_string(stride_h_) + ", " +
         (padding_ == Padding::kSame ? "same" : "valid") + ", " +
         activation_name(act_) + ")";
}

// ---------------------------------------------------------------------------
// Conv2DTranspose

Conv2DTransposeLayer::Conv2DTransposeLayer(std::string name, int filters, int kernel_h,
                                           int kernel_w, int stride_h, int stride_w,
                                           Padding padding, Activation act,
                                           bool use_bias, float alpha)
    : Layer(std::move(name)), filters_(filters), kernel_h_(kernel_h),
      kernel_w_(kernel_w), stride_h_(stride_h), stride_w_(stride_w), act_(act),
      use_bias_(use_bias), alpha_(alpha) {
  if (padding != Padding::kSame) {
    throw ConfigurationError(name_ + ": transposed conv supports 'same' padding only");
  }
  if (filters <= 0 || kernel_h <= 0 || kernel_w <= 0 || stride_h <= 0 || stride_w <= 0) {
    throw RangeError("transposed conv parameters must be positive");
  }
}

void Conv2DTransposeLayer::build(const std::vector<int>& input_shape,
                                 const Initializer& init) {
  if (built_) return;
  if (input_shape.size() != 4) {
    throw RangeError(name_ + ": transposed conv input must be rank 4");
  }
  in_channels_ = input_shape[3];
  w_ = Tensor({kernel_h_, kernel_w_, filters_, in_channels_});
  dw_ = Tensor(w_.shape);
  init(name_ + "/kernel", w_);
  if (use_bias_) {
    b_ = Tensor({filters_});
    db_ = Tensor({filters_});
  }
  built_ = true;
}

Tensor Conv2DTransposeLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  const Tensor& x = *xs[0];
  require_rank(x, 4, name_);
  const int n = x.shape[0];
  const int ih = x.shape[1], iw = x.shape[2];
  out_h_ = ih * stride_h_;
  out_w_ = iw * stride_w_;
  mirror_ = make_conv_geom(out_h_, out_w_, kernel_h_, kernel_w_, stride_h_, stride_w_,
                           Padding::kSame);
  const std::int64_t patch = static_cast<std::int64_t>(kernel_h_) * kernel_w_ * filters_;
  const std::int64_t cells = static_cast<std::int64_t>(ih) * iw;
  cols_.resize(static_cast<std::size_t>(patch * cells));
  Tensor y({n, out_h_, out_w_, filters_});
  const std::int64_t in_stride = sample_numel(x);
  const std::int64_t out_stride = static_cast<std::int64_t>(out_h_) * out_w_ * filters_;
  for (int i = 0; i < n; ++i) {
    matmul(x.data.data() + i * in_stride, w_.data.data(), cols_.data(),
           static_cast<int>(cells), in_channels_, static_cast<int>(patch), false, true,
           false);
    col2im(cols_.data(), filters_, mirror_, y.data.data() + i * out_stride);
  }
  if (use_bias_) {
    float* p = y.data.data();
    for (std::int64_t i = 0, rows = static_cast<std::int64_t>(n) * out_h_ * out_w_;
         i < rows; ++i, p += filters_) {
      for (int c = 0; c < filters_; ++c) p[c] += b_.data[c];
    }
  }
  apply_activation(act_, alpha_, y.data.data(), y.numel());
  return y;
}

std::vector<Tensor> Conv2DTransposeLayer::backward(const std::vector<const Tensor*>& xs,
                                                   const Tensor& y, const Tensor& dy) {
  const Tensor& x = *xs[0];
  const int n = x.shape[0];
  Tensor dz = dy;
  activation_backward(act_, alpha_, y.data.data(), dz.data.data(), dz.numel());
  const std::int64_t patch = static_cast<std::int64_t>(kernel_h_) * kernel_w_ * filters_;
  const std::int64_t cells = static_cast<std::int64_t>(x.shape[1]) * x.shape[2];
  const std::int64_t in_stride = sample_numel(x);
  const std::int64_t out_stride = static_cast<std::int64_t>(out_h_) * out_w_ * filters_;
  Tensor dx(x.shape);
  for (int i = 0; i < n; ++i) {
    const float* dz_i = dz.data.data() + i * out_stride;
    im2col(dz_i, filters_, mirror_, cols_.data());
    matmul(cols_.data(), w_.data.data(), dx.data.data() + i * in_stride,
           static_cast<int>(cells), static_cast<int>(patch), in_channels_, false, false,
           false);
    matmul(cols_.data(), x.data.data() + i * in_stride, dw_.data.data(),
           static_cast<int>(patch), static_cast<int>(cells), in_channels_, true, false,
           true);
  }
  if (use_bias_) {
    const float* p = dz.data.data();
    for (std::int64_t i = 0, rows = static_cast<std::int64_t>(n) * out_h_ * out_w_;
         i < rows; ++i, p += filters_) {
      for (int c = 0; c < filters_; ++c) db_.data[c] += p[c];
    }
  }
  return {std::move(dx)};
}

std::vector<ParamView> Conv2DTransposeLayer::params() {
  std::vector<ParamView> out{{name_ + "/kernel", &w_, &dw_, true}};
  if (use_bias_) out.push_back({name_ + "/bias", &b_, &db_, true});
  return out;
}

std::string Conv2DTransposeLayer::describe() const {
  return "Conv2DTranspose(" + std::to_string(filters_) + ", " +
         std::to_string(kernel_h_) + "x" + std::to_string(kernel_w_) + ", s" +
         std::to_string(stride_h_) + ", " + activation_name(act_) + ")";
}

// ---------------------------------------------------------------------------
// BatchNorm

BatchNormLayer::BatchNormLayer(std::string name, double epsilon, double momentum,
                               bool scale, bool center)
    : Layer(std::move(name)), epsilon_(epsilon), momentum_(momentum), scale_(scale),
      center_(center) {}

void BatchNormLayer::build(const std::vector<int>& input_shape, const Initializer&) {
  if (built_) return;
  channels_ = input_shape.back();
  if (scale_) {
    gamma_ = Tensor({channels_});
    std::fill(gamma_.data.begin(), gamma_.data.end(), 1.0f);
    dgamma_ = Tensor({channels_});
  }
  if (center_) {
    beta_ = Tensor({channels_});
    dbeta_ = Tensor({channels_});
  }
  moving_mean_ = Tensor({channels_});
  moving_var_ = Tensor({channels_});
  std::fill(moving_var_.data.begin(), moving_var_.data.end(), 1.0f);
  built_ = true;
}

Tensor BatchNormLayer::forward(const std::vector<const Tensor*>& xs, bool training) {
  const Tensor& x = *xs[0];
  if (x.shape.back() != channels_) {
    throw RangeError(name_ + ": channel mismatch " + x.shape_str());
  }
  const std::int64_t rows = x.numel() / channels_;
  mean_.assign(channels_, 0.0f);
  inv_std_.assign(channels_, 0.0f);
  used_batch_stats_ = training && trainable_;
  if (used_batch_stats_) {
    std::vector<double> sum(channels_, 0.0), sq(channels_, 0.0);
    const float* p = x.data.data();
    for (std::int64_t r = 0; r < rows; ++r, p += channels_) {
      for (int c = 0; c < channels_; ++c) {
        sum[c] += p[c];
        sq[c] += static_cast<double>(p[c]) * p[c];
      }
    }
    for (int c = 0; c < channels_; ++c) {
      const double mu = sum[c] / static_cast<double>(rows);
      const double var = std::max(sq[c] / static_cast<double>(rows) - mu * mu, 0.0);
      mean_[c] = static_cast<float>(mu);
      inv_std_[c] = static_cast<float>(1.0 / std::sqrt(var + epsilon_));
      moving_mean_.data[c] =
          static_cast<float>(momentum_ * moving_mean_.data[c] + (1.0 - momentum_) * mu);
      moving_var_.data[c] =
          static_cast<float>(momentum_ * moving_var_.data[c] + (1.0 - momentum_) * var);
    }
  } else {
    for (int c = 0; c < channels_; ++c) {
      mean_[c] = moving_mean_.data[c];
      inv_std_[c] =
          static_cast<float>(1.0 / std::sqrt(static_cast<double>(moving_var_.data[c]) + epsilon_));
    }
  }
  Tensor y(x.shape);
  const float* p = x.data.data();
  float* q = y.data.data();
  for (std::int64_t r = 0; r < rows; ++r, p += channels_, q += channels_) {
    for (int c = 0; c < channels_; ++c) {
      float v = (p[c] - mean_[c]) * inv_std_[c];
      if (scale_) v *= gamma_.data[c];
      if (center_) v += beta_.data[c];
      q[c] = v;
    }
  }
  return y;
}

std::vector<Tensor> BatchNormLayer::backward(const std::vector<const Tensor*>& xs,
                                             const Tensor&, const Tensor& dy) {
  const Tensor& x = *xs[0];
  const std::int64_t rows = x.numel() / channels_;
  Tensor dx(x.shape);
  std::vector<double> sum_dy(channels_, 0.0), sum_dy_xhat(channels_, 0.0);
  {
    const float* px = x.data.data();
    const float* pd = dy.data.data();
    for (std::int64_t r = 0; r < rows; ++r, px += channels_, pd += channels_) {
      for (int c = 0; c < channels_; ++c) {
        const float xhat = (px[c] - mean_[c]) * inv_std_[c];
        sum_dy[c] += pd[c];
        sum_dy_xhat[c] += static_cast<double>(pd[c]) * xhat;
      }
    }
  }
  if (scale_) {
    for (int c = 0; c < channels_; ++c) dgamma_.data[c] += static_cast<float>(sum_dy_xhat[c]);
  }
  if (center_) {
    for (int c = 0; c < channels_; ++c) dbeta_.data[c] += static_cast<float>(sum_dy[c]);
  }
  const float* px = x.data.data();
  const float* pd = dy.data.data();
  float* pq = dx.data.data();
  if (used_batch_stats_) {
    const double inv_m = 1.0 / static_cast<double>(rows);
    for (std::int64_t r = 0; r < rows; ++r, px += channels_, pd += channels_, pq += channels_) {
      for (int c = 0; c < channels_; ++c) {
        const float g = scale_ ? gamma_.data[c] : 1.0f;
        const float xhat = (px[c] - mean_[c]) * inv_std_[c];
        const double term = static_cast<double>(pd[c]) -
                            inv_m * (sum_dy[c] + xhat * sum_dy_xhat[c]);
        pq[c] = static_cast<float>(g * inv_std_[c] * term);
      }
    }
  } else {
    for (std::int64_t r = 0; r < rows; ++r, pd += channels_, pq += channels_) {
      for (int c = 0; c < channels_; ++c) {
        const float g = scale_ ? gamma_.data[c] : 1.0f;
        pq[c] = pd[c] * g * inv_std_[c];
      }
    }
  }
  return {std::move(dx)};
}

std::vector<ParamView> BatchNormLayer::params() {
  std::vector<ParamView> out;
  if (scale_) out.push_back({name_ + "/gamma", &gamma_, &dgamma_, true});
  if (center_) out.push_back({name_ + "/beta", &beta_, &dbeta_, true});
  out.push_back({name_ + "/moving_mean", &moving_mean_, nullptr, false});
  out.push_back({name_ + "/moving_variance", &moving_var_, nullptr, false});
  return out;
}

std::string BatchNormLayer::describe() const {
  return "BatchNormalization(eps=" + std::to_string(epsilon_) + ")";
}

// ---------------------------------------------------------------------------
// Pools

MaxPool2DLayer::MaxPool2DLayer(std::string name, int pool_h, int pool_w, int stride_h,
                               int stride_w, Padding padding)
    : Layer(std::move(name)), pool_h_(pool_h), pool_w_(pool_w), stride_h_(stride_h),
      stride_w_(stride_w), padding_(padding) {}

Tensor MaxPool2DLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  const Tensor& x = *xs[0];
  require_rank(x, 4, name_);
  const int n = x.shape[0], c = x.shape[3];
  const ConvGeom g = make_conv_geom(x.shape[1], x.shape[2], pool_h_, pool_w_, stride_h_,
                                    stride_w_, padding_);
  Tensor y({n, g.out_h, g.out_w, c});
  argmax_.assign(static_cast<std::size_t>(y.numel()), -1);
  const std::int64_t in_stride = sample_numel(x);
  std::int64_t o = 0;
  for (int i = 0; i < n; ++i) {
    const float* src = x.data.data() + i * in_stride;
    for (int oy = 0; oy < g.out_h; ++oy) {
      for (int ox = 0; ox < g.out_w; ++ox) {
        for (int ch = 0; ch < c; ++ch, ++o) {
          float best = -std::numeric_limits<float>::infinity();
          std::int64_t best_idx = -1;
          for (int ky = 0; ky < pool_h_; ++ky) {
            const int yy = oy * stride_h_ - g.pad_top + ky;
            if (yy < 0 || yy >= g.in_h) continue;
            for (int kx = 0; kx < pool_w_; ++kx) {
              const int xx = ox * stride_w_ - g.pad_left + kx;
              if (xx < 0 || xx >= g.in_w) continue;
              const std::int64_t idx = (static_cast<std::int64_t>(yy) * g.in_w + xx) * c + ch;
              if (src[idx] > best) {
                best = src[idx];
                best_idx = idx;
              }
            }
          }
          y.data[o] = best;
          argmax_[static_cast<std::size_t>(o)] = best_idx;
        }
      }
    }
  }
  return y;
}

std::vector<Tensor> MaxPool2DLayer::backward(const std::vector<const Tensor*>& xs,
                                             const Tensor& y, const Tensor& dy) {
  const Tensor& x = *xs[0];
  Tensor dx(x.shape);
  const std::int64_t in_stride = sample_numel(x);
  const std::int64_t per_sample = y.numel() / y.shape[0];
  for (std::int64_t o = 0; o < dy.numel(); ++o) {
    const std::int64_t i = o / per_sample;
    const std::int64_t idx = argmax_[static_cast<std::size_t>(o)];
    if (idx >= 0) dx.data[static_cast<std::size_t>(i * in_stride + idx)] += dy.data[static_cast<std::size_t>(o)];
  }
  return {std::move(dx)};
}

std::string MaxPool2DLayer::describe() const {
  return "MaxPooling2D(" + std::to_string(pool_h_) + "x" + std::to_string(pool_w_) +
         ", s" + std::to_string(stride_h_) + ")";
}

AvgPool2DLayer::AvgPool2DLayer(std::string name, int pool_h, int pool_w, int stride_h,
                               int stride_w, Padding padding)
    : Layer(std::move(name)), pool_h_(pool_h), pool_w_(pool_w), stride_h_(stride_h),
      stride_w_(stride_w), padding_(padding) {}

Tensor AvgPool2DLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  const Tensor& x = *xs[0];
  require_rank(x, 4, name_);
  const int n = x.shape[0], c = x.shape[3];
  const ConvGeom g = make_conv_geom(x.shape[1], x.shape[2], pool_h_, pool_w_, stride_h_,
                                    stride_w_, padding_);
  Tensor y({n, g.out_h, g.out_w, c});
  const std::int64_t in_stride = sample_numel(x);
  std::int64_t o = 0;
  for (int i = 0; i < n; ++i) {
    const float* src = x.data.data() + i * in_stride;
    for (int oy = 0; oy < g.out_h; ++oy) {
      for (int ox = 0; ox < g.out_w; ++ox) {
        const int y0 = std::max(oy * stride_h_ - g.pad_top, 0);
        const int y1 = std::min(oy * stride_h_ - g.pad_top + pool_h_, g.in_h);
        const int x0 = std::max(ox * stride_w_ - g.pad_left, 0);
        const int x1 = std::min(ox * stride_w_ - g.pad_left + pool_w_, g.in_w);
        const float inv = 1.0f / static_cast<float>((y1 - y0) * (x1 - x0));
        for (int ch = 0; ch < c; ++ch, ++o) {
          double acc = 0.0;
          for (int yy = y0; yy < y1; ++yy) {
            for (int xx = x0; xx < x1; ++xx) {
              acc += src[(static_cast<std::int64_t>(yy) * g.in_w + xx) * c + ch];
            }
          }
          y.data[o] = static_cast<float>(acc) * inv;
        }
      }
    }
  }
  return y;
}

std::vector<Tensor> AvgPool2DLayer::backward(const std::vector<const Tensor*>& xs,
                                             const Tensor& y, const Tensor& dy) {
  const Tensor& x = *xs[0];
  const int n = x.shape[0], c = x.shape[3];
  const ConvGeom g = make_conv_geom(x.shape[1], x.shape[2], pool_h_, pool_w_, stride_h_,
                                    stride_w_, padding_);
  Tensor dx(x.shape);
  const std::int64_t in_stride = sample_numel(x);
  std::int64_t o = 0;
  for (int i = 0; i < n; ++i) {
    float* dst = dx.data.data() + i * in_stride;
    for (int oy = 0; oy < g.out_h; ++oy) {
      for (int ox = 0; ox < g.out_w; ++ox) {
        const int y0 = std::max(oy * stride_h_ - g.pad_top, 0);
        const int y1 = std::min(oy * stride_h_ - g.pad_top + pool_h_, g.in_h);
        const int x0 = std::max(ox * stride_w_ - g.pad_left, 0);
        const int x1 = std::min(ox * stride_w_ - g.pad_left + pool_w_, g.in_w);
        const float inv = 1.0f / static_cast<float>((y1 - y0) * (x1 - x0));
        for (int ch = 0; ch < c; ++ch, ++o) {
          const float v = dy.data[static_cast<std::size_t>(o)] * inv;
          for (int yy = y0; yy < y1; ++yy) {
            for (int xx = x0; xx < x1; ++xx) {
              dst[(static_cast<std::int64_t>(yy) * g.in_w + xx) * c + ch] += v;
            }
          }
        }
      }
    }
  }
  (void)y;
  return {std::move(dx)};
}

std::string AvgPool2DLayer::describe() const {
  return "AveragePooling2D(" + std::to_string(pool_h_) + "x" + std::to_string(pool_w_) +
         ", s" + std::to_string(stride_h_) + ")";
}

GlobalAvgPoolLayer::GlobalAvgPoolLayer(std::string name) : Layer(std::move(name)) {}

Tensor GlobalAvgPoolLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  const Tensor& x = *xs[0];
  require_rank(x, 4, name_);
  const int n = x.shape[0], c = x.shape[3];
  const std::int64_t cells = static_cast<std::int64_t>(x.shape[1]) * x.shape[2];
  Tensor y({n, c});
  const float inv = 1.0f / static_cast<float>(cells);
  for (int i = 0; i < n; ++i) {
    const float* p = x.data.data() + i * cells * c;
    std::vector<double> acc(static_cast<std::size_t>(c), 0.0);
    for (std::int64_t r = 0; r < cells; ++r, p += c) {
      for (int ch = 0; ch < c; ++ch) acc[static_cast<std::size_t>(ch)] += p[ch];
    }
    for (int ch = 0; ch < c; ++ch) {
      y.data[static_cast<std::size_t>(i) * c + ch] = static_cast<float>(acc[static_cast<std::size_t>(ch)]) * inv;
    }
  }
  return y;
}

std::vector<Tensor> GlobalAvgPoolLayer::backward(const std::vector<const Tensor*>& xs,
                                                 const Tensor&, const Tensor& dy) {
  const Tensor& x = *xs[0];
  const int n = x.shape[0], c = x.shape[3];
  const std::int64_t cells = static_cast<std::int64_t>(x.shape[1]) * x.shape[2];
  const float inv = 1.0f / static_cast<float>(cells);
  Tensor dx(x.shape);
  for (int i = 0; i < n; ++i) {
    float* p = dx.data.data() + i * cells * c;
    const float* g = dy.data.data() + static_cast<std::int64_t>(i) * c;
    for (std::int64_t r = 0; r < cells; ++r, p += c) {
      for (int ch = 0; ch < c; ++ch) p[ch] = g[ch] * inv;
    }
  }
  return {std::move(dx)};
}

std::string GlobalAvgPoolLayer::describe() const { return "GlobalAveragePooling2D"; }

// ---------------------------------------------------------------------------
// Shape utilities

FlattenLayer::FlattenLayer(std::string name) : Layer(std::move(name)) {}

Tensor FlattenLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  const Tensor& x = *xs[0];
  Tensor y({x.shape[0], static_cast<int>(sample_numel(x))});
  y.data = x.data;
  return y;
}

std::vector<Tensor> FlattenLayer::backward(const std::vector<const Tensor*>& xs,
                                           const Tensor&, const Tensor& dy) {
  Tensor dx(xs[0]->shape);
  dx.data = dy.data;
  return {std::move(dx)};
}

std::string FlattenLayer::describe() const { return "Flatten"; }

ReshapeLayer::ReshapeLayer(std::string name, std::vector<int> target)
    : Layer(std::move(name)), target_(std::move(target)) {}

Tensor ReshapeLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  const Tensor& x = *xs[0];
  std::int64_t want = 1;
  for (int d : target_) want *= d;
  if (want != sample_numel(x)) {
    throw RangeError(name_ + ": cannot reshape " + x.shape_str());
  }
  std::vector<int> shape{x.shape[0]};
  shape.insert(shape.end(), target_.begin(), target_.end());
  Tensor y(shape);
  y.data = x.data;
  return y;
}

std::vector<Tensor> ReshapeLayer::backward(const std::vector<const Tensor*>& xs,
                                           const Tensor&, const Tensor& dy) {
  Tensor dx(xs[0]->shape);
  dx.data = dy.data;
  return {std::move(dx)};
}

std::string ReshapeLayer::describe() const {
  std::string s = "Reshape(";
  for (std::size_t i = 0; i < target_.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(target_[i]);
  }
  return s + ")";
}

ActivationLayer::ActivationLayer(std::string name, Activation act, float alpha)
    : Layer(std::move(name)), act_(act), alpha_(alpha) {}

Tensor ActivationLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  Tensor y = *xs[0];
  apply_activation(act_, alpha_, y.data.data(), y.numel());
  return y;
}

std::vector<Tensor> ActivationLayer::backward(const std::vector<const Tensor*>&,
                                              const Tensor& y, const Tensor& dy) {
  Tensor dx = dy;
  activation_backward(act_, alpha_, y.data.data(), dx.data.data(), dx.numel());
  return {std::move(dx)};
}

std::string ActivationLayer::describe() const {
  return std::string("Activation(") + activation_name(act_) + ")";
}

// ---------------------------------------------------------------------------
// Merges

ConcatLayer::ConcatLayer(std::string name, std::size_t arity)
    : Layer(std::move(name)), arity_(arity) {
  if (arity < 2) throw RangeError("concat needs at least two inputs");
}

Tensor ConcatLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  const Tensor& first = *xs[0];
  int total_c = 0;
  for (const Tensor* t : xs) {
    if (t->ndim() != first.ndim() || t->shape[0] != first.shape[0]) {
      throw RangeError(name_ + ": concat rank/batch mismatch");
    }
    for (int d = 1; d + 1 < t->ndim(); ++d) {
      if (t->shape[d] != first.shape[d]) {
        throw RangeError(name_ + ": concat spatial mismatch " + t->shape_str() +
                         " vs " + first.shape_str());
      }
    }
    total_c += t->shape.back();
  }
  std::vector<int> shape = first.shape;
  shape.back() = total_c;
  Tensor y(shape);
  const std::int64_t rows = y.numel() / total_c;
  float* dst = y.data.data();
  std::vector<const float*> srcs(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) srcs[k] = xs[k]->data.data();
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const int c = xs[k]->shape.back();
      std::memcpy(dst, srcs[k], sizeof(float) * static_cast<std::size_t>(c));
      dst += c;
      srcs[k] += c;
    }
  }
  return y;
}

std::vector<Tensor> ConcatLayer::backward(const std::vector<const Tensor*>& xs,
                                          const Tensor& y, const Tensor& dy) {
  std::vector<Tensor> grads;
  grads.reserve(xs.size());
  for (const Tensor* t : xs) grads.emplace_back(t->shape);
  const int total_c = y.shape.back();
  const std::int64_t rows = y.numel() / total_c;
  const float* src = dy.data.data();
  std::vector<float*> dsts(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) dsts[k] = grads[k].data.data();
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const int c = xs[k]->shape.back();
      std::memcpy(dsts[k], src, sizeof(float) * static_cast<std::size_t>(c));
      src += c;
      dsts[k] += c;
    }
  }
  return grads;
}

std::string ConcatLayer::describe() const {
  return "Concatenate(" + std::to_string(arity_) + ")";
}

ScaledAddLayer::ScaledAddLayer(std::string name, float scale)
    : Layer(std::move(name)), scale_(scale) {}

Tensor ScaledAddLayer::forward(const std::vector<const Tensor*>& xs, bool) {
  const Tensor& a = *xs[0];
  const Tensor& b = *xs[1];
  if (!a.same_shape(b)) {
    throw RangeError(name_ + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
  }
  Tensor y = a;
  for (std::int64_t i = 0; i < y.numel(); ++i) y.data[static_cast<std::size_t>(i)] += scale_ * b.data[static_cast<std::size_t>(i)];
  return y;
}

std::vector<Tensor> ScaledAddLayer::backward(const std::vector<const Tensor*>&,
                                             const Tensor&, const Tensor& dy) {
  Tensor d0 = dy;
  Tensor d1 = dy;
  for (float& v : d1.data) v *= scale_;
  return {std::move(d0), std::move(d1)};
}

std::string ScaledAddLayer::describe() const {
  return "ScaledAdd(" + std::to_string(scale_) + ")";
}

// ---------------------------------------------------------------------------
// Init

void glorot_uniform_fill(Tensor& value, std::uint64_t seed) {
  const auto& s = value.shape;
  double fan_in = 1.0, fan_out = 1.0;
  if (s.size() >= 2) {
    double rf = 1.0;
    for (std::size_t i = 0; i + 2 < s.size(); ++i) rf *= s[i];
    fan_in = rf * s[s.size() - 2];
    fan_out = rf * s[s.size() - 1];
  } else if (!s.empty()) {
    fan_in = fan_out = s[0];
  }
  const double limit = std::sqrt(6.0 / (fan_in + fan_out));
  Rng rng(seed);
  for (float& v : value.data) v = static_cast<float>(rng.uniform(-limit, limit));
}

Initializer make_glorot_initializer(std::uint64_t master_seed) {
  return [master_seed](const std::string& param_name, Tensor& value) {
    glorot_uniform_fill(value, derive_seed(master_seed, param_name, 0));
  };
}

}  // namespace fer::nn
