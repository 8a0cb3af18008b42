#include "fer/nn/ops.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstring>

#include "fer/errors.hpp"

namespace fer::nn {

namespace {
using RowMat = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const RowMat>;
using MutMap = Eigen::Map<RowMat>;
}  // namespace

Padding padding_from_name(const std::string& name) {
  if (name == "valid") return Padding::kValid;
  if (name == "same") return Padding::kSame;
  throw ConfigurationError("unknown padding: " + name);
}

Activation activation_from_name(const std::string& name) {
  if (name.empty() || name == "linear") return Activation::kLinear;
  if (name == "relu") return Activation::kRelu;
  if (name == "leaky_relu") return Activation::kLeakyRelu;
  if (name == "tanh") return Activation::kTanh;
  if (name == "sigmoid") return Activation::kSigmoid;
  throw ConfigurationError("unknown activation: " + name);
}

const char* activation_name(Activation a) {
  switch (a) {
    case Activation::kLinear: return "linear";
    case Activation::kRelu: return "relu";
    case Activation::kLeakyRelu: return "leaky_relu";
    case Activation::kTanh: return "tanh";
    case Activation::kSigmoid: return "sigmoid";
  }
  return "?";
}

ConvGeom make_conv_geom(int in_h, int in_w, int kernel_h, int kernel_w,
                        int stride_h, int stride_w, Padding padding) {
  if (in_h <= 0 || in_w <= 0 || kernel_h <= 0 || kernel_w <= 0 ||
      stride_h <= 0 || stride_w <= 0) {
    throw RangeError("convolution geometry requires positive sizes");
  }
  ConvGeom g;
  g.in_h = in_h;
  g.in_w = in_w;
  g.kernel_h = kernel_h;
  g.kernel_w = kernel_w;
  g.stride_h = stride_h;
  g.stride_w = stride_w;
  if (padding == Padding::kSame) {
    g.out_h = (in_h + stride_h - 1) / stride_h;
    g.out_w = (in_w + stride_w - 1) / stride_w;
    const int pad_h = std::max((g.out_h - 1) * stride_h + kernel_h - in_h, 0);
    const int pad_w = std::max((g.out_w - 1) * stride_w + kernel_w - in_w, 0);
    g.pad_top = pad_h / 2;
    g.pad_left = pad_w / 2;
  } else {
    if (in_h < kernel_h || in_w < kernel_w) {
      throw RangeError("valid-padding window larger than input (" +
                       std::to_string(kernel_h) + "x" + std::to_string(kernel_w) +
                       " on " + std::to_string(in_h) + "x" + std::to_string(in_w) + ")");
    }
    g.out_h = (in_h - kernel_h) / stride_h + 1;
    g.out_w = (in_w - kernel_w) / stride_w + 1;
  }
  return g;
}

void im2col(const float* src, int channels, const ConvGeom& g, float* cols) {
  const int patch = g.kernel_h * g.kernel_w * channels;
  for (int oy = 0; oy < g.out_h; ++oy) {
    const int base_y = oy * g.stride_h - g.pad_top;
    for (int ox = 0; ox < g.out_w; ++ox) {
      const int base_x = ox * g.stride_w - g.pad_left;
      float* row = cols + (static_cast<std::int64_t>(oy) * g.out_w + ox) * patch;
      for (int ky = 0; ky < g.kernel_h; ++ky) {
        const int y = base_y + ky;
        if (y < 0 || y >= g.in_h) {
          std::memset(row, 0, sizeof(float) * static_cast<std::size_t>(g.kernel_w) * channels);
          row += static_cast<std::int64_t>(g.kernel_w) * channels;
          continue;
        }
        for (int kx = 0; kx < g.kernel_w; ++kx) {
          const int x = base_x + kx;
          if (x < 0 || x >= g.in_w) {
            std::memset(row, 0, sizeof(float) * channels);
          } else {
            std::memcpy(row, src + (static_cast<std::int64_t>(y) * g.in_w + x) * channels,
                        sizeof(float) * channels);
          }
          row += channels;
        }
      }
    }
  }
}

void col2im(const float* cols, int channels, const ConvGeom& g, float* dst) {
  std::memset(dst, 0,
              sizeof(float) * static_cast<std::size_t>(g.in_h) * g.in_w * channels);
  const int patch = g.kernel_h * g.kernel_w * channels;
  for (int oy = 0; oy < g.out_h; ++oy) {
    const int base_y = oy * g.stride_h - g.pad_top;
    for (int ox = 0; ox < g.out_w; ++ox) {
      const int base_x = ox * g.stride_w - g.pad_left;
      const float* row = cols + (static_cast<std::int64_t>(oy) * g.out_w + ox) * patch;
      for (int ky = 0; ky < g.kernel_h; ++ky) {
        const int y = base_y + ky;
        if (y < 0 || y >= g.in_h) {
          row += static_cast<std::int64_t>(g.kernel_w) * channels;
          continue;
        }
        for (int kx = 0; kx < g.kernel_w; ++kx) {
          const int x = base_x + kx;
          if (x >= 0 && x < g.in_w) {
            float* cell = dst + (static_cast<std::int64_t>(y) * g.in_w + x) * channels;
            for (int c = 0; c < channels; ++c) cell[c] += row[c];
          }
          row += channels;
        }
      }
    }
  }
}

void apply_activation(Activation a, float alpha, float* x, std::int64_t n) {
  switch (a) {
    case Activation::kLinear:
      return;
    case Activation::kRelu:
      for (std::int64_t i = 0; i < n; ++i) x[i] = std::max(x[i], 0.0f);
      return;
    case Activation::kLeakyRelu:
      for (std::int64_t i = 0; i < n; ++i) x[i] = x[i] >= 0.0f ? x[i] : alpha * x[i];
      return;
    case Activation::kTanh:
      for (std::int64_t i = 0; i < n; ++i) x[i] = std::tanh(x[i]);
      return;
    case Activation::kSigmoid:
      for (std::int64_t i = 0; i < n; ++i) {
        x[i] = x[i] >= 0.0f ? 1.0f / (1.0f + std::exp(-x[i]))
                            : std::exp(x[i]) / (1.0f + std::exp(x[i]));
      }
      return;
  }
}

void activation_backward(Activation a, float alpha, const float* y, float* dy,
                         std::int64_t n) {
  switch (a) {
    case Activation::kLinear:
      return;
    case Activation::kRelu:
      for (std::int64_t i = 0; i < n; ++i) {
        if (y[i] <= 0.0f) dy[i] = 0.0f;
      }
      return;
    case Activation::kLeakyRelu:
      for (std::int64_t i = 0; i < n; ++i) {
        if (y[i] < 0.0f) dy[i] *= alpha;
      }
      return;
    case Activation::kTanh:
      for (std::int64_t i = 0; i < n; ++i) dy[i] *= 1.0f - y[i] * y[i];
      return;
    case Activation::kSigmoid:
      for (std::int64_t i = 0; i < n; ++i) dy[i] *= y[i] * (1.0f - y[i]);
      return;
  }
}

void matmul(const float* a, const float* b, float* c, int m, int k, int n,
            bool trans_a, bool trans_b, bool accumulate) {
  MutMap cm(c, m, n);
  const auto run = [&](const auto& lhs, const auto& rhs) {
    if (accumulate) {
      cm.noalias() += lhs * rhs;
    } else {
      cm.noalias() = lhs * rhs;
    }
  };
  if (!trans_a && !trans_b) {
    run(ConstMap(a, m, k), ConstMap(b, k, n));
  } else if (trans_a && !trans_b) {
    run(ConstMap(a, k, m).transpose(), ConstMap(b, k, n));
  } else if (!trans_a && trans_b) {
    run(ConstMap(a, m, k), ConstMap(b, n, k).transpose());
  } else {
    run(ConstMap(a, k, m).transpose(), ConstMap(b, n, k).transpose());
  }
}

Tensor softmax_rows(const Tensor& logits) {
  if (logits.ndim() != 2) throw RangeError("softmax expects a rank-2 tensor");
  const int rows = logits.shape[0];
  const int cols = logits.shape[1];
  Tensor out(logits.shape);
  for (int r = 0; r < rows; ++r) {
    const float* in = logits.data.data() + static_cast<std::int64_t>(r) * cols;
    float* o = out.data.data() + static_cast<std::int64_t>(r) * cols;
    float mx = in[0];
    for (int c = 1; c < cols; ++c) mx = std::max(mx, in[c]);
    double sum = 0.0;
    for (int c = 0; c < cols; ++c) {
      o[c] = std::exp(in[c] - mx);
      sum += o[c];
    }
    const float inv = static_cast<float>(1.0 / sum);
    for (int c = 0; c < cols; ++c) o[c] *= inv;
  }
  return out;
}

}  // namespace fer::nn
