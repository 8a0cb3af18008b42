#pragma once

#include <cstdint>
#include <string>

#include "fer/nn/tensor.hpp"

namespace fer::nn {

enum class Padding { kValid, kSame };
enum class Activation { kLinear, kRelu, kLeakyRelu, kTanh, kSigmoid };

Padding padding_from_name(const std::string& name);
Activation activation_from_name(const std::string& name);
const char* activation_name(Activation a);

// Spatial bookkeeping for one convolution-like op.  For kSame the output size
// is ceil(in / stride) and the total padding max((out-1)*stride + k - in, 0),
// split with the smaller half leading.
struct ConvGeom {
  int in_h = 0, in_w = 0;
  int kernel_h = 0, kernel_w = 0;
  int stride_h = 1, stride_w = 1;
  int out_h = 0, out_w = 0;
  int pad_top = 0, pad_left = 0;
};

ConvGeom make_conv_geom(int in_h, int in_w, int kernel_h, int kernel_w,
                        int stride_h, int stride_w, Padding padding);

// cols is (out_h*out_w) x (kernel_h*kernel_w*channels), row-major.  Samples
// that fall outside the frame contribute zeros.
void im2col(const float* src, int channels, const ConvGeom& g, float* cols);

// Adjoint of im2col: scatter-adds cols back into dst, which is zeroed first.
void col2im(const float* cols, int channels, const ConvGeom& g, float* dst);

void apply_activation(Activation a, float alpha, float* x, std::int64_t n);

// In-place multiply of dy by the activation derivative, expressed through the
// activation *output* y (valid for every activation offered here).
void activation_backward(Activation a, float alpha, const float* y, float* dy,
                         std::int64_t n);

// c = op(a) * op(b) with optional transposes; row-major throughout.
// m,k,n describe the logical product: (m x k) * (k x n).
void matmul(const float* a, const float* b, float* c, int m, int k, int n,
            bool trans_a, bool trans_b, bool accumulate);

// Numerically stable row-wise softmax of (rows x cols) logits.
Tensor softmax_rows(const Tensor& logits);

}  // namespace fer::nn
