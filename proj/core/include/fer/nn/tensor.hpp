#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace fer::nn {

/// Dense row-major float tensor. Small by design: shape plus flat storage,
/// no views, no broadcasting. All layout conventions are NHWC.
struct Tensor {
  std::vector<int> shape;
  std::vector<float> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
    data.assign(static_cast<std::size_t>(numel()), 0.0f);
  }
  Tensor(std::vector<int> s, float fill) : shape(std::move(s)) {
    data.assign(static_cast<std::size_t>(numel()), fill);
  }

  std::int64_t numel() const {
    std::int64_t n = 1;
    for (int d : shape) n *= d;
    return n;
  }
  int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }
  int ndim() const { return static_cast<int>(shape.size()); }

  float& operator[](std::size_t i) { return data[i]; }
  float operator[](std::size_t i) const { return data[i]; }

  // NHWC accessors
  float& at4(int n, int h, int w, int c) {
    return data[((static_cast<std::size_t>(n) * shape[1] + h) * shape[2] + w) *
                    shape[3] +
                c];
  }
  float at4(int n, int h, int w, int c) const {
    return data[((static_cast<std::size_t>(n) * shape[1] + h) * shape[2] + w) *
                    shape[3] +
                c];
  }
  float& at2(int r, int c) {
    return data[static_cast<std::size_t>(r) * shape[1] + c];
  }
  float at2(int r, int c) const {
    return data[static_cast<std::size_t>(r) * shape[1] + c];
  }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }
  std::string shape_str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(shape[i]);
    }
    return s + ")";
  }
};

}  // namespace fer::nn
