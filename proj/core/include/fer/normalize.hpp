#pragma once

#include <array>
#include <span>
#include <string_view>

#include "fer/image.hpp"
#include "fer/nn/tensor.hpp"

namespace fer {

/// Per-consumer pixel normalization applied at the model boundary.
enum class NormalizationScheme : int {
  kUnitInterval = 0,    ///< [0,255] -> [0,1] by division (Inception family)
  kBgrMeanCentered = 1, ///< RGB->BGR, subtract ImageNet channel means, no scaling (VGG family)
  kSymmetricUnit = 2,   ///< [0,255] -> [-1,1] affinely (DCGAN, tanh output)
};

std::string_view normalization_name(NormalizationScheme s);

/// ImageNet channel means in BGR order, subtracted by kBgrMeanCentered.
inline constexpr std::array<float, 3> kBgrMeans = {103.939f, 116.779f, 123.68f};

/// Applies the scheme to one image; output has the image's (H, W, C) shape.
nn::Tensor normalize(const Image& image, NormalizationScheme scheme);

/// A batch tensor tagged with the scheme that produced it. Models assert the
/// tag against their backbone's expected scheme, so a VGG never sees
/// unit-interval input and vice versa.
struct NormalizedBatch {
  NormalizationScheme scheme;
  nn::Tensor values;  ///< (N, H, W, C)
};

NormalizedBatch normalize_batch(std::span<const Image> images,
                                NormalizationScheme scheme);

/// Inverse of kSymmetricUnit. Values up to 1e-3 beyond [-1, 1] are clipped;
/// anything further out raises RangeError. The tensor may be (H, W, C) or
/// (1, H, W, C).
Image denormalize_symmetric(const nn::Tensor& tensor);

}  // namespace fer
