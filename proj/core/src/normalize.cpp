#include "fer/normalize.hpp"

#include <algorithm>
#include <cmath>

#include "fer/errors.hpp"

namespace fer {

std::string_view normalization_name(NormalizationScheme s) {
  switch (s) {
    case NormalizationScheme::kUnitInterval:
      return "unit_interval";
    case NormalizationScheme::kBgrMeanCentered:
      return "bgr_mean_centered";
    case NormalizationScheme::kSymmetricUnit:
      return "symmetric_unit";
  }
  return "unknown";
}

namespace {

void normalize_into(const Image& image, NormalizationScheme scheme,
                    float* out) {
  const int hw = image.height * image.width;
  const int c = image.channels;
  switch (scheme) {
    case NormalizationScheme::kUnitInterval:
      for (int i = 0; i < hw * c; ++i) out[i] = image.data[i] / 255.0f;
      break;
    case NormalizationScheme::kSymmetricUnit:
      for (int i = 0; i < hw * c; ++i)
        out[i] = image.data[i] / 127.5f - 1.0f;
      break;
    case NormalizationScheme::kBgrMeanCentered:
      // channel order reversed to BGR, then mean-centered, no scaling
      for (int p = 0; p < hw; ++p)
        for (int k = 0; k < c; ++k)
          out[p * c + k] = image.data[p * c + (c - 1 - k)] - kBgrMeans[k];
      break;
  }
}

}  // namespace

nn::Tensor normalize(const Image& image, NormalizationScheme scheme) {
  nn::Tensor out({image.height, image.width, image.channels});
  normalize_into(image, scheme, out.data.data());
  return out;
}

NormalizedBatch normalize_batch(std::span<const Image> images,
                                NormalizationScheme scheme) {
  if (images.empty())
    throw RangeError("normalize_batch: empty batch");
  const Image& first = images[0];
  nn::Tensor values({static_cast<int>(images.size()), first.height,
                     first.width, first.channels});
  const std::size_t stride = first.size();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].height != first.height || images[i].width != first.width ||
        images[i].channels != first.channels)
      throw RangeError("normalize_batch: images have mixed shapes");
    normalize_into(images[i], scheme, values.data.data() + i * stride);
  }
  return NormalizedBatch{scheme, std::move(values)};
}

Image denormalize_symmetric(const nn::Tensor& tensor) {
  std::vector<int> s = tensor.shape;
  if (s.size() == 4 && s[0] == 1) s.erase(s.begin());
  if (s.size() != 3)
    throw RangeError("denormalize_symmetric: expected an (H, W, C) tensor, got " +
                     tensor.shape_str());
  constexpr float kTol = 1e-3f;
  Image out(s[0], s[1], s[2]);
  for (std::size_t i = 0; i < tensor.data.size(); ++i) {
    float v = tensor.data[i];
    if (v < -1.0f - kTol || v > 1.0f + kTol)
      throw RangeError("denormalize_symmetric: value " + std::to_string(v) +
                       " outside [-1, 1] beyond tolerance");
    v = std::clamp(v, -1.0f, 1.0f);
    out.data[i] = (v + 1.0f) * 127.5f;
  }
  return out;
}

}  // namespace fer
