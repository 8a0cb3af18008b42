#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace fer {

inline constexpr int kStandardSide = 224;
inline constexpr int kStandardChannels = 3;

/// An interleaved HWC raster with RGB channel order and intensities stored
/// as real values in [0, 255]. Pipeline stages keep pixels in this 8-bit
/// equivalent range; per-consumer normalization happens lazily at the model
/// boundary.
struct Image {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<float> data;  ///< height * width * channels floats

  Image() = default;
  Image(int h, int w, int c, float fill = 0.0f)
      : height(h), width(w), channels(c),
        data(static_cast<std::size_t>(h) * w * c, fill) {}

  float& at(int y, int x, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  float at(int y, int x, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::size_t size() const { return data.size(); }
  bool is_standard() const {
    return height == kStandardSide && width == kStandardSide &&
           channels == kStandardChannels;
  }
};

/// Throws RangeError unless the image is 224x224x3 with values in [0, 255].
void require_standard(const Image& image, const char* where);

/// Decodes a raster file (PNG, JPEG, BMP, ...). Throws IngestionError on
/// missing or undecodable files.
Image read_image(const std::filesystem::path& path);

/// Writes an image as 8-bit PNG (lossless); values are rounded and clipped
/// to [0, 255].
void write_image(const Image& image, const std::filesystem::path& path);

/// Bilinear resize. Returns a copy when the size is already (out_h, out_w).
Image resize_bilinear(const Image& src, int out_h, int out_w);

/// Crops [y0, y0+h) x [x0, x0+w); the rectangle must lie inside the image.
Image crop(const Image& src, int x0, int y0, int w, int h);

}  // namespace fer
