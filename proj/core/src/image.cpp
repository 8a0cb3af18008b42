#include "fer/image.hpp"

#include <algorithm>
#include <cmath>

#include <opencv2/imgcodecs.hpp>

#include "fer/errors.hpp"

namespace fer {

void require_standard(const Image& image, const char* where) {
  if (!image.is_standard())
    throw RangeError(std::string(where) + ": image is " +
                     std::to_string(image.height) + "x" +
                     std::to_string(image.width) + "x" +
                     std::to_string(image.channels) + ", expected 224x224x3");
  for (float v : image.data)
    if (!(v >= 0.0f && v <= 255.0f))
      throw RangeError(std::string(where) +
                       ": pixel intensity outside [0, 255]");
}

Image read_image(const std::filesystem::path& path) {
  cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (bgr.empty())
    throw IngestionError("cannot read image file '" + path.string() + "'");
  Image out(bgr.rows, bgr.cols, 3);
  for (int y = 0; y < bgr.rows; ++y) {
    const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      out.at(y, x, 0) = static_cast<float>(row[x][2]);  // R
      out.at(y, x, 1) = static_cast<float>(row[x][1]);  // G
      out.at(y, x, 2) = static_cast<float>(row[x][0]);  // B
    }
  }
  return out;
}

void write_image(const Image& image, const std::filesystem::path& path) {
  if (image.channels != 3)
    throw Error("write_image: expected 3 channels, got " +
                std::to_string(image.channels));
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  cv::Mat bgr(image.height, image.width, CV_8UC3);
  for (int y = 0; y < image.height; ++y) {
    cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < image.width; ++x) {
      auto q = [&](int c) {
        float v = std::round(image.at(y, x, c));
        return static_cast<unsigned char>(std::clamp(v, 0.0f, 255.0f));
      };
      row[x] = cv::Vec3b(q(2), q(1), q(0));
    }
  }
  if (!cv::imwrite(path.string(), bgr))
    throw Error("cannot write image file '" + path.string() + "'");
}

Image resize_bilinear(const Image& src, int out_h, int out_w) {
  if (out_h <= 0 || out_w <= 0)
    throw RangeError("resize_bilinear: non-positive output size");
  if (src.height == out_h && src.width == out_w) return src;

  Image out(out_h, out_w, src.channels);
  const float sy = static_cast<float>(src.height) / out_h;
  const float sx = static_cast<float>(src.width) / out_w;
  for (int y = 0; y < out_h; ++y) {
    // pixel-center alignment
    float fy = (y + 0.5f) * sy - 0.5f;
    int y0 = static_cast<int>(std::floor(fy));
    float wy = fy - y0;
    int y1 = std::min(y0 + 1, src.height - 1);
    y0 = std::clamp(y0, 0, src.height - 1);
    for (int x = 0; x < out_w; ++x) {
      float fx = (x + 0.5f) * sx - 0.5f;
      int x0 = static_cast<int>(std::floor(fx));
      float wx = fx - x0;
      int x1 = std::min(x0 + 1, src.width - 1);
      x0 = std::clamp(x0, 0, src.width - 1);
      for (int c = 0; c < src.channels; ++c) {
        float top = src.at(y0, x0, c) * (1.0f - wx) + src.at(y0, x1, c) * wx;
        float bot = src.at(y1, x0, c) * (1.0f - wx) + src.at(y1, x1, c) * wx;
        out.at(y, x, c) = std::clamp(top * (1.0f - wy) + bot * wy, 0.0f, 255.0f);
      }
    }
  }
  return out;
}

Image crop(const Image& src, int x0, int y0, int w, int h) {
  if (x0 < 0 || y0 < 0 || w <= 0 || h <= 0 || x0 + w > src.width ||
      y0 + h > src.height)
    throw RangeError("crop: rectangle outside image bounds");
  Image out(h, w, src.channels);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < src.channels; ++c)
        out.at(y, x, c) = src.at(y0 + y, x0 + x, c);
  return out;
}

}  // namespace fer
