#include "fer/face_detect.hpp"

#include <algorithm>

#include "fer/errors.hpp"

namespace fer {

std::vector<FaceBox> BrightRegionDetector::detect(const Image& image) const {
  int min_x = image.width, min_y = image.height, max_x = -1, max_y = -1;
  long long bright = 0;
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      float lum = 0.0f;
      for (int c = 0; c < image.channels; ++c) lum += image.at(y, x, c);
      lum /= static_cast<float>(image.channels);
      if (lum > threshold_) {
        ++bright;
        min_x = std::min(min_x, x);
        min_y = std::min(min_y, y);
        max_x = std::max(max_x, x);
        max_y = std::max(max_y, y);
      }
    }
  }
  if (bright == 0) return {};
  FaceBox box;
  box.x = min_x;
  box.y = min_y;
  box.w = max_x - min_x + 1;
  box.h = max_y - min_y + 1;
  box.confidence = static_cast<double>(bright) / static_cast<double>(box.area());
  return {box};
}

std::vector<FaceBox> FullFrameDetector::detect(const Image& image) const {
  FaceBox box;
  box.x = 0;
  box.y = 0;
  box.w = image.width;
  box.h = image.height;
  box.confidence = 1.0;
  return {box};
}

std::unique_ptr<FaceDetector> make_detector(const std::string& name) {
  if (name == "bright_region") return std::make_unique<BrightRegionDetector>();
  if (name == "full_frame") return std::make_unique<FullFrameDetector>();
  throw ConfigurationError("unknown face detector '" + name + "'");
}

}  // namespace fer
