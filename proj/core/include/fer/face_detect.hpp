#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fer/image.hpp"

namespace fer {

struct FaceBox {
  int x = 0, y = 0, w = 0, h = 0;
  double confidence = 0.0;
  long long area() const { return static_cast<long long>(w) * h; }
};

/// Pluggable face detector. The pipeline depends only on this interface;
/// concrete detectors are chosen at the CLI. Instances are not assumed
/// shareable across threads; use one per worker.
class FaceDetector {
 public:
  virtual ~FaceDetector() = default;
  virtual std::vector<FaceBox> detect(const Image& image) const = 0;
  virtual std::string name() const = 0;
};

/// Deterministic detector used by tests and fixture runs: reports the
/// bounding box of pixels brighter than a luminance threshold. Fixture faces
/// are bright ellipses on a dark ground, so the box tracks the face region;
/// confidence is the fraction of box pixels that are bright (about pi/4 for
/// an ellipse). A blank image yields no detections.
class BrightRegionDetector final : public FaceDetector {
 public:
  explicit BrightRegionDetector(float luminance_threshold = 96.0f)
      : threshold_(luminance_threshold) {}
  std::vector<FaceBox> detect(const Image& image) const override;
  std::string name() const override { return "bright_region"; }

 private:
  float threshold_;
};

/// Returns the full frame with confidence 1. Useful when inputs are already
/// face crops.
class FullFrameDetector final : public FaceDetector {
 public:
  std::vector<FaceBox> detect(const Image& image) const override;
  std::string name() const override { return "full_frame"; }
};

/// Replays a fixed list of detections regardless of input (test double).
class ScriptedDetector final : public FaceDetector {
 public:
  explicit ScriptedDetector(std::vector<FaceBox> boxes)
      : boxes_(std::move(boxes)) {}
  std::vector<FaceBox> detect(const Image&) const override { return boxes_; }
  std::string name() const override { return "scripted"; }

 private:
  std::vector<FaceBox> boxes_;
};

/// Builds a detector by name ("bright_region", "full_frame").
std::unique_ptr<FaceDetector> make_detector(const std::string& name);

}  // namespace fer
