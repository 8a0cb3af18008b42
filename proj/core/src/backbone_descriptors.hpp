#pragma once

#include <string_view>

// Architecture descriptors for the four reference convolutional stacks, as
// layer-list JSON.  Regenerate with tools/keras_export.py.
namespace fer::detail {

extern const std::string_view kVgg16Descriptor;
extern const std::string_view kVgg19Descriptor;
extern const std::string_view kInceptionV3Descriptor;
extern const std::string_view kInceptionResnetV2Descriptor;

}  // namespace fer::detail
