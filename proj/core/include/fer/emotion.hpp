#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace fer {

/// The seven emotion classes. The label <-> index mapping below is fixed
/// (alphabetical) and shared by every module: confusion matrices, softmax
/// outputs and per-class reports all use this order.
enum class EmotionLabel : int {
  kAngry = 0,
  kDisgust = 1,
  kFear = 2,
  kHappy = 3,
  kNeutral = 4,
  kSad = 5,
  kSurprise = 6,
};

inline constexpr int kNumEmotions = 7;

inline constexpr std::array<EmotionLabel, kNumEmotions> kAllEmotions = {
    EmotionLabel::kAngry,   EmotionLabel::kDisgust, EmotionLabel::kFear,
    EmotionLabel::kHappy,   EmotionLabel::kNeutral, EmotionLabel::kSad,
    EmotionLabel::kSurprise,
};

constexpr int emotion_index(EmotionLabel label) {
  return static_cast<int>(label);
}

constexpr EmotionLabel emotion_from_index(int index) {
  return static_cast<EmotionLabel>(index);
}

/// Canonical lower-case name ("angry", "disgust", ...).
std::string_view emotion_name(EmotionLabel label);

/// Parses an emotion name case-insensitively. Accepts the canonical names,
/// common variants (afraid -> fear, surprised -> surprise, happiness ->
/// happy, ...) and the two-letter KDEF codes (AF, AN, DI, HA, NE, SA, SU).
/// Returns nullopt for anything else, including "contempt".
std::optional<EmotionLabel> try_parse_emotion(std::string_view text);

/// True when the text names the CK+ contempt expression, which is excluded
/// from the seven-class task.
bool is_contempt_label(std::string_view text);

}  // namespace fer
