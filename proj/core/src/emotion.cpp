#include "fer/emotion.hpp"

#include <algorithm>
#include <cctype>

namespace fer {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view emotion_name(EmotionLabel label) {
  switch (label) {
    case EmotionLabel::kAngry:
      return "angry";
    case EmotionLabel::kDisgust:
      return "disgust";
    case EmotionLabel::kFear:
      return "fear";
    case EmotionLabel::kHappy:
      return "happy";
    case EmotionLabel::kNeutral:
      return "neutral";
    case EmotionLabel::kSad:
      return "sad";
    case EmotionLabel::kSurprise:
      return "surprise";
  }
  return "unknown";
}

std::optional<EmotionLabel> try_parse_emotion(std::string_view text) {
  const std::string t = lower(text);
  if (t == "angry" || t == "anger" || t == "an") return EmotionLabel::kAngry;
  if (t == "disgust" || t == "disgusted" || t == "di")
    return EmotionLabel::kDisgust;
  if (t == "fear" || t == "afraid" || t == "fearful" || t == "af")
    return EmotionLabel::kFear;
  if (t == "happy" || t == "happiness" || t == "ha") return EmotionLabel::kHappy;
  if (t == "neutral" || t == "ne") return EmotionLabel::kNeutral;
  if (t == "sad" || t == "sadness" || t == "sa") return EmotionLabel::kSad;
  if (t == "surprise" || t == "surprised" || t == "su")
    return EmotionLabel::kSurprise;
  return std::nullopt;
}

bool is_contempt_label(std::string_view text) {
  const std::string t = lower(text);
  return t == "contempt" || t == "co";
}

}  // namespace fer
