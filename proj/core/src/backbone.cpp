#include "fer/backbone.hpp"

#include <memory>
#include <nlohmann/json.hpp>

#include "backbone_descriptors.hpp"
#include "fer/errors.hpp"

namespace fer {

namespace {

using nlohmann::json;
using nn::Activation;
using nn::Padding;

std::string_view descriptor_json(BackboneKind kind) {
  switch (kind) {
    case BackboneKind::kVgg16: return detail::kVgg16Descriptor;
    case BackboneKind::kVgg19: return detail::kVgg19Descriptor;
    case BackboneKind::kInceptionV3: return detail::kInceptionV3Descriptor;
    case BackboneKind::kInceptionResnetV2: return detail::kInceptionResnetV2Descriptor;
    case BackboneKind::kCompact: break;
  }
  throw ConfigurationError("no stored descriptor for this backbone");
}

void add_descriptor_layer(nn::Graph& g, const json& l) {
  const std::string cls = l.at("class");
  const std::string name = l.at("name");
  const std::vector<std::string> inputs = l.value("inputs", std::vector<std::string>{});
  if (cls == "InputLayer") {
    g.add_input(name);
    return;
  }
  if (cls == "Conv2D") {
    const auto k = l.at("kernel_size");
    const auto s = l.at("strides");
    g.add(std::make_unique<nn::Conv2DLayer>(
              name, l.at("filters").get<int>(), k.at(0).get<int>(), k.at(1).get<int>(),
              s.at(0).get<int>(), s.at(1).get<int>(),
              nn::padding_from_name(l.at("padding")),
              nn::activation_from_name(l.value("activation", "linear")),
              l.value("use_bias", true)),
          inputs);
    return;
  }
  if (cls == "MaxPooling2D" || cls == "AveragePooling2D") {
    const auto p = l.at("pool_size");
    const auto s = l.at("strides");
    const Padding pad = nn::padding_from_name(l.at("padding"));
    if (cls == "MaxPooling2D") {
      g.add(std::make_unique<nn::MaxPool2DLayer>(name, p.at(0).get<int>(),
                                                 p.at(1).get<int>(), s.at(0).get<int>(),
                                                 s.at(1).get<int>(), pad),
            inputs);
    } else {
      g.add(std::make_unique<nn::AvgPool2DLayer>(name, p.at(0).get<int>(),
                                                 p.at(1).get<int>(), s.at(0).get<int>(),
                                                 s.at(1).get<int>(), pad),
            inputs);
    }
    return;
  }
  if (cls == "BatchNormalization") {
    if (l.value("axis", 3) != 3) {
      throw ConfigurationError(name + ": only channel-last batch norm is supported");
    }
    g.add(std::make_unique<nn::BatchNormLayer>(name, l.value("epsilon", 1e-3), 0.99,
                                               l.value("scale", true),
                                               l.value("center", true)),
          inputs);
    return;
  }
  if (cls == "Activation") {
    g.add(std::make_unique<nn::ActivationLayer>(
              name, nn::activation_from_name(l.at("activation"))),
          inputs);
    return;
  }
  if (cls == "Concatenate") {
    g.add(std::make_unique<nn::ConcatLayer>(name, inputs.size()), inputs);
    return;
  }
  if (cls == "CustomScaleLayer") {
    g.add(std::make_unique<nn::ScaledAddLayer>(name, l.at("scale").get<float>()),
          inputs);
    return;
  }
  throw ConfigurationError("unsupported layer class in descriptor: " + cls);
}

nn::Graph build_from_descriptor(BackboneKind kind, std::uint64_t init_seed) {
  const json doc = json::parse(descriptor_json(kind));
  nn::Graph g(backbone_name(kind), init_seed);
  for (const auto& l : doc.at("layers")) add_descriptor_layer(g, l);
  return g;
}

nn::Graph build_compact(std::uint64_t init_seed) {
  nn::Graph g("compact", init_seed);
  g.add_input("input");
  g.add(std::make_unique<nn::Conv2DLayer>("stem", 8, 8, 8, 8, 8, Padding::kSame,
                                          Activation::kRelu, true));
  g.add(std::make_unique<nn::MaxPool2DLayer>("pool", 2, 2, 2, 2, Padding::kValid));
  g.add(std::make_unique<nn::Conv2DLayer>("feat1", 16, 3, 3, 1, 1, Padding::kSame,
                                          Activation::kRelu, true));
  g.add(std::make_unique<nn::Conv2DLayer>("feat2", 16, 3, 3, 1, 1, Padding::kSame,
                                          Activation::kRelu, true));
  return g;
}

}  // namespace

const char* backbone_name(BackboneKind kind) {
  switch (kind) {
    case BackboneKind::kVgg16: return "vgg16";
    case BackboneKind::kVgg19: return "vgg19";
    case BackboneKind::kInceptionV3: return "inception_v3";
    case BackboneKind::kInceptionResnetV2: return "inception_resnet_v2";
    case BackboneKind::kCompact: return "compact";
  }
  return "?";
}

BackboneKind backbone_from_name(const std::string& name) {
  for (BackboneKind kind :
       {BackboneKind::kVgg16, BackboneKind::kVgg19, BackboneKind::kInceptionV3,
        BackboneKind::kInceptionResnetV2, BackboneKind::kCompact}) {
    if (name == backbone_name(kind)) return kind;
  }
  throw ConfigurationError("unknown backbone: " + name);
}

std::vector<BackboneKind> reference_backbones() {
  return {BackboneKind::kVgg16, BackboneKind::kVgg19, BackboneKind::kInceptionV3,
          BackboneKind::kInceptionResnetV2};
}

const BackboneProfile& backbone_profile(BackboneKind kind) {
  static const BackboneProfile kProfiles[] = {
      {BackboneKind::kVgg16, 19, 5, NormalizationScheme::kBgrMeanCentered, 14714688,
       7079424},
      {BackboneKind::kVgg19, 22, 9, NormalizationScheme::kBgrMeanCentered, 20024384,
       14158848},
      {BackboneKind::kInceptionV3, 311, 140, NormalizationScheme::kUnitInterval,
       21802784, 16215936},
      {BackboneKind::kInceptionResnetV2, 780, 371, NormalizationScheme::kUnitInterval,
       54336736, 40442464},
      {BackboneKind::kCompact, 5, 2, NormalizationScheme::kUnitInterval, 0, 0},
  };
  for (const auto& p : kProfiles) {
    if (p.kind == kind) return p;
  }
  throw ConfigurationError("unknown backbone kind");
}

nn::Graph build_backbone(BackboneKind kind, std::uint64_t init_seed) {
  nn::Graph g = kind == BackboneKind::kCompact ? build_compact(init_seed)
                                               : build_from_descriptor(kind, init_seed);
  const BackboneProfile& profile = backbone_profile(kind);
  if (static_cast<int>(g.node_count()) != profile.layer_count) {
    throw SpecError(std::string(backbone_name(kind)) + ": layer list has " +
                    std::to_string(g.node_count()) + " entries, expected " +
                    std::to_string(profile.layer_count));
  }
  return g;
}

std::vector<std::pair<std::string, std::int64_t>> descriptor_param_counts(
    BackboneKind kind) {
  const json doc = json::parse(descriptor_json(kind));
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const auto& l : doc.at("layers")) {
    out.emplace_back(l.at("name").get<std::string>(), l.at("params").get<std::int64_t>());
  }
  return out;
}

}  // namespace fer
