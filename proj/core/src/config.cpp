#include "fer/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fer/errors.hpp"
#include "fer/rng.hpp"

namespace fer {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

struct Collector {
  std::vector<std::string>& errors;
  void add(const std::string& field, const std::string& message) {
    errors.push_back(field + ": " + message);
  }
};

// Environment lookups are restricted to the two root variables; anything
// else inside ${...} is a config error, not a shell feature.
std::string expand_roots(const std::string& raw, Collector& out,
                         const std::string& field) {
  if (!raw.starts_with("${")) return raw;
  const auto close = raw.find('}');
  if (close == std::string::npos) {
    out.add(field, "unterminated ${...} reference");
    return raw;
  }
  const std::string name = raw.substr(2, close - 2);
  if (name != "FER_DATA_ROOT" && name != "FER_WEIGHTS_ROOT") {
    out.add(field, "unknown variable ${" + name + "}");
    return raw;
  }
  const char* value = std::getenv(name.c_str());
  if (value == nullptr || *value == '\0') {
    out.add(field, "references ${" + name + "} but it is not set");
    return raw;
  }
  return std::string(value) + raw.substr(close + 1);
}

fs::path resolve_path(const std::string& raw, const fs::path& base) {
  const fs::path p(raw);
  return p.is_absolute() ? p : base / p;
}

bool check_unknown_keys(const json& obj, const std::vector<std::string>& known,
                        const std::string& prefix, Collector& out) {
  bool clean = true;
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      out.add(prefix.empty() ? key : prefix + "." + key, "unknown field");
      clean = false;
    }
  }
  return clean;
}

// Typed getters that record a structured error instead of throwing, so one
// pass reports every defect.
template <typename T>
void get_number(const json& obj, const char* key, const std::string& prefix,
                Collector& out, T& dest) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_number()) {
    out.add(prefix + key, "expected a number");
    return;
  }
  dest = v.get<T>();
}

void get_bool(const json& obj, const char* key, const std::string& prefix,
              Collector& out, bool& dest) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_boolean()) {
    out.add(prefix + key, "expected a boolean");
    return;
  }
  dest = v.get<bool>();
}

void get_string(const json& obj, const char* key, const std::string& prefix,
                Collector& out, std::string& dest) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_string()) {
    out.add(prefix + key, "expected a string");
    return;
  }
  dest = v.get<std::string>();
}

void check_bound(double value, const char* key, const std::string& prefix,
                 Collector& out) {
  if (!(value >= 0.0 && value < 1.0)) {
    std::ostringstream os;
    os << "out of range [0, 1), got " << value;
    out.add(prefix + key, os.str());
  }
}

void parse_augment(const json& obj, Collector& out, AugmentParams& params) {
  check_unknown_keys(obj, {"rho", "zeta", "theta", "omega", "gamma", "flip",
                           "replicas"},
                     "augment", out);
  get_number(obj, "rho", "augment.", out, params.rho);
  get_number(obj, "zeta", "augment.", out, params.zeta);
  get_number(obj, "theta", "augment.", out, params.theta);
  get_number(obj, "omega", "augment.", out, params.omega);
  get_number(obj, "gamma", "augment.", out, params.gamma);
  get_bool(obj, "flip", "augment.", out, params.flip_enabled);
  get_number(obj, "replicas", "augment.", out, params.replicas);
  check_bound(params.rho, "rho", "augment.", out);
  check_bound(params.zeta, "zeta", "augment.", out);
  check_bound(params.theta, "theta", "augment.", out);
  check_bound(params.omega, "omega", "augment.", out);
  check_bound(params.gamma, "gamma", "augment.", out);
  if (params.replicas < 1) {
    out.add("augment.replicas",
            "must be at least 1, got " + std::to_string(params.replicas));
  }
}

void parse_gan_spec(const json& obj, Collector& out, DcganSpec& spec) {
  check_unknown_keys(
      obj,
      {"latent_dim", "image_side", "channels", "stages", "base_filters",
       "stem_kernel", "stride_kernel", "leaky_slope", "learning_rate", "beta1",
       "batch_size", "monitor_every", "checkpoint_from", "checkpoint_every",
       "monitor_grid", "stable_variant"},
      "gan.spec", out);
  get_number(obj, "latent_dim", "gan.spec.", out, spec.latent_dim);
  get_number(obj, "image_side", "gan.spec.", out, spec.image_side);
  get_number(obj, "channels", "gan.spec.", out, spec.channels);
  get_number(obj, "stages", "gan.spec.", out, spec.stages);
  get_number(obj, "base_filters", "gan.spec.", out, spec.base_filters);
  get_number(obj, "stem_kernel", "gan.spec.", out, spec.stem_kernel);
  get_number(obj, "stride_kernel", "gan.spec.", out, spec.stride_kernel);
  get_number(obj, "leaky_slope", "gan.spec.", out, spec.leaky_slope);
  get_number(obj, "learning_rate", "gan.spec.", out, spec.learning_rate);
  get_number(obj, "beta1", "gan.spec.", out, spec.beta1);
  get_number(obj, "batch_size", "gan.spec.", out, spec.batch_size);
  get_number(obj, "monitor_every", "gan.spec.", out, spec.monitor_every);
  get_number(obj, "checkpoint_from", "gan.spec.", out, spec.checkpoint_from);
  get_number(obj, "checkpoint_every", "gan.spec.", out, spec.checkpoint_every);
  get_number(obj, "monitor_grid", "gan.spec.", out, spec.monitor_grid);
  get_bool(obj, "stable_variant", "gan.spec.", out, spec.stable_variant);

  const auto positive = [&](int v, const char* key) {
    if (v < 1) out.add(std::string("gan.spec.") + key, "must be positive");
  };
  positive(spec.latent_dim, "latent_dim");
  positive(spec.image_side, "image_side");
  positive(spec.channels, "channels");
  positive(spec.stages, "stages");
  positive(spec.base_filters, "base_filters");
  positive(spec.batch_size, "batch_size");
  positive(spec.monitor_grid, "monitor_grid");
  if (spec.stages >= 1 && spec.image_side >= 1 &&
      spec.image_side % (1 << spec.stages) != 0) {
    out.add("gan.spec.image_side",
            "must be divisible by 2^stages = " + std::to_string(1 << spec.stages));
  }
  if (!(spec.learning_rate > 0.0f))
    out.add("gan.spec.learning_rate", "must be positive");
  if (!(spec.beta1 > 0.0f && spec.beta1 < 1.0f))
    out.add("gan.spec.beta1", "must be in (0, 1)");
  if (!(spec.leaky_slope >= 0.0f && spec.leaky_slope < 1.0f))
    out.add("gan.spec.leaky_slope", "must be in [0, 1)");
}

bool valid_checkpoint_epoch(int epoch) {
  return epoch >= 1000 && epoch <= 2000 && epoch % 100 == 0;
}

}  // namespace

ConfigResult load_config(const fs::path& path) {
  ConfigResult result;
  Collector out{result.errors};

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    out.add("config", "cannot read '" + path.string() + "'");
    return result;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string raw = buffer.str();

  json j;
  try {
    j = json::parse(raw);
  } catch (const json::exception& e) {
    out.add("config", std::string("parse error: ") + e.what());
    return result;
  }
  if (!j.is_object()) {
    out.add("config", "top level must be an object");
    return result;
  }

  ExperimentConfig cfg;
  cfg.digest = hex16(fnv1a64(raw));
  const fs::path base = path.has_parent_path() ? path.parent_path() : ".";

  check_unknown_keys(j,
                     {"format", "version", "output_root", "seed", "manifests",
                      "augment", "gan", "train", "weights", "eval"},
                     "", out);

  std::string format = "fer-experiment";
  get_string(j, "format", "", out, format);
  if (format != "fer-experiment")
    out.add("format", "expected \"fer-experiment\", got \"" + format + "\"");
  get_number(j, "version", "", out, cfg.version);
  if (cfg.version != 1)
    out.add("version", "unsupported version " + std::to_string(cfg.version));

  std::string output_root = cfg.output_root.string();
  get_string(j, "output_root", "", out, output_root);
  cfg.output_root = resolve_path(output_root, base);
  get_number(j, "seed", "", out, cfg.seed);

  if (j.contains("manifests")) {
    const json& m = j.at("manifests");
    if (!m.is_object()) {
      out.add("manifests", "expected an object of name -> path");
    } else {
      for (const auto& [name, value] : m.items()) {
        const std::string field = "manifests." + name;
        if (!value.is_string()) {
          out.add(field, "expected a path string");
          continue;
        }
        const std::string expanded =
            expand_roots(value.get<std::string>(), out, field);
        const fs::path resolved = resolve_path(expanded, base);
        if (!fs::exists(resolved)) {
          out.add(field, "file not found '" + resolved.string() + "'");
          continue;
        }
        cfg.manifests[name] = resolved;
      }
    }
  }

  if (j.contains("augment")) {
    const json& a = j.at("augment");
    if (!a.is_object()) out.add("augment", "expected an object");
    else parse_augment(a, out, cfg.augment);
  }

  if (j.contains("gan")) {
    const json& g = j.at("gan");
    if (!g.is_object()) {
      out.add("gan", "expected an object");
    } else {
      check_unknown_keys(g, {"spec", "epochs", "checkpoints"}, "gan", out);
      if (g.contains("spec")) {
        if (!g.at("spec").is_object()) out.add("gan.spec", "expected an object");
        else parse_gan_spec(g.at("spec"), out, cfg.gan);
      }
      get_number(g, "epochs", "gan.", out, cfg.gan_epochs);
      if (cfg.gan_epochs < 1) out.add("gan.epochs", "must be positive");
      if (g.contains("checkpoints")) {
        const json& cps = g.at("checkpoints");
        if (!cps.is_object()) {
          out.add("gan.checkpoints", "expected an object of emotion -> epoch");
        } else {
          for (const auto& [name, value] : cps.items()) {
            const std::string field = "gan.checkpoints." + name;
            const auto label = try_parse_emotion(name);
            if (!label) {
              out.add(field, "unknown emotion");
              continue;
            }
            if (!value.is_number_integer()) {
              out.add(field, "expected an integer epoch");
              continue;
            }
            const int epoch = value.get<int>();
            if (!valid_checkpoint_epoch(epoch)) {
              out.add(field, "epoch must be in 1000..2000 step 100, got " +
                                 std::to_string(epoch));
              continue;
            }
            cfg.pinned_checkpoints[*label] = epoch;
          }
        }
      }
    }
  }

  if (j.contains("train")) {
    const json& t = j.at("train");
    if (!t.is_object()) {
      out.add("train", "expected an object");
    } else {
      check_unknown_keys(t,
                         {"stage1_epochs", "stage1_lr", "stage2_epochs",
                          "stage2_lr", "batch_size", "unfreeze"},
                         "train", out);
      get_number(t, "stage1_epochs", "train.", out, cfg.train.stage1_epochs);
      get_number(t, "stage1_lr", "train.", out, cfg.train.stage1_lr);
      get_number(t, "stage2_epochs", "train.", out, cfg.train.stage2_epochs);
      get_number(t, "stage2_lr", "train.", out, cfg.train.stage2_lr);
      get_number(t, "batch_size", "train.", out, cfg.train.batch_size);
      get_number(t, "unfreeze", "train.", out, cfg.train.unfreeze);
      try {
        cfg.train.validate();
      } catch (const Error& e) {
        out.add("train", e.what());
      }
      if (cfg.train.unfreeze == 0 || cfg.train.unfreeze < -1) {
        out.add("train.unfreeze",
                "must be -1 (backbone default) or a positive layer count");
      }
    }
  }

  if (j.contains("weights")) {
    const json& w = j.at("weights");
    if (!w.is_object()) {
      out.add("weights", "expected an object");
    } else {
      check_unknown_keys(w, {"kind", "path"}, "weights", out);
      std::string kind = "builtin";
      get_string(w, "kind", "weights.", out, kind);
      if (kind == "builtin") {
        cfg.weights = WeightSource::builtin();
      } else if (kind == "file") {
        std::string p;
        get_string(w, "path", "weights.", out, p);
        if (p.empty()) {
          out.add("weights.path", "required when kind is \"file\"");
        } else {
          const std::string expanded = expand_roots(p, out, "weights.path");
          const fs::path resolved = resolve_path(expanded, base);
          if (!fs::exists(resolved)) {
            out.add("weights.path", "file not found '" + resolved.string() + "'");
          } else {
            cfg.weights = WeightSource::file(resolved.string());
          }
        }
      } else {
        out.add("weights.kind", "expected \"builtin\" or \"file\", got \"" +
                                    kind + "\"");
      }
    }
  }

  if (j.contains("eval")) {
    const json& e = j.at("eval");
    if (!e.is_object()) {
      out.add("eval", "expected an object");
    } else {
      check_unknown_keys(e,
                         {"backbones", "train_sets", "test_sets",
                          "runs_per_cell", "seed_base", "kfold"},
                         "eval", out);
      if (e.contains("backbones")) {
        const json& bs = e.at("backbones");
        if (!bs.is_array()) {
          out.add("eval.backbones", "expected an array of names");
        } else {
          for (std::size_t i = 0; i < bs.size(); ++i) {
            if (!bs[i].is_string()) {
              out.add("eval.backbones[" + std::to_string(i) + "]",
                      "expected a name string");
              continue;
            }
            try {
              cfg.backbones.push_back(
                  backbone_from_name(bs[i].get<std::string>()));
            } catch (const Error&) {
              out.add("eval.backbones[" + std::to_string(i) + "]",
                      "unknown backbone '" + bs[i].get<std::string>() + "'");
            }
          }
        }
      }
      const auto parse_set_list = [&](const char* key,
                                      std::vector<std::string>& dest) {
        if (!e.contains(key)) return;
        const json& xs = e.at(key);
        const std::string prefix = std::string("eval.") + key;
        if (!xs.is_array()) {
          out.add(prefix, "expected an array of manifest names");
          return;
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
          if (!xs[i].is_string()) {
            out.add(prefix + "[" + std::to_string(i) + "]",
                    "expected a name string");
            continue;
          }
          const std::string name = xs[i].get<std::string>();
          if (cfg.manifests.find(name) == cfg.manifests.end()) {
            out.add(prefix + "[" + std::to_string(i) + "]",
                    "no manifest named '" + name + "'");
            continue;
          }
          dest.push_back(name);
        }
      };
      parse_set_list("train_sets", cfg.train_sets);
      parse_set_list("test_sets", cfg.test_sets);
      get_number(e, "runs_per_cell", "eval.", out, cfg.runs_per_cell);
      if (cfg.runs_per_cell < 1) out.add("eval.runs_per_cell", "must be positive");
      get_number(e, "seed_base", "eval.", out, cfg.seed_base);
      if (e.contains("kfold")) {
        const json& k = e.at("kfold");
        if (!k.is_object()) {
          out.add("eval.kfold", "expected an object");
        } else {
          check_unknown_keys(k, {"union", "k"}, "eval.kfold", out);
          get_string(k, "union", "eval.kfold.", out, cfg.kfold_union);
          get_number(k, "k", "eval.kfold.", out, cfg.kfold_k);
          if (!cfg.kfold_union.empty() &&
              cfg.manifests.find(cfg.kfold_union) == cfg.manifests.end()) {
            out.add("eval.kfold.union",
                    "no manifest named '" + cfg.kfold_union + "'");
          }
          if (cfg.kfold_k < 2) out.add("eval.kfold.k", "must be at least 2");
        }
      }
    }
  }

  if (result.errors.empty()) result.config = std::move(cfg);
  return result;
}

ExperimentConfig validate_config(const fs::path& path) {
  ConfigResult result = load_config(path);
  if (!result.ok()) {
    std::string message = "config '" + path.string() + "' invalid:";
    for (const auto& e : result.errors) message += "\n  " + e;
    throw ConfigurationError(message);
  }
  return std::move(*result.config);
}

std::string config_to_json(const ExperimentConfig& config) {
  json j;
  j["format"] = "fer-experiment";
  j["version"] = config.version;
  j["output_root"] = config.output_root.string();
  j["seed"] = config.seed;
  json manifests = json::object();
  for (const auto& [name, p] : config.manifests) manifests[name] = p.string();
  j["manifests"] = std::move(manifests);
  j["augment"] = {{"rho", config.augment.rho},
                  {"zeta", config.augment.zeta},
                  {"theta", config.augment.theta},
                  {"omega", config.augment.omega},
                  {"gamma", config.augment.gamma},
                  {"flip", config.augment.flip_enabled},
                  {"replicas", config.augment.replicas}};
  json checkpoints = json::object();
  for (const auto& [label, epoch] : config.pinned_checkpoints)
    checkpoints[std::string(emotion_name(label))] = epoch;
  j["gan"] = {{"spec",
               {{"latent_dim", config.gan.latent_dim},
                {"image_side", config.gan.image_side},
                {"channels", config.gan.channels},
                {"stages", config.gan.stages},
                {"base_filters", config.gan.base_filters},
                {"stem_kernel", config.gan.stem_kernel},
                {"stride_kernel", config.gan.stride_kernel},
                {"leaky_slope", config.gan.leaky_slope},
                {"learning_rate", config.gan.learning_rate},
                {"beta1", config.gan.beta1},
                {"batch_size", config.gan.batch_size},
                {"monitor_every", config.gan.monitor_every},
                {"checkpoint_from", config.gan.checkpoint_from},
                {"checkpoint_every", config.gan.checkpoint_every},
                {"monitor_grid", config.gan.monitor_grid},
                {"stable_variant", config.gan.stable_variant}}},
              {"epochs", config.gan_epochs},
              {"checkpoints", std::move(checkpoints)}};
  j["train"] = {{"stage1_epochs", config.train.stage1_epochs},
                {"stage1_lr", config.train.stage1_lr},
                {"stage2_epochs", config.train.stage2_epochs},
                {"stage2_lr", config.train.stage2_lr},
                {"batch_size", config.train.batch_size},
                {"unfreeze", config.train.unfreeze}};
  json weights;
  weights["kind"] =
      config.weights.kind == WeightSource::Kind::kBuiltin ? "builtin" : "file";
  if (config.weights.kind == WeightSource::Kind::kFile)
    weights["path"] = config.weights.path;
  j["weights"] = std::move(weights);
  json backbones = json::array();
  for (BackboneKind b : config.backbones) backbones.push_back(backbone_name(b));
  j["eval"] = {{"backbones", std::move(backbones)},
               {"train_sets", config.train_sets},
               {"test_sets", config.test_sets},
               {"runs_per_cell", config.runs_per_cell},
               {"seed_base", config.seed_base},
               {"kfold", {{"union", config.kfold_union}, {"k", config.kfold_k}}}};
  return j.dump(2);
}

}  // namespace fer
