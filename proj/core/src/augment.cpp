#include "fer/augment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "fer/errors.hpp"
#include "fer/logging.hpp"
#include "fer/rng.hpp"

namespace fer {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_bound(double v, const char* name) {
  if (!(v >= 0.0 && v < 1.0))
    throw RangeError(std::string("augment: ") + name + " = " +
                     std::to_string(v) + " outside [0, 1)");
}

/// Bilinear sample with edge replication outside the frame.
float sample_clamped(const Image& img, float fy, float fx, int c) {
  int y0 = static_cast<int>(std::floor(fy));
  int x0 = static_cast<int>(std::floor(fx));
  float wy = fy - y0;
  float wx = fx - x0;
  int y1 = std::clamp(y0 + 1, 0, img.height - 1);
  int x1 = std::clamp(x0 + 1, 0, img.width - 1);
  y0 = std::clamp(y0, 0, img.height - 1);
  x0 = std::clamp(x0, 0, img.width - 1);
  float top = img.at(y0, x0, c) * (1.0f - wx) + img.at(y0, x1, c) * wx;
  float bot = img.at(y1, x0, c) * (1.0f - wx) + img.at(y1, x1, c) * wx;
  return top * (1.0f - wy) + bot * wy;
}

/// Center crop-or-pad one axis back to the target length; padding replicates
/// the edge row/column.
Image fit_axis(const Image& src, int target_h, int target_w) {
  if (src.height == target_h && src.width == target_w) return src;
  Image out(target_h, target_w, src.channels);
  const int off_y = (src.height - target_h) / 2;
  const int off_x = (src.width - target_w) / 2;
  for (int y = 0; y < target_h; ++y) {
    int sy = std::clamp(y + off_y, 0, src.height - 1);
    for (int x = 0; x < target_w; ++x) {
      int sx = std::clamp(x + off_x, 0, src.width - 1);
      for (int c = 0; c < src.channels; ++c)
        out.at(y, x, c) = src.at(sy, sx, c);
    }
  }
  return out;
}

}  // namespace

void AugmentParams::validate() const {
  check_bound(rho, "rho");
  check_bound(zeta, "zeta");
  check_bound(theta, "theta");
  check_bound(omega, "omega");
  check_bound(gamma, "gamma");
  if (replicas < 1)
    throw RangeError("augment: replicas must be positive, got " +
                     std::to_string(replicas));
}

DrawnFactors draw_factors(const AugmentParams& params, std::uint64_t seed) {
  params.validate();
  Rng rng(seed);
  DrawnFactors f;
  f.rotation_angle = rng.uniform(-kTwoPi * params.rho, kTwoPi * params.rho);
  f.zoom = rng.uniform(1.0 - params.zeta, 1.0 + params.zeta);
  f.height_scale = rng.uniform(1.0 - params.theta, 1.0 + params.theta);
  f.width_scale = rng.uniform(1.0 - params.omega, 1.0 + params.omega);
  f.flip = params.flip_enabled ? rng.next_bool() : false;
  f.contrast = rng.uniform(1.0 - params.gamma, 1.0 + params.gamma);
  return f;
}

Image rotate_about_center(const Image& image, double angle_rad) {
  if (angle_rad == 0.0) return image;
  Image out(image.height, image.width, image.channels);
  const float cy = (image.height - 1) * 0.5f;
  const float cx = (image.width - 1) * 0.5f;
  const float cos_a = static_cast<float>(std::cos(angle_rad));
  const float sin_a = static_cast<float>(std::sin(angle_rad));
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      // inverse map: rotate output coordinates by -angle
      float dy = y - cy;
      float dx = x - cx;
      float sy = cy + sin_a * dx + cos_a * dy;
      float sx = cx + cos_a * dx - sin_a * dy;
      for (int c = 0; c < image.channels; ++c)
        out.at(y, x, c) =
            std::clamp(sample_clamped(image, sy, sx, c), 0.0f, 255.0f);
    }
  }
  return out;
}

Image zoom_about_center(const Image& image, double factor) {
  if (factor == 1.0) return image;
  if (factor <= 0.0)
    throw RangeError("zoom factor must be positive");
  Image out(image.height, image.width, image.channels);
  const float cy = (image.height - 1) * 0.5f;
  const float cx = (image.width - 1) * 0.5f;
  const float inv = static_cast<float>(1.0 / factor);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      float sy = cy + (y - cy) * inv;
      float sx = cx + (x - cx) * inv;
      for (int c = 0; c < image.channels; ++c)
        out.at(y, x, c) =
            std::clamp(sample_clamped(image, sy, sx, c), 0.0f, 255.0f);
    }
  }
  return out;
}

Image scale_height(const Image& image, double factor) {
  if (factor == 1.0) return image;
  if (factor <= 0.0) throw RangeError("height scale must be positive");
  int new_h = std::max(1, static_cast<int>(std::lround(image.height * factor)));
  Image resized = resize_bilinear(image, new_h, image.width);
  return fit_axis(resized, image.height, image.width);
}

Image scale_width(const Image& image, double factor) {
  if (factor == 1.0) return image;
  if (factor <= 0.0) throw RangeError("width scale must be positive");
  int new_w = std::max(1, static_cast<int>(std::lround(image.width * factor)));
  Image resized = resize_bilinear(image, image.height, new_w);
  return fit_axis(resized, image.height, image.width);
}

Image flip_horizontal(const Image& image) {
  Image out(image.height, image.width, image.channels);
  for (int y = 0; y < image.height; ++y)
    for (int x = 0; x < image.width; ++x)
      for (int c = 0; c < image.channels; ++c)
        out.at(y, x, c) = image.at(y, image.width - 1 - x, c);
  return out;
}

Image adjust_contrast(const Image& image, double factor) {
  if (factor == 1.0) return image;
  Image out(image.height, image.width, image.channels);
  const std::size_t hw =
      static_cast<std::size_t>(image.height) * image.width;
  for (int c = 0; c < image.channels; ++c) {
    double sum = 0.0;
    for (std::size_t p = 0; p < hw; ++p) sum += image.data[p * image.channels + c];
    const float mean = static_cast<float>(sum / static_cast<double>(hw));
    const float f = static_cast<float>(factor);
    for (std::size_t p = 0; p < hw; ++p) {
      float v = mean + f * (image.data[p * image.channels + c] - mean);
      out.data[p * image.channels + c] = std::clamp(v, 0.0f, 255.0f);
    }
  }
  return out;
}

Image apply_kernels(const Image& image, const DrawnFactors& factors) {
  Image out = rotate_about_center(image, factors.rotation_angle);
  out = zoom_about_center(out, factors.zoom);
  out = scale_height(out, factors.height_scale);
  out = scale_width(out, factors.width_scale);
  if (factors.flip) out = flip_horizontal(out);
  out = adjust_contrast(out, factors.contrast);
  return out;
}

std::uint64_t replica_seed(std::uint64_t master_seed,
                           const std::string& record_id, int replica_index) {
  return derive_seed(master_seed, record_id,
                     static_cast<std::uint64_t>(replica_index));
}

DatasetManifest expand(const DatasetManifest& manifest,
                       const std::filesystem::path& manifest_dir,
                       const AugmentParams& params, std::uint64_t master_seed,
                       const std::filesystem::path& out_dir, int workers) {
  params.validate();
  std::filesystem::create_directories(out_dir);
  const std::size_t n = manifest.records.size();
  const int replicas = params.replicas;
  std::vector<ImageRecord> out_records(n * static_cast<std::size_t>(replicas));
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      const ImageRecord& rec = manifest.records[i];
      try {
        Image src;
        try {
          src = read_image(resolve_record_path(rec.path, manifest_dir));
        } catch (const Error& e) {
          throw IngestionError("expand: record '" + rec.id +
                               "': " + e.what());
        }
        for (int r = 0; r < replicas; ++r) {
          DrawnFactors f =
              draw_factors(params, replica_seed(master_seed, rec.id, r));
          Image aug = apply_kernels(src, f);
          ImageRecord out = rec;
          out.id = rec.id + "_aug" + std::to_string(r);
          out.source = Source::kGeomAug;
          out.parent_id = rec.id;
          std::filesystem::path out_path = out_dir / (out.id + ".png");
          write_image(aug, out_path);
          out.path = out_path.string();
          out_records[i * replicas + r] = std::move(out);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  workers = std::max(1, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  DatasetManifest out;
  out.name = manifest.name + "_DA_OL";
  out.records = std::move(out_records);
  out.recount();
  out.validate();
  logs::event("augment", "expanded",
              {logs::str("manifest", manifest.name),
               logs::num("inputs", manifest.size()),
               logs::num("outputs", out.size()),
               logs::num("replicas", replicas),
               logs::num("seed", static_cast<std::int64_t>(master_seed))});
  return out;
}

}  // namespace fer
