#include "fer/preprocess.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <thread>

#include "fer/errors.hpp"
#include "fer/logging.hpp"

namespace fer {

Image detect_and_crop(const Image& raw, const FaceDetector& detector,
                      double confidence_threshold,
                      const std::string& record_id) {
  if (!(confidence_threshold > 0.0 && confidence_threshold < 1.0))
    throw RangeError("detect_and_crop: confidence threshold must lie in (0, 1)");
  if (raw.height <= 0 || raw.width <= 0)
    throw RangeError("detect_and_crop: empty image");

  std::vector<FaceBox> boxes = detector.detect(raw);
  std::optional<FaceBox> best;
  for (const auto& b : boxes) {
    if (b.confidence < confidence_threshold) continue;
    if (!best || b.confidence > best->confidence ||
        (b.confidence == best->confidence && b.area() > best->area()))
      best = b;
  }
  if (!best)
    throw FaceNotFoundError(
        record_id, "no face with confidence >= " +
                       std::to_string(confidence_threshold) +
                       (record_id.empty() ? "" : " in record '" + record_id + "'"));

  // clamp to image bounds
  int x0 = std::clamp(best->x, 0, raw.width - 1);
  int y0 = std::clamp(best->y, 0, raw.height - 1);
  int x1 = std::clamp(best->x + best->w, x0 + 1, raw.width);
  int y1 = std::clamp(best->y + best->h, y0 + 1, raw.height);

  Image face = crop(raw, x0, y0, x1 - x0, y1 - y0);
  Image out = resize_bilinear(face, kStandardSide, kStandardSide);
  require_standard(out, "detect_and_crop");
  return out;
}

PreprocessResult run_preprocess(const DatasetManifest& manifest,
                                const std::filesystem::path& manifest_dir,
                                const std::string& detector_name,
                                double confidence_threshold,
                                const std::filesystem::path& out_dir,
                                int workers) {
  std::filesystem::create_directories(out_dir);
  const std::size_t n = manifest.records.size();
  std::vector<std::optional<ImageRecord>> processed(n);
  std::vector<std::string> excluded;
  std::mutex excluded_mutex;
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  workers = std::max(1, workers);
  auto work = [&]() {
    auto detector = make_detector(detector_name);  // one per worker
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      const ImageRecord& rec = manifest.records[i];
      try {
        Image raw = read_image(resolve_record_path(rec.path, manifest_dir));
        Image face =
            detect_and_crop(raw, *detector, confidence_threshold, rec.id);
        std::filesystem::path out_path = out_dir / (rec.id + ".png");
        write_image(face, out_path);
        ImageRecord out = rec;
        out.path = out_path.string();
        processed[i] = std::move(out);
      } catch (const FaceNotFoundError& e) {
        std::lock_guard<std::mutex> lock(excluded_mutex);
        excluded.push_back(rec.id);
        logs::event("preprocess", "face_not_found",
                    {logs::str("record", rec.id)});
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  PreprocessResult result;
  result.processed.name = manifest.name;
  for (auto& rec : processed)
    if (rec) result.processed.records.push_back(std::move(*rec));
  result.processed.recount();
  std::sort(excluded.begin(), excluded.end());
  result.excluded_ids = std::move(excluded);
  logs::event("preprocess", "done",
              {logs::str("manifest", manifest.name),
               logs::num("records", result.processed.size()),
               logs::num("excluded", static_cast<std::int64_t>(
                                         result.excluded_ids.size()))});
  return result;
}

}  // namespace fer
