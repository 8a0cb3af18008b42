#include "fer/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "fer/errors.hpp"

namespace fer {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr std::array<const char*, kNumEmotions> kShortNames = {
    "an", "di", "fe", "ha", "ne", "sa", "su"};

std::string sanitize_filename(const std::string& name) {
  std::string out = name;
  for (char& c : out) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    if (!ok) c = '_';
  }
  return out.empty() ? std::string("report") : out;
}

std::string percent(double value, int decimals = 2) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << value;
  return os.str();
}

std::string metric_cell(const std::optional<double>& value) {
  // Absent metric (empty denominator) renders as a dash, not as zero.
  return value ? percent(100.0 * *value, 1) + "%" : std::string("-");
}

const RunResult* best_run(const EvalReport& report) {
  if (report.runs.empty()) return nullptr;
  const auto it = std::max_element(
      report.runs.begin(), report.runs.end(),
      [](const RunResult& a, const RunResult& b) { return a.accuracy < b.accuracy; });
  return &*it;
}

std::string truncate(const std::string& s, std::size_t n) {
  return s.size() <= n ? s : s.substr(0, n - 1) + "~";
}

void write_text_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
}

}  // namespace

std::string render_report_text(const EvalReport& report) {
  std::ostringstream os;
  os << "report " << report.name << "\n";
  os << "  train " << report.train_set << "   model " << report.backbone
     << "   test " << report.test_set << "\n";
  os << "  runs " << report.runs.size() << " of " << report.configured_runs
     << "   mean " << percent(report.mean_accuracy) << "%   std "
     << percent(report.std_accuracy) << "%\n";
  if (report.single_run) os << "  single run: std degenerate at 0\n";
  if (report.incomplete) {
    os << "  INCOMPLETE: " << report.failures.size() << " failed run(s)\n";
    for (const auto& f : report.failures) os << "    failed: " << f << "\n";
  }
  if (report.runs.empty()) {
    os << "  no completed runs\n";
    return os.str();
  }

  os << "\n  class      precision    recall\n";
  for (int c = 0; c < kNumEmotions; ++c) {
    const EmotionLabel label = emotion_from_index(c);
    ClassMetrics m;
    if (const auto it = report.per_class.find(label); it != report.per_class.end())
      m = it->second;
    os << "  " << std::left << std::setw(11) << emotion_name(label)
       << std::right << std::setw(9) << metric_cell(m.precision)
       << std::setw(10) << metric_cell(m.recall) << "\n";
  }

  const RunResult* best = best_run(report);
  os << "\n  confusion of best run (" << percent(100.0 * best->accuracy)
     << "%, rows true / cols predicted):\n  " << std::setw(10) << "";
  for (const char* s : kShortNames) os << std::setw(7) << s;
  os << "\n";
  for (int r = 0; r < kNumEmotions; ++r) {
    os << "  " << std::left << std::setw(10) << emotion_name(emotion_from_index(r))
       << std::right;
    for (int c = 0; c < kNumEmotions; ++c) {
      os << std::setw(7)
         << best->confusion[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    os << "\n";
  }
  return os.str();
}

std::string render_suite_text(const std::vector<EvalReport>& reports) {
  // Columns: test sets in first-appearance order. Rows: (backbone, train).
  std::vector<std::string> tests;
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& r : reports) {
    if (std::find(tests.begin(), tests.end(), r.test_set) == tests.end())
      tests.push_back(r.test_set);
    const auto key = std::make_pair(r.backbone, r.train_set);
    if (std::find(rows.begin(), rows.end(), key) == rows.end())
      rows.push_back(key);
  }
  std::ostringstream os;
  os << std::left << std::setw(20) << "model" << std::setw(18) << "train";
  for (const auto& t : tests) os << std::setw(18) << truncate(t, 16);
  os << "\n";
  bool any_incomplete = false;
  for (const auto& [backbone, train] : rows) {
    os << std::setw(20) << truncate(backbone, 18) << std::setw(18)
       << truncate(train, 16);
    for (const auto& test : tests) {
      const auto it = std::find_if(
          reports.begin(), reports.end(), [&](const EvalReport& r) {
            return r.backbone == backbone && r.train_set == train &&
                   r.test_set == test;
          });
      std::string cell = "-";
      if (it != reports.end()) {
        cell = percent(it->mean_accuracy) + " +- " + percent(it->std_accuracy);
        if (it->incomplete) {
          cell += "*";
          any_incomplete = true;
        }
      }
      os << std::setw(18) << cell;
    }
    os << "\n";
  }
  if (any_incomplete)
    os << "* incomplete cell: fewer completed runs than configured\n";
  return os.str();
}

std::string render_gan_quality_text(
    const std::vector<GanQualityResult>& results) {
  std::vector<std::string> classifiers;
  std::vector<EmotionLabel> emotions;
  for (const auto& r : results) {
    if (std::find(classifiers.begin(), classifiers.end(), r.classifier) ==
        classifiers.end())
      classifiers.push_back(r.classifier);
    if (std::find(emotions.begin(), emotions.end(), r.emotion) == emotions.end())
      emotions.push_back(r.emotion);
  }
  std::sort(emotions.begin(), emotions.end(),
            [](EmotionLabel a, EmotionLabel b) {
              return emotion_index(a) < emotion_index(b);
            });
  std::ostringstream os;
  os << std::left << std::setw(22) << "classifier";
  for (EmotionLabel e : emotions) os << std::setw(10) << emotion_name(e);
  os << "\n";
  for (const auto& name : classifiers) {
    os << std::setw(22) << truncate(name, 20);
    for (EmotionLabel e : emotions) {
      const auto it = std::find_if(results.begin(), results.end(),
                                   [&](const GanQualityResult& r) {
                                     return r.classifier == name && r.emotion == e;
                                   });
      os << std::setw(10)
         << (it == results.end() ? std::string("-")
                                 : percent(100.0 * it->accuracy, 1));
    }
    os << "\n";
  }
  return os.str();
}

std::string gan_quality_to_json(const std::vector<GanQualityResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json j;
    j["classifier"] = r.classifier;
    j["emotion"] = std::string(emotion_name(r.emotion));
    j["correct"] = r.correct;
    j["total"] = r.total;
    j["accuracy"] = r.accuracy;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::vector<GanQualityResult> gan_quality_from_json(
    const std::string& json_text) {
  try {
    const json arr = json::parse(json_text);
    std::vector<GanQualityResult> out;
    for (const auto& j : arr) {
      GanQualityResult r;
      r.classifier = j.at("classifier").get<std::string>();
      const auto label = try_parse_emotion(j.at("emotion").get<std::string>());
      if (!label)
        throw EvaluationError("gan quality json: unknown emotion '" +
                              j.at("emotion").get<std::string>() + "'");
      r.emotion = *label;
      r.correct = j.at("correct").get<std::int64_t>();
      r.total = j.at("total").get<std::int64_t>();
      r.accuracy = j.at("accuracy").get<double>();
      out.push_back(std::move(r));
    }
    return out;
  } catch (const json::exception& e) {
    throw EvaluationError(std::string("gan quality json: ") + e.what());
  }
}

void render_confusion_png(const RunResult& result, const fs::path& path) {
  constexpr int kCell = 52, kLeft = 96, kTop = 44, kPad = 16;
  const int width = kLeft + kNumEmotions * kCell + kPad;
  const int height = kTop + kNumEmotions * kCell + kPad;
  cv::Mat canvas(height, width, CV_8UC3, cv::Scalar(255, 255, 255));

  for (int c = 0; c < kNumEmotions; ++c) {
    cv::putText(canvas, kShortNames[static_cast<std::size_t>(c)],
                {kLeft + c * kCell + kCell / 2 - 8, kTop - 12},
                cv::FONT_HERSHEY_SIMPLEX, 0.45, {40, 40, 40}, 1, cv::LINE_AA);
  }
  for (int r = 0; r < kNumEmotions; ++r) {
    cv::putText(canvas, std::string(emotion_name(emotion_from_index(r))),
                {6, kTop + r * kCell + kCell / 2 + 5}, cv::FONT_HERSHEY_SIMPLEX,
                0.42, {40, 40, 40}, 1, cv::LINE_AA);
    std::int64_t row_sum = 0;
    for (std::int64_t v : result.confusion[static_cast<std::size_t>(r)])
      row_sum += v;
    for (int c = 0; c < kNumEmotions; ++c) {
      const std::int64_t count =
          result.confusion[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      const double v =
          row_sum == 0 ? 0.0
                       : static_cast<double>(count) / static_cast<double>(row_sum);
      // White at 0 ramping into a deep blue at 1, BGR.
      const cv::Scalar fill(255 - v * (255 - 150), 255 - v * (255 - 75),
                            255 - v * 255);
      const cv::Rect cell(kLeft + c * kCell, kTop + r * kCell, kCell, kCell);
      cv::rectangle(canvas, cell, fill, cv::FILLED);
      cv::rectangle(canvas, cell, {190, 190, 190}, 1);
      const cv::Scalar ink = v > 0.55 ? cv::Scalar(255, 255, 255)
                                      : cv::Scalar(30, 30, 30);
      const std::string label = std::to_string(count);
      cv::putText(canvas, label,
                  {cell.x + kCell / 2 - 9 * static_cast<int>(label.size()) / 2,
                   cell.y + kCell / 2 + 5},
                  cv::FONT_HERSHEY_SIMPLEX, 0.45, ink, 1, cv::LINE_AA);
    }
  }
  fs::create_directories(path.parent_path());
  if (!cv::imwrite(path.string(), canvas))
    throw Error("cannot write '" + path.string() + "'");
}

void render_accuracy_png(const std::vector<EvalReport>& reports,
                         const fs::path& path) {
  const int n = static_cast<int>(reports.size());
  constexpr int kSlot = 84, kLeft = 64, kTop = 24, kPlotH = 240;
  const int width = std::max(300, kLeft + n * kSlot + 24);
  const int height = kTop + kPlotH + 96;
  cv::Mat canvas(height, width, CV_8UC3, cv::Scalar(255, 255, 255));
  const auto y_of = [&](double pct) {
    return kTop + static_cast<int>(std::lround(kPlotH * (1.0 - pct / 100.0)));
  };
  for (int pct = 0; pct <= 100; pct += 20) {
    const int y = y_of(pct);
    cv::line(canvas, {kLeft, y}, {width - 16, y}, {225, 225, 225}, 1);
    cv::putText(canvas, std::to_string(pct), {14, y + 4},
                cv::FONT_HERSHEY_SIMPLEX, 0.4, {60, 60, 60}, 1, cv::LINE_AA);
  }
  for (int i = 0; i < n; ++i) {
    const EvalReport& r = reports[static_cast<std::size_t>(i)];
    const int x0 = kLeft + i * kSlot + 14;
    const int bar_w = kSlot - 28;
    const double mean = std::clamp(r.mean_accuracy, 0.0, 100.0);
    const cv::Rect bar(x0, y_of(mean), bar_w, y_of(0) - y_of(mean));
    cv::rectangle(canvas, bar, {180, 119, 70}, cv::FILLED);
    if (r.incomplete) cv::rectangle(canvas, bar, {60, 60, 200}, 2);
    const double lo = std::clamp(r.mean_accuracy - r.std_accuracy, 0.0, 100.0);
    const double hi = std::clamp(r.mean_accuracy + r.std_accuracy, 0.0, 100.0);
    const int xc = x0 + bar_w / 2;
    cv::line(canvas, {xc, y_of(lo)}, {xc, y_of(hi)}, {30, 30, 30}, 1);
    cv::line(canvas, {xc - 5, y_of(lo)}, {xc + 5, y_of(lo)}, {30, 30, 30}, 1);
    cv::line(canvas, {xc - 5, y_of(hi)}, {xc + 5, y_of(hi)}, {30, 30, 30}, 1);
    cv::putText(canvas, percent(r.mean_accuracy, 1),
                {x0, y_of(mean) - 6}, cv::FONT_HERSHEY_SIMPLEX, 0.36,
                {30, 30, 30}, 1, cv::LINE_AA);
    const int ty = y_of(0);
    cv::putText(canvas, truncate(r.train_set, 12), {x0 - 8, ty + 18},
                cv::FONT_HERSHEY_SIMPLEX, 0.32, {60, 60, 60}, 1, cv::LINE_AA);
    cv::putText(canvas, truncate(r.backbone, 12), {x0 - 8, ty + 34},
                cv::FONT_HERSHEY_SIMPLEX, 0.32, {60, 60, 60}, 1, cv::LINE_AA);
    cv::putText(canvas, truncate(r.test_set, 12), {x0 - 8, ty + 50},
                cv::FONT_HERSHEY_SIMPLEX, 0.32, {60, 60, 60}, 1, cv::LINE_AA);
  }
  cv::line(canvas, {kLeft, y_of(0)}, {width - 16, y_of(0)}, {90, 90, 90}, 1);
  fs::create_directories(path.parent_path());
  if (!cv::imwrite(path.string(), canvas))
    throw Error("cannot write '" + path.string() + "'");
}

ReportFiles write_report_files(const EvalReport& report, const fs::path& dir) {
  const std::string base = sanitize_filename(report.name);
  ReportFiles files;
  files.json = dir / (base + ".json");
  files.text = dir / (base + ".txt");
  fs::create_directories(dir);
  write_text_file(files.json, eval_report_to_json(report) + "\n");
  write_text_file(files.text, render_report_text(report));
  if (const RunResult* best = best_run(report)) {
    files.confusion_png = dir / (base + "_confusion.png");
    render_confusion_png(*best, files.confusion_png);
  }
  return files;
}

std::vector<ReportFiles> write_suite_files(
    const std::vector<EvalReport>& reports, const fs::path& dir) {
  std::vector<ReportFiles> out;
  out.reserve(reports.size());
  for (const auto& r : reports) out.push_back(write_report_files(r, dir));
  write_text_file(dir / "suite.txt", render_suite_text(reports));
  if (!reports.empty()) render_accuracy_png(reports, dir / "accuracy.png");
  return out;
}

}  // namespace fer
