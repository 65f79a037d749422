#pragma once

#include <algorithm>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "docarl/core/annotation.hpp"
#include "docarl/core/document_class.hpp"
#include "docarl/core/image.hpp"
#include "docarl/eval/metrics.hpp"
#include "docarl/pipeline/backends.hpp"
#include "docarl/pipeline/pipeline.hpp"
#include "docarl/render/split.hpp"
#include "docarl/templates/registry.hpp"

namespace docarl {

struct ClassMetrics {
  metrics::ClassCounts counts;
  double precision = 0, recall = 0, f1 = 0;
  friend bool operator==(const ClassMetrics&, const ClassMetrics&) = default;
};

struct ValidationStats {
  std::size_t count = 0;
  double sum = 0.0;
  double min = 1.0;
  std::size_t anchor_failures = 0;

  void add(double ratio) {
    ++count;
    sum += ratio;
    min = std::min(min, ratio);
  }
  double mean() const { return count == 0 ? 0.0 : sum / static_cast<double>(count); }
};

struct MetricsReport {
  std::map<std::string, ClassMetrics> per_class;
  std::uint64_t total_images = 0;
  std::uint64_t total_tp = 0;
  double accuracy = 0, precision = 0, recall = 0, f1 = 0;
  std::size_t validated = 0;
  double mean_validation = 0, min_validation = 0;
  std::size_t anchor_failures = 0;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Per-class and macro metrics. Classes never seen as truth or prediction are
/// listed but left out of the macro mean.
inline MetricsReport make_report(const metrics::ConfusionCounts& c, const ValidationStats& v = {}) {
  MetricsReport r;
  r.total_images = c.total_images;
  r.total_tp = c.total_tp();
  r.accuracy = c.total_images == 0 ? 0.0 : static_cast<double>(r.total_tp) / static_cast<double>(c.total_images);
  std::size_t active = 0;
  for (const auto& [cls, k] : c.per_class) {
    ClassMetrics m{k, metrics::precision(k.tp, k.fp), metrics::recall(k.tp, k.fn), 0.0};
    m.f1 = metrics::f1(m.precision, m.recall);
    r.per_class[cls] = m;
    if (k.tp + k.fp + k.fn == 0) continue;
    ++active;
    r.precision += m.precision;
    r.recall += m.recall;
    r.f1 += m.f1;
  }
  if (active > 0) {
    r.precision /= static_cast<double>(active);
    r.recall /= static_cast<double>(active);
    r.f1 /= static_cast<double>(active);
  }
  r.validated = v.count;
  r.mean_validation = v.mean();
  r.min_validation = v.count == 0 ? 0.0 : v.min;
  r.anchor_failures = v.anchor_failures;
  return r;
}

inline nlohmann::json report_to_json(const MetricsReport& r) {
  nlohmann::json classes = nlohmann::json::object();
  for (const auto& [cls, m] : r.per_class) {
    classes[cls] = {{"tp", m.counts.tp}, {"fp", m.counts.fp}, {"fn", m.counts.fn},
                    {"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
  }
  return {{"total_images", r.total_images},
          {"total_tp", r.total_tp},
          {"accuracy", r.accuracy},
          {"precision", r.precision},
          {"recall", r.recall},
          {"f1", r.f1},
          {"validation", {{"count", r.validated}, {"mean", r.mean_validation}, {"min", r.min_validation},
                          {"anchor_failures", r.anchor_failures}}},
          {"per_class", classes}};
}

inline MetricsReport report_from_json(const nlohmann::json& j) {
  try {
    MetricsReport r;
    r.total_images = j.at("total_images").get<std::uint64_t>();
    r.total_tp = j.at("total_tp").get<std::uint64_t>();
    r.accuracy = j.at("accuracy").get<double>();
    r.precision = j.at("precision").get<double>();
    r.recall = j.at("recall").get<double>();
    r.f1 = j.at("f1").get<double>();
    const auto& v = j.at("validation");
    r.validated = v.at("count").get<std::size_t>();
    r.mean_validation = v.at("mean").get<double>();
    r.min_validation = v.at("min").get<double>();
    r.anchor_failures = v.at("anchor_failures").get<std::size_t>();
    for (const auto& [cls, m] : j.at("per_class").items()) {
      ClassMetrics cm;
      cm.counts = {m.at("tp").get<std::uint64_t>(), m.at("fp").get<std::uint64_t>(), m.at("fn").get<std::uint64_t>()};
      cm.precision = m.at("precision").get<double>();
      cm.recall = m.at("recall").get<double>();
      cm.f1 = m.at("f1").get<double>();
      r.per_class[cls] = cm;
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SchemaError, std::string("metrics report: ") + e.what());
  }
}

/// One image of a dataset split with its ground truth.
struct LabelledImage {
  std::filesystem::path image_path;
  std::string class_id;
  std::optional<std::string> annotation;  // serialized ground-truth fields
};

/// Reads the class from each label file and the expected fields from the
/// annotation file when one exists.
inline std::vector<LabelledImage> list_split(const std::filesystem::path& dataset_root, Split split) {
  const auto data = dataset_root / "data";
  const std::string sn(split_name(split));
  const auto images = data / "images" / sn;
  if (!std::filesystem::is_directory(images)) throw Error(Errc::IoError, "missing split directory " + images.string());
  std::vector<LabelledImage> out;
  for (const auto& e : std::filesystem::directory_iterator(images)) {
    if (!e.is_regular_file()) continue;
    const std::string stem = e.path().stem().string();
    const auto label = data / "labels" / sn / (stem + ".txt");
    if (!std::filesystem::exists(label)) {
      spdlog::warn("no label for {}, skipped", e.path().string());
      continue;
    }
    std::istringstream ls(read_text_file(label));
    int index = -1;
    if (!(ls >> index)) throw Error(Errc::SchemaError, "bad label file " + label.string());
    LabelledImage li{e.path(), std::string(class_by_index(index).id), std::nullopt};
    const auto ann = data / "annotation" / sn / (stem + ".txt");
    if (std::filesystem::exists(ann)) {
      li.annotation = serialize_annotation(parse_annotation(li.class_id, read_text_file(ann)));
    }
    out.push_back(std::move(li));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.image_path < b.image_path; });
  return out;
}

struct EvalOptions {
  bool validate = true;
  std::function<void(const LabelledImage&, const std::string& predicted, double ratio)> on_image;
};

/// Identification counts plus extract-and-validate ratios for each image.
/// An image without an annotation only contributes to the counts.
inline MetricsReport evaluate(const std::vector<LabelledImage>& items, const DetectorBackend& detector,
                              const OcrBackend& ocr, const TemplateRegistry& registry, const EvalOptions& opts = {}) {
  metrics::ConfusionCounts counts;
  ValidationStats stats;
  for (const auto& item : items) {
    const ImageRef img = load_image(item.image_path);
    std::string predicted;
    double confidence = 0.0;
    try {
      const DetectionResult det = identify(img, detector);
      predicted = det.class_id;
      confidence = det.confidence;
      counts.record(item.class_id, predicted);
    } catch (const Error& e) {
      if (e.code() != Errc::NoDocumentFound) throw;
      counts.record_miss(item.class_id);
    }
    double ratio = std::numeric_limits<double>::quiet_NaN();
    if (opts.validate && item.annotation) {
      ratio = 0.0;
      if (!predicted.empty()) {
        try {
          ratio = validate(extract(img, predicted, ocr, registry, confidence).serialized, *item.annotation);
        } catch (const Error& e) {
          if (e.code() != Errc::AnchorNotFound) throw;
          ++stats.anchor_failures;
        }
      }
      stats.add(ratio);
    }
    if (opts.on_image) opts.on_image(item, predicted, ratio);
  }
  return make_report(counts, stats);
}

inline MetricsReport evaluate(const std::filesystem::path& dataset_root, Split split, const DetectorBackend& detector,
                              const OcrBackend& ocr, const TemplateRegistry& registry, const EvalOptions& opts = {}) {
  return evaluate(list_split(dataset_root, split), detector, ocr, registry, opts);
}

}  // namespace docarl
