#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "docarl/core/annotation.hpp"
#include "docarl/core/error.hpp"
#include "docarl/geometry/anchor_mapping.hpp"
#include "docarl/pipeline/backends.hpp"
#include "docarl/similarity/gestalt.hpp"
#include "docarl/templates/registry.hpp"

namespace docarl {

inline constexpr double kAnchorThreshold = 0.8;

/// Highest-confidence detection; ties keep the earliest.
inline DetectionResult identify(const ImageRef& img, const DetectorBackend& detector) {
  auto detections = detector.detect(img);
  if (detections.empty()) throw Error(Errc::NoDocumentFound, "detector returned no documents");
  std::size_t best = 0;
  for (std::size_t i = 1; i < detections.size(); ++i) {
    if (detections[i].confidence > detections[best].confidence) best = i;
  }
  return std::move(detections[best]);
}

/// Box of the span most similar to the identifying text, among spans at or
/// above the threshold; ties keep the earliest in reading order.
inline Box find_anchor(const std::vector<OcrSpan>& spans, std::string_view identifying_text,
                       double threshold = kAnchorThreshold) {
  const OcrSpan* best = nullptr;
  double best_score = -1.0;
  for (const auto& s : spans) {
    const double score = similarity(identifying_text, s.text);
    if (score >= threshold && score > best_score) {
      best = &s;
      best_score = score;
    }
  }
  if (!best) throw Error(Errc::AnchorNotFound, "no text matches '" + std::string(identifying_text) + "'");
  return best->box;
}

struct ExtractionResult {
  std::string class_id;
  double confidence = 0.0;
  Box anchor_box;
  std::vector<AnnotationField> fields;
  std::string serialized;
  std::vector<std::pair<std::string, Box>> per_region_boxes;
  std::vector<std::string> empty_crops;
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// Staged extraction for a known class.
inline ExtractionResult extract(const ImageRef& img, std::string_view class_id, const OcrBackend& ocr,
                                const TemplateRegistry& registry, double confidence = 1.0) {
  const Template& tmpl = registry.registry_for(class_id);
  ExtractionResult res;
  res.class_id = std::string(class_id);
  res.confidence = confidence;

  const auto spans = ocr.read(img, std::nullopt);
  res.anchor_box = find_anchor(spans, tmpl.identifying_region.identifying_text);
  const AnchorCorrespondence corr(tmpl.identifying_region.identified_box, res.anchor_box);
  const double w = img.pixels.cols, h = img.pixels.rows;

  std::vector<std::string> values;
  for (const auto& code : tmpl.field_order) {
    const Box mapped = map_region(corr, tmpl.region(code).region_box);
    res.per_region_boxes.emplace_back(code, mapped);
    std::string text;
    try {
      const Box crop = clamp_to_image(mapped, w, h);
      for (const auto& span : ocr.read(img, crop)) {
        text += ' ';
        text += span.text;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::EmptyCrop) throw;
      res.empty_crops.push_back(code);
    }
    text = scrub_value(trim(text));
    res.fields.push_back({code, text});
    values.push_back(std::move(text));
  }
  res.serialized = join_values(values);
  return res;
}

/// Fused form: identify the class, then extract.
inline ExtractionResult extract(const ImageRef& img, const DetectorBackend& detector, const OcrBackend& ocr,
                                const TemplateRegistry& registry) {
  const DetectionResult det = identify(img, detector);
  return extract(img, det.class_id, ocr, registry, det.confidence);
}

inline double validate(std::string_view extracted, std::string_view ground_truth) {
  return similarity(ground_truth, extracted);
}

}  // namespace docarl
