#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgproc.hpp>
#include <spdlog/spdlog.h>

#include "docarl/core/document_class.hpp"
#include "docarl/core/error.hpp"
#include "docarl/idgen/generator.hpp"
#include "docarl/render/manifest.hpp"
#include "docarl/render/text_raster.hpp"
#include "docarl/templates/template.hpp"

namespace docarl {

struct BaseRender {
  cv::Mat image;  // BGR, native template size
  RenderManifest manifest;
};

namespace detail {

// Where a decoration is drawn on the native canvas: top-left, ink height, and
// the right edge it must not cross.
struct DecorationSlot {
  std::string_view class_id;
  std::string_view tag;
  int x, y, height, max_right;
};

inline constexpr DecorationSlot kDecorationSlots[] = {
    {kAdhaar, "NAME_HI", 925, 440, 70, 2100},
    {kAdhaar, "GENDER_HI", 600, 815, 70, 1100},
    {kDl, "FILE_NUMBER", 560, 440, 22, 790},
    {kPan, "SIGNATURE", 120, 1700, 100, 1400},
    {kPassport, "COUNTRY_CODE", 1322, 244, 40, 1425},
    {kPassport, "NATIONALITY", 1844, 248, 44, 2039},
    {kVoter, "NAME_HI", 1290, 760, 70, 2500},
    {kVoter, "HUSBANDS_NAME_HI", 1600, 1000, 70, 2900},
    {kVoter, "GENDER_HI", 1500, 1250, 70, 1900},
};

inline const DecorationSlot* decoration_slot(std::string_view class_id, std::string_view tag) {
  for (const auto& s : kDecorationSlots) {
    if (s.class_id == class_id && s.tag == tag) return &s;
  }
  return nullptr;
}

inline const cv::Scalar kInk{40, 30, 25};
inline const cv::Scalar kBackground{236, 241, 244};
inline const cv::Scalar kFrame{170, 150, 120};

}  // namespace detail

/// Top-left and ink height used for a field value inside its template region.
struct FieldSlot {
  int x, y, max_right;
  double height;
};

inline FieldSlot field_slot(const Box& region) {
  const double h = region.height();
  const double pad = std::max(2.0, std::floor(0.1 * h));
  const double ink = std::max(6.0, std::floor(0.6 * h));
  return {static_cast<int>(region.x0() + pad), static_cast<int>(std::floor(region.y0() + 0.5 * (h - ink))),
          static_cast<int>(region.x1() - pad), ink};
}

/// Draws a record onto a flat canvas of the class's native size and records
/// every drawn item in the manifest.
inline BaseRender render_base(const DocumentRecord& record, const Template& tmpl,
                              const std::optional<cv::Mat>& background = std::nullopt) {
  const auto& cls = document_class(record.class_id);
  if (tmpl.field_order.size() != cls.field_order.size() ||
      !std::equal(tmpl.field_order.begin(), tmpl.field_order.end(), cls.field_order.begin())) {
    throw Error(Errc::InvalidArgument, "template " + tmpl.code + " does not belong to " + record.class_id);
  }
  BaseRender out;
  if (background && !background->empty()) {
    if (background->type() != CV_8UC3) throw Error(Errc::BadImage, "background must be 8-bit BGR");
    out.image = background->clone();
  } else {
    out.image = cv::Mat(cls.native_height, cls.native_width, CV_8UC3, detail::kBackground);
    const int band = std::max(4, cls.native_height / 100);
    out.image(cv::Rect(0, 0, out.image.cols, band)).setTo(detail::kFrame);
    out.image(cv::Rect(0, out.image.rows - band, out.image.cols, band)).setTo(detail::kFrame);
  }
  auto& m = out.manifest;
  m.class_id = record.class_id;
  m.kind = VariantKind::Original;
  m.image_width = out.image.cols;
  m.image_height = out.image.rows;
  m.placement = Box(0, 0, out.image.cols, out.image.rows);
  m.source_serial = record.serial;

  const auto& ir = tmpl.identifying_region;
  m.anchor_box = draw_text_fill(out.image, ir.identifying_text, ir.identified_box, detail::kInk);
  m.texts.push_back({std::string(kAnchorTag), ir.identifying_text, m.anchor_box});

  for (const auto& code : tmpl.field_order) {
    const Box& region = tmpl.region(code).region_box;
    const FieldSlot s = field_slot(region);
    const auto& value = record.value(code);
    const DrawnText d = draw_text(out.image, value, s.x, s.y, s.height, s.max_right, detail::kInk);
    if (d.overflow) {
      m.warnings.push_back("TextOverflow: " + code);
      spdlog::debug("TextOverflow on {} {} '{}'", record.class_id, code, value);
    }
    m.texts.push_back({code, value, d.box});
  }

  for (const auto& dec : record.decorations) {
    const auto* slot = detail::decoration_slot(record.class_id, dec.tag);
    if (!slot) continue;  // generated for realism, not drawn on this page
    const DrawnText d = draw_text(out.image, dec.text, slot->x, slot->y, slot->height, slot->max_right,
                                  detail::kInk);
    if (d.overflow) m.warnings.push_back("TextOverflow: " + dec.tag);
    m.texts.push_back({dec.tag, dec.text, d.box});
  }
  return out;
}

}  // namespace docarl
