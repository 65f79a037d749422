#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgproc.hpp>

#include "docarl/core/error.hpp"
#include "docarl/render/manifest.hpp"

namespace docarl {

inline constexpr int kA4Width = 2480;
inline constexpr int kA4Height = 3508;
inline constexpr int kA4DocHeight = 600;

inline constexpr std::array<std::pair<int, int>, 6> kA4Positions{{
    {100, 100}, {1500, 100}, {100, 1000}, {1500, 1000}, {100, 2000}, {1500, 2000}}};

inline constexpr int kVariantsPerBase = 14;

/// ITU-R BT.601 luma; greyscale input is returned as a copy.
inline cv::Mat to_greyscale(const cv::Mat& img) {
  if (img.channels() == 1) return img.clone();
  cv::Mat grey;
  cv::cvtColor(img, grey, img.channels() == 4 ? cv::COLOR_BGRA2GRAY : cv::COLOR_BGR2GRAY);
  return grey;
}

struct A4Placement {
  cv::Mat image;
  Box placement;
  double scale = 1.0;
};

inline int a4_resized_width(int w, int h) {
  return static_cast<int>(std::lround(static_cast<double>(kA4DocHeight) * w / h));
}

/// The document scaled to the A4 paste height, width rounded from the aspect ratio.
inline cv::Mat resize_for_a4(const cv::Mat& img) {
  if (img.empty()) throw Error(Errc::BadImage, "empty image");
  cv::Mat out;
  cv::resize(img, out, {a4_resized_width(img.cols, img.rows), kA4DocHeight}, 0, 0, cv::INTER_AREA);
  return out;
}

/// Pastes an already resized document on a white A4 page at (x, y).
/// `source_height` is the pre-resize height that defines the scale.
inline A4Placement paste_on_a4(const cv::Mat& resized, int source_height, int x, int y) {
  const int rw = resized.cols;
  if (x < 0 || y < 0 || x + rw > kA4Width || y + resized.rows > kA4Height) {
    throw Error(Errc::PlacementOverflow, "document of width " + std::to_string(rw) + " does not fit at (" +
                                             std::to_string(x) + "," + std::to_string(y) + ")");
  }
  A4Placement out;
  out.image = cv::Mat(kA4Height, kA4Width, resized.type(), cv::Scalar::all(255));
  resized.copyTo(out.image(cv::Rect(x, y, rw, resized.rows)));
  out.placement = Box(x, y, x + rw, y + resized.rows);
  out.scale = static_cast<double>(kA4DocHeight) / source_height;
  return out;
}

/// Resizes the document to 600 px high and pastes it on a white A4 page at (x, y).
inline A4Placement place_on_a4(const cv::Mat& img, int x, int y) {
  if (img.empty()) throw Error(Errc::BadImage, "empty image");
  const int rw = a4_resized_width(img.cols, img.rows);
  if (x < 0 || y < 0 || x + rw > kA4Width || y + kA4DocHeight > kA4Height) {
    throw Error(Errc::PlacementOverflow, "document of width " + std::to_string(rw) + " does not fit at (" +
                                             std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return paste_on_a4(resize_for_a4(img), img.rows, x, y);
}

/// Moves manifest geometry through box' = s*box + (x, y).
inline RenderManifest place_manifest(const RenderManifest& m, double s, int x, int y) {
  RenderManifest out = m;
  out.image_width = kA4Width;
  out.image_height = kA4Height;
  out.a4_position = std::pair{x, y};
  out.placement = Box(x, y, x + a4_resized_width(m.image_width, m.image_height), y + kA4DocHeight);
  out.anchor_box = m.anchor_box.scaled_translated(s, s, x, y);
  for (auto& t : out.texts) t.box = t.box.scaled_translated(s, s, x, y);
  return out;
}

struct VariantSpec {
  VariantKind kind = VariantKind::Original;
  std::optional<std::pair<int, int>> a4_position;
  std::string stem;
};

/// The 14 variant names for a base stem, in emission order.
inline std::vector<VariantSpec> plan_fanout(const std::string& stem) {
  std::vector<VariantSpec> out;
  out.push_back({VariantKind::Original, std::nullopt, stem});
  out.push_back({VariantKind::Greyscale, std::nullopt, stem + "_greyscale"});
  for (const auto& [x, y] : kA4Positions) {
    const std::string a4 = stem + "_a4_" + std::to_string(x) + "_" + std::to_string(y);
    out.push_back({VariantKind::A4, std::pair{x, y}, a4});
    out.push_back({VariantKind::A4Greyscale, std::pair{x, y}, a4 + "_greyscale"});
  }
  return out;
}

struct Variant {
  VariantSpec spec;
  cv::Mat image;
  RenderManifest manifest;
};

using VariantSink = std::function<void(Variant&&)>;

/// Emits the 14 variants of a base image one at a time.
inline void fanout(const cv::Mat& image, const RenderManifest& manifest, const std::string& stem,
                   const VariantSink& sink) {
  const cv::Mat grey = to_greyscale(image);
  const cv::Mat small = resize_for_a4(image);
  const cv::Mat small_grey = resize_for_a4(grey);
  for (auto& spec : plan_fanout(stem)) {
    Variant v;
    const bool g = is_greyscale(spec.kind);
    const cv::Mat& src = g ? grey : image;
    if (spec.a4_position) {
      auto [x, y] = *spec.a4_position;
      A4Placement p = paste_on_a4(g ? small_grey : small, image.rows, x, y);
      v.image = std::move(p.image);
      v.manifest = place_manifest(manifest, p.scale, x, y);
    } else {
      v.image = src;
      v.manifest = manifest;
    }
    v.manifest.kind = spec.kind;
    v.manifest.manifest_id = spec.stem;
    v.manifest.content_hash.clear();
    v.spec = std::move(spec);
    sink(std::move(v));
  }
}

inline std::vector<Variant> fanout(const cv::Mat& image, const RenderManifest& manifest, const std::string& stem) {
  std::vector<Variant> out;
  fanout(image, manifest, stem, [&](Variant&& v) { out.push_back(std::move(v)); });
  return out;
}

}  // namespace docarl
