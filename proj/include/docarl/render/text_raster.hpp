#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include <opencv2/core.hpp>
#include <opencv2/imgproc.hpp>

#include "docarl/core/box.hpp"

namespace docarl {

/// Hershey fonts cover printable ASCII only. Latin-1 letters fold to their base
/// letter and anything else becomes '?'. Only the pixels use the folded form.
inline std::string fold_to_ascii(std::string_view s) {
  static constexpr std::string_view kLatin1 =  // U+00C0 .. U+00FF
      "AAAAAAACEEEEIIII"
      "DNOOOOOxOUUUUYTs"
      "aaaaaaaceeeeiiii"
      "dnooooo/ouuuuyty";
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      out.push_back(c >= 0x20 && c < 0x7F ? static_cast<char>(c) : ' ');
      ++i;
      continue;
    }
    std::size_t len = (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 1;
    if (len == 2 && i + 1 < s.size()) {
      const unsigned cp = ((c & 0x1Fu) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
      out.push_back(cp >= 0xC0 && cp <= 0xFF ? kLatin1[cp - 0xC0] : '?');
    } else {
      out.push_back('?');
    }
    i += std::min(len, s.size() - i);
  }
  return out;
}

struct TextMask {
  cv::Mat mask;  // CV_8U, tight around the ink
};

/// Rasterises `text` into a tight ink mask whose height is close to `px_height`.
inline TextMask rasterize_text(std::string_view text, double px_height) {
  const std::string ascii = fold_to_ascii(text);
  const int font = cv::FONT_HERSHEY_SIMPLEX;
  int baseline = 0;
  const cv::Size unit = cv::getTextSize(ascii, font, 1.0, 1, &baseline);
  const double scale = std::max(0.05, px_height / static_cast<double>(unit.height + baseline));
  const int thickness = std::max(1, static_cast<int>(std::lround(scale * 1.6)));
  const cv::Size sz = cv::getTextSize(ascii, font, scale, thickness, &baseline);
  const int margin = thickness + 4;
  cv::Mat canvas(sz.height + baseline + 2 * margin, sz.width + 2 * margin, CV_8U, cv::Scalar(0));
  cv::putText(canvas, ascii, {margin, margin + sz.height}, font, scale, cv::Scalar(255), thickness, cv::LINE_8);
  const cv::Rect ink = cv::boundingRect(canvas);
  if (ink.area() == 0) return {cv::Mat(1, 1, CV_8U, cv::Scalar(0))};
  return {canvas(ink).clone()};
}

/// Paints ink pixels of `mask` at (x, y) in `color`. Returns the painted box.
inline Box composite_mask(cv::Mat& canvas, const cv::Mat& mask, int x, int y, const cv::Scalar& color) {
  const cv::Rect dst(x, y, mask.cols, mask.rows);
  const cv::Rect clipped = dst & cv::Rect(0, 0, canvas.cols, canvas.rows);
  if (clipped.area() > 0) {
    const cv::Mat m = mask(cv::Rect(clipped.x - x, clipped.y - y, clipped.width, clipped.height));
    canvas(clipped).setTo(color, m);
  }
  return Box(clipped.x, clipped.y, clipped.x + clipped.width, clipped.y + clipped.height);
}

struct DrawnText {
  Box box;
  bool overflow = false;
};

/// Draws text with its top-left ink corner at (x, y), shrinking it to keep the
/// right edge at or before `max_right`.
inline DrawnText draw_text(cv::Mat& canvas, std::string_view text, int x, int y, double px_height,
                           int max_right, const cv::Scalar& color) {
  TextMask tm = rasterize_text(text, px_height);
  bool overflow = false;
  const int avail = std::max(1, max_right - x);
  if (tm.mask.cols > avail) {
    overflow = true;
    const double f = static_cast<double>(avail) / tm.mask.cols;
    const int h = std::max(1, static_cast<int>(std::floor(tm.mask.rows * f)));
    cv::resize(tm.mask, tm.mask, {avail, h}, 0, 0, cv::INTER_AREA);
    cv::threshold(tm.mask, tm.mask, 96, 255, cv::THRESH_BINARY);
    const cv::Rect ink = cv::boundingRect(tm.mask);
    if (ink.area() > 0) tm.mask = tm.mask(ink).clone();
  }
  return {composite_mask(canvas, tm.mask, x, y, color), overflow};
}

/// Draws text stretched to fill `box` exactly (integer box assumed).
inline Box draw_text_fill(cv::Mat& canvas, std::string_view text, const Box& box, const cv::Scalar& color) {
  TextMask tm = rasterize_text(text, box.height());
  const int w = static_cast<int>(std::lround(box.width()));
  const int h = static_cast<int>(std::lround(box.height()));
  cv::Mat fitted;
  cv::resize(tm.mask, fitted, {w, h}, 0, 0, cv::INTER_LINEAR);
  cv::threshold(fitted, fitted, 96, 255, cv::THRESH_BINARY);
  composite_mask(canvas, fitted, static_cast<int>(std::lround(box.x0())), static_cast<int>(std::lround(box.y0())),
                 color);
  return box;
}

}  // namespace docarl
