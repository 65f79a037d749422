#pragma once

#include <algorithm>

#include "docarl/core/box.hpp"
#include "docarl/core/error.hpp"

namespace docarl {

/// Template anchor box (where the identifying text sits on the template) paired
/// with the box where that text was found in an input image.
class AnchorCorrespondence {
 public:
  AnchorCorrespondence(Box template_anchor, Box found_anchor)
      : template_(template_anchor), found_(found_anchor) {
    if (!(template_anchor.width() > 0 && template_anchor.height() > 0)) {
      throw Error(Errc::DegenerateAnchor, "template anchor must have positive width and height");
    }
  }

  const Box& template_anchor() const noexcept { return template_; }
  const Box& found_anchor() const noexcept { return found_; }

  double scale_x() const noexcept { return found_.width() / template_.width(); }
  double scale_y() const noexcept { return found_.height() / template_.height(); }

 private:
  Box template_;
  Box found_;
};

/// Maps a template region into input-image coordinates. Start coordinates are
/// anchored at the found anchor's start, end coordinates at its end:
///   AX = (FSX*(OEX-OSX) + (FEX-FSX)*(SX2-OSX)) / (OEX-OSX)
///   BX = (FEX*(OEX-OSX) + (FEX-FSX)*(EX2-OEX)) / (OEX-OSX)
/// and likewise for y.
inline Box map_region(const AnchorCorrespondence& corr, const Box& region) {
  const Box& o = corr.template_anchor();
  const Box& f = corr.found_anchor();
  const double ow = o.x1() - o.x0();
  const double oh = o.y1() - o.y0();
  const double fw = f.x1() - f.x0();
  const double fh = f.y1() - f.y0();
  const double ax = (f.x0() * ow + fw * (region.x0() - o.x0())) / ow;
  const double ay = (f.y0() * oh + fh * (region.y0() - o.y0())) / oh;
  const double bx = (f.x1() * ow + fw * (region.x1() - o.x1())) / ow;
  const double by = (f.y1() * oh + fh * (region.y1() - o.y1())) / oh;
  return Box(ax, ay, std::max(ax, bx), std::max(ay, by));
}

/// The same map written with explicit per-axis ratios (similar triangles):
/// x' = FSX + sx*(x - OSX) for starts and x' = FEX + sx*(x - OEX) for ends.
inline Box map_region_similar_triangles(const AnchorCorrespondence& corr, const Box& region) {
  const Box& o = corr.template_anchor();
  const Box& f = corr.found_anchor();
  const double sx = corr.scale_x();
  const double sy = corr.scale_y();
  const double ax = f.x0() + sx * (region.x0() - o.x0());
  const double ay = f.y0() + sy * (region.y0() - o.y0());
  const double bx = f.x1() + sx * (region.x1() - o.x1());
  const double by = f.y1() + sy * (region.y1() - o.y1());
  return Box(ax, ay, std::max(ax, bx), std::max(ay, by));
}

inline Box clamp_to_image(const Box& b, double width, double height) {
  if (!(width > 0 && height > 0)) throw Error(Errc::InvalidArgument, "image size must be positive");
  const double x0 = std::clamp(b.x0(), 0.0, width);
  const double y0 = std::clamp(b.y0(), 0.0, height);
  const double x1 = std::clamp(b.x1(), 0.0, width);
  const double y1 = std::clamp(b.y1(), 0.0, height);
  if (!(x1 > x0 && y1 > y0)) throw Error(Errc::EmptyCrop, "region lies outside the image");
  return Box(x0, y0, x1, y1);
}

}  // namespace docarl
