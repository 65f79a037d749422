#pragma once

#include <cmath>
#include <sstream>

#include "docarl/core/error.hpp"

namespace docarl {

/// Axis-aligned rectangle in pixel space, origin top-left, y downward.
/// Coordinates are reals; rounding only happens when pixels are cropped.
class Box {
 public:
  constexpr Box() = default;

  Box(double x0, double y0, double x1, double y1) : x0_(x0), y0_(y0), x1_(x1), y1_(y1) {
    if (!(std::isfinite(x0) && std::isfinite(y0) && std::isfinite(x1) && std::isfinite(y1))) {
      throw Error(Errc::InvalidBox, "non-finite coordinate");
    }
    if (x1 < x0 || y1 < y0) {
      std::ostringstream os;
      os << "inverted box (" << x0 << "," << y0 << "," << x1 << "," << y1 << ")";
      throw Error(Errc::InvalidBox, os.str());
    }
  }

  double x0() const noexcept { return x0_; }
  double y0() const noexcept { return y0_; }
  double x1() const noexcept { return x1_; }
  double y1() const noexcept { return y1_; }

  double width() const noexcept { return x1_ - x0_; }
  double height() const noexcept { return y1_ - y0_; }
  double area() const noexcept { return width() * height(); }
  double cx() const noexcept { return 0.5 * (x0_ + x1_); }
  double cy() const noexcept { return 0.5 * (y0_ + y1_); }

  bool contains_point(double x, double y) const noexcept {
    return x >= x0_ && x <= x1_ && y >= y0_ && y <= y1_;
  }

  bool contains(const Box& o, double eps = 1e-9) const noexcept {
    return o.x0_ >= x0_ - eps && o.y0_ >= y0_ - eps && o.x1_ <= x1_ + eps && o.y1_ <= y1_ + eps;
  }

  /// s*box + t, componentwise. Requires sx, sy >= 0.
  Box scaled_translated(double sx, double sy, double tx, double ty) const {
    return Box(sx * x0_ + tx, sy * y0_ + ty, sx * x1_ + tx, sy * y1_ + ty);
  }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  double x0_ = 0, y0_ = 0, x1_ = 0, y1_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Box& b) {
  return os << "(" << b.x0() << "," << b.y0() << "," << b.x1() << "," << b.y1() << ")";
}

}  // namespace docarl
