#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "docarl/core/box.hpp"
#include "docarl/core/detection.hpp"
#include "docarl/core/image.hpp"

namespace docarl {

/// Document detector. Implementations must tolerate concurrent calls.
class DetectorBackend {
 public:
  virtual ~DetectorBackend() = default;
  virtual std::vector<DetectionResult> detect(const ImageRef& img) const = 0;
};

/// Text reader. Returned boxes are in the coordinates of `img` (crop offsets
/// added back) and sorted by (y0, x0).
class OcrBackend {
 public:
  virtual ~OcrBackend() = default;
  virtual std::vector<OcrSpan> read(const ImageRef& img, const std::optional<Box>& crop) const = 0;
};

inline void sort_reading_order(std::vector<OcrSpan>& spans) {
  std::stable_sort(spans.begin(), spans.end(), [](const OcrSpan& a, const OcrSpan& b) {
    if (a.box.y0() != b.box.y0()) return a.box.y0() < b.box.y0();
    return a.box.x0() < b.box.x0();
  });
}

}  // namespace docarl
