#pragma once

#include <string>

#include "docarl/core/box.hpp"
#include "docarl/core/error.hpp"

namespace docarl {

struct DetectionResult {
  std::string class_id;
  Box box;
  double confidence = 0.0;

  DetectionResult() = default;
  DetectionResult(std::string cls, Box b, double conf)
      : class_id(std::move(cls)), box(b), confidence(conf) {
    if (!(conf >= 0.0 && conf <= 1.0)) {
      throw Error(Errc::InvalidArgument, "confidence outside [0,1]");
    }
  }
};

struct OcrSpan {
  Box box;
  std::string text;
  double score = 1.0;

  OcrSpan() = default;
  OcrSpan(Box b, std::string t, double s) : box(b), text(std::move(t)), score(s) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw Error(Errc::InvalidArgument, "OCR score outside [0,1]");
    }
  }
};

}  // namespace docarl
