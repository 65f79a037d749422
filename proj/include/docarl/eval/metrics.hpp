#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "docarl/core/document_class.hpp"

namespace docarl::metrics {

/// 0 when there are no positive predictions.
inline double precision(std::uint64_t tp, std::uint64_t fp) {
  return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
}

/// 0 when there are no positive ground-truth items.
inline double recall(std::uint64_t tp, std::uint64_t fn) {
  return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

inline double f1(double p, double r) { return p + r <= 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

struct ClassCounts {
  std::uint64_t tp = 0, fp = 0, fn = 0;
  ClassCounts& operator+=(const ClassCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Per-class identification counts over a set of images.
struct ConfusionCounts {
  std::map<std::string, ClassCounts> per_class;
  std::uint64_t total_images = 0;

  ConfusionCounts() {
    for (const auto& c : kDocumentClasses) per_class[std::string(c.id)];
  }

  void record(const std::string& truth, const std::string& predicted) {
    ++total_images;
    if (truth == predicted) {
      ++per_class[truth].tp;
    } else {
      ++per_class[predicted].fp;
      ++per_class[truth].fn;
    }
  }

  /// The detector found nothing: a miss for the true class only.
  void record_miss(const std::string& truth) {
    ++total_images;
    ++per_class[truth].fn;
  }

  ConfusionCounts& merge(const ConfusionCounts& o) {
    for (const auto& [k, v] : o.per_class) per_class[k] += v;
    total_images += o.total_images;
    return *this;
  }

  std::uint64_t total_tp() const {
    std::uint64_t n = 0;
    for (const auto& [k, v] : per_class) n += v.tp;
    return n;
  }
};

}  // namespace docarl::metrics
