#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "docarl/core/base64.hpp"
#include "docarl/core/document_class.hpp"
#include "docarl/core/image.hpp"
#include "docarl/eval/evaluate.hpp"
#include "docarl/eval/metrics.hpp"
#include "docarl/feedback/assemble.hpp"
#include "docarl/feedback/store.hpp"
#include "docarl/idgen/generator.hpp"
#include "docarl/pipeline/backends.hpp"
#include "docarl/render/augment.hpp"

namespace docarl {

/// One cell of the simulation grid: a variant name, its truth, and a tiny
/// raster whose content hash identifies it.
struct GridItem {
  std::string stem;
  std::string class_id;
  VariantKind kind = VariantKind::Original;
  ImageRef image;
  std::vector<unsigned char> png;
};

struct SimulationGrid {
  std::vector<GridItem> items;
  std::unordered_map<std::string, std::size_t> by_hash;

  const GridItem* find(const std::string& hash) const {
    auto it = by_hash.find(hash);
    return it == by_hash.end() ? nullptr : &items[it->second];
  }
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// 4x1 token. The running index goes in the first pixels so every cell differs.
inline cv::Mat grid_token(std::size_t n, VariantKind kind) {
  const auto k = static_cast<unsigned char>(kind);
  if (is_greyscale(kind)) {
    cv::Mat m(1, 4, CV_8UC1);
    m.at<unsigned char>(0, 0) = static_cast<unsigned char>(n & 0xFF);
    m.at<unsigned char>(0, 1) = static_cast<unsigned char>((n >> 8) & 0xFF);
    m.at<unsigned char>(0, 2) = static_cast<unsigned char>((n >> 16) & 0xFF);
    m.at<unsigned char>(0, 3) = k;
    return m;
  }
  cv::Mat m(1, 4, CV_8UC3, cv::Scalar::all(0));
  m.at<cv::Vec3b>(0, 0) = {static_cast<unsigned char>(n & 0xFF), static_cast<unsigned char>((n >> 8) & 0xFF),
                           static_cast<unsigned char>((n >> 16) & 0xFF)};
  m.at<cv::Vec3b>(0, 1) = {k, 0xA5, 0x5A};
  return m;
}

}  // namespace detail

/// Every class x base x variant combination, named like the real fan-out.
inline SimulationGrid make_grid(std::size_t bases_per_class) {
  SimulationGrid g;
  for (const auto& cls : kDocumentClasses) {
    for (std::size_t i = 1; i <= bases_per_class; ++i) {
      for (const auto& spec : plan_fanout(std::string(cls.id) + "_" + std::to_string(i))) {
        GridItem item;
        item.stem = spec.stem;
        item.class_id = std::string(cls.id);
        item.kind = spec.kind;
        item.image = make_image_ref(detail::grid_token(g.items.size(), spec.kind));
        item.png = png::encode(item.image.pixels);
        g.by_hash.emplace(item.image.content_hash, g.items.size());
        g.items.push_back(std::move(item));
      }
    }
  }
  return g;
}

/// Detector stand-in for a model trained on a known set of (class, kind) pairs:
/// right on covered pairs, a seeded uniform guess elsewhere. The guess for an
/// image is fixed for a given seed.
class CoverageDetector final : public DetectorBackend {
 public:
  CoverageDetector(std::shared_ptr<const SimulationGrid> grid, std::uint64_t seed)
      : grid_(std::move(grid)), seed_(seed) {}

  void cover(const std::string& class_id, VariantKind kind) {
    std::lock_guard lock(mu_);
    covered_.emplace(class_id, kind);
  }

  bool covers(const std::string& class_id, VariantKind kind) const {
    std::lock_guard lock(mu_);
    return covered_.count({class_id, kind}) > 0;
  }

  std::size_t coverage_size() const {
    std::lock_guard lock(mu_);
    return covered_.size();
  }

  std::vector<DetectionResult> detect(const ImageRef& img) const override {
    const GridItem* item = grid_->find(img.content_hash);
    if (!item) throw Error(Errc::NoDocumentFound, "image is not part of the simulation grid");
    const Box frame(0, 0, img.pixels.cols, img.pixels.rows);
    if (covers(item->class_id, item->kind)) return {DetectionResult(item->class_id, frame, 1.0)};
    Rng rng = Rng::derive(seed_, detail::fnv1a(item->stem));
    const auto& guess = class_by_index(static_cast<int>(rng.below(std::size(kDocumentClasses))));
    return {DetectionResult(std::string(guess.id), frame, 1.0 / std::size(kDocumentClasses))};
  }

 private:
  std::shared_ptr<const SimulationGrid> grid_;
  std::uint64_t seed_;
  mutable std::mutex mu_;
  std::set<std::pair<std::string, VariantKind>> covered_;
};

/// Expected accuracy when uncovered items are guessed uniformly over the classes.
inline double expected_accuracy(const SimulationGrid& grid, const CoverageDetector& det) {
  if (grid.items.empty()) return 0.0;
  const double guess = 1.0 / static_cast<double>(std::size(kDocumentClasses));
  double sum = 0.0;
  for (const auto& it : grid.items) sum += det.covers(it.class_id, it.kind) ? 1.0 : guess;
  return sum / static_cast<double>(grid.items.size());
}

struct SimulationConfig {
  std::uint64_t seed = 42;
  std::size_t bases_per_class = 10;
  std::size_t rounds = 3;
  std::vector<VariantKind> initial_kinds{VariantKind::Original};
  std::filesystem::path work_dir;  // empty: a fresh temporary directory, removed afterwards
};

struct SimulationResult {
  std::vector<double> trajectory;
  std::vector<MetricsReport> reports;
  std::vector<std::size_t> approved_per_round;
  double expected_round0 = 0.0;
};

/// Runs the feedback loop: evaluate the grid, file a modification request for
/// every misidentified image with its true class, approve them all, and widen
/// the detector's coverage from the approved images. Stops early once a round
/// is fully correct, since nothing is left to report.
inline SimulationResult simulate_arl_loop(const SimulationConfig& cfg) {
  if (cfg.rounds == 0) throw Error(Errc::InvalidArgument, "rounds must be at least 1");
  auto grid = std::make_shared<const SimulationGrid>(make_grid(cfg.bases_per_class));
  CoverageDetector detector(grid, cfg.seed);
  for (const auto& cls : kDocumentClasses) {
    for (auto k : cfg.initial_kinds) detector.cover(std::string(cls.id), k);
  }

  static std::atomic<unsigned> run_counter{0};
  const bool temp = cfg.work_dir.empty();
  const auto work = temp ? std::filesystem::temp_directory_path() /
                               ("docarl-sim-" + std::to_string(getpid()) + "-" + std::to_string(run_counter++))
                         : cfg.work_dir;
  if (temp) std::filesystem::remove_all(work);
  FeedbackStore store(work / "modification_requests", work / "rejected_pipeline");

  SimulationResult res;
  res.expected_round0 = expected_accuracy(*grid, detector);
  std::size_t ledger_seen = 0;
  for (std::size_t round = 0; round < cfg.rounds; ++round) {
    metrics::ConfusionCounts counts;
    std::vector<std::pair<const GridItem*, std::string>> wrong;
    for (const auto& item : grid->items) {
      const std::string predicted = identify(item.image, detector).class_id;
      counts.record(item.class_id, predicted);
      if (predicted != item.class_id) wrong.emplace_back(&item, predicted);
    }
    res.reports.push_back(make_report(counts));
    res.trajectory.push_back(res.reports.back().accuracy);
    if (wrong.empty()) break;

    for (const auto& [item, predicted] : wrong) store.propose(predicted, item->class_id, base64::encode(item->png));
    std::size_t approved = 0;
    for (const auto& req : store.list_requests()) {
      store.approve(req.req_id);
      ++approved;
    }
    res.approved_per_round.push_back(approved);

    // Retraining on the assembled set: each approved image teaches its class
    // every kind the fan-out can make from its pixels.
    const auto entries = store.rejected_entries();
    for (std::size_t i = ledger_seen; i < entries.size(); ++i) {
      const GridItem* item = grid->find(entries[i].content_hash);
      if (!item) continue;
      for (auto k : kinds_covered_by(is_greyscale(item->kind))) detector.cover(entries[i].class_id, k);
    }
    ledger_seen = entries.size();
  }
  if (temp) std::filesystem::remove_all(work);
  return res;
}

}  // namespace docarl
