#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "docarl/core/error.hpp"
#include "docarl/pipeline/backends.hpp"
#include "docarl/render/dataset.hpp"
#include "docarl/render/manifest.hpp"

namespace docarl {

/// Read-only lookup of manifests by id and by content hash.
class ManifestIndex {
 public:
  ManifestIndex() = default;
  explicit ManifestIndex(std::vector<RenderManifest> manifests) {
    for (auto& m : manifests) add(std::move(m));
  }

  static ManifestIndex from_jsonl(const std::filesystem::path& path) { return ManifestIndex(read_manifest_index(path)); }

  void add(RenderManifest m) {
    auto p = std::make_shared<const RenderManifest>(std::move(m));
    by_id_[p->manifest_id] = p;
    if (!p->content_hash.empty()) by_hash_[p->content_hash] = p;
  }

  const RenderManifest* by_id(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : it->second.get();
  }

  const RenderManifest* by_hash(const std::string& hash) const {
    auto it = by_hash_.find(hash);
    return it == by_hash_.end() ? nullptr : it->second.get();
  }

  /// The manifest id wins when present; otherwise the pixel hash is used.
  const RenderManifest* resolve(const ImageRef& img) const {
    if (img.manifest_id) {
      if (const auto* m = by_id(*img.manifest_id)) return m;
    }
    if (!img.content_hash.empty()) return by_hash(img.content_hash);
    return nullptr;
  }

  std::size_t size() const noexcept { return by_id_.size(); }

 private:
  std::unordered_map<std::string, std::shared_ptr<const RenderManifest>> by_id_;
  std::unordered_map<std::string, std::shared_ptr<const RenderManifest>> by_hash_;
};

/// Answers from the manifest: the true class at full confidence.
class OracleDetector final : public DetectorBackend {
 public:
  explicit OracleDetector(std::shared_ptr<const ManifestIndex> index) : index_(std::move(index)) {}

  std::vector<DetectionResult> detect(const ImageRef& img) const override {
    const RenderManifest* m = index_->resolve(img);
    if (!m) throw Error(Errc::NoDocumentFound, "image is not in the manifest index");
    return {DetectionResult(m->class_id, m->placement, 1.0)};
  }

 private:
  std::shared_ptr<const ManifestIndex> index_;
};

/// Returns manifest texts whose box centre lies in the crop, exactly as drawn.
class OracleOcr final : public OcrBackend {
 public:
  explicit OracleOcr(std::shared_ptr<const ManifestIndex> index) : index_(std::move(index)) {}

  std::vector<OcrSpan> read(const ImageRef& img, const std::optional<Box>& crop) const override {
    std::vector<OcrSpan> spans;
    const RenderManifest* m = index_->resolve(img);
    if (!m) return spans;
    for (const auto& t : m->texts) {
      if (crop && !crop->contains_point(t.box.cx(), t.box.cy())) continue;
      spans.emplace_back(t.box, t.text, 1.0);
    }
    sort_reading_order(spans);
    return spans;
  }

 private:
  std::shared_ptr<const ManifestIndex> index_;
};

}  // namespace docarl
