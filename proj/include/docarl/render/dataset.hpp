#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "docarl/core/annotation.hpp"
#include "docarl/core/document_class.hpp"
#include "docarl/core/image.hpp"
#include "docarl/render/augment.hpp"
#include "docarl/render/manifest.hpp"
#include "docarl/render/split.hpp"

namespace docarl {

namespace fs = std::filesystem;

/// "class_index cx cy w h" with the box normalised to the image size.
inline std::string label_line(int class_index, const Box& placement, int image_width, int image_height) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d %.6f %.6f %.6f %.6f", class_index, placement.cx() / image_width,
                placement.cy() / image_height, placement.width() / image_width, placement.height() / image_height);
  return buf;
}

inline void ensure_dir(const fs::path& p) {
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + p.string() + ": " + ec.message());
}

struct DatasetCounts {
  std::size_t train = 0, validation = 0, test = 0;
  std::size_t total() const { return train + validation + test; }
  void add(Split s) { (s == Split::Train ? train : s == Split::Validation ? validation : test) += 1; }
};

/// Writes images, annotations, labels and the manifest index under out_root/data.
class DatasetWriter {
 public:
  DatasetWriter(fs::path out_root, ImageFormat format = ImageFormat::Png)
      : root_(std::move(out_root)), format_(format) {
    for (auto kind : {"images", "annotation", "labels"}) {
      for (auto s : {Split::Train, Split::Validation, Split::Test}) ensure_dir(data_dir() / kind / split_name(s));
    }
  }

  fs::path data_dir() const { return root_ / "data"; }
  ImageFormat format() const { return format_; }

  fs::path image_path(Split s, std::string_view stem) const {
    return data_dir() / "images" / split_name(s) / (std::string(stem) + std::string(extension_for(format_)));
  }

  /// Encodes and stores one variant. Returns its content hash, computed on the
  /// pixels a reader will decode (so JPEG output is hashed after the round trip).
  /// An empty annotation line skips the annotation file.
  std::string write(const cv::Mat& image, RenderManifest manifest, Split split, std::string_view annotation_line) {
    const auto bytes = encode_image(image, format_);
    manifest.content_hash = format_ == ImageFormat::Png ? content_hash(image) : content_hash(decode_image(bytes));
    const std::string stem = manifest.manifest_id;
    write_file_bytes(image_path(split, stem), bytes.data(), bytes.size());
    if (!annotation_line.empty()) {
      write_text_file(data_dir() / "annotation" / split_name(split) / (stem + ".txt"), annotation_line);
    }
    const auto& cls = document_class(manifest.class_id);
    write_text_file(data_dir() / "labels" / split_name(split) / (stem + ".txt"),
                    label_line(cls.index, manifest.placement, manifest.image_width, manifest.image_height) + "\n");
    std::lock_guard lock(mu_);
    counts_.add(split);
    manifests_.push_back(manifest);
    return manifest.content_hash;
  }

  /// Registers an image that was copied into the tree without re-encoding.
  void adopt(std::optional<RenderManifest> manifest, Split split) {
    std::lock_guard lock(mu_);
    counts_.add(split);
    if (manifest) manifests_.push_back(std::move(*manifest));
  }

  /// Writes data/manifests.jsonl, one object per variant, sorted by id.
  void finalize() {
    std::lock_guard lock(mu_);
    std::sort(manifests_.begin(), manifests_.end(),
              [](const RenderManifest& a, const RenderManifest& b) { return a.manifest_id < b.manifest_id; });
    std::string out;
    for (const auto& m : manifests_) {
      out += manifest_to_json(m).dump();
      out += '\n';
    }
    write_text_file(data_dir() / "manifests.jsonl", out);
  }

  DatasetCounts counts() const {
    std::lock_guard lock(mu_);
    return counts_;
  }

  const std::vector<RenderManifest>& manifests() const { return manifests_; }

 private:
  fs::path root_;
  ImageFormat format_;
  mutable std::mutex mu_;
  DatasetCounts counts_;
  std::vector<RenderManifest> manifests_;
};

/// Writes every variant of one base image into the split chosen for the base.
inline void emit_base(DatasetWriter& writer, const cv::Mat& image, const RenderManifest& manifest,
                      const std::string& stem, Split split, std::string_view annotation_line) {
  fanout(image, manifest, stem, [&](Variant&& v) { writer.write(v.image, std::move(v.manifest), split, annotation_line); });
}

inline std::vector<RenderManifest> read_manifest_index(const fs::path& jsonl) {
  std::ifstream in(jsonl);
  if (!in) throw Error(Errc::IoError, "cannot open " + jsonl.string());
  std::vector<RenderManifest> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(manifest_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::SchemaError, jsonl.string() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace docarl
