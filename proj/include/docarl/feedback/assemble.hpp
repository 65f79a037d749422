#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "docarl/core/error.hpp"
#include "docarl/core/image.hpp"
#include "docarl/feedback/store.hpp"
#include "docarl/pipeline/oracle.hpp"
#include "docarl/render/augment.hpp"
#include "docarl/render/dataset.hpp"

namespace docarl {

struct AssemblySummary {
  std::size_t base_count = 0;      // images copied from the base tree, all splits
  std::size_t rejected_count = 0;  // ledger entries merged into train
  std::size_t variant_count = 0;   // train images produced from those entries
};

inline constexpr std::string_view kAssemblyMarker = ".docarl-assembled";

/// Variant kinds whose pixels an approved image can stand in for after the
/// fan-out. A greyscale upload never yields colour pixels.
inline std::vector<VariantKind> kinds_covered_by(bool greyscale_source) {
  if (greyscale_source) return {VariantKind::Greyscale, VariantKind::A4Greyscale};
  return {VariantKind::Original, VariantKind::Greyscale, VariantKind::A4, VariantKind::A4Greyscale};
}

namespace detail {

inline void prepare_out_root(const fs::path& out_root) {
  if (fs::exists(out_root) && !fs::is_empty(out_root)) {
    if (!fs::exists(out_root / kAssemblyMarker)) {
      throw Error(Errc::IoError, out_root.string() + " is not empty and was not produced by assemble");
    }
    std::error_code ec;
    fs::remove_all(out_root, ec);
    if (ec) throw Error(Errc::IoError, "cannot clear " + out_root.string() + ": " + ec.message());
  }
  ensure_dir(out_root);
  write_text_file(out_root / kAssemblyMarker, "");
}

inline std::vector<fs::path> sorted_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::exists(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file()) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void copy_verbatim(const fs::path& from, const fs::path& to) {
  std::error_code ec;
  fs::copy_file(from, to, fs::copy_options::overwrite_existing, ec);
  if (ec) throw Error(Errc::IoError, "cannot copy " + from.string() + ": " + ec.message());
}

/// The manifest re-expressed in the frame of its own placement crop.
inline RenderManifest crop_manifest(const RenderManifest& m, const cv::Rect& r, bool grey) {
  RenderManifest out = m;
  const double dx = -r.x, dy = -r.y;
  out.image_width = r.width;
  out.image_height = r.height;
  out.placement = Box(0, 0, r.width, r.height);
  out.anchor_box = m.anchor_box.scaled_translated(1.0, 1.0, dx, dy);
  for (auto& t : out.texts) t.box = t.box.scaled_translated(1.0, 1.0, dx, dy);
  out.a4_position.reset();
  out.kind = grey ? VariantKind::Greyscale : VariantKind::Original;
  out.content_hash.clear();
  return out;
}

inline cv::Rect placement_rect(const Box& b, int w, int h) {
  const int x0 = std::clamp(static_cast<int>(std::lround(b.x0())), 0, w);
  const int y0 = std::clamp(static_cast<int>(std::lround(b.y0())), 0, h);
  const int x1 = std::clamp(static_cast<int>(std::lround(b.x1())), 0, w);
  const int y1 = std::clamp(static_cast<int>(std::lround(b.y1())), 0, h);
  if (x1 <= x0 || y1 <= y0) throw Error(Errc::EmptyCrop, "placement lies outside the image");
  return {x0, y0, x1 - x0, y1 - y0};
}

}  // namespace detail

/// Merges the base dataset with the approved rejected-pipeline images.
///
/// Validation and test splits, and every base train file, are copied byte for
/// byte. Each approved image is added to train only: a hash-resolvable image
/// gets the full 14-variant fan-out of its placement crop, anything else is
/// stored as-is plus a greyscale copy with a full-frame label.
inline AssemblySummary assemble_dataset(const fs::path& base_root, const fs::path& rejected_root,
                                        const fs::path& out_root) {
  if (!fs::is_directory(base_root / "data")) throw Error(Errc::IoError, "no dataset under " + base_root.string());
  if (!fs::is_directory(rejected_root)) throw Error(Errc::IoError, "missing rejected root " + rejected_root.string());
  const auto base_jsonl = base_root / "data" / "manifests.jsonl";
  const ManifestIndex base_index(fs::exists(base_jsonl) ? read_manifest_index(base_jsonl)
                                                        : std::vector<RenderManifest>{});

  detail::prepare_out_root(out_root);
  DatasetWriter writer(out_root, ImageFormat::Png);
  AssemblySummary summary;

  for (auto split : {Split::Train, Split::Validation, Split::Test}) {
    const std::string sn(split_name(split));
    for (const auto& kind : {"annotation", "labels"}) {
      for (const auto& f : detail::sorted_files(base_root / "data" / kind / sn)) {
        detail::copy_verbatim(f, writer.data_dir() / kind / sn / f.filename());
      }
    }
    for (const auto& f : detail::sorted_files(base_root / "data" / "images" / sn)) {
      detail::copy_verbatim(f, writer.data_dir() / "images" / sn / f.filename());
      const RenderManifest* m = base_index.by_id(f.stem().string());
      writer.adopt(m ? std::optional<RenderManifest>(*m) : std::nullopt, split);
      ++summary.base_count;
    }
  }

  std::set<std::int64_t> seen;
  for (const auto& entry : FeedbackStore::read_ledger(rejected_root)) {
    if (!seen.insert(entry.origin_req_id).second) continue;
    const ImageRef img = load_image(entry.path);
    const std::string stem = "req_" + std::to_string(entry.origin_req_id);
    const bool grey = img.pixels.channels() == 1;
    ++summary.rejected_count;

    if (const RenderManifest* m = base_index.by_hash(img.content_hash)) {
      const cv::Rect r = detail::placement_rect(m->placement, img.pixels.cols, img.pixels.rows);
      const cv::Mat crop = img.pixels(r).clone();
      RenderManifest cm = detail::crop_manifest(*m, r, grey);
      cm.class_id = entry.class_id;
      fanout(crop, cm, stem, [&](Variant&& v) {
        writer.write(v.image, std::move(v.manifest), Split::Train, "");
        ++summary.variant_count;
      });
      continue;
    }

    RenderManifest fm;
    fm.class_id = entry.class_id;
    fm.image_width = img.pixels.cols;
    fm.image_height = img.pixels.rows;
    fm.placement = Box(0, 0, fm.image_width, fm.image_height);
    fm.manifest_id = stem;
    fm.kind = grey ? VariantKind::Greyscale : VariantKind::Original;
    writer.write(img.pixels, fm, Split::Train, "");
    fm.manifest_id = stem + "_greyscale";
    fm.kind = VariantKind::Greyscale;
    writer.write(to_greyscale(img.pixels), fm, Split::Train, "");
    summary.variant_count += 2;
  }

  writer.finalize();
  return summary;
}

}  // namespace docarl
