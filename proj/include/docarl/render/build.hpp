#pragma once

#include <algorithm>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "docarl/core/annotation.hpp"
#include "docarl/core/document_class.hpp"
#include "docarl/core/image.hpp"
#include "docarl/idgen/generator.hpp"
#include "docarl/render/dataset.hpp"
#include "docarl/render/render.hpp"
#include "docarl/templates/registry.hpp"

namespace docarl {

inline std::string base_stem(std::string_view class_id, std::uint64_t index) {
  return std::string(class_id) + "_" + std::to_string(index);
}

using BaseCallback = std::function<void(std::uint64_t index, const DocumentRecord&, BaseRender&)>;

/// Generates and renders records 1..count of a class, handing each to `fn`.
inline void for_each_base(const TemplateRegistry& registry, std::string_view class_id, std::uint64_t count,
                          std::uint64_t seed, const BaseCallback& fn) {
  if (count == 0) throw Error(Errc::InvalidArgument, "batch size must be at least 1");
  const auto& cls = document_class(class_id);
  const auto& tmpl = registry.registry_for(cls.id);
  const GenSeed gen{seed, count};
  const std::uint64_t first = first_serial(cls.id);
  for (std::uint64_t i = 1; i <= count; ++i) {
    const DocumentRecord rec = generate_record(cls.id, first + i - 1, gen);
    BaseRender base = render_base(rec, tmpl);
    base.manifest.manifest_id = base_stem(cls.id, i);
    fn(i, rec, base);
  }
}

struct GeneratedDocument {
  DocumentRecord record;
  RenderManifest manifest;
};

/// Writes out_dir/metadata/<class>/<class>_<i>.txt plus the rendered base image
/// (images/<class>/) and its manifest (manifests/<class>/).
inline std::vector<GeneratedDocument> generate_batch(const TemplateRegistry& registry, std::string_view class_id,
                                                     std::uint64_t count, std::uint64_t seed,
                                                     const fs::path& out_dir) {
  if (count == 0) throw Error(Errc::InvalidArgument, "batch size must be at least 1");
  const std::string cls(document_class(class_id).id);
  const auto meta = out_dir / "metadata" / cls;
  const auto imgs = out_dir / "images" / cls;
  const auto mans = out_dir / "manifests" / cls;
  ensure_dir(meta);
  ensure_dir(imgs);
  ensure_dir(mans);
  std::vector<GeneratedDocument> out;
  for_each_base(registry, cls, count, seed, [&](std::uint64_t, const DocumentRecord& rec, BaseRender& base) {
    const auto& stem = base.manifest.manifest_id;
    base.manifest.content_hash = content_hash(base.image);
    write_text_file(meta / (stem + ".txt"), serialize_annotation(rec.annotation));
    const auto bytes = png::encode(base.image);
    write_file_bytes(imgs / (stem + ".png"), bytes.data(), bytes.size());
    write_text_file(mans / (stem + ".json"), manifest_to_json(base.manifest).dump(2));
    out.push_back({rec, base.manifest});
  });
  return out;
}

/// Renders `count` bases per class and writes the full fan-out dataset.
inline DatasetCounts build_dataset(const TemplateRegistry& registry, const std::vector<std::string>& classes,
                                   std::uint64_t count, std::uint64_t seed, const fs::path& out_root,
                                   ImageFormat format = ImageFormat::Png) {
  DatasetWriter writer(out_root, format);
  for (const auto& cls : classes) {
    for_each_base(registry, cls, count, seed, [&](std::uint64_t i, const DocumentRecord& rec, BaseRender& base) {
      emit_base(writer, base.image, base.manifest, base.manifest.manifest_id, assign_split(i, count),
                serialize_annotation(rec.annotation));
    });
  }
  writer.finalize();
  return writer.counts();
}

inline std::vector<std::string> all_class_ids() {
  std::vector<std::string> out;
  for (const auto& c : kDocumentClasses) out.emplace_back(c.id);
  return out;
}

/// Fan-out of a generate_batch directory into the dataset tree.
inline DatasetCounts augment_directory(const fs::path& in_dir, const fs::path& out_root,
                                       ImageFormat format = ImageFormat::Png) {
  DatasetWriter writer(out_root, format);
  for (const auto& c : kDocumentClasses) {
    const std::string cls(c.id);
    const auto mans = in_dir / "manifests" / cls;
    if (!fs::exists(mans)) continue;
    // Stems are <class>_<i>; order by i so the split matches generation order.
    std::vector<std::pair<std::uint64_t, std::string>> stems;
    for (const auto& e : fs::directory_iterator(mans)) {
      if (e.path().extension() != ".json") continue;
      const std::string stem = e.path().stem().string();
      const std::string prefix = cls + "_";
      if (!stem.starts_with(prefix)) continue;
      try {
        stems.emplace_back(std::stoull(stem.substr(prefix.size())), stem);
      } catch (const std::exception&) {
        continue;
      }
    }
    std::sort(stems.begin(), stems.end());
    const auto total = static_cast<std::uint64_t>(stems.size());
    for (std::uint64_t k = 0; k < total; ++k) {
      const auto& stem = stems[k].second;
      RenderManifest m = manifest_from_json(nlohmann::json::parse(read_text_file(mans / (stem + ".json"))));
      const ImageRef img = load_image(in_dir / "images" / cls / (stem + ".png"));
      std::string line = read_text_file(in_dir / "metadata" / cls / (stem + ".txt"));
      line = serialize_annotation(parse_annotation(cls, line));
      emit_base(writer, img.pixels, m, stem, assign_split(k + 1, total), line);
    }
  }
  writer.finalize();
  return writer.counts();
}

}  // namespace docarl
