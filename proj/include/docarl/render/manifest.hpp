#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "docarl/core/box.hpp"
#include "docarl/core/error.hpp"

namespace docarl {

inline constexpr std::string_view kAnchorTag = "DOCUMENT_IDENTITY_REGION";

enum class VariantKind { Original, Greyscale, A4, A4Greyscale };

inline std::string_view variant_kind_name(VariantKind k) {
  switch (k) {
    case VariantKind::Original: return "original";
    case VariantKind::Greyscale: return "greyscale";
    case VariantKind::A4: return "a4";
    case VariantKind::A4Greyscale: return "a4_greyscale";
  }
  return "original";
}

inline VariantKind parse_variant_kind(std::string_view s) {
  if (s == "original") return VariantKind::Original;
  if (s == "greyscale") return VariantKind::Greyscale;
  if (s == "a4") return VariantKind::A4;
  if (s == "a4_greyscale") return VariantKind::A4Greyscale;
  throw Error(Errc::SchemaError, "unknown variant kind '" + std::string(s) + "'");
}

inline bool is_greyscale(VariantKind k) { return k == VariantKind::Greyscale || k == VariantKind::A4Greyscale; }

inline VariantKind grey_twin(VariantKind k) {
  switch (k) {
    case VariantKind::Original: return VariantKind::Greyscale;
    case VariantKind::Greyscale: return VariantKind::Original;
    case VariantKind::A4: return VariantKind::A4Greyscale;
    case VariantKind::A4Greyscale: return VariantKind::A4;
  }
  return k;
}

struct ManifestText {
  std::string tag;  // region code, decoration tag or kAnchorTag
  std::string text;
  Box box;
  friend bool operator==(const ManifestText&, const ManifestText&) = default;
};

/// Ground truth for one image: what was drawn where.
struct RenderManifest {
  std::string manifest_id;
  std::string class_id;
  std::string content_hash;
  VariantKind kind = VariantKind::Original;
  std::optional<std::pair<int, int>> a4_position;
  int image_width = 0;
  int image_height = 0;
  Box placement;
  Box anchor_box;
  std::vector<ManifestText> texts;
  std::uint64_t source_serial = 0;
  std::vector<std::string> warnings;

  const ManifestText* find(std::string_view tag) const {
    for (const auto& t : texts) {
      if (t.tag == tag) return &t;
    }
    return nullptr;
  }

  /// Equality of everything except the id, hash and colour kind.
  bool same_geometry(const RenderManifest& o) const {
    return class_id == o.class_id && a4_position == o.a4_position && image_width == o.image_width &&
           image_height == o.image_height && placement == o.placement && anchor_box == o.anchor_box &&
           texts == o.texts && source_serial == o.source_serial;
  }
};

inline nlohmann::json box_to_json(const Box& b) { return nlohmann::json::array({b.x0(), b.y0(), b.x1(), b.y1()}); }

inline Box box_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(Errc::SchemaError, "box must be a 4-element array");
  for (const auto& v : j) {
    if (!v.is_number()) throw Error(Errc::SchemaError, "box coordinates must be numbers");
  }
  return Box(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>());
}

inline nlohmann::json manifest_to_json(const RenderManifest& m) {
  nlohmann::json texts = nlohmann::json::array();
  for (const auto& t : m.texts) texts.push_back({{"tag", t.tag}, {"text", t.text}, {"box", box_to_json(t.box)}});
  nlohmann::json j{
      {"manifest_id", m.manifest_id},
      {"content_hash", m.content_hash},
      {"class_id", m.class_id},
      {"kind", variant_kind_name(m.kind)},
      {"image_width", m.image_width},
      {"image_height", m.image_height},
      {"placement", box_to_json(m.placement)},
      {"anchor_box", box_to_json(m.anchor_box)},
      {"texts", texts},
      {"source_serial", m.source_serial},
      {"warnings", m.warnings},
  };
  if (m.a4_position) {
    j["a4_position"] = {m.a4_position->first, m.a4_position->second};
  } else {
    j["a4_position"] = nullptr;
  }
  return j;
}

inline RenderManifest manifest_from_json(const nlohmann::json& j) {
  try {
    RenderManifest m;
    m.manifest_id = j.at("manifest_id").get<std::string>();
    m.content_hash = j.value("content_hash", std::string{});
    m.class_id = j.at("class_id").get<std::string>();
    m.kind = parse_variant_kind(j.at("kind").get<std::string>());
    m.image_width = j.at("image_width").get<int>();
    m.image_height = j.at("image_height").get<int>();
    m.placement = box_from_json(j.at("placement"));
    m.anchor_box = box_from_json(j.at("anchor_box"));
    for (const auto& t : j.at("texts")) {
      m.texts.push_back({t.at("tag").get<std::string>(), t.at("text").get<std::string>(), box_from_json(t.at("box"))});
    }
    m.source_serial = j.at("source_serial").get<std::uint64_t>();
    if (j.contains("warnings")) m.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("a4_position") && !j.at("a4_position").is_null()) {
      const auto& p = j.at("a4_position");
      m.a4_position = std::pair{p.at(0).get<int>(), p.at(1).get<int>()};
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SchemaError, std::string("manifest: ") + e.what());
  }
}

}  // namespace docarl
