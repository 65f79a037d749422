#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "docarl/core/box.hpp"
#include "docarl/core/error.hpp"
#include "docarl/core/image.hpp"

namespace docarl {

struct IdentifyingRegion {
  std::string code;
  std::string identifying_text;
  Box identified_box;  // isx, isy, iex, iey
  Box outer_box;       // osx, osy, oex, oey
};

struct DataRegion {
  std::string code;
  Box region_box;  // osx, osy, oex, oey
};

struct Template {
  std::string code;
  IdentifyingRegion identifying_region;
  std::vector<DataRegion> data_regions;
  std::vector<std::string> field_order;

  const DataRegion& region(std::string_view region_code) const {
    for (const auto& r : data_regions) {
      if (r.code == region_code) return r;
    }
    throw Error(Errc::NotFound, "template " + code + " has no region " + std::string(region_code));
  }
};

namespace detail {

inline void require_keys(const nlohmann::json& obj, std::string_view where,
                         std::initializer_list<std::string_view> required,
                         std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) throw Error(Errc::SchemaError, std::string(where) + " must be an object");
  for (auto k : required) {
    if (!obj.contains(std::string(k))) {
      throw Error(Errc::SchemaError, std::string(where) + " is missing key '" + std::string(k) + "'");
    }
  }
  for (const auto& [k, _] : obj.items()) {
    bool known = false;
    for (auto r : required) known = known || r == k;
    for (auto o : optional) known = known || o == k;
    if (!known) throw Error(Errc::SchemaError, std::string(where) + " has unknown key '" + k + "'");
  }
}

inline std::string get_string(const nlohmann::json& obj, const char* key, std::string_view where) {
  const auto& v = obj.at(key);
  if (!v.is_string()) throw Error(Errc::SchemaError, std::string(where) + "." + key + " must be a string");
  return v.get<std::string>();
}

inline double get_number(const nlohmann::json& obj, const char* key, std::string_view where) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw Error(Errc::SchemaError, std::string(where) + "." + key + " must be a number");
  return v.get<double>();
}

inline Box get_box(const nlohmann::json& obj, const char* k0, const char* k1, const char* k2,
                   const char* k3, std::string_view where) {
  const double x0 = get_number(obj, k0, where), y0 = get_number(obj, k1, where);
  const double x1 = get_number(obj, k2, where), y1 = get_number(obj, k3, where);
  if (x1 < x0 || y1 < y0) throw Error(Errc::SchemaError, std::string(where) + " has an inverted box");
  return Box(x0, y0, x1, y1);
}

}  // namespace detail

inline Template parse_template(const nlohmann::json& j) {
  using namespace detail;
  require_keys(j, "template", {"code", "identifying_region", "data_regions"}, {"field_order"});
  Template t;
  t.code = get_string(j, "code", "template");

  const auto& ir = j.at("identifying_region");
  require_keys(ir, "identifying_region",
               {"code", "isx", "isy", "iex", "iey", "osx", "osy", "oex", "oey", "identifying_text"});
  t.identifying_region.code = get_string(ir, "code", "identifying_region");
  t.identifying_region.identifying_text = get_string(ir, "identifying_text", "identifying_region");
  const double isx = get_number(ir, "isx", "identifying_region"), isy = get_number(ir, "isy", "identifying_region");
  const double iex = get_number(ir, "iex", "identifying_region"), iey = get_number(ir, "iey", "identifying_region");
  if (iex <= isx || iey <= isy) {
    throw Error(Errc::DegenerateAnchor, "template " + t.code + " anchor box has no area");
  }
  t.identifying_region.identified_box = Box(isx, isy, iex, iey);
  t.identifying_region.outer_box = get_box(ir, "osx", "osy", "oex", "oey", "identifying_region");

  const auto& regions = j.at("data_regions");
  if (!regions.is_array()) throw Error(Errc::SchemaError, "data_regions must be an array");
  std::set<std::string> seen;
  for (const auto& r : regions) {
    require_keys(r, "data_region", {"code", "osx", "osy", "oex", "oey"});
    DataRegion dr{get_string(r, "code", "data_region"), get_box(r, "osx", "osy", "oex", "oey", "data_region")};
    if (!seen.insert(dr.code).second) {
      throw Error(Errc::SchemaError, "duplicate region code " + dr.code + " in " + t.code);
    }
    t.data_regions.push_back(std::move(dr));
  }

  if (j.contains("field_order")) {
    const auto& fo = j.at("field_order");
    if (!fo.is_array()) throw Error(Errc::SchemaError, "field_order must be an array");
    std::set<std::string> used;
    for (const auto& c : fo) {
      if (!c.is_string()) throw Error(Errc::SchemaError, "field_order entries must be strings");
      auto code = c.get<std::string>();
      if (!seen.count(code)) throw Error(Errc::SchemaError, "field_order names unknown region " + code);
      if (!used.insert(code).second) throw Error(Errc::SchemaError, "field_order repeats " + code);
      t.field_order.push_back(std::move(code));
    }
  } else {
    for (const auto& r : t.data_regions) t.field_order.push_back(r.code);
  }
  return t;
}

inline Template load_template(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SchemaError, path.string() + ": " + e.what());
  }
  return parse_template(j);
}

inline nlohmann::json template_to_json(const Template& t) {
  const auto& ir = t.identifying_region;
  nlohmann::json j;
  j["code"] = t.code;
  j["identifying_region"] = {
      {"code", ir.code},
      {"isx", ir.identified_box.x0()}, {"isy", ir.identified_box.y0()},
      {"iex", ir.identified_box.x1()}, {"iey", ir.identified_box.y1()},
      {"osx", ir.outer_box.x0()},      {"osy", ir.outer_box.y0()},
      {"oex", ir.outer_box.x1()},      {"oey", ir.outer_box.y1()},
      {"identifying_text", ir.identifying_text},
  };
  j["data_regions"] = nlohmann::json::array();
  for (const auto& r : t.data_regions) {
    j["data_regions"].push_back({{"code", r.code},
                                 {"osx", r.region_box.x0()},
                                 {"osy", r.region_box.y0()},
                                 {"oex", r.region_box.x1()},
                                 {"oey", r.region_box.y1()}});
  }
  j["field_order"] = t.field_order;
  return j;
}

}  // namespace docarl
