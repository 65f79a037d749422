#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "docarl/core/document_class.hpp"
#include "docarl/templates/template.hpp"

namespace docarl {

/// The five document templates, loaded once and read-only afterwards.
class TemplateRegistry {
 public:
  static std::filesystem::path template_path(const std::filesystem::path& dir, std::string_view class_id) {
    return dir / (std::string(class_id) + "_template.json");
  }

  static TemplateRegistry load(const std::filesystem::path& dir) {
    TemplateRegistry reg;
    for (const auto& cls : kDocumentClasses) {
      const auto path = template_path(dir, cls.id);
      if (!std::filesystem::exists(path)) {
        throw Error(Errc::IoError, "missing template " + path.string());
      }
      reg.add(cls.id, load_template(path));
    }
    return reg;
  }

  /// Registers a template after checking its field order against the class table.
  void add(std::string_view class_id, Template t) {
    const auto& cls = document_class(class_id);
    if (t.field_order.size() != cls.field_order.size()) {
      throw Error(Errc::SchemaError, std::string(class_id) + " template has " +
                                         std::to_string(t.field_order.size()) + " fields, expected " +
                                         std::to_string(cls.field_order.size()));
    }
    for (std::size_t i = 0; i < t.field_order.size(); ++i) {
      if (t.field_order[i] != cls.field_order[i]) {
        throw Error(Errc::SchemaError, std::string(class_id) + " field_order[" + std::to_string(i) +
                                           "] is " + t.field_order[i] + ", expected " +
                                           std::string(cls.field_order[i]));
      }
    }
    templates_.insert_or_assign(std::string(cls.id), std::move(t));
  }

  const Template& registry_for(std::string_view class_id) const {
    auto it = templates_.find(std::string(class_id));
    if (it == templates_.end()) throw Error(Errc::UnknownClass, "no template for '" + std::string(class_id) + "'");
    return it->second;
  }

  std::size_t size() const noexcept { return templates_.size(); }

 private:
  std::map<std::string, Template> templates_;
};

}  // namespace docarl
