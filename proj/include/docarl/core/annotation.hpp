#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "docarl/core/document_class.hpp"
#include "docarl/core/error.hpp"

namespace docarl {

inline constexpr std::string_view kDelimiter = "::";

struct AnnotationField {
  std::string code;
  std::string value;
  friend bool operator==(const AnnotationField&, const AnnotationField&) = default;
};

struct Annotation {
  std::string class_id;
  std::vector<AnnotationField> fields;

  const std::string* value_of(std::string_view code) const {
    for (const auto& f : fields) {
      if (f.code == code) return &f.value;
    }
    return nullptr;
  }

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// A value that would make the joined line ambiguous to split. With more than
/// one field, a leading or trailing ':' merges with the neighbouring delimiter.
inline bool collides_with_delimiter(std::string_view value, bool multi_field) {
  if (value.find(kDelimiter) != std::string_view::npos) return true;
  if (multi_field && !value.empty() && (value.front() == ':' || value.back() == ':')) return true;
  return false;
}

/// Rewrites accidental delimiter sequences so the serialized form stays injective.
inline std::string scrub_value(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(value[i]);
    if (value[i] == ':' && i + 1 < value.size() && value[i + 1] == ':') out.push_back(' ');
  }
  return out;
}

inline std::string join_values(const std::vector<std::string>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.append(kDelimiter);
    out.append(values[i]);
  }
  return out;
}

inline std::string serialize_annotation(const Annotation& ann) {
  const bool multi = ann.fields.size() > 1;
  std::string out;
  for (std::size_t i = 0; i < ann.fields.size(); ++i) {
    const auto& f = ann.fields[i];
    if (collides_with_delimiter(f.value, multi)) {
      throw Error(Errc::DelimiterCollision, "field " + f.code + " value '" + f.value + "'");
    }
    if (i) out.append(kDelimiter);
    out.append(f.value);
  }
  return out;
}

inline std::vector<std::string> split_values(std::string_view line) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(kDelimiter, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(line.substr(start));
      break;
    }
    parts.emplace_back(line.substr(start, pos - start));
    start = pos + kDelimiter.size();
  }
  return parts;
}

/// Inverse of serialize_annotation. One trailing newline (LF or CRLF) is tolerated.
inline Annotation parse_annotation(std::string_view class_id, std::string_view line) {
  const auto& cls = document_class(class_id);
  if (line.ends_with("\r\n")) {
    line.remove_suffix(2);
  } else if (line.ends_with('\n')) {
    line.remove_suffix(1);
  }
  const auto expected = cls.field_order.size();
  std::vector<std::string> parts;
  if (!line.empty()) parts = split_values(line);
  if (parts.size() != expected) {
    throw Error(Errc::FieldCountMismatch, std::string(class_id) + " expects " +
                                              std::to_string(expected) + " fields, got " +
                                              std::to_string(parts.size()));
  }
  Annotation ann{std::string(class_id), {}};
  ann.fields.reserve(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    ann.fields.push_back({std::string(cls.field_order[i]), std::move(parts[i])});
  }
  return ann;
}

}  // namespace docarl
