#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "docarl/core/error.hpp"

namespace docarl {

struct DocumentClass {
  std::string_view id;
  std::string_view display_name;
  std::string_view template_code;
  // Annotation field codes in canonical order.
  std::span<const std::string_view> field_order;
  int native_width;
  int native_height;
  // Rank of id in alphabetical order; this is the label class index.
  int index;
};

namespace detail {
inline constexpr std::array<std::string_view, 4> kAdhaarFields{
    "NAME", "DATE_OF_BIRTH", "GENDER", "ADHAAR_NUMBER"};
inline constexpr std::array<std::string_view, 7> kDlFields{
    "DRIVING_LICENCE_NUMBER", "DATE_OF_ISSUE", "VALADITY_TILL_DATE", "DATE_OF_BIRTH",
    "BLOOD_GROUP",            "NAME",          "FATHERS_NAME"};
inline constexpr std::array<std::string_view, 4> kPanFields{
    "NAME", "FATHERS_NAME", "PERMANENT_ACCOUNT_NUMBER", "DATE_OF_BIRTH"};
inline constexpr std::array<std::string_view, 9> kPassportFields{
    "PASSPORT_NUMBER", "SURNAME",        "GIVEN_NAME",    "DATE_OF_BIRTH",  "GENDER",
    "PLACE_OF_BIRTH",  "PLACE_OF_ISSUE", "DATE_OF_ISSUE", "DATE_OF_EXPIRY"};
inline constexpr std::array<std::string_view, 5> kVoterFields{
    "NAME", "HUSBANDS_NAME", "VOTERCARD_NUMBER", "GENDER", "DATE_OF_BIRTH"};
}  // namespace detail

inline constexpr std::string_view kAdhaar = "adhaar_v1_p1";
inline constexpr std::string_view kDl = "dl_v1_p1";
inline constexpr std::string_view kPan = "pan_v1";
inline constexpr std::string_view kPassport = "passport_v1_p1";
inline constexpr std::string_view kVoter = "votercard_v1";

inline constexpr std::array<DocumentClass, 5> kDocumentClasses{{
    {kAdhaar, "Adhaar Card", "ADHAAR_V1_P1", detail::kAdhaarFields, 2830, 1770, 0},
    {kDl, "Driving Licence", "DL_V1_P1", detail::kDlFields, 804, 504, 1},
    {kPan, "PAN Card", "PAN", detail::kPanFields, 3200, 2019, 2},
    {kPassport, "Passport", "PASSPORT_V1_P1", detail::kPassportFields, 2783, 1847, 3},
    {kVoter, "Voter ID Card", "VOTERCARD_V1", detail::kVoterFields, 3200, 2015, 4},
}};

inline const DocumentClass* find_class(std::string_view id) noexcept {
  for (const auto& c : kDocumentClasses) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

inline const DocumentClass& document_class(std::string_view id) {
  if (const auto* c = find_class(id)) return *c;
  throw Error(Errc::UnknownClass, "unknown document class '" + std::string(id) + "'");
}

inline const DocumentClass& class_by_index(int index) {
  if (index < 0 || index >= static_cast<int>(kDocumentClasses.size())) {
    throw Error(Errc::UnknownClass, "class index " + std::to_string(index) + " out of range");
  }
  return kDocumentClasses[static_cast<std::size_t>(index)];
}

inline bool is_class_id(std::string_view id) noexcept { return find_class(id) != nullptr; }

}  // namespace docarl
