#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "docarl/core/error.hpp"

namespace docarl {

enum class Split { Train, Validation, Test };

inline std::string_view split_name(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Validation: return "validation";
    case Split::Test: return "test";
  }
  return "train";
}

inline Split parse_split(std::string_view s) {
  if (s == "train") return Split::Train;
  if (s == "validation") return Split::Validation;
  if (s == "test") return Split::Test;
  throw Error(Errc::InvalidArgument, "unknown split '" + std::string(s) + "'");
}

/// 7:2:1 by floor fractions of the total; exact integer arithmetic.
inline Split assign_split(std::uint64_t index, std::uint64_t total) {
  if (total == 0 || index == 0 || index > total) {
    throw Error(Errc::RangeError, "index " + std::to_string(index) + " outside 1.." + std::to_string(total));
  }
  if (index <= (7 * total) / 10) return Split::Train;
  if (index <= (9 * total) / 10) return Split::Validation;
  return Split::Test;
}

}  // namespace docarl
