#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "docarl/core/document_class.hpp"
#include "docarl/core/error.hpp"

namespace docarl {

/// Glyph layout of a serial string, read left to right.
/// 'D' takes a decimal digit, 'L' takes a digit rendered as a letter ('A' = 0),
/// ' ' is a literal space. Digits are consumed from the least significant end.
struct SerialGrammar {
  std::string_view pattern;
  int digit_budget;
};

inline const SerialGrammar& serial_grammar(std::string_view class_id) {
  static constexpr SerialGrammar kAdhaarG{"DDDD DDDD DDDD", 12};
  static constexpr SerialGrammar kDlG{"LLDD DDDDDDDDDDD", 13};
  static constexpr SerialGrammar kPanG{"LLLLDDDDL", 4};
  static constexpr SerialGrammar kPassportG{"LDDDDDDD", 7};
  static constexpr SerialGrammar kVoterG{"LLLDDDDDDD", 7};
  const auto& cls = document_class(class_id);
  if (cls.id == kAdhaar) return kAdhaarG;
  if (cls.id == kDl) return kDlG;
  if (cls.id == kPan) return kPanG;
  if (cls.id == kPassport) return kPassportG;
  return kVoterG;
}

inline std::uint64_t pow10_u64(int n) {
  std::uint64_t v = 1;
  while (n-- > 0) v *= 10;
  return v;
}

inline std::string format_serial(std::string_view class_id, std::uint64_t serial) {
  const auto& g = serial_grammar(class_id);
  if (serial == 0) throw Error(Errc::InvalidArgument, "serial numbers start at 1");
  if (serial >= pow10_u64(g.digit_budget)) {
    throw Error(Errc::SerialOverflow, std::to_string(serial) + " exceeds the " +
                                          std::to_string(g.digit_budget) + "-digit budget of " +
                                          std::string(class_id));
  }
  std::string out(g.pattern);
  std::uint64_t rest = serial;
  for (std::size_t i = out.size(); i-- > 0;) {
    const char kind = g.pattern[i];
    if (kind == ' ') continue;
    const auto digit = static_cast<char>(rest % 10);
    rest /= 10;
    out[i] = kind == 'D' ? static_cast<char>('0' + digit) : static_cast<char>('A' + digit);
  }
  return out;
}

/// First serial used by generate_batch for a class.
inline std::uint64_t first_serial(std::string_view class_id) {
  return document_class(class_id).id == kDl ? 1620240000001ULL : 1ULL;
}

enum class Gender { Male, Female };

inline std::string_view gender_label(Gender g) { return g == Gender::Male ? "Male" : "Female"; }

/// Male for the first 40% of a batch and for the (80%, 90%] slice.
inline Gender gender_for_serial(std::uint64_t serial, std::uint64_t max_count) {
  if (max_count == 0 || serial == 0 || serial > max_count) {
    throw Error(Errc::RangeError, "serial " + std::to_string(serial) + " outside 1.." +
                                      std::to_string(max_count));
  }
  const auto s10 = 10 * serial;
  const bool male = s10 <= 4 * max_count || (s10 > 8 * max_count && s10 <= 9 * max_count);
  return male ? Gender::Male : Gender::Female;
}

}  // namespace docarl
