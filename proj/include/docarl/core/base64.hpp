#pragma once

#include <openssl/evp.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "docarl/core/error.hpp"

namespace docarl::base64 {

inline std::string encode(const unsigned char* data, std::size_t n) {
  std::string out(4 * ((n + 2) / 3), '\0');
  const int len = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), data, static_cast<int>(n));
  out.resize(static_cast<std::size_t>(len));
  return out;
}

inline std::string encode(const std::vector<unsigned char>& bytes) {
  return encode(bytes.data(), bytes.size());
}

/// Strict standard-alphabet decoding. Whitespace is ignored and a
/// "data:<mime>;base64," prefix is stripped. Anything else malformed is BadImage.
inline std::vector<unsigned char> decode(std::string_view text) {
  if (text.starts_with("data:")) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw Error(Errc::BadImage, "malformed data URL");
    text.remove_prefix(comma + 1);
  }
  std::string clean;
  clean.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '/' || c == '=';
    if (!ok) throw Error(Errc::BadImage, "invalid base64 character");
    clean.push_back(c);
  }
  if (clean.empty() || clean.size() % 4 != 0) throw Error(Errc::BadImage, "invalid base64 length");
  std::size_t pad = 0;
  while (pad < clean.size() && clean[clean.size() - 1 - pad] == '=') ++pad;
  const auto first_pad = clean.find('=');
  if (pad > 2 || (first_pad != std::string::npos && first_pad != clean.size() - pad)) throw Error(Errc::BadImage, "invalid base64 padding");

  std::vector<unsigned char> out(3 * clean.size() / 4);
  const int len = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(clean.data()),
                                  static_cast<int>(clean.size()));
  if (len < 0) throw Error(Errc::BadImage, "base64 decoding failed");
  out.resize(static_cast<std::size_t>(len) - pad);
  return out;
}

}  // namespace docarl::base64
