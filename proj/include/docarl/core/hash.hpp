#pragma once

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <string_view>

#include <opencv2/core.hpp>

#include "docarl/core/error.hpp"

namespace docarl {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw Error(Errc::IoError, "SHA-256 initialisation failed");
    }
  }

  void update(const void* data, std::size_t n) {
    if (n && EVP_DigestUpdate(ctx_.get(), data, n) != 1) {
      throw Error(Errc::IoError, "SHA-256 update failed");
    }
  }
  void update(std::string_view s) { update(s.data(), s.size()); }

  void update_u64(std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (56 - 8 * i));
    update(b, 8);
  }

  std::string hex_digest() {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), md, &len) != 1) {
      throw Error(Errc::IoError, "SHA-256 finalisation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(2 * len, '0');
    for (unsigned int i = 0; i < len; ++i) {
      out[2 * i] = kHex[md[i] >> 4];
      out[2 * i + 1] = kHex[md[i] & 0xF];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

inline std::string sha256_hex(std::string_view data) {
  Sha256 h;
  h.update(data);
  return h.hex_digest();
}

/// SHA-256 over a canonical serialisation of an 8-bit raster.
///
/// The byte stream is: a version tag, rows, cols and channel count, then one
/// record per row. A row whose pixels are all identical is written as the
/// marker 0x01 followed by one pixel; any other row is 0x00 followed by the
/// raw row bytes. The encoding is injective for fixed dimensions, so two
/// rasters share a digest exactly when their pixel bytes are equal, while
/// large flat regions cost almost nothing to hash.
inline std::string content_hash(const cv::Mat& img) {
  if (img.empty()) throw Error(Errc::BadImage, "cannot hash an empty raster");
  if (img.depth() != CV_8U) throw Error(Errc::BadImage, "only 8-bit rasters are supported");
  const auto ch = static_cast<std::size_t>(img.channels());
  const auto cols = static_cast<std::size_t>(img.cols);
  const std::size_t row_bytes = cols * ch;

  Sha256 h;
  h.update("docarl-raster-v1");
  h.update_u64(static_cast<std::uint64_t>(img.rows));
  h.update_u64(cols);
  h.update_u64(ch);
  const unsigned char kFlat = 1, kRaw = 0;
  for (int r = 0; r < img.rows; ++r) {
    const auto* row = img.ptr<unsigned char>(r);
    if (cols == 1 || std::memcmp(row, row + ch, row_bytes - ch) == 0) {
      h.update(&kFlat, 1);
      h.update(row, ch);
    } else {
      h.update(&kRaw, 1);
      h.update(row, row_bytes);
    }
  }
  return h.hex_digest();
}

}  // namespace docarl
