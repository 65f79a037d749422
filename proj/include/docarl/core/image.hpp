#pragma once

#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "docarl/core/error.hpp"
#include "docarl/core/hash.hpp"
#include "docarl/core/png.hpp"

namespace docarl {

/// A decoded raster plus the handles the oracle backends resolve it by.
struct ImageRef {
  cv::Mat pixels;
  std::string content_hash;
  std::optional<std::string> manifest_id;
  std::optional<std::filesystem::path> source_path;
};

inline ImageRef make_image_ref(cv::Mat pixels, std::optional<std::string> manifest_id = {}) {
  ImageRef ref;
  ref.content_hash = content_hash(pixels);
  ref.pixels = std::move(pixels);
  ref.manifest_id = std::move(manifest_id);
  return ref;
}

enum class ImageFormat { Png, Jpeg };

inline std::string_view extension_for(ImageFormat f) { return f == ImageFormat::Png ? ".png" : ".jpg"; }

inline std::vector<unsigned char> encode_image(const cv::Mat& img, ImageFormat fmt) {
  if (fmt == ImageFormat::Png) return png::encode(img);
  std::vector<unsigned char> buf;
  if (!cv::imencode(".jpg", img, buf, {cv::IMWRITE_JPEG_QUALITY, 95})) {
    throw Error(Errc::IoError, "JPEG encoding failed");
  }
  return buf;
}

inline cv::Mat decode_image(const unsigned char* data, std::size_t n) {
  if (n == 0) throw Error(Errc::BadImage, "empty image payload");
  cv::Mat buf(1, static_cast<int>(n), CV_8U, const_cast<unsigned char*>(data));
  cv::Mat img;
  try {
    img = cv::imdecode(buf, cv::IMREAD_UNCHANGED);
  } catch (const cv::Exception& e) {
    throw Error(Errc::BadImage, e.what());
  }
  if (img.empty()) throw Error(Errc::BadImage, "payload is not a decodable image");
  if (img.depth() != CV_8U) {
    cv::Mat eight;
    img.convertTo(eight, CV_8U, img.depth() == CV_16U ? 1.0 / 257.0 : 1.0);
    img = eight;
  }
  return img;
}

inline cv::Mat decode_image(const std::vector<unsigned char>& bytes) {
  return decode_image(bytes.data(), bytes.size());
}

inline std::vector<unsigned char> read_file_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file_bytes(const std::filesystem::path& p, const void* data, std::size_t n) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + p.string());
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
  if (!out) throw Error(Errc::IoError, "short write to " + p.string());
}

inline void write_text_file(const std::filesystem::path& p, std::string_view text) {
  write_file_bytes(p, text.data(), text.size());
}

inline ImageRef load_image(const std::filesystem::path& p) {
  auto bytes = read_file_bytes(p);
  ImageRef ref = make_image_ref(decode_image(bytes));
  ref.source_path = p;
  return ref;
}

}  // namespace docarl
