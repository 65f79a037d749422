#pragma once

#include <zlib.h>

#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include <opencv2/core.hpp>

#include "docarl/core/error.hpp"

namespace docarl::png {

namespace detail {

inline void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v >> 24));
  out.push_back(static_cast<unsigned char>(v >> 16));
  out.push_back(static_cast<unsigned char>(v >> 8));
  out.push_back(static_cast<unsigned char>(v));
}

inline void put_chunk(std::vector<unsigned char>& out, const char type[4],
                      const unsigned char* data, std::size_t n) {
  put_u32(out, static_cast<std::uint32_t>(n));
  const std::size_t at = out.size();
  out.insert(out.end(), type, type + 4);
  if (n) out.insert(out.end(), data, data + n);
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, out.data() + at, static_cast<uInt>(n + 4));
  put_u32(out, static_cast<std::uint32_t>(crc));
}

// One independently deflated run of scanlines. Segments end on a byte-aligned
// sync point, so they can be concatenated into a single zlib stream.
struct Segment {
  std::vector<unsigned char> bytes;
  uLong adler = 1;
  std::size_t raw_len = 0;
};

class Deflater {
 public:
  explicit Deflater(int level) {
    std::memset(&zs_, 0, sizeof zs_);
    if (deflateInit2(&zs_, level, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
      throw Error(Errc::IoError, "deflateInit2 failed");
    }
  }
  ~Deflater() { deflateEnd(&zs_); }
  Deflater(const Deflater&) = delete;
  Deflater& operator=(const Deflater&) = delete;

  void begin(Segment& seg) {
    deflateReset(&zs_);
    seg_ = &seg;
    seg.bytes.clear();
    seg.adler = adler32(0L, Z_NULL, 0);
    seg.raw_len = 0;
  }

  void feed(const unsigned char* data, std::size_t n) {
    seg_->adler = adler32(seg_->adler, data, static_cast<uInt>(n));
    seg_->raw_len += n;
    run(data, n, Z_NO_FLUSH);
  }

  void finish() { run(nullptr, 0, Z_SYNC_FLUSH); }

 private:
  void run(const unsigned char* data, std::size_t n, int flush) {
    zs_.next_in = const_cast<Bytef*>(data);
    zs_.avail_in = static_cast<uInt>(n);
    unsigned char buf[1 << 16];
    do {
      zs_.next_out = buf;
      zs_.avail_out = sizeof buf;
      const int rc = deflate(&zs_, flush);
      if (rc == Z_STREAM_ERROR) throw Error(Errc::IoError, "deflate failed");
      seg_->bytes.insert(seg_->bytes.end(), buf, buf + (sizeof buf - zs_.avail_out));
    } while (zs_.avail_out == 0 || zs_.avail_in != 0);
  }

  z_stream zs_;
  Segment* seg_ = nullptr;
};

// Compressed flat bands (e.g. the white margins of an A4 page) repeat across
// thousands of images; they are deflated once and reused.
class FlatBandCache {
 public:
  using Key = std::tuple<std::size_t, int, std::uint32_t, int>;

  static FlatBandCache& instance() {
    static FlatBandCache cache;
    return cache;
  }

  std::shared_ptr<const Segment> find(const Key& k) {
    std::lock_guard lock(mu_);
    auto it = map_.find(k);
    return it == map_.end() ? nullptr : it->second;
  }

  std::shared_ptr<const Segment> insert(const Key& k, Segment seg) {
    auto p = std::make_shared<const Segment>(std::move(seg));
    std::lock_guard lock(mu_);
    if (map_.size() >= kMaxEntries) map_.clear();
    map_.insert_or_assign(k, p);
    return p;
  }

 private:
  static constexpr std::size_t kMaxEntries = 64;
  std::mutex mu_;
  std::map<Key, std::shared_ptr<const Segment>> map_;
};

inline bool flat_row(const unsigned char* row, std::size_t row_bytes, std::size_t ch) {
  return row_bytes <= ch || std::memcmp(row, row + ch, row_bytes - ch) == 0;
}

inline std::uint32_t pack_pixel(const unsigned char* px, std::size_t ch) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < ch; ++i) v = (v << 8) | px[i];
  return v;
}

}  // namespace detail

/// Encodes an 8-bit greyscale, BGR or BGRA raster as PNG.
///
/// Scanlines use filter type 0 and level-1 deflate. Runs of identical flat
/// rows are emitted as cached segments of fixed heights.
inline std::vector<unsigned char> encode(const cv::Mat& img) {
  using namespace detail;
  if (img.empty() || img.depth() != CV_8U) throw Error(Errc::BadImage, "PNG needs an 8-bit raster");
  const int ch = img.channels();
  unsigned char color_type = 0;
  switch (ch) {
    case 1: color_type = 0; break;
    case 3: color_type = 2; break;
    case 4: color_type = 6; break;
    default: throw Error(Errc::BadImage, "unsupported channel count " + std::to_string(ch));
  }
  constexpr int kMinFlatRun = 16;
  constexpr int kFlatBlocks[] = {1024, 256, 64, 16};
  const auto uch = static_cast<std::size_t>(ch);
  const std::size_t row_bytes = static_cast<std::size_t>(img.cols) * uch;
  const int rows = img.rows;

  std::vector<unsigned char> out;
  static constexpr unsigned char kSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  out.insert(out.end(), kSig, kSig + 8);

  std::vector<unsigned char> ihdr;
  put_u32(ihdr, static_cast<std::uint32_t>(img.cols));
  put_u32(ihdr, static_cast<std::uint32_t>(rows));
  ihdr.insert(ihdr.end(), {8, color_type, 0, 0, 0});
  put_chunk(out, "IHDR", ihdr.data(), ihdr.size());

  std::vector<unsigned char> line(row_bytes + 1, 0);
  auto fill_line = [&](const unsigned char* src) {
    unsigned char* dst = line.data() + 1;
    if (ch == 1) {
      std::memcpy(dst, src, row_bytes);
    } else {
      for (std::size_t i = 0; i < row_bytes; i += uch) {
        dst[i] = src[i + 2];
        dst[i + 1] = src[i + 1];
        dst[i + 2] = src[i];
        if (ch == 4) dst[i + 3] = src[i + 3];
      }
    }
  };

  // Length of the flat run starting at row r whose pixel equals row r's first pixel.
  auto flat_run = [&](int r) {
    const auto* first = img.ptr<unsigned char>(r);
    if (!flat_row(first, row_bytes, uch)) return 0;
    int n = 1;
    while (r + n < rows) {
      const auto* row = img.ptr<unsigned char>(r + n);
      if (std::memcmp(row, first, uch) != 0 || !flat_row(row, row_bytes, uch)) break;
      ++n;
    }
    return n;
  };

  std::vector<unsigned char> idat{0x78, 0x01};
  uLong adler = adler32(0L, Z_NULL, 0);
  auto append = [&](const Segment& s) {
    idat.insert(idat.end(), s.bytes.begin(), s.bytes.end());
    adler = adler32_combine(adler, s.adler, static_cast<z_off_t>(s.raw_len));
  };

  Deflater z(1);
  Segment mixed;
  bool mixed_open = false;
  int r = 0;
  while (r < rows) {
    const int run = flat_run(r);
    if (run >= kMinFlatRun) {
      if (mixed_open) {
        z.finish();
        append(mixed);
        mixed_open = false;
      }
      // Greedy split into cacheable block heights; the short tail joins the
      // next mixed segment.
      const auto* px = img.ptr<unsigned char>(r);
      int left = run;
      for (int block : kFlatBlocks) {
        while (left >= block) {
          const FlatBandCache::Key key{row_bytes, ch, pack_pixel(px, uch), block};
          auto& cache = FlatBandCache::instance();
          auto seg = cache.find(key);
          if (!seg) {
            Segment local;
            fill_line(px);
            z.begin(local);
            for (int i = 0; i < block; ++i) z.feed(line.data(), line.size());
            z.finish();
            seg = cache.insert(key, std::move(local));
          }
          append(*seg);
          left -= block;
          r += block;
        }
      }
      if (left == 0) continue;
    }
    if (!mixed_open) {
      z.begin(mixed);
      mixed_open = true;
    }
    const int n = run >= kMinFlatRun ? run % kMinFlatRun : (run > 0 ? run : 1);
    for (int i = 0; i < n; ++i) {
      fill_line(img.ptr<unsigned char>(r + i));
      z.feed(line.data(), line.size());
    }
    r += n;
  }
  if (mixed_open) {
    z.finish();
    append(mixed);
  }
  // Empty final block with fixed Huffman codes, then the Adler-32 trailer.
  idat.push_back(0x03);
  idat.push_back(0x00);
  put_u32(idat, static_cast<std::uint32_t>(adler));
  put_chunk(out, "IDAT", idat.data(), idat.size());
  put_chunk(out, "IEND", nullptr, 0);
  return out;
}

}  // namespace docarl::png
