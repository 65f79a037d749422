#pragma once

#include <fcntl.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "docarl/core/error.hpp"
#include "docarl/core/image.hpp"
#include "docarl/pipeline/backends.hpp"
#include "docarl/render/manifest.hpp"

namespace docarl {

/// A child process that answers one JSON object per line on stdout for each
/// JSON line written to its stdin. Calls are serialised.
class LineJsonProcess {
 public:
  explicit LineJsonProcess(std::vector<std::string> argv) {
    if (argv.empty()) throw Error(Errc::InvalidArgument, "empty command");
    int to_child[2], from_child[2];
    if (pipe2(to_child, O_CLOEXEC) != 0 || pipe2(from_child, O_CLOEXEC) != 0) {
      throw Error(Errc::SubprocessError, std::string("pipe: ") + std::strerror(errno));
    }
    pid_ = fork();
    if (pid_ < 0) throw Error(Errc::SubprocessError, std::string("fork: ") + std::strerror(errno));
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      std::vector<char*> args;
      for (auto& a : argv) args.push_back(a.data());
      args.push_back(nullptr);
      execvp(args[0], args.data());
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    in_ = to_child[1];
    out_ = from_child[0];
  }

  LineJsonProcess(const LineJsonProcess&) = delete;
  LineJsonProcess& operator=(const LineJsonProcess&) = delete;

  ~LineJsonProcess() {
    if (in_ >= 0) close(in_);
    if (out_ >= 0) close(out_);
    if (pid_ > 0) {
      int status = 0;
      if (waitpid(pid_, &status, WNOHANG) == 0) {
        kill(pid_, SIGTERM);
        waitpid(pid_, &status, 0);
      }
    }
  }

  nlohmann::json call(const nlohmann::json& request) {
    std::lock_guard lock(mu_);
    const std::string line = request.dump() + "\n";
    std::size_t off = 0;
    while (off < line.size()) {
      const ssize_t n = ::write(in_, line.data() + off, line.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw Error(Errc::SubprocessError, std::string("write: ") + std::strerror(errno));
      }
      off += static_cast<std::size_t>(n);
    }
    std::string reply;
    while (true) {
      const auto nl = buffer_.find('\n');
      if (nl != std::string::npos) {
        reply = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        break;
      }
      char chunk[4096];
      const ssize_t n = ::read(out_, chunk, sizeof chunk);
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) throw Error(Errc::SubprocessError, "backend closed its output");
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
    try {
      return nlohmann::json::parse(reply);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::SubprocessError, std::string("bad reply: ") + e.what());
    }
  }

 private:
  pid_t pid_ = -1;
  int in_ = -1;
  int out_ = -1;
  std::string buffer_;
  std::mutex mu_;
};

namespace detail {

// Backends read images from disk; in-memory rasters are spilled once per hash.
inline std::string image_path_for(const ImageRef& img, const std::filesystem::path& spill_dir) {
  if (img.source_path) return img.source_path->string();
  std::filesystem::create_directories(spill_dir);
  const auto p = spill_dir / (img.content_hash + ".png");
  if (!std::filesystem::exists(p)) {
    const auto bytes = png::encode(img.pixels);
    const auto tmp = p.string() + ".tmp" + std::to_string(getpid());
    write_file_bytes(tmp, bytes.data(), bytes.size());
    std::filesystem::rename(tmp, p);
  }
  return p.string();
}

inline std::filesystem::path default_spill_dir() { return std::filesystem::temp_directory_path() / "docarl-spill"; }

}  // namespace detail

/// Request {"op":"detect","image_path":...}; reply {"detections":[{"class_id","box":[x0,y0,x1,y1],"confidence"}]}.
class SubprocessDetector final : public DetectorBackend {
 public:
  explicit SubprocessDetector(std::vector<std::string> argv, std::filesystem::path spill = detail::default_spill_dir())
      : proc_(std::move(argv)), spill_(std::move(spill)) {}

  std::vector<DetectionResult> detect(const ImageRef& img) const override {
    const auto reply = proc_.call({{"op", "detect"}, {"image_path", detail::image_path_for(img, spill_)}});
    std::vector<DetectionResult> out;
    try {
      for (const auto& d : reply.at("detections")) {
        out.emplace_back(d.at("class_id").get<std::string>(), box_from_json(d.at("box")),
                         d.at("confidence").get<double>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::SubprocessError, std::string("detector reply: ") + e.what());
    }
    return out;
  }

 private:
  mutable LineJsonProcess proc_;
  std::filesystem::path spill_;
};

/// Request {"op":"read","image_path":...,"crop":[x0,y0,x1,y1]?}; reply {"spans":[{"box","text","score"}]}.
class SubprocessOcr final : public OcrBackend {
 public:
  explicit SubprocessOcr(std::vector<std::string> argv, std::filesystem::path spill = detail::default_spill_dir())
      : proc_(std::move(argv)), spill_(std::move(spill)) {}

  std::vector<OcrSpan> read(const ImageRef& img, const std::optional<Box>& crop) const override {
    nlohmann::json req{{"op", "read"}, {"image_path", detail::image_path_for(img, spill_)}};
    if (crop) req["crop"] = box_to_json(*crop);
    const auto reply = proc_.call(req);
    std::vector<OcrSpan> out;
    try {
      for (const auto& s : reply.at("spans")) {
        out.emplace_back(box_from_json(s.at("box")), s.at("text").get<std::string>(), s.value("score", 1.0));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::SubprocessError, std::string("OCR reply: ") + e.what());
    }
    sort_reading_order(out);
    return out;
  }

 private:
  mutable LineJsonProcess proc_;
  std::filesystem::path spill_;
};

}  // namespace docarl
