#pragma once

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "docarl/core/base64.hpp"
#include "docarl/core/document_class.hpp"
#include "docarl/core/error.hpp"
#include "docarl/core/image.hpp"

namespace docarl {

inline constexpr std::string_view kNoClass = "NONE";

struct ModificationRequest {
  std::int64_t req_id = 0;
  std::string document_identified;
  std::string document_suggested;
  std::string image;  // base64 of the uploaded file bytes

  nlohmann::json to_json() const {
    return {{"req_id", req_id},
            {"document_identified", document_identified},
            {"document_suggested", document_suggested},
            {"image", image}};
  }

  static ModificationRequest from_json(const nlohmann::json& j) {
    ModificationRequest r;
    r.req_id = j.at("req_id").get<std::int64_t>();
    r.document_identified = j.at("document_identified").get<std::string>();
    r.document_suggested = j.at("document_suggested").get<std::string>();
    r.image = j.at("image").get<std::string>();
    return r;
  }
};

struct RejectedDataEntry {
  std::string class_id;
  std::filesystem::path path;
  std::int64_t origin_req_id = 0;
  std::string content_hash;
};

/// File-backed modification-request queue and rejected-data pipeline.
///
/// Requests live in requests_dir/request_<id>.txt. Approval and rejection both
/// start by atomically removing that name (rename or unlink), so exactly one of
/// two racing callers wins.
class FeedbackStore {
 public:
  FeedbackStore(std::filesystem::path requests_dir, std::filesystem::path rejected_root)
      : requests_(std::move(requests_dir)), rejected_(std::move(rejected_root)) {
    std::filesystem::create_directories(requests_);
    std::filesystem::create_directories(rejected_ / "images");
  }

  const std::filesystem::path& requests_dir() const { return requests_; }
  const std::filesystem::path& rejected_root() const { return rejected_; }

  std::filesystem::path request_path(std::int64_t id) const {
    return requests_ / ("request_" + std::to_string(id) + ".txt");
  }

  std::int64_t propose(std::string_view identified, std::string_view suggested, std::string_view image_b64) {
    if (!is_class_id(suggested)) throw Error(Errc::UnknownClass, "suggested class '" + std::string(suggested) + "'");
    if (identified != kNoClass && !is_class_id(identified)) {
      throw Error(Errc::UnknownClass, "identified class '" + std::string(identified) + "'");
    }
    base64::decode(image_b64);  // BadImage on malformed payloads

    ModificationRequest req{0, std::string(identified), std::string(suggested), std::string(image_b64)};
    const auto tmp = requests_ / (".tmp_" + std::to_string(getpid()) + "_" + std::to_string(next_tmp_++) + "_" +
                                  std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())));
    std::int64_t id = next_id();
    // The id is part of the body, so the temp file is rewritten whenever the id bumps.
    while (true) {
      req.req_id = id;
      write_text_file(tmp, req.to_json().dump());
      if (::link(tmp.c_str(), request_path(id).c_str()) == 0) break;
      const int err = errno;
      if (err != EEXIST) {
        std::filesystem::remove(tmp);
        throw Error(Errc::IoError, "cannot publish request: " + std::string(std::strerror(err)));
      }
      id = next_id(id + 1);
    }
    std::filesystem::remove(tmp);
    return id;
  }

  std::vector<ModificationRequest> list_requests() const {
    std::vector<ModificationRequest> out;
    for (const auto& e : std::filesystem::directory_iterator(requests_)) {
      const auto name = e.path().filename().string();
      if (!name.starts_with("request_") || !name.ends_with(".txt")) continue;
      try {
        out.push_back(ModificationRequest::from_json(nlohmann::json::parse(read_text_file(e.path()))));
      } catch (const std::exception& ex) {
        spdlog::warn("skipping unreadable request {}: {}", name, ex.what());
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.req_id < b.req_id; });
    return out;
  }

  void reject(std::int64_t id) {
    if (::unlink(request_path(id).c_str()) != 0) {
      if (errno == ENOENT) throw Error(Errc::NotFound, "request " + std::to_string(id));
      throw Error(Errc::IoError, "cannot remove request " + std::to_string(id) + ": " + std::strerror(errno));
    }
  }

  RejectedDataEntry approve(std::int64_t id) {
    const auto src = request_path(id);
    const auto claim = requests_ / (".claim_" + std::to_string(id) + "_" + std::to_string(getpid()) + "_" +
                                    std::to_string(next_tmp_++));
    if (::rename(src.c_str(), claim.c_str()) != 0) {
      if (errno == ENOENT) throw Error(Errc::NotFound, "request " + std::to_string(id));
      throw Error(Errc::IoError, "cannot claim request " + std::to_string(id) + ": " + std::strerror(errno));
    }
    RejectedDataEntry entry;
    try {
      const auto req = ModificationRequest::from_json(nlohmann::json::parse(read_text_file(claim)));
      const cv::Mat img = decode_image(base64::decode(req.image));
      const auto dir = rejected_ / "images" / req.document_suggested;
      std::filesystem::create_directories(dir);
      entry.class_id = req.document_suggested;
      entry.origin_req_id = id;
      entry.path = dir / ("req_" + std::to_string(id) + ".png");
      entry.content_hash = content_hash(img);
      const auto bytes = png::encode(img);
      const auto part = entry.path.string() + ".part";
      write_file_bytes(part, bytes.data(), bytes.size());
      std::filesystem::rename(part, entry.path);
      append_ledger(entry);
    } catch (...) {
      ::rename(claim.c_str(), src.c_str());  // leave the request for another attempt
      throw;
    }
    std::filesystem::remove(claim);
    return entry;
  }

  /// Approved entries in ledger order whose image is still present.
  std::vector<RejectedDataEntry> rejected_entries() const { return read_ledger(rejected_); }

  static std::vector<RejectedDataEntry> read_ledger(const std::filesystem::path& rejected_root) {
    std::vector<RejectedDataEntry> out;
    const auto ledger = rejected_root / "ledger.jsonl";
    if (!std::filesystem::exists(ledger)) return out;
    std::istringstream in(read_text_file(ledger));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        const auto j = nlohmann::json::parse(line);
        RejectedDataEntry e{j.at("class_id").get<std::string>(), rejected_root / j.at("path").get<std::string>(),
                            j.at("req_id").get<std::int64_t>(), j.value("content_hash", std::string{})};
        if (std::filesystem::exists(e.path)) out.push_back(std::move(e));
      } catch (const std::exception& ex) {
        spdlog::warn("skipping bad ledger line: {}", ex.what());
      }
    }
    return out;
  }

 private:
  std::int64_t next_id(std::int64_t at_least = 0) {
    const auto now = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    std::int64_t prev = last_id_.load();
    std::int64_t id;
    do {
      id = std::max({static_cast<std::int64_t>(now), prev + 1, at_least});
    } while (!last_id_.compare_exchange_weak(prev, id));
    return id;
  }

  void append_ledger(const RejectedDataEntry& e) {
    const auto rel = std::filesystem::relative(e.path, rejected_).generic_string();
    const auto approved_at = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::system_clock::now().time_since_epoch())
                                 .count();
    const std::string line = nlohmann::json{{"req_id", e.origin_req_id},
                                            {"class_id", e.class_id},
                                            {"path", rel},
                                            {"approved_at", approved_at},
                                            {"content_hash", e.content_hash}}
                                 .dump() +
                             "\n";
    std::lock_guard lock(ledger_mu_);
    const auto ledger = (rejected_ / "ledger.jsonl").string();
    const int fd = ::open(ledger.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd < 0) throw Error(Errc::IoError, "cannot open ledger: " + std::string(std::strerror(errno)));
    const ssize_t n = ::write(fd, line.data(), line.size());
    ::close(fd);
    if (n != static_cast<ssize_t>(line.size())) throw Error(Errc::IoError, "short ledger write");
  }

  std::filesystem::path requests_;
  std::filesystem::path rejected_;
  std::atomic<std::int64_t> last_id_{0};
  std::atomic<std::uint64_t> next_tmp_{0};
  std::mutex ledger_mu_;
};

}  // namespace docarl
