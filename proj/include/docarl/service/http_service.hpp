#pragma once

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <httplib.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "docarl/core/base64.hpp"
#include "docarl/core/error.hpp"
#include "docarl/core/image.hpp"
#include "docarl/feedback/store.hpp"
#include "docarl/pipeline/backends.hpp"
#include "docarl/pipeline/pipeline.hpp"
#include "docarl/templates/registry.hpp"

namespace docarl {

inline constexpr std::string_view kInvalidJson = "Invalid input, JSON expected";
inline constexpr std::string_view kSuccessMessage = "Request processed successfully.";

inline constexpr std::string_view kRouteIdentify = "/document/identify";
inline constexpr std::string_view kRouteExtract = "/document/extract/data";
inline constexpr std::string_view kRoutePropose = "/document/propose/modification";
inline constexpr std::string_view kRouteGetAll = "/document/request/getAll";
inline constexpr std::string_view kRouteReject = "/document/request/reject";
inline constexpr std::string_view kRouteApprove = "/document/request/approve";

inline constexpr std::string_view kRoutes[] = {kRouteIdentify, kRoutePropose, kRouteExtract,
                                               kRouteGetAll,   kRouteReject,  kRouteApprove};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

inline ApiResponse api_error(int status, std::string_view message) {
  return {status, nlohmann::json{{"error", message}}};
}

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 5000;
  std::filesystem::path requests_dir = "./modification_requests";
  std::filesystem::path rejected_dir = "./rejected_pipeline";
  std::filesystem::path templates_dir = "./templates";
  std::filesystem::path dataset_dir = "./dataset";

  /// Defaults overridden by REQUESTS_DIR, REJECTED_DIR, TEMPLATES_DIR, DATASET_DIR.
  static ServiceConfig from_env() {
    ServiceConfig c;
    if (const char* v = std::getenv("REQUESTS_DIR")) c.requests_dir = v;
    if (const char* v = std::getenv("REJECTED_DIR")) c.rejected_dir = v;
    if (const char* v = std::getenv("TEMPLATES_DIR")) c.templates_dir = v;
    if (const char* v = std::getenv("DATASET_DIR")) c.dataset_dir = v;
    return c;
  }
};

/// The six document endpoints. handle() is transport-free; mount() wires it
/// into an httplib server.
class DocumentService {
 public:
  DocumentService(std::shared_ptr<const TemplateRegistry> registry, std::shared_ptr<const DetectorBackend> detector,
                  std::shared_ptr<const OcrBackend> ocr, std::shared_ptr<FeedbackStore> store)
      : registry_(std::move(registry)), detector_(std::move(detector)), ocr_(std::move(ocr)), store_(std::move(store)) {}

  static bool is_route(std::string_view path) {
    for (auto r : kRoutes) {
      if (r == path) return true;
    }
    return false;
  }

  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body) const {
    if (!is_route(path)) return api_error(404, "Not found");
    if (method == "OPTIONS") return {204, nullptr};
    if (method != "POST") return api_error(405, "Method not allowed");
    try {
      if (path == kRouteGetAll) return get_all();
      nlohmann::json j = nlohmann::json::parse(body, nullptr, false);
      if (j.is_discarded() || !j.is_object()) return api_error(400, kInvalidJson);
      if (path == kRouteIdentify) return identify_route(j);
      if (path == kRouteExtract) return extract_route(j);
      if (path == kRoutePropose) return propose_route(j);
      if (path == kRouteReject) return triage_route(j, false);
      return triage_route(j, true);
    } catch (const std::exception& e) {
      spdlog::error("{} failed: {}", path, e.what());
      return api_error(500, e.what());
    }
  }

  void mount(httplib::Server& server) const {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    auto respond = [](httplib::Response& res, const ApiResponse& api) {
      res.status = api.status;
      if (api.status == 405) res.set_header("Allow", "POST, OPTIONS");
      if (!api.body.is_null()) res.set_content(api.body.dump(), "application/json");
    };
    // Non-POST methods on known routes are answered before the body is read.
    server.set_pre_routing_handler([this, respond](const httplib::Request& req, httplib::Response& res) {
      if (req.method == "POST" || !is_route(req.path)) return httplib::Server::HandlerResponse::Unhandled;
      respond(res, handle(req.method, req.path, {}));
      return httplib::Server::HandlerResponse::Handled;
    });
    for (auto route : kRoutes) {
      server.Post(std::string(route), [this, respond](const httplib::Request& req, httplib::Response& res) {
        respond(res, handle("POST", req.path, req.body));
      });
    }
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
      const char* msg = res.status == 404 ? "Not found" : httplib::status_message(res.status);
      res.set_content(nlohmann::json{{"error", msg}}.dump(), "application/json");
      return httplib::Server::HandlerResponse::Handled;
    });
  }

 private:
  struct Decoded {
    std::optional<ImageRef> image;
    std::optional<ApiResponse> error;
  };

  static Decoded decode_body_image(const nlohmann::json& j) {
    if (!j.contains("image") || !j["image"].is_string()) return {std::nullopt, api_error(400, "BadImage: missing 'image'")};
    try {
      return {make_image_ref(decode_image(base64::decode(j["image"].get<std::string>()))), std::nullopt};
    } catch (const Error& e) {
      if (e.code() != Errc::BadImage) throw;
      return {std::nullopt, api_error(400, e.what())};
    }
  }

  static std::optional<ApiResponse> unresolvable(const Error& e) {
    if (e.code() == Errc::NoDocumentFound || e.code() == Errc::UnresolvableImage) {
      return api_error(422, std::string("UnresolvableImage: ") + e.what());
    }
    return std::nullopt;
  }

  ApiResponse identify_route(const nlohmann::json& j) const {
    auto d = decode_body_image(j);
    if (d.error) return *d.error;
    try {
      const DetectionResult det = identify(*d.image, *detector_);
      return {200, {{"class_id", det.class_id}, {"confidence", det.confidence}}};
    } catch (const Error& e) {
      if (auto r = unresolvable(e)) return *r;
      throw;
    }
  }

  ApiResponse extract_route(const nlohmann::json& j) const {
    auto d = decode_body_image(j);
    if (d.error) return *d.error;
    DetectionResult det;
    try {
      det = identify(*d.image, *detector_);
    } catch (const Error& e) {
      if (auto r = unresolvable(e)) return *r;
      throw;
    }
    try {
      const ExtractionResult ex = extract(*d.image, det.class_id, *ocr_, *registry_, det.confidence);
      nlohmann::json fields = nlohmann::json::array();
      for (const auto& f : ex.fields) fields.push_back({{"code", f.code}, {"text", f.value}});
      return {200,
              {{"class_id", ex.class_id}, {"confidence", ex.confidence}, {"fields", fields}, {"serialized", ex.serialized}}};
    } catch (const Error& e) {
      if (e.code() != Errc::AnchorNotFound) throw;
      return {200,
              {{"class_id", det.class_id},
               {"confidence", det.confidence},
               {"fields", nlohmann::json::array()},
               {"serialized", ""},
               {"error_detail", "anchor_not_found"}}};
    }
  }

  ApiResponse propose_route(const nlohmann::json& j) const {
    const auto id = store_->propose(j.at("document_identified").get<std::string>(),
                                    j.at("document_suggested").get<std::string>(), j.at("image").get<std::string>());
    spdlog::info("modification request {} filed", id);
    return {200, {{"message", kSuccessMessage}}};
  }

  ApiResponse get_all() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : store_->list_requests()) out.push_back(r.to_json());
    return {200, out};
  }

  static std::optional<std::int64_t> req_id_of(const nlohmann::json& j) {
    if (!j.contains("req_id")) return std::nullopt;
    const auto& v = j["req_id"];
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) {
      const auto& s = v.get_ref<const std::string&>();
      std::int64_t id = 0;
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), id);
      if (ec == std::errc{} && p == s.data() + s.size()) return id;
    }
    return std::nullopt;
  }

  ApiResponse triage_route(const nlohmann::json& j, bool approve) const {
    const auto id = req_id_of(j);
    if (!id) return api_error(400, "InvalidArgument: 'req_id' must be an integer");
    if (approve) {
      store_->approve(*id);
    } else {
      store_->reject(*id);
    }
    return {200, {{"message", kSuccessMessage}}};
  }

  std::shared_ptr<const TemplateRegistry> registry_;
  std::shared_ptr<const DetectorBackend> detector_;
  std::shared_ptr<const OcrBackend> ocr_;
  std::shared_ptr<FeedbackStore> store_;
};

}  // namespace docarl
