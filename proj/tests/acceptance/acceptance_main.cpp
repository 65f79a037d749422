// Acceptance run: one PASS/FAIL line per criterion, each against its own time limit.

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "docarl/docarl.hpp"

using namespace docarl;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    path_ = fs::temp_directory_path() / ("docarl-accept-" + std::to_string(getpid()) + "-" + tag);
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

const TemplateRegistry& registry() {
  static const TemplateRegistry r = TemplateRegistry::load(DOCARL_TEMPLATES_DIR);
  return r;
}

std::string fixed(double v, int prec = 4) {
  std::ostringstream os;
  os.precision(prec);
  os << std::fixed << v;
  return os.str();
}

Verdict serial_goldens() {
  Verdict v;
  const std::pair<std::string, std::string> cases[] = {
      {format_serial(kAdhaar, 1), "0000 0000 0001"},
      {format_serial(kPassport, 7), "A0000007"},
      {format_serial(kDl, 1620240000001ULL), "AA16 20240000001"},
      {format_serial(kVoter, 10), "AAA0000010"},
      {format_serial(kPan, 1), "AAAA0000B"},
  };
  for (const auto& [got, want] : cases) v.require(got == want, "got '" + got + "' want '" + want + "'");
  if (v.ok) v.detail = "5/5 golden strings";
  return v;
}

Verdict geometry() {
  Verdict v;
  for (const auto& cls : kDocumentClasses) {
    const auto& t = registry().registry_for(cls.id);
    const AnchorCorrespondence corr(t.identifying_region.identified_box, t.identifying_region.identified_box);
    for (const auto& r : t.data_regions) {
      v.require(map_region(corr, r.region_box) == r.region_box, std::string("identity not exact for ") + r.code);
    }
  }

  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> coord(0, 3000), size(5, 1500), scale(0.05, 8), shift(-2000, 2000);
  double worst_rel = 0, worst_form = 0;
  for (int i = 0; i < 1000; ++i) {
    const double ax = coord(rng), ay = coord(rng), rx = coord(rng), ry = coord(rng);
    const Box anchor(ax, ay, ax + size(rng), ay + size(rng));
    const Box region(rx, ry, rx + size(rng), ry + size(rng));
    const double sx = scale(rng), sy = scale(rng), tx = shift(rng), ty = shift(rng);
    const AnchorCorrespondence corr(anchor, anchor.scaled_translated(sx, sy, tx, ty));
    const Box want = region.scaled_translated(sx, sy, tx, ty);
    const Box got = map_region(corr, region);
    const Box alt = map_region_similar_triangles(corr, region);
    const double g[] = {got.x0(), got.y0(), got.x1(), got.y1()};
    const double w[] = {want.x0(), want.y0(), want.x1(), want.y1()};
    const double a[] = {alt.x0(), alt.y0(), alt.x1(), alt.y1()};
    for (int k = 0; k < 4; ++k) {
      worst_rel = std::max(worst_rel, std::abs(g[k] - w[k]) / std::max(1.0, std::abs(w[k])));
      worst_form = std::max(worst_form, std::abs(g[k] - a[k]));
    }
  }
  v.require(worst_rel <= 1e-9, "relative error " + std::to_string(worst_rel));
  v.require(worst_form < 1e-6, "form disagreement " + std::to_string(worst_form) + " px");
  if (v.ok) {
    std::ostringstream os;
    os << "max rel err " << worst_rel << ", max form gap " << worst_form << " px";
    v.detail = os.str();
  }
  return v;
}

Verdict oracle_round_trip() {
  Verdict v;
  ScratchDir dir("oracle");
  build_dataset(registry(), all_class_ids(), 10, 42, dir.path());
  auto idx = std::make_shared<ManifestIndex>(read_manifest_index(dir.path() / "data" / "manifests.jsonl"));
  const OracleDetector det(idx);
  const OracleOcr ocr(idx);
  std::size_t images = 0, correct = 0, perfect = 0;
  EvalOptions opts;
  opts.on_image = [&](const LabelledImage& item, const std::string& predicted, double ratio) {
    ++images;
    correct += predicted == item.class_id;
    perfect += ratio == 1.0;
  };
  for (auto split : {Split::Train, Split::Validation, Split::Test}) evaluate(dir.path(), split, det, ocr, registry(), opts);
  v.require(images == 700, "expected 700 images, saw " + std::to_string(images));
  v.require(correct == images, "identified " + std::to_string(correct) + "/" + std::to_string(images));
  v.require(perfect == images, "validation 1.0 on " + std::to_string(perfect) + "/" + std::to_string(images));
  if (v.ok) v.detail = "700/700 identified, 700/700 validated at 1.0";
  return v;
}

Verdict full_dataset() {
  Verdict v;
  ScratchDir dir("full");
  const auto c = build_dataset(registry(), all_class_ids(), 100, 42, dir.path());
  auto on_disk = [&](const char* split) {
    std::size_t n = 0;
    for (const auto& e : fs::directory_iterator(dir.path() / "data" / "images" / split)) n += e.is_regular_file();
    return n;
  };
  const std::size_t tr = on_disk("train"), va = on_disk("validation"), te = on_disk("test");
  const std::string got = std::to_string(tr) + "/" + std::to_string(va) + "/" + std::to_string(te);
  v.require(c.train == 4900 && c.validation == 1400 && c.test == 700, "writer counts differ");
  v.require(tr == 4900 && va == 1400 && te == 700, "on disk " + got);
  if (v.ok) v.detail = "7000 images split " + got;
  return v;
}

std::string tiny_png_b64(unsigned char seed) {
  return base64::encode(png::encode(cv::Mat(8, 8, CV_8UC3, cv::Scalar(seed, 40, 80))));
}

std::size_t files_in(const fs::path& p) {
  if (!fs::exists(p)) return 0;
  std::size_t n = 0;
  for (const auto& e : fs::recursive_directory_iterator(p)) n += e.is_regular_file();
  return n;
}

Verdict feedback_lifecycle() {
  Verdict v;
  {
    ScratchDir dir("fb-life");
    FeedbackStore store(dir.path() / "req", dir.path() / "rej");
    const auto id = store.propose("pan_v1", "dl_v1_p1", tiny_png_b64(1));
    const auto listed = store.list_requests();
    v.require(listed.size() == 1 && listed[0].req_id == id, "getAll does not list the proposal");
    store.approve(id);
    v.require(files_in(dir.path() / "rej" / "images") == 1, "approve did not store exactly one image");
    v.require(files_in(dir.path() / "rej" / "images" / "dl_v1_p1") == 1, "image not under the suggested class");
    v.require(store.list_requests().empty(), "approved request still listed");

    const auto before = files_in(dir.path() / "rej");
    const auto r = store.propose("adhaar_v1_p1", "pan_v1", tiny_png_b64(2));
    store.reject(r);
    v.require(store.list_requests().empty(), "rejected request still listed");
    v.require(files_in(dir.path() / "rej") == before, "reject touched the rejected data");
  }
  {
    ScratchDir dir("fb-conc");
    FeedbackStore store(dir.path() / "req", dir.path() / "rej");
    std::vector<std::int64_t> ids(100);
    std::vector<std::thread> pool;
    const std::string img = tiny_png_b64(3);
    for (int i = 0; i < 100; ++i) pool.emplace_back([&, i] { ids[i] = store.propose("pan_v1", "dl_v1_p1", img); });
    for (auto& t : pool) t.join();
    const std::set<std::int64_t> unique(ids.begin(), ids.end());
    v.require(unique.size() == 100, std::to_string(unique.size()) + " unique ids from 100 proposals");
    v.require(store.list_requests().size() == 100, "not all 100 proposals listed");
  }
  int races = 0;
  for (; races < 50; ++races) {
    ScratchDir dir("fb-race");
    FeedbackStore store(dir.path() / "req", dir.path() / "rej");
    const auto id = store.propose("pan_v1", "votercard_v1", tiny_png_b64(4));
    std::atomic<int> winners{0};
    auto attempt = [&](bool approve) {
      try {
        if (approve) {
          store.approve(id);
        } else {
          store.reject(id);
        }
        ++winners;
      } catch (const Error&) {
      }
    };
    std::thread a(attempt, true), b(attempt, false);
    a.join();
    b.join();
    if (winners != 1) {
      v.require(false, "race " + std::to_string(races) + " had " + std::to_string(winners.load()) + " winners");
      break;
    }
  }
  if (v.ok) v.detail = "lifecycle ok, 100 unique ids, 50/50 races with one winner";
  return v;
}

Verdict metrics_checks() {
  Verdict v;
  const double f = metrics::f1(0.92, 0.90);
  v.require(std::abs(f - 0.9099) <= 1e-4, "f1(0.92, 0.90) = " + fixed(f, 6));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 10000; ++i) {
    const double p = u(rng), r = u(rng), x = metrics::f1(p, r);
    if (x < std::min(p, r) - 1e-15 || x > std::max(p, r) + 1e-15) {
      v.require(false, "bounds violated at P=" + fixed(p, 6) + " R=" + fixed(r, 6));
      break;
    }
  }
  if (v.ok) v.detail = "f1(0.92, 0.90) = " + fixed(f) + ", bounds hold on 10000 pairs";
  return v;
}

Verdict arl_loop() {
  Verdict v;
  SimulationConfig cfg;
  cfg.seed = 42;
  cfg.bases_per_class = 10;
  cfg.rounds = 3;
  const auto res = simulate_arl_loop(cfg);
  std::string traj;
  for (double a : res.trajectory) traj += (traj.empty() ? "" : ", ") + fixed(a);
  const std::size_t grid = res.reports.empty() ? 0 : res.reports.front().total_images;
  v.require(grid == 700, "grid size " + std::to_string(grid));
  for (std::size_t i = 1; i < res.trajectory.size(); ++i) {
    v.require(res.trajectory[i] > res.trajectory[i - 1], "trajectory not strictly increasing");
  }
  bool reached = false;
  for (std::size_t i = 0; i < res.trajectory.size() && i <= 2; ++i) reached |= res.trajectory[i] == 1.0;
  v.require(reached, "accuracy 1.0 not reached by round 2");
  const double gap = res.trajectory.empty() ? 1.0 : std::abs(res.trajectory[0] - res.expected_round0);
  v.require(gap <= 0.02, "round 0 accuracy " + fixed(res.trajectory.empty() ? 0 : res.trajectory[0]) +
                             " vs closed form " + fixed(res.expected_round0) + " (gap " + fixed(gap) + " > 0.02)");
  v.detail += (v.detail.empty() ? "" : "; ") + std::string("trajectory [") + traj + "], closed form " +
              fixed(res.expected_round0);
  return v;
}

Verdict wire_conformance() {
  Verdict v;
  ScratchDir dir("wire");
  const auto reg = std::make_shared<TemplateRegistry>(TemplateRegistry::load(DOCARL_TEMPLATES_DIR));
  const auto rec = generate_record(kDl, first_serial(kDl), GenSeed{42, 10});
  const BaseRender base = render_base(rec, reg->registry_for(kDl));
  auto variants = fanout(base.image, base.manifest, base_stem(kDl, 1));
  auto idx = std::make_shared<ManifestIndex>();
  for (auto& var : variants) {
    var.manifest.content_hash = content_hash(var.image);
    idx->add(var.manifest);
  }
  const std::string image = base64::encode(png::encode(variants[5].image));
  auto store = std::make_shared<FeedbackStore>(dir.path() / "req", dir.path() / "rej");
  const DocumentService service(reg, std::make_shared<OracleDetector>(idx), std::make_shared<OracleOcr>(idx), store);

  httplib::Server server;
  service.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  if (port <= 0) {
    v.require(false, "cannot bind a port");
    return v;
  }
  std::thread listener([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client cli("127.0.0.1", port);
  cli.set_read_timeout(10, 0);

  const json success = {{"message", std::string(kSuccessMessage)}};
  const json invalid = {{"error", std::string(kInvalidJson)}};
  auto post = [&](std::string_view route, const std::string& body, int want_status, const std::string& label) {
    auto res = cli.Post(std::string(route), body, "application/json");
    if (!res) {
      v.require(false, label + ": no response");
      return json();
    }
    v.require(res->status == want_status, label + ": status " + std::to_string(res->status));
    v.require(res->get_header_value("Content-Type") == "application/json", label + ": content type");
    const auto j = json::parse(res->body, nullptr, false);
    v.require(!j.is_discarded(), label + ": body is not JSON");
    return j;
  };

  auto j = post(kRouteIdentify, json{{"image", image}}.dump(), 200, "identify");
  v.require(j == json{{"class_id", "dl_v1_p1"}, {"confidence", 1.0}}, "identify body " + j.dump());

  j = post(kRouteExtract, json{{"image", image}}.dump(), 200, "extract");
  v.require(j.is_object() && j.value("serialized", "") == serialize_annotation(rec.annotation), "extract serialized");
  v.require(j.is_object() && j.contains("fields") && j["fields"].size() == rec.values.size(), "extract fields");

  const json proposal = {{"document_identified", "pan_v1"}, {"document_suggested", "dl_v1_p1"}, {"image", image}};
  v.require(post(kRoutePropose, proposal.dump(), 200, "propose") == success, "propose envelope");
  v.require(post(kRoutePropose, proposal.dump(), 200, "propose") == success, "propose envelope");

  j = post(kRouteGetAll, "", 200, "getAll");
  v.require(j.is_array() && j.size() == 2, "getAll size");
  std::int64_t first = 0, second = 0;
  if (j.is_array() && j.size() == 2) {
    for (const auto& r : j) {
      std::set<std::string> keys;
      for (const auto& [k, _] : r.items()) keys.insert(k);
      v.require(keys == std::set<std::string>{"req_id", "document_identified", "document_suggested", "image"},
                "getAll item keys");
    }
    first = j[0].at("req_id").get<std::int64_t>();
    second = j[1].at("req_id").get<std::int64_t>();
  }
  v.require(post(kRouteApprove, json{{"req_id", first}}.dump(), 200, "approve") == success, "approve envelope");
  v.require(post(kRouteReject, json{{"req_id", second}}.dump(), 200, "reject") == success, "reject envelope");
  j = post(kRouteGetAll, "{}", 200, "getAll after triage");
  v.require(j.is_array() && j.empty(), "requests left after triage");

  for (auto route : {kRouteIdentify, kRouteExtract, kRoutePropose, kRouteApprove, kRouteReject}) {
    for (const char* body : {"not json", "[]"}) {
      const auto e = post(route, body, 400, std::string(route) + " non-JSON");
      v.require(e == invalid, std::string(route) + " error envelope " + e.dump());
    }
  }

  server.stop();
  listener.join();
  if (v.ok) v.detail = "6/6 endpoints conform";
  return v;
}

struct Criterion {
  const char* name;
  double limit_s;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  spdlog::set_level(spdlog::level::warn);
  const std::vector<Criterion> criteria = {
      {"serial-goldens", 1, serial_goldens},
      {"anchor-geometry", 5, geometry},
      {"oracle-round-trip", 120, oracle_round_trip},
      {"dataset-7000-split", 300, full_dataset},
      {"feedback-lifecycle", 30, feedback_lifecycle},
      {"f1-metrics", 1, metrics_checks},
      {"arl-simulation", 180, arl_loop},
      {"wire-conformance", 30, wire_conformance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      v.ok = false;
      v.detail += " (over time limit " + fixed(c.limit_s, 0) + " s)";
    }
    failures += !v.ok;
    std::printf("%s %zu %s [%.2f s] %s\n", v.ok ? "PASS" : "FAIL", i + 1, c.name, secs, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
