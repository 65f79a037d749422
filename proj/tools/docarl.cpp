#include <csignal>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "docarl/docarl.hpp"

namespace fs = std::filesystem;
using namespace docarl;

namespace {

#ifndef DOCARL_TEMPLATES_DIR
#define DOCARL_TEMPLATES_DIR "templates"
#endif

fs::path default_templates() {
  if (const char* v = std::getenv("TEMPLATES_DIR")) return v;
  if (fs::exists("templates")) return "templates";
  return DOCARL_TEMPLATES_DIR;
}

std::vector<std::string> split_words(const std::string& cmd) {
  std::istringstream in(cmd);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Backends {
  std::shared_ptr<const DetectorBackend> detector;
  std::shared_ptr<const OcrBackend> ocr;
};

Backends make_backends(const std::string& kind, const fs::path& dataset, const std::string& detector_cmd,
                       const std::string& ocr_cmd) {
  if (kind == "oracle") {
    const auto jsonl = dataset / "data" / "manifests.jsonl";
    auto index = std::make_shared<ManifestIndex>();
    if (fs::exists(jsonl)) {
      *index = ManifestIndex::from_jsonl(jsonl);
    } else {
      spdlog::warn("no manifest index at {}; every image will be unresolvable", jsonl.string());
    }
    spdlog::info("oracle backends loaded {} manifests", index->size());
    return {std::make_shared<OracleDetector>(index), std::make_shared<OracleOcr>(index)};
  }
  if (kind == "subprocess") {
    if (detector_cmd.empty() || ocr_cmd.empty()) {
      throw Error(Errc::InvalidArgument, "subprocess backend needs --detector-cmd and --ocr-cmd");
    }
    return {std::make_shared<SubprocessDetector>(split_words(detector_cmd)),
            std::make_shared<SubprocessOcr>(split_words(ocr_cmd))};
  }
  throw Error(Errc::InvalidArgument, "unknown backend '" + kind + "'");
}

void print_counts(const DatasetCounts& c) {
  std::printf("train %zu\nvalidation %zu\ntest %zu\ntotal %zu\n", c.train, c.validation, c.test, c.total());
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGPIPE, SIG_IGN);
  CLI::App app{"Synthetic ID documents, template extraction and the feedback loop"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");

  fs::path templates = default_templates();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate and render base documents for one class or all");
  std::string gen_class = "all";
  std::uint64_t gen_count = 10, gen_seed = 42;
  fs::path gen_out;
  gen->add_option("--class", gen_class, "Class id or 'all'");
  gen->add_option("--count", gen_count, "Documents per class")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--templates", templates, "Template directory");

  // augment
  auto* aug = app.add_subcommand("augment", "Fan a generated batch out into the dataset tree");
  fs::path aug_in, aug_out;
  bool aug_jpeg = false;
  aug->add_option("--in", aug_in, "Directory written by gen")->required()->check(CLI::ExistingDirectory);
  aug->add_option("--out", aug_out, "Dataset root")->required();
  aug->add_flag("--jpeg", aug_jpeg, "Store images as JPEG");

  // build
  auto* build = app.add_subcommand("build", "Generate, fan out and split in one pass");
  std::uint64_t build_count = 10, build_seed = 42;
  fs::path build_out;
  bool build_jpeg = false;
  build->add_option("--count", build_count, "Documents per class")->check(CLI::PositiveNumber);
  build->add_option("--seed", build_seed, "Generator seed");
  build->add_option("--out", build_out, "Dataset root")->required();
  build->add_flag("--jpeg", build_jpeg, "Store images as JPEG");
  build->add_option("--templates", templates, "Template directory");

  // split
  auto* split = app.add_subcommand("split", "Show how N bases per class are divided");
  std::uint64_t split_total = 0;
  split->add_option("--total", split_total, "Bases per class")->required()->check(CLI::PositiveNumber);

  // eval
  auto* ev = app.add_subcommand("eval", "Identify, extract and validate every image of a split");
  fs::path ev_dataset, ev_out;
  std::string ev_split = "test", ev_backend = "oracle", ev_det_cmd, ev_ocr_cmd;
  ev->add_option("--dataset", ev_dataset, "Dataset root")->required()->check(CLI::ExistingDirectory);
  ev->add_option("--split", ev_split, "train, validation or test");
  ev->add_option("--backend", ev_backend, "oracle or subprocess");
  ev->add_option("--detector-cmd", ev_det_cmd, "Detector command for the subprocess backend");
  ev->add_option("--ocr-cmd", ev_ocr_cmd, "OCR command for the subprocess backend");
  ev->add_option("--out", ev_out, "Write the report as JSON");
  ev->add_option("--templates", templates, "Template directory");

  // report
  auto* rep = app.add_subcommand("report", "Compare two evaluation reports");
  fs::path rep_without, rep_with, rep_out;
  rep->add_option("--without", rep_without, "Baseline report JSON")->required()->check(CLI::ExistingFile);
  rep->add_option("--with", rep_with, "Report after feedback")->required()->check(CLI::ExistingFile);
  rep->add_option("--out", rep_out, "Write the comparison as JSON");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run the feedback loop against a coverage detector");
  SimulationConfig sim_cfg;
  sim->add_option("--rounds", sim_cfg.rounds, "Maximum evaluation rounds")->check(CLI::PositiveNumber);
  sim->add_option("--seed", sim_cfg.seed, "Seed for the detector's guesses");
  sim->add_option("--bases", sim_cfg.bases_per_class, "Bases per class in the grid")->check(CLI::PositiveNumber);

  // assemble
  auto* asmb = app.add_subcommand("assemble", "Merge approved images into a new training set");
  fs::path asm_base, asm_rejected, asm_out;
  asmb->add_option("--base", asm_base, "Base dataset root")->required()->check(CLI::ExistingDirectory);
  asmb->add_option("--rejected", asm_rejected, "Rejected pipeline root")->required()->check(CLI::ExistingDirectory);
  asmb->add_option("--out", asm_out, "Output dataset root")->required();

  // serve
  auto* srv = app.add_subcommand("serve", "Run the HTTP service");
  ServiceConfig svc = ServiceConfig::from_env();
  std::string srv_backend = "oracle", srv_det_cmd, srv_ocr_cmd;
  srv->add_option("--host", svc.host, "Bind address");
  srv->add_option("--port", svc.port, "Port")->check(CLI::Range(1, 65535));
  srv->add_option("--backend", srv_backend, "oracle or subprocess");
  srv->add_option("--detector-cmd", srv_det_cmd, "Detector command for the subprocess backend");
  srv->add_option("--ocr-cmd", srv_ocr_cmd, "OCR command for the subprocess backend");

  CLI11_PARSE(app, argc, argv);
  if (verbose) spdlog::set_level(spdlog::level::debug);

  try {
    if (*gen) {
      const auto registry = TemplateRegistry::load(templates);
      const auto classes = gen_class == "all" ? all_class_ids() : std::vector<std::string>{gen_class};
      for (const auto& c : classes) {
        const auto docs = generate_batch(registry, c, gen_count, gen_seed, gen_out);
        std::printf("%s %zu\n", c.c_str(), docs.size());
      }
    } else if (*aug) {
      print_counts(augment_directory(aug_in, aug_out, aug_jpeg ? ImageFormat::Jpeg : ImageFormat::Png));
    } else if (*build) {
      const auto registry = TemplateRegistry::load(templates);
      print_counts(build_dataset(registry, all_class_ids(), build_count, build_seed, build_out,
                                 build_jpeg ? ImageFormat::Jpeg : ImageFormat::Png));
    } else if (*split) {
      DatasetCounts bases;
      for (std::uint64_t i = 1; i <= split_total; ++i) bases.add(assign_split(i, split_total));
      std::printf("bases per class: train %zu validation %zu test %zu\n", bases.train, bases.validation, bases.test);
      const std::size_t per = kVariantsPerBase * std::size(kDocumentClasses);
      std::printf("images: train %zu validation %zu test %zu\n", bases.train * per, bases.validation * per,
                  bases.test * per);
    } else if (*ev) {
      const auto registry = TemplateRegistry::load(templates);
      const auto be = make_backends(ev_backend, ev_dataset, ev_det_cmd, ev_ocr_cmd);
      const auto r = evaluate(ev_dataset, parse_split(ev_split), *be.detector, *be.ocr, registry);
      const auto j = report_to_json(r);
      std::cout << j.dump(2) << "\n";
      if (!ev_out.empty()) write_text_file(ev_out, j.dump(2) + "\n");
    } else if (*rep) {
      const auto a = report_from_json(nlohmann::json::parse(read_text_file(rep_without)));
      const auto b = report_from_json(nlohmann::json::parse(read_text_file(rep_with)));
      const auto t = compare_reports(a, b);
      std::cout << render_text(t);
      if (!rep_out.empty()) write_text_file(rep_out, comparison_to_json(t).dump(2) + "\n");
    } else if (*sim) {
      const auto res = simulate_arl_loop(sim_cfg);
      std::printf("expected round-0 accuracy %.4f\n", res.expected_round0);
      for (std::size_t i = 0; i < res.trajectory.size(); ++i) {
        std::printf("round %zu accuracy %.4f\n", i, res.trajectory[i]);
      }
      std::cout << "\n" << render_text(compare_reports(res.reports.front(), res.reports.back()));
    } else if (*asmb) {
      const auto s = assemble_dataset(asm_base, asm_rejected, asm_out);
      std::printf("base %zu\nrejected %zu\nvariants %zu\n", s.base_count, s.rejected_count, s.variant_count);
    } else if (*srv) {
      if (!fs::exists(svc.templates_dir)) svc.templates_dir = templates;
      auto registry = std::make_shared<const TemplateRegistry>(TemplateRegistry::load(svc.templates_dir));
      const auto be = make_backends(srv_backend, svc.dataset_dir, srv_det_cmd, srv_ocr_cmd);
      auto store = std::make_shared<FeedbackStore>(svc.requests_dir, svc.rejected_dir);
      DocumentService service(registry, be.detector, be.ocr, store);
      httplib::Server server;
      service.mount(server);
      spdlog::info("listening on {}:{}", svc.host, svc.port);
      if (!server.listen(svc.host, svc.port)) {
        spdlog::error("cannot listen on {}:{}", svc.host, svc.port);
        return 1;
      }
    }
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
