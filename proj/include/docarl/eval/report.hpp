#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "docarl/eval/evaluate.hpp"
#include "docarl/eval/metrics.hpp"

namespace docarl {

struct ComparisonRow {
  std::string name;
  double without = 0, with = 0;
  double delta() const { return with - without; }
  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;                                          // Accuracy, Precision, Recall, F1 score
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> class_tp;  // without, with
  std::vector<std::string> inconsistencies;
  friend bool operator==(const ComparisonTable&, const ComparisonTable&) = default;
};

inline constexpr double kF1Tolerance = 0.005;

/// Notes a reported F1 that does not follow from the reported P and R.
inline std::optional<std::string> f1_inconsistency(std::string_view column, double p, double r, double f1) {
  const double expected = metrics::f1(p, r);
  if (std::abs(expected - f1) <= kF1Tolerance) return std::nullopt;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.*s: F1 %.4f differs from 2PR/(P+R) = %.4f", static_cast<int>(column.size()),
                column.data(), f1, expected);
  return std::string(buf);
}

inline ComparisonTable compare_reports(const MetricsReport& without, const MetricsReport& with) {
  ComparisonTable t;
  t.rows = {{"Accuracy", without.accuracy, with.accuracy},
            {"Precision", without.precision, with.precision},
            {"Recall", without.recall, with.recall},
            {"F1 score", without.f1, with.f1}};
  for (const auto& [cls, m] : without.per_class) t.class_tp[cls].first = m.counts.tp;
  for (const auto& [cls, m] : with.per_class) t.class_tp[cls].second = m.counts.tp;
  if (auto s = f1_inconsistency("without", without.precision, without.recall, without.f1)) t.inconsistencies.push_back(*s);
  if (auto s = f1_inconsistency("with", with.precision, with.recall, with.f1)) t.inconsistencies.push_back(*s);
  return t;
}

inline nlohmann::json comparison_to_json(const ComparisonTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"metric", r.name}, {"without", r.without}, {"with", r.with}, {"delta", r.delta()}});
  }
  nlohmann::json tp = nlohmann::json::object();
  for (const auto& [cls, v] : t.class_tp) tp[cls] = {{"without", v.first}, {"with", v.second}};
  return {{"rows", rows}, {"class_tp", tp}, {"inconsistencies", t.inconsistencies}};
}

inline ComparisonTable comparison_from_json(const nlohmann::json& j) {
  try {
    ComparisonTable t;
    for (const auto& r : j.at("rows")) {
      t.rows.push_back({r.at("metric").get<std::string>(), r.at("without").get<double>(), r.at("with").get<double>()});
    }
    for (const auto& [cls, v] : j.at("class_tp").items()) {
      t.class_tp[cls] = {v.at("without").get<std::uint64_t>(), v.at("with").get<std::uint64_t>()};
    }
    t.inconsistencies = j.at("inconsistencies").get<std::vector<std::string>>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SchemaError, std::string("comparison: ") + e.what());
  }
}

/// Fixed-width text rendering of the comparison.
inline std::string render_text(const ComparisonTable& t) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-12s %12s %12s %10s\n", "Metric", "Without ARL", "With ARL", "Delta");
  out += buf;
  for (const auto& r : t.rows) {
    std::snprintf(buf, sizeof buf, "%-12s %12.4f %12.4f %+10.4f\n", r.name.c_str(), r.without, r.with, r.delta());
    out += buf;
  }
  out += "\nTrue positives per class\n";
  for (const auto& [cls, v] : t.class_tp) {
    std::snprintf(buf, sizeof buf, "%-16s %10llu %10llu\n", cls.c_str(), static_cast<unsigned long long>(v.first),
                  static_cast<unsigned long long>(v.second));
    out += buf;
  }
  for (const auto& s : t.inconsistencies) out += "warning: " + s + "\n";
  return out;
}

}  // namespace docarl
