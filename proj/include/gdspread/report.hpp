#ifndef GDSPREAD_REPORT_HPP
#define GDSPREAD_REPORT_HPP

// JSON serialization shared by the CLI and tests. Every floating-point value
// goes through json_number(): 12 significant digits, magnitudes below 1e-11
// written as 0, non-finite values as null.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "gdspread/bounds.hpp"
#include "gdspread/corpus.hpp"
#include "gdspread/graph.hpp"

namespace gdspread {

/// Insertion-ordered, so documents list keys in the documented order.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline double round_significant(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

inline Json json_number(double x) {
  if (!std::isfinite(x))
    return nullptr;
  if (std::abs(x) < 1e-11)
    return 0.0;
  return round_significant(x);
}

inline Json json_numbers(const std::vector<double> &xs) {
  auto arr = Json::array();
  for (double x : xs)
    arr.push_back(json_number(x));
  return arr;
}

inline Json to_json(const BoundReport &r) {
  return {
      {"bound_id", r.bound_id},
      {"direction", to_string(r.direction)},
      {"bound", json_number(r.bound)},
      {"actual", json_number(r.actual)},
      {"holds", r.holds},
      {"gap", json_number(r.gap)},
      {"equality", r.equality},
      {"applicable", r.applicable},
      {"reason", r.reason},
  };
}

inline Json to_json(const Discrepancy &d) {
  return {
      {"id", d.id},
      {"alpha", json_number(d.alpha)},
      {"claimed", json_number(d.claimed)},
      {"numeric", json_number(d.numeric)},
      {"note", d.note},
  };
}

inline Json to_json(const CorpusSummary &s) {
  Json tallies = Json::object();
  for (const auto &[id, t] : s.tallies) {
    tallies[id] = {
        {"applicable", t.applicable},
        {"inapplicable", t.inapplicable},
        {"holds", t.holds},
        {"equalities", t.equalities},
        {"worst_gap", json_number(t.worst_gap)},
        {"worst_graph", t.worst_graph},
        {"worst_alpha", json_number(t.worst_alpha)},
    };
  }
  auto violations = Json::array();
  for (const auto &v : s.violations)
    violations.push_back(
        {{"graph6", v.graph6}, {"bound_id", v.bound_id}, {"alpha", json_number(v.alpha)}, {"gap", json_number(v.gap)}});
  std::map<std::string, std::int64_t> counts;
  auto discrepancies = Json::array();
  for (const auto &d : s.discrepancies) {
    ++counts[d.detail.id];
    auto j = to_json(d.detail);
    j["graph6"] = d.graph6;
    discrepancies.push_back(std::move(j));
  }
  return {
      {"schema_version", kSchemaVersion},
      {"graphs_seen", s.graphs_seen},
      {"skipped_disconnected", s.skipped_disconnected},
      {"tallies", tallies},
      {"violation_count", s.violations.size()},
      {"violations", violations},
      {"discrepancy_counts", counts},
      {"discrepancies", discrepancies},
  };
}

inline Json to_json(const ConjectureResult &r) {
  return {
      {"n", r.n},
      {"alpha", json_number(r.alpha)},
      {"graphs_considered", r.graphs_considered},
      {"graphs_ignored", r.graphs_ignored},
      {"candidate_min_graph", r.candidate_min_graph},
      {"candidate_min_spread", json_number(r.candidate_min_spread)},
      {"conjectured_graph", r.conjectured_graph},
      {"conjectured_graph_spread", json_number(r.conjectured_graph_spread)},
      {"confirmed", r.confirmed},
  };
}

} // namespace gdspread

#endif // GDSPREAD_REPORT_HPP
