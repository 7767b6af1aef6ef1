// json_io.hpp — stable JSON serialization for solver results.
// Views serialize as sorted arrays of sorted literal strings; identical
// inputs produce byte-identical documents.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "elp/core.hpp"
#include "elp/printer.hpp"
#include "elp/properties.hpp"
#include "elp/solver.hpp"

namespace elp {

using Json = nlohmann::ordered_json;

inline Json to_json(const Valuation& v) {
  Json arr = Json::array();
  for (const auto& l : v) arr.push_back(l.str());
  return arr;
}

inline Json to_json(const BeliefView& view) {
  Json arr = Json::array();
  for (const auto& v : view) arr.push_back(to_json(v));
  return arr;
}

inline Json views_to_json(const std::set<BeliefView>& views) {
  Json arr = Json::array();
  for (const auto& v : views) arr.push_back(to_json(v));
  return arr;
}

inline ObjectiveLiteral literal_from_string(const std::string& s) {
  if (!s.empty() && s[0] == '~') return {s.substr(1), true};
  return {s, false};
}

inline std::set<BeliefView> views_from_json(const Json& j) {
  std::set<BeliefView> out;
  for (const auto& vj : j) {
    BeliefView view;
    for (const auto& valj : vj) {
      std::vector<ObjectiveLiteral> lits;
      for (const auto& lj : valj) lits.push_back(literal_from_string(lj.get<std::string>()));
      view.insert(Valuation(lits));
    }
    out.insert(view);
  }
  return out;
}

// {"program": ..., "results": [{"semantics": ..., "views": [[[...]]], "diagnostics": [...]}]}
inline Json results_to_json(const Program& prog, const std::vector<SolveResult>& results) {
  Json doc;
  doc["program"] = render(prog);
  Json arr = Json::array();
  for (const auto& r : results) {
    Json entry;
    entry["semantics"] = to_string(r.semantics);
    entry["views"] = views_to_json(r.views);
    entry["diagnostics"] = r.notes;
    arr.push_back(entry);
  }
  doc["results"] = arr;
  return doc;
}

inline Json report_to_json(const ComparisonReport& report) {
  std::vector<SolveResult> results;
  for (const auto& [sem, views] : report.per_semantics) results.push_back({sem, views, {}});
  Json doc = results_to_json(report.program, results);
  doc["notes"] = report.notes;
  return doc;
}

inline Json verdict_to_json(const PropertyVerdict& v) {
  Json j;
  j["property"] = to_string(v.property);
  j["semantics"] = to_string(v.semantics);
  j["holds"] = v.holds;
  if (v.witness) j["witness"] = *v.witness;
  if (v.witness_view) j["witness_view"] = to_json(*v.witness_view);
  return j;
}

}  // namespace elp
