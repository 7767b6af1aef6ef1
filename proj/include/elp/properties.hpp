// properties.hpp — cross-semantics comparison and the checkable principles:
// supra-ASP, supra-S5, and subjective constraint monotonicity (SCM, checked
// per constraint: adding it may only remove world views).

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "elp/asp.hpp"
#include "elp/core.hpp"
#include "elp/solver.hpp"

namespace elp {

struct ComparisonReport {
  Program program;
  std::map<SemanticsId, std::set<BeliefView>> per_semantics;
  std::vector<std::string> notes;  // agreement/divergence summary
};

inline ComparisonReport compare(const Program& prog, const std::vector<SemanticsId>& semantics,
                                const SolveOptions& opts = {}) {
  if (semantics.empty()) throw ArgumentError("compare: no semantics selected");
  ComparisonReport report;
  report.program = prog;
  for (SemanticsId s : semantics) report.per_semantics[s] = solve(prog, s, opts).views;

  bool has16 = report.per_semantics.count(SemanticsId::Es16);
  bool has18 = report.per_semantics.count(SemanticsId::Es18);
  if (has16 && has18) {
    // measured, never assumed equal
    if (report.per_semantics[SemanticsId::Es16] == report.per_semantics[SemanticsId::Es18])
      report.notes.push_back("es16 and es18 agree on this program");
    else
      report.notes.push_back("es16 and es18 diverge on this program");
  }
  for (auto it = report.per_semantics.begin(); it != report.per_semantics.end(); ++it)
    for (auto jt = std::next(it); jt != report.per_semantics.end(); ++jt)
      if (it->second != jt->second) {
        report.notes.push_back(std::string("divergence: ") + to_string(it->first) + " vs " +
                               to_string(jt->first));
      }
  return report;
}

enum class PropertyKind { SupraAsp, SupraS5, Scm };

inline const char* to_string(PropertyKind p) {
  switch (p) {
    case PropertyKind::SupraAsp: return "supra-asp";
    case PropertyKind::SupraS5: return "supra-s5";
    case PropertyKind::Scm: return "scm";
  }
  return "?";
}

struct PropertyVerdict {
  PropertyKind property;
  SemanticsId semantics;
  bool holds = false;
  std::optional<std::string> witness;          // human-readable counterexample
  std::optional<BeliefView> witness_view;
};

// SCM: the constrained program's views must be a subset of the original's.
inline PropertyVerdict check_scm(const Program& prog, const Rule& constraint,
                                 SemanticsId semantics, const SolveOptions& opts = {}) {
  if (!constraint.is_subjective_constraint() && !constraint.wv_flag)
    throw ArgumentError("check_scm: rule is not a subjective constraint");
  PropertyVerdict verdict{PropertyKind::Scm, semantics, true, {}, {}};
  auto base = solve(prog, semantics, opts).views;
  Program extended = prog;
  extended.rules.push_back(constraint);
  auto constrained = solve(extended, semantics, opts).views;
  for (const auto& v : constrained)
    if (!base.count(v)) {
      verdict.holds = false;
      verdict.witness = "new view " + view_str(v) + " appears only after adding " +
                        render(constraint);
      verdict.witness_view = v;
      break;
    }
  return verdict;
}

// Supra-ASP: on a non-epistemic program the unique world view is the set of
// all answer sets when nonempty, and there is none otherwise.
inline PropertyVerdict check_supra_asp(const Program& prog, SemanticsId semantics,
                                       const SolveOptions& opts = {}) {
  if (prog.is_epistemic() || prog.has_wv_rules())
    throw ArgumentError("check_supra_asp: program is epistemic");
  PropertyVerdict verdict{PropertyKind::SupraAsp, semantics, true, {}, {}};
  auto as = answer_sets(prog, opts.bounds);
  std::set<BeliefView> expected;
  if (!as.empty()) expected.insert(BeliefView(as.begin(), as.end()));
  auto views = solve(prog, semantics, opts).views;
  if (views != expected) {
    verdict.holds = false;
    verdict.witness = "views " + views_str(views) + " differ from answer sets " +
                      views_str(expected);
    if (!views.empty()) verdict.witness_view = *views.begin();
  }
  return verdict;
}

// Supra-S5: every returned view is a classical S5-model of the program.
inline PropertyVerdict check_supra_s5(const Program& prog, SemanticsId semantics,
                                      const SolveOptions& opts = {}) {
  PropertyVerdict verdict{PropertyKind::SupraS5, semantics, true, {}, {}};
  for (const auto& v : solve(prog, semantics, opts).views)
    if (!classical_s5_check(v, prog)) {
      verdict.holds = false;
      verdict.witness = "view " + view_str(v) + " is not an S5-model of the program";
      verdict.witness_view = v;
      break;
    }
  return verdict;
}

}  // namespace elp
