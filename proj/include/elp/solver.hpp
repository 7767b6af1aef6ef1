// solver.hpp — one entry point over the five semantics.  ES16/ES18 run the
// reduct pipeline; ES15/ES20/ES21 run translate + equilibrium, mapping the
// fresh strong-negation atoms back to ~literals on the way out.

#pragma once

#include <string>
#include <vector>

#include "elp/core.hpp"
#include "elp/equilibrium.hpp"
#include "elp/reduct.hpp"
#include "elp/syntax.hpp"

namespace elp {

struct SolveOptions {
  Bounds bounds;
  bool es21_functional_minimality = false;  // experimental ES21 variant
};

struct SolveResult {
  SemanticsId semantics;
  std::set<BeliefView> views;
  std::vector<std::string> notes;
};

namespace detail {

inline BeliefView restore_strong_negation(const BeliefView& view,
                                          const std::map<std::string, std::string>& neg_atom_of) {
  std::map<std::string, std::string> back;  // fresh atom -> original
  for (const auto& [orig, fresh] : neg_atom_of) back[fresh] = orig;
  BeliefView out;
  for (const auto& v : view) {
    std::vector<ObjectiveLiteral> lits;
    for (const auto& l : v) {
      auto it = back.find(l.atom);
      if (it != back.end())
        lits.push_back({it->second, true});
      else
        lits.push_back(l);
    }
    out.insert(Valuation(lits));
  }
  return out;
}

}  // namespace detail

inline SolveResult solve(const Program& prog, SemanticsId semantics,
                         const SolveOptions& opts = {}) {
  SolveResult result;
  result.semantics = semantics;

  if (semantics == SemanticsId::Es16 || semantics == SemanticsId::Es18) {
    auto wv = world_views_reduct(
        prog, semantics == SemanticsId::Es18 ? ReductVariant::Es18 : ReductVariant::Es16,
        opts.bounds);
    result.views = wv.views;
    for (const auto& t : wv.diagnostics) {
      std::string line = "assumed {";
      bool first = true;
      for (const auto& g : t.assumed) {
        if (!first) line += ", ";
        first = false;
        line += g.str();
      }
      line += "}: ";
      if (t.answer_sets.empty()) {
        line += "no answer sets";
      } else {
        line += "answer sets " + view_str(BeliefView(t.answer_sets.begin(), t.answer_sets.end()));
        if (!t.fixed_point) {
          line += ", not a fixed point";
        } else if (!t.s5) {
          line += ", not an S5-model";
        } else {
          line += t.maximal ? ", world view" : ", not knowledge-maximal";
          if (t.maximal && !t.wv_kept) line += ", struck by a world-view construct";
        }
      }
      result.notes.push_back(line);
    }
    return result;
  }

  Translation tr = translate_program(prog);
  std::set<BeliefView> raw;
  switch (semantics) {
    case SemanticsId::Es15: {
      auto full = aeem15_full(tr.formula, opts.bounds);
      raw = full.views;
      for (const auto& [x, y] : full.order_conflicts)
        result.notes.push_back("selection order conflict: " + view_str(x) + " subset of " +
                               view_str(y) + " but above it in the preorder");
      break;
    }
    case SemanticsId::Es20:
      raw = aeem_relational(tr.formula, RelationalMode::KD45, opts.bounds);
      break;
    case SemanticsId::Es21:
      raw = aeem_relational(tr.formula, RelationalMode::SW5, opts.bounds,
                            opts.es21_functional_minimality);
      break;
    default: break;
  }
  for (const auto& v : raw) result.views.insert(detail::restore_strong_negation(v, tr.neg_atom_of));
  return result;
}

}  // namespace elp
