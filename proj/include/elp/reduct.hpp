// reduct.hpp — world views for the reduct-based semantics.
//
// Pipeline: canonicalize the program's subjective literals into epistemic
// negations Ep = {not K l, M l}; enumerate every subset Phi of Ep as "the
// satisfied ones"; build the modal reduct for Phi (the two reduct columns
// below); take its answer sets A; keep A when it is nonempty, reproduces Phi
// (the fixed point A = AS(reduct w.r.t. A)), and is a classical S5-model.
// Among kept candidates only the subset-maximal satisfied sets survive —
// incomparable maxima all survive.  World-view constructs stay out of the
// whole pipeline and strike computed views at the end (ES18 only).
//
// Reduct columns per subjective occurrence (sat = view satisfies it):
//                 original (ES18)          implicit (ES16)
//   K l      sat: l        unsat: drop     sat: not not l   unsat: drop
//   M l      sat: (true)   unsat: not not l                 (same)
//   not K l  sat: (true)   unsat: not l                     (same)
//   not M l  sat: not l    unsat: drop                      (same)

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "elp/asp.hpp"
#include "elp/core.hpp"
#include "elp/syntax.hpp"

namespace elp {

enum class ReductVariant { Es18, Es16 };

inline SemanticsId semantics_of(ReductVariant v) {
  return v == ReductVariant::Es18 ? SemanticsId::Es18 : SemanticsId::Es16;
}

// ── epistemic negations ─────────────────────────────────────────────────────

enum class EpForm { NotK, M };

struct EpistemicNegation {
  EpForm form;
  ObjectiveLiteral lit;

  auto operator<=>(const EpistemicNegation&) const = default;

  std::string str() const {
    return (form == EpForm::NotK ? "not K " : "M ") + lit.str();
  }
};

struct EpAssignment {
  std::set<EpistemicNegation> universe;
  std::set<EpistemicNegation> satisfied;  // subset of universe
};

namespace detail {

inline EpistemicNegation canonical_ep(const ExtendedSubjectiveLiteral& g) {
  // K l and not K l map to "not K l"; M l and not M l map to "M l"
  return {g.subj.modality == Modality::K ? EpForm::NotK : EpForm::M, g.subj.lit};
}

}  // namespace detail

// The program's epistemic negations (world-view constructs excluded).
inline std::set<EpistemicNegation> ep_set(const Program& prog) {
  std::set<EpistemicNegation> out;
  for (const auto& r : prog.rules) {
    if (r.wv_flag) continue;
    for (const auto& e : r.body) {
      if (const auto* g = std::get_if<ExtendedSubjectiveLiteral>(&e)) {
        if (g->subj.modality == Modality::KHat)
          throw UnsupportedError(
              "KHAT is not part of the reduct semantics language (use es15/es20/es21)");
        out.insert(detail::canonical_ep(*g));
      }
    }
  }
  return out;
}

inline EpAssignment satisfied_ep(const Program& prog, const BeliefView& view) {
  EpAssignment out;
  out.universe = ep_set(prog);
  for (const auto& g : out.universe) {
    ExtendedSubjectiveLiteral as_literal;
    as_literal.negated = g.form == EpForm::NotK;  // "not K l"; "M l" is positive
    as_literal.subj.modality = g.form == EpForm::NotK ? Modality::K : Modality::M;
    as_literal.subj.lit = g.lit;
    if (detail::view_satisfies(view, as_literal)) out.satisfied.insert(g);
  }
  return out;
}

// ── modal reduct ────────────────────────────────────────────────────────────

// Reduct driven by an assumed satisfied set Phi; Table cells as in the header
// comment.  Returns a non-epistemic program (world-view constructs dropped).
inline Program modal_reduct_for(const Program& prog, const std::set<EpistemicNegation>& phi,
                                ReductVariant variant) {
  Program out;
  for (const auto& r : prog.rules) {
    if (r.wv_flag) continue;
    Rule nr;
    nr.head = r.head;
    bool keep = true;
    for (const auto& e : r.body) {
      const auto* g = std::get_if<ExtendedSubjectiveLiteral>(&e);
      if (!g) {
        nr.body.push_back(e);
        continue;
      }
      if (g->subj.modality == Modality::KHat)
        throw UnsupportedError(
            "KHAT is not part of the reduct semantics language (use es15/es20/es21)");
      const ObjectiveLiteral& l = g->subj.lit;
      bool k_form = g->subj.modality == Modality::K;
      bool sat;  // does a view with satisfied set phi satisfy this occurrence?
      if (k_form)
        sat = g->negated ? phi.count({EpForm::NotK, l}) > 0 : phi.count({EpForm::NotK, l}) == 0;
      else
        sat = g->negated ? phi.count({EpForm::M, l}) == 0 : phi.count({EpForm::M, l}) > 0;

      if (k_form && !g->negated) {  // K l
        if (sat)
          nr.body.push_back(ExtendedObjectiveLiteral{l, variant == ReductVariant::Es18 ? 0 : 2});
        else
          keep = false;
      } else if (!k_form && !g->negated) {  // M l
        if (!sat) nr.body.push_back(ExtendedObjectiveLiteral{l, 2});
      } else if (k_form) {  // not K l
        if (!sat) nr.body.push_back(ExtendedObjectiveLiteral{l, 1});
      } else {  // not M l
        if (sat)
          nr.body.push_back(ExtendedObjectiveLiteral{l, 1});
        else
          keep = false;
      }
      if (!keep) break;
    }
    if (keep) out.rules.push_back(std::move(nr));
  }
  return out;
}

inline Program modal_reduct(const Program& prog, const BeliefView& view, ReductVariant variant) {
  return modal_reduct_for(prog, satisfied_ep(prog, view).satisfied, variant);
}

// ── world-view constructs ───────────────────────────────────────────────────

// A view is struck iff it satisfies the body of some wv rule.
inline std::set<BeliefView> apply_wv_constraints(const std::set<BeliefView>& views,
                                                 const Program& prog) {
  std::set<BeliefView> out;
  for (const auto& view : views) {
    bool struck = false;
    for (const auto& r : prog.rules) {
      if (!r.wv_flag) continue;
      bool body_holds = true;
      for (const auto& e : r.body) {
        const auto* g = std::get_if<ExtendedSubjectiveLiteral>(&e);
        if (!g) throw ArgumentError("world-view construct with a non-subjective body element");
        if (!detail::view_satisfies(view, *g)) {
          body_holds = false;
          break;
        }
      }
      if (body_holds) {
        struck = true;
        break;
      }
    }
    if (!struck) out.insert(view);
  }
  return out;
}

// ── world-view computation ──────────────────────────────────────────────────

struct CandidateTrace {
  std::set<EpistemicNegation> assumed;  // the guessed Phi
  Program reduct;
  std::set<Valuation> answer_sets;
  bool fixed_point = false;
  bool s5 = false;
  bool maximal = false;
  bool wv_kept = true;
};

struct WorldViewResult {
  SemanticsId semantics;
  std::set<BeliefView> views;
  std::vector<CandidateTrace> diagnostics;
};

inline WorldViewResult world_views_reduct(const Program& prog, ReductVariant variant,
                                          const Bounds& bounds = {}) {
  if (variant == ReductVariant::Es16 && prog.has_wv_rules())
    throw UnsupportedError("world-view constructs are an es18 feature (unsupported under es16)");

  WorldViewResult result;
  result.semantics = semantics_of(variant);

  std::vector<EpistemicNegation> ep;
  for (const auto& g : ep_set(prog)) ep.push_back(g);
  if (static_cast<int>(ep.size()) > bounds.max_ep)
    throw BoundError("epistemic negation bound exceeded: program has " +
                     std::to_string(ep.size()) + ", bound is " + std::to_string(bounds.max_ep));

  struct Kept {
    std::set<EpistemicNegation> phi;
    BeliefView view;
    std::size_t trace;
  };
  std::vector<Kept> kept;

  for (std::uint32_t m = 0; m < (1u << ep.size()); ++m) {
    CandidateTrace trace;
    for (std::size_t i = 0; i < ep.size(); ++i)
      if (m & (1u << i)) trace.assumed.insert(ep[i]);
    trace.reduct = modal_reduct_for(prog, trace.assumed, variant);
    trace.answer_sets = answer_sets(trace.reduct, bounds);
    if (!trace.answer_sets.empty()) {
      BeliefView view(trace.answer_sets.begin(), trace.answer_sets.end());
      trace.fixed_point = satisfied_ep(prog, view).satisfied == trace.assumed;
      trace.s5 = trace.fixed_point && classical_s5_check(view, prog);
      if (trace.fixed_point && trace.s5)
        kept.push_back({trace.assumed, std::move(view), result.diagnostics.size()});
    }
    result.diagnostics.push_back(std::move(trace));
  }

  // knowledge maximisation: drop candidates whose satisfied set is strictly
  // contained in another kept candidate's; incomparable maxima all survive
  std::set<BeliefView> views;
  for (const auto& c : kept) {
    bool maximal = true;
    for (const auto& other : kept)
      if (c.phi != other.phi &&
          std::includes(other.phi.begin(), other.phi.end(), c.phi.begin(), c.phi.end())) {
        maximal = false;
        break;
      }
    result.diagnostics[c.trace].maximal = maximal;
    if (maximal) views.insert(c.view);
  }

  if (variant == ReductVariant::Es18 && prog.has_wv_rules()) {
    std::set<BeliefView> filtered = apply_wv_constraints(views, prog);
    for (const auto& c : kept)
      if (result.diagnostics[c.trace].maximal && !filtered.count(c.view))
        result.diagnostics[c.trace].wv_kept = false;
    views = std::move(filtered);
  }

  result.views = std::move(views);
  return result;
}

}  // namespace elp
