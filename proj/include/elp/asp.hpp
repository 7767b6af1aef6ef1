// asp.hpp — classical (non-epistemic) answer set computation, plus classical
// S5 satisfaction of full epistemic programs.  Everything is exhaustive: the
// candidate pool is every consistent valuation over the program's literals,
// and disjunctive minimality is a full subset check.  Correctness over speed;
// the atom bound keeps it desk-scale.

#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "elp/core.hpp"
#include "elp/syntax.hpp"

namespace elp {

// Extended objective literal satisfaction: depth 0 is membership, each 'not'
// negates once (so depth 2 is classical double negation).
inline bool satisfies_objective(const Valuation& v, const ExtendedObjectiveLiteral& L) {
  switch (L.naf_depth) {
    case 0: return v.contains(L.lit);
    case 1: return !v.contains(L.lit);
    case 2: return v.contains(L.lit);
    default: throw ArgumentError("naf_depth out of range");
  }
}

namespace detail {

inline void require_non_epistemic(const Program& prog, const char* who) {
  for (const auto& r : prog.rules) {
    if (r.wv_flag)
      throw ArgumentError(std::string(who) + ": program contains a world-view construct");
    if (r.is_epistemic())
      throw ArgumentError(std::string(who) + ": program contains a subjective literal");
  }
}

inline bool classically_satisfies(const Valuation& v, const Rule& r) {
  for (const auto& e : r.body) {
    const auto* o = std::get_if<ExtendedObjectiveLiteral>(&e);
    if (!o) throw ArgumentError("classical satisfaction: subjective literal in body");
    if (!satisfies_objective(v, *o)) return true;  // body fails, rule holds
  }
  for (const auto& l : r.head)
    if (v.contains(l)) return true;
  return false;
}

inline bool classically_satisfies(const Valuation& v, const Program& prog) {
  for (const auto& r : prog.rules)
    if (!classically_satisfies(v, r)) return false;
  return true;
}

// Every consistent valuation over the program's occurring literals.
inline std::vector<Valuation> candidate_valuations(const Program& prog, const Bounds& bounds) {
  auto atoms = prog.atoms();
  if (static_cast<int>(atoms.size()) > bounds.max_atoms)
    throw BoundError("atom bound exceeded: program has " + std::to_string(atoms.size()) +
                     " atoms, bound is " + std::to_string(bounds.max_atoms));
  auto lits = prog.objective_literals();
  // per-atom options: absent, and each occurring polarity
  std::vector<std::vector<ObjectiveLiteral>> options;
  for (const auto& a : atoms) {
    std::vector<ObjectiveLiteral> opt;
    if (lits.count({a, false})) opt.push_back({a, false});
    if (lits.count({a, true})) opt.push_back({a, true});
    options.push_back(std::move(opt));
  }
  std::vector<Valuation> out;
  std::vector<ObjectiveLiteral> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == options.size()) {
      out.emplace_back(current);
      return;
    }
    rec(i + 1);  // atom absent
    for (const auto& l : options[i]) {
      current.push_back(l);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

// Gelfond-Lifschitz reduct w.r.t. a candidate valuation: 'not l' is deleted
// when l is absent from the candidate and kills the rule otherwise; 'not not
// l' is deleted when l is present and kills the rule otherwise.
inline Program gl_reduct(const Program& prog, const Valuation& candidate) {
  detail::require_non_epistemic(prog, "gl_reduct");
  Program out;
  for (const auto& r : prog.rules) {
    Rule nr;
    nr.head = r.head;
    bool keep = true;
    for (const auto& e : r.body) {
      const auto& o = std::get<ExtendedObjectiveLiteral>(e);
      if (o.naf_depth == 0) {
        nr.body.push_back(o);
      } else if (o.naf_depth == 1) {
        if (candidate.contains(o.lit)) {
          keep = false;
          break;
        }
      } else {  // not not l
        if (!candidate.contains(o.lit)) {
          keep = false;
          break;
        }
      }
    }
    if (keep) out.rules.push_back(std::move(nr));
  }
  return out;
}

// Exhaustive answer sets of a non-epistemic program: a candidate is kept iff
// it classically satisfies the program and is a subset-minimal classical
// model of its own reduct.
inline std::set<Valuation> answer_sets(const Program& prog, const Bounds& bounds = {}) {
  detail::require_non_epistemic(prog, "answer_sets");
  std::set<Valuation> out;
  for (const auto& v : detail::candidate_valuations(prog, bounds)) {
    if (!detail::classically_satisfies(v, prog)) continue;
    Program reduct = gl_reduct(prog, v);
    if (!detail::classically_satisfies(v, reduct)) continue;
    // minimality: no proper subset of v models the reduct
    std::vector<ObjectiveLiteral> lits(v.begin(), v.end());
    std::size_t n = lits.size();
    bool minimal = true;
    for (std::uint32_t m = 0; minimal && m + 1 < (1u << n); ++m) {
      std::vector<ObjectiveLiteral> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (m & (1u << i)) sub.push_back(lits[i]);
      if (detail::classically_satisfies(Valuation(sub), reduct)) minimal = false;
    }
    if (minimal) out.insert(v);
  }
  return out;
}

// ── epistemic satisfaction over a belief view ───────────────────────────────

namespace detail {

inline bool view_satisfies_subjective(const BeliefView& view, const SubjectiveLiteral& g) {
  switch (g.modality) {
    case Modality::K:
      for (const auto& a : view)
        if (!a.contains(g.lit)) return false;
      return true;
    case Modality::M:
    case Modality::KHat:  // on a total S5 model, belief coincides with M
      for (const auto& a : view)
        if (a.contains(g.lit)) return true;
      return false;
  }
  return false;
}

inline bool view_satisfies(const BeliefView& view, const ExtendedSubjectiveLiteral& e) {
  bool b = view_satisfies_subjective(view, e.subj);
  return e.negated ? !b : b;
}

inline bool es_satisfies(const BeliefView& view, const Valuation& at, const Rule& r) {
  for (const auto& e : r.body) {
    bool ok = is_subjective(e) ? view_satisfies(view, std::get<ExtendedSubjectiveLiteral>(e))
                               : satisfies_objective(at, std::get<ExtendedObjectiveLiteral>(e));
    if (!ok) return true;
  }
  for (const auto& l : r.head)
    if (at.contains(l)) return true;
  return false;
}

}  // namespace detail

// True iff every non-wv rule is satisfied at every valuation of the view
// (subjective literals evaluated against the whole view).  World-view
// constructs are not satisfaction-bearing; they filter computed views.
inline bool classical_s5_check(const BeliefView& view, const Program& prog) {
  if (view.empty()) throw ArgumentError("classical_s5_check: empty belief view");
  for (const auto& r : prog.rules) {
    if (r.wv_flag) continue;
    for (const auto& a : view)
      if (!detail::es_satisfies(view, a, r)) return false;
  }
  return true;
}

}  // namespace elp
