// syntax.hpp — abstract syntax for ground epistemic logic programs and for
// epistemic here-and-there formulas.
//
// Program side (four literal kinds):
//   objective literal            l  ::= p | ~p
//   extended objective literal   L  ::= l | not l | not not l
//   subjective literal           g  ::= K l | M l | KHAT l
//   extended subjective literal  G  ::= g | not g
//   rule: l1 or ... or lm :- e1, ..., en.   (head objective-only)
// An empty head reads as bottom (constraint), an empty body as top (fact).
// A rule may be flagged as a world-view construct (":-wv body."): such rules
// never take part in satisfaction, they only rule out computed world-views.
//
// Formula side:
//   phi ::= p | bot | phi & phi | phi '|' phi | phi -> phi | K phi | KHAT phi
// Negation, top and <-> exist only as abbreviations (-x = x -> bot,
// top = bot -> bot, a <-> b = (a -> b) & (b -> a)) and never as node kinds.

#pragma once

#include <memory>
#include <set>
#include <variant>
#include <vector>

#include "elp/core.hpp"

namespace elp {

// ── program syntax ──────────────────────────────────────────────────────────

struct ExtendedObjectiveLiteral {
  ObjectiveLiteral lit;
  int naf_depth = 0;  // 0 = l, 1 = not l, 2 = not not l

  auto operator<=>(const ExtendedObjectiveLiteral&) const = default;
};

enum class Modality { K, M, KHat };

inline const char* to_string(Modality m) {
  switch (m) {
    case Modality::K: return "K";
    case Modality::M: return "M";
    case Modality::KHat: return "KHAT";
  }
  return "?";
}

struct SubjectiveLiteral {
  Modality modality = Modality::K;
  ObjectiveLiteral lit;

  auto operator<=>(const SubjectiveLiteral&) const = default;
};

struct ExtendedSubjectiveLiteral {
  SubjectiveLiteral subj;
  bool negated = false;  // true = not g

  auto operator<=>(const ExtendedSubjectiveLiteral&) const = default;
};

using BodyElement = std::variant<ExtendedObjectiveLiteral, ExtendedSubjectiveLiteral>;

inline bool is_subjective(const BodyElement& e) {
  return std::holds_alternative<ExtendedSubjectiveLiteral>(e);
}

struct Rule {
  std::vector<ObjectiveLiteral> head;  // empty = constraint
  std::vector<BodyElement> body;       // empty = fact
  bool wv_flag = false;                // ":-wv" world-view construct

  bool is_constraint() const { return head.empty(); }
  bool is_fact() const { return body.empty(); }
  bool is_epistemic() const {
    for (const auto& e : body)
      if (is_subjective(e)) return true;
    return false;
  }
  bool is_subjective_constraint() const {
    if (!head.empty()) return false;
    for (const auto& e : body)
      if (!is_subjective(e)) return false;
    return true;
  }

  auto operator<=>(const Rule&) const = default;
};

struct Program {
  std::vector<Rule> rules;

  // Derived, recomputed on demand so it can never go stale.
  std::set<std::string> atoms() const {
    std::set<std::string> out;
    for (const auto& r : rules) {
      for (const auto& l : r.head) out.insert(l.atom);
      for (const auto& e : r.body) {
        if (const auto* o = std::get_if<ExtendedObjectiveLiteral>(&e))
          out.insert(o->lit.atom);
        else
          out.insert(std::get<ExtendedSubjectiveLiteral>(e).subj.lit.atom);
      }
    }
    return out;
  }

  // Distinct objective literals occurring anywhere (the answer-set candidate pool).
  std::set<ObjectiveLiteral> objective_literals() const {
    std::set<ObjectiveLiteral> out;
    for (const auto& r : rules) {
      for (const auto& l : r.head) out.insert(l);
      for (const auto& e : r.body) {
        if (const auto* o = std::get_if<ExtendedObjectiveLiteral>(&e))
          out.insert(o->lit);
        else
          out.insert(std::get<ExtendedSubjectiveLiteral>(e).subj.lit);
      }
    }
    return out;
  }

  bool is_epistemic() const {
    for (const auto& r : rules)
      if (r.is_epistemic()) return true;
    return false;
  }
  bool has_wv_rules() const {
    for (const auto& r : rules)
      if (r.wv_flag) return true;
    return false;
  }
  bool has_modality(Modality m) const {
    for (const auto& r : rules)
      for (const auto& e : r.body)
        if (const auto* s = std::get_if<ExtendedSubjectiveLiteral>(&e))
          if (s->subj.modality == m) return true;
    return false;
  }

  auto operator<=>(const Program&) const = default;
};

// ── EHT formulas ────────────────────────────────────────────────────────────

struct EhtFormula;
using FormulaPtr = std::shared_ptr<const EhtFormula>;

struct EhtFormula {
  enum class Kind { Bottom, Atom, And, Or, Implies, K, KHat };

  Kind kind;
  std::string atom;  // Kind::Atom only
  FormulaPtr lhs;    // And/Or/Implies left, K/KHat child
  FormulaPtr rhs;    // And/Or/Implies right
};

inline FormulaPtr f_bottom() {
  static const FormulaPtr b = std::make_shared<EhtFormula>(EhtFormula{EhtFormula::Kind::Bottom, "", nullptr, nullptr});
  return b;
}
inline FormulaPtr f_atom(std::string name) {
  return std::make_shared<EhtFormula>(EhtFormula{EhtFormula::Kind::Atom, std::move(name), nullptr, nullptr});
}
inline FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<EhtFormula>(EhtFormula{EhtFormula::Kind::And, "", std::move(a), std::move(b)});
}
inline FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<EhtFormula>(EhtFormula{EhtFormula::Kind::Or, "", std::move(a), std::move(b)});
}
inline FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<EhtFormula>(EhtFormula{EhtFormula::Kind::Implies, "", std::move(a), std::move(b)});
}
inline FormulaPtr f_k(FormulaPtr a) {
  return std::make_shared<EhtFormula>(EhtFormula{EhtFormula::Kind::K, "", std::move(a), nullptr});
}
inline FormulaPtr f_khat(FormulaPtr a) {
  return std::make_shared<EhtFormula>(EhtFormula{EhtFormula::Kind::KHat, "", std::move(a), nullptr});
}

// Abbreviations expand immediately; no Neg/Top/Iff node kinds exist.
inline FormulaPtr f_neg(FormulaPtr a) { return f_implies(std::move(a), f_bottom()); }
inline FormulaPtr f_top() { return f_implies(f_bottom(), f_bottom()); }
inline FormulaPtr f_iff(FormulaPtr a, FormulaPtr b) {
  return f_and(f_implies(a, b), f_implies(b, a));
}

inline bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case EhtFormula::Kind::Bottom: return true;
    case EhtFormula::Kind::Atom: return a->atom == b->atom;
    case EhtFormula::Kind::K:
    case EhtFormula::Kind::KHat: return formula_equal(a->lhs, b->lhs);
    default: return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
  }
}

inline void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == EhtFormula::Kind::Atom) out.insert(f->atom);
  collect_atoms(f->lhs, out);
  collect_atoms(f->rhs, out);
}

inline std::set<std::string> formula_atoms(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

inline bool has_modal(const FormulaPtr& f) {
  if (!f) return false;
  if (f->kind == EhtFormula::Kind::K || f->kind == EhtFormula::Kind::KHat) return true;
  return has_modal(f->lhs) || has_modal(f->rhs);
}

}  // namespace elp
