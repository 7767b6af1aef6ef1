// printer.hpp — canonical text rendering for programs and EHT formulas.
// render(parse(x)) is structurally the identity; the formula printer re-sugars
// the abbreviations (-, top, <->) that the parser expands.

#pragma once

#include <string>

#include "elp/syntax.hpp"

namespace elp {

inline std::string render(const ExtendedObjectiveLiteral& e) {
  std::string out;
  for (int i = 0; i < e.naf_depth; ++i) out += "not ";
  return out + e.lit.str();
}

inline std::string render(const ExtendedSubjectiveLiteral& e) {
  std::string out = e.negated ? "not " : "";
  out += to_string(e.subj.modality);
  out += " ";
  out += e.subj.lit.str();
  return out;
}

inline std::string render(const BodyElement& e) {
  if (const auto* o = std::get_if<ExtendedObjectiveLiteral>(&e)) return render(*o);
  return render(std::get<ExtendedSubjectiveLiteral>(e));
}

inline std::string render(const Rule& r) {
  std::string out;
  if (r.wv_flag) {
    out = ":-wv ";
  } else if (r.head.empty()) {
    out = r.body.empty() ? ":-" : ":- ";
  } else {
    for (std::size_t i = 0; i < r.head.size(); ++i) {
      if (i) out += " or ";
      out += r.head[i].str();
    }
    if (!r.body.empty()) out += " :- ";
  }
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    out += render(r.body[i]);
  }
  return out + ".";
}

inline std::string render(const Program& p) {
  std::string out;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    if (i) out += "\n";
    out += render(p.rules[i]);
  }
  return out;
}

// ── formula printing ─────────────────────────────────────────────────────────
// Precedence (loosest to tightest): <->, ->, |, &, prefix (- K KHAT).
// -> and <-> associate to the right, | and & to the left, matching the parser.

namespace detail {

inline bool is_bottom(const FormulaPtr& f) { return f && f->kind == EhtFormula::Kind::Bottom; }
inline bool is_top(const FormulaPtr& f) {
  return f && f->kind == EhtFormula::Kind::Implies && is_bottom(f->lhs) && is_bottom(f->rhs);
}
inline bool is_neg(const FormulaPtr& f) {
  return f && f->kind == EhtFormula::Kind::Implies && is_bottom(f->rhs) && !is_top(f);
}
inline bool is_iff(const FormulaPtr& f) {
  return f && f->kind == EhtFormula::Kind::And && f->lhs &&
         f->lhs->kind == EhtFormula::Kind::Implies && f->rhs &&
         f->rhs->kind == EhtFormula::Kind::Implies && formula_equal(f->lhs->lhs, f->rhs->rhs) &&
         formula_equal(f->lhs->rhs, f->rhs->lhs);
}

// levels: 0 iff, 1 implies, 2 or, 3 and, 4 prefix, 5 primary
inline int formula_level(const FormulaPtr& f) {
  if (is_top(f)) return 5;
  if (is_neg(f)) return 4;
  if (is_iff(f)) return 0;
  switch (f->kind) {
    case EhtFormula::Kind::Bottom:
    case EhtFormula::Kind::Atom: return 5;
    case EhtFormula::Kind::K:
    case EhtFormula::Kind::KHat: return 4;
    case EhtFormula::Kind::And: return 3;
    case EhtFormula::Kind::Or: return 2;
    case EhtFormula::Kind::Implies: return 1;
  }
  return 5;
}

inline std::string render_at(const FormulaPtr& f, int min_level) {
  int lvl = formula_level(f);
  std::string out;
  if (is_top(f)) {
    out = "top";
  } else if (is_neg(f)) {
    out = "-" + render_at(f->lhs, 4);
  } else if (is_iff(f)) {
    out = render_at(f->lhs->lhs, 1) + " <-> " + render_at(f->lhs->rhs, 0);
  } else {
    switch (f->kind) {
      case EhtFormula::Kind::Bottom: out = "bot"; break;
      case EhtFormula::Kind::Atom: out = f->atom; break;
      case EhtFormula::Kind::K: out = "K " + render_at(f->lhs, 4); break;
      case EhtFormula::Kind::KHat: out = "KHAT " + render_at(f->lhs, 4); break;
      case EhtFormula::Kind::And:
        out = render_at(f->lhs, 3) + " & " + render_at(f->rhs, 4);
        break;
      case EhtFormula::Kind::Or:
        out = render_at(f->lhs, 2) + " | " + render_at(f->rhs, 3);
        break;
      case EhtFormula::Kind::Implies:
        out = render_at(f->lhs, 2) + " -> " + render_at(f->rhs, 1);
        break;
    }
  }
  if (lvl < min_level) return "(" + out + ")";
  return out;
}

}  // namespace detail

inline std::string render(const FormulaPtr& f) {
  if (!f) throw ArgumentError("render: null formula");
  return detail::render_at(f, 0);
}

}  // namespace elp
