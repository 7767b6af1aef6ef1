// eht.hpp — epistemic here-and-there kernel.
//
// Worlds are atom-set bitmasks over an AtomTable.  A functional model maps
// each valuation T to a single here-set s(T) ⊆ T; a relational model arranges
// multivalued worlds (T with a nonempty set of here-sets) into a maximal
// cluster plus periphery worlds outside it.  Truth conditions:
//
//   (m,s),A ⊨ p        iff p ∈ s(A)
//   (m,s),A ⊨ x -> y   iff the implication holds at (m,s),A and at (m,id),A
//   (m,s),A ⊨ K x      iff (m,s),A' ⊨ x for every A' in scope
//   (m,s),A ⊨ KHAT x   iff (m,s),A' ⊨ x for some A' in scope
//
// Scope: cluster worlds see the cluster only.  A periphery world sees the
// cluster (KD45) or the cluster plus itself (SW5).  A multivalued world
// satisfies a formula iff every of its (here, there) pairs does.
//
// translate() maps a program to its formula: ',' to &, 'or' to |, 'not' to -,
// K to K, M to -K-, KHAT to KHAT; strong negation becomes a fresh atom plus a
// consistency conjunct -(p & neg_p).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "elp/core.hpp"
#include "elp/printer.hpp"
#include "elp/syntax.hpp"

namespace elp {

using Mask = std::uint32_t;

class AtomTable {
 public:
  int add(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    if (names_.size() >= 20)
      throw BoundError("atom table limit (20) exceeded");
    names_.push_back(name);
    index_[name] = static_cast<int>(names_.size()) - 1;
    return index_[name];
  }
  int find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(names_.size()); }

  Mask mask_of(const std::set<std::string>& names) const {
    Mask m = 0;
    for (const auto& n : names) {
      int i = find(n);
      if (i < 0) throw ArgumentError("atom '" + n + "' not in table");
      m |= Mask(1) << i;
    }
    return m;
  }
  std::set<std::string> names_of(Mask m) const {
    std::set<std::string> out;
    for (int i = 0; i < size(); ++i)
      if (m & (Mask(1) << i)) out.insert(names_[static_cast<std::size_t>(i)]);
    return out;
  }
  std::string mask_str(Mask m) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < size(); ++i)
      if (m & (Mask(1) << i)) {
        if (!first) out += ",";
        first = false;
        out += names_[static_cast<std::size_t>(i)];
      }
    return out + "}";
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// An HT-world: here ⊆ there.
struct HtWorld {
  Mask here = 0;
  Mask there = 0;
};

struct FunctionalEhtModel {
  AtomTable atoms;
  std::vector<HtWorld> worlds;  // one here-set per valuation, here ⊆ there

  bool total() const {
    for (const auto& w : worlds)
      if (w.here != w.there) return false;
    return true;
  }
};

enum class RelationalMode { KD45, SW5 };

inline const char* to_string(RelationalMode m) {
  return m == RelationalMode::KD45 ? "kd45" : "sw5";
}

struct RelationalWorld {
  Mask there = 0;
  std::vector<Mask> heres;  // nonempty, each ⊆ there
};

struct RelationalEhtModel {
  AtomTable atoms;
  RelationalMode mode = RelationalMode::KD45;
  std::vector<RelationalWorld> cluster;    // nonempty
  std::vector<RelationalWorld> periphery;  // theres disjoint from the cluster's

  bool total() const {
    auto tot = [](const RelationalWorld& w) {
      return w.heres.size() == 1 && w.heres[0] == w.there;
    };
    for (const auto& w : cluster)
      if (!tot(w)) return false;
    for (const auto& w : periphery)
      if (!tot(w)) return false;
    return true;
  }
};

// ── compiled formulas ───────────────────────────────────────────────────────

namespace detail {

// Interned node array; structurally identical subformulas share one node, so
// distinct modal subformulas get one verdict slot each.
struct CompiledEht {
  struct Node {
    EhtFormula::Kind kind;
    int atom = -1;
    int lhs = -1, rhs = -1;
    int modal_idx = -1;
  };
  std::vector<Node> nodes;  // children precede parents
  int root = -1;
  std::vector<int> modal_nodes;  // by modal_idx, children-first

  int n_modals() const { return static_cast<int>(modal_nodes.size()); }
  bool objective() const { return modal_nodes.empty(); }
};

inline int compile_into(const FormulaPtr& f, AtomTable& table, CompiledEht& out,
                        std::map<std::tuple<int, int, int, int>, int>& interned) {
  CompiledEht::Node n;
  n.kind = f->kind;
  switch (f->kind) {
    case EhtFormula::Kind::Bottom: break;
    case EhtFormula::Kind::Atom: n.atom = table.add(f->atom); break;
    case EhtFormula::Kind::K:
    case EhtFormula::Kind::KHat: n.lhs = compile_into(f->lhs, table, out, interned); break;
    default:
      n.lhs = compile_into(f->lhs, table, out, interned);
      n.rhs = compile_into(f->rhs, table, out, interned);
  }
  auto key = std::make_tuple(static_cast<int>(n.kind), n.atom, n.lhs, n.rhs);
  auto it = interned.find(key);
  if (it != interned.end()) return it->second;
  if (n.kind == EhtFormula::Kind::K || n.kind == EhtFormula::Kind::KHat) {
    n.modal_idx = static_cast<int>(out.modal_nodes.size());
    out.modal_nodes.push_back(static_cast<int>(out.nodes.size()));
  }
  out.nodes.push_back(n);
  int idx = static_cast<int>(out.nodes.size()) - 1;
  interned[key] = idx;
  return idx;
}

inline CompiledEht compile(const FormulaPtr& f, AtomTable& table) {
  if (!f) throw ArgumentError("null formula");
  CompiledEht out;
  std::map<std::tuple<int, int, int, int>, int> interned;
  out.root = compile_into(f, table, out, interned);
  return out;
}

// ── staged relational evaluator ─────────────────────────────────────────────
// K/KHAT verdicts are global per scope (cluster = scope 0; each SW5 periphery
// world gets its own scope), so they are computed once per (modal, scope,
// level) and the rest of the evaluation is plain per-pair HT recursion.

class RelEval {
 public:
  RelEval(const CompiledEht& cf, const RelationalEhtModel& m) : cf_(cf), m_(m) {
    n_scopes_ = 1 + (m.mode == RelationalMode::SW5 ? static_cast<int>(m.periphery.size()) : 0);
    cache_.assign(static_cast<std::size_t>(cf.n_modals()) * n_scopes_ * 2, -1);
  }

  bool cluster_world_sat(int ci) {
    const auto& w = m_.cluster[static_cast<std::size_t>(ci)];
    for (Mask h : w.heres)
      if (!eval(cf_.root, w.there, h, false, 0)) return false;
    return true;
  }
  bool periphery_world_sat(int pi) {
    const auto& w = m_.periphery[static_cast<std::size_t>(pi)];
    int scope = scope_of_periphery(pi);
    for (Mask h : w.heres)
      if (!eval(cf_.root, w.there, h, false, scope)) return false;
    return true;
  }
  bool model_sat_everywhere() {
    for (std::size_t i = 0; i < m_.cluster.size(); ++i)
      if (!cluster_world_sat(static_cast<int>(i))) return false;
    for (std::size_t i = 0; i < m_.periphery.size(); ++i)
      if (!periphery_world_sat(static_cast<int>(i))) return false;
    return true;
  }

  int scope_of_periphery(int pi) const {
    return m_.mode == RelationalMode::SW5 ? 1 + pi : 0;
  }

  bool eval(int node, Mask t, Mask h, bool id, int scope) {
    const auto& n = cf_.nodes[static_cast<std::size_t>(node)];
    switch (n.kind) {
      case EhtFormula::Kind::Bottom: return false;
      case EhtFormula::Kind::Atom: {
        Mask ms = id ? t : h;
        return (ms >> n.atom) & 1;
      }
      case EhtFormula::Kind::And:
        return eval(n.lhs, t, h, id, scope) && eval(n.rhs, t, h, id, scope);
      case EhtFormula::Kind::Or:
        return eval(n.lhs, t, h, id, scope) || eval(n.rhs, t, h, id, scope);
      case EhtFormula::Kind::Implies: {
        bool at_id = !eval(n.lhs, t, t, true, scope) || eval(n.rhs, t, t, true, scope);
        if (id) return at_id;
        return at_id && (!eval(n.lhs, t, h, false, scope) || eval(n.rhs, t, h, false, scope));
      }
      case EhtFormula::Kind::K:
      case EhtFormula::Kind::KHat: return verdict(node, scope, id);
    }
    return false;
  }

 private:
  bool verdict(int node, int scope, bool id) {
    const auto& n = cf_.nodes[static_cast<std::size_t>(node)];
    std::size_t slot =
        (static_cast<std::size_t>(n.modal_idx) * n_scopes_ + static_cast<std::size_t>(scope)) * 2 +
        (id ? 1 : 0);
    if (cache_[slot] >= 0) return cache_[slot] != 0;
    bool is_k = n.kind == EhtFormula::Kind::K;
    bool acc = is_k;  // K: all; KHAT: some
    auto visit = [&](const RelationalWorld& w, int wscope) {
      if (id) {
        bool v = eval(n.lhs, w.there, w.there, true, wscope);
        if (is_k) acc = acc && v;
        else acc = acc || v;
        return;
      }
      for (Mask h : w.heres) {
        bool v = eval(n.lhs, w.there, h, false, wscope);
        if (is_k) acc = acc && v;
        else acc = acc || v;
        if (is_k ? !acc : acc) return;
      }
    };
    for (const auto& w : m_.cluster) {
      visit(w, 0);
      if (is_k ? !acc : acc) break;
    }
    if (scope > 0 && (is_k ? acc : !acc))
      visit(m_.periphery[static_cast<std::size_t>(scope - 1)], scope);
    cache_[slot] = acc ? 1 : 0;
    return acc;
  }

  const CompiledEht& cf_;
  const RelationalEhtModel& m_;
  int n_scopes_;
  std::vector<int8_t> cache_;
};

}  // namespace detail

// ── satisfaction ────────────────────────────────────────────────────────────

namespace detail {

// Literal recursion over a functional model, straight from the truth
// conditions; kept free of the relational evaluator's caching.
inline bool sat_functional_at(const FunctionalEhtModel& m, const CompiledEht& cf, int node,
                              std::size_t wi, bool id) {
  const auto& n = cf.nodes[static_cast<std::size_t>(node)];
  switch (n.kind) {
    case EhtFormula::Kind::Bottom: return false;
    case EhtFormula::Kind::Atom: {
      Mask ms = id ? m.worlds[wi].there : m.worlds[wi].here;
      return (ms >> n.atom) & 1;
    }
    case EhtFormula::Kind::And:
      return sat_functional_at(m, cf, n.lhs, wi, id) && sat_functional_at(m, cf, n.rhs, wi, id);
    case EhtFormula::Kind::Or:
      return sat_functional_at(m, cf, n.lhs, wi, id) || sat_functional_at(m, cf, n.rhs, wi, id);
    case EhtFormula::Kind::Implies: {
      bool at_id =
          !sat_functional_at(m, cf, n.lhs, wi, true) || sat_functional_at(m, cf, n.rhs, wi, true);
      if (id) return at_id;
      return at_id && (!sat_functional_at(m, cf, n.lhs, wi, false) ||
                       sat_functional_at(m, cf, n.rhs, wi, false));
    }
    case EhtFormula::Kind::K: {
      for (std::size_t j = 0; j < m.worlds.size(); ++j)
        if (!sat_functional_at(m, cf, n.lhs, j, id)) return false;
      return true;
    }
    case EhtFormula::Kind::KHat: {
      for (std::size_t j = 0; j < m.worlds.size(); ++j)
        if (sat_functional_at(m, cf, n.lhs, j, id)) return true;
      return false;
    }
  }
  return false;
}

inline void validate_functional(const FunctionalEhtModel& m) {
  if (m.worlds.empty()) throw ArgumentError("functional EHT model needs a nonempty domain");
  for (const auto& w : m.worlds)
    if ((w.here & ~w.there) != 0)
      throw ArgumentError("functional EHT model: here-set not a subset of there");
}

inline void validate_relational(const RelationalEhtModel& m) {
  if (m.cluster.empty()) throw ArgumentError("relational EHT model needs a nonempty cluster");
  std::set<Mask> seen;
  auto check = [&](const RelationalWorld& w) {
    if (w.heres.empty()) throw ArgumentError("relational EHT model: world with no here-sets");
    for (Mask h : w.heres)
      if ((h & ~w.there) != 0)
        throw ArgumentError("relational EHT model: here-set not a subset of there");
    if (!seen.insert(w.there).second)
      throw ArgumentError("relational EHT model: duplicate valuation across worlds");
  };
  for (const auto& w : m.cluster) check(w);
  for (const auto& w : m.periphery) check(w);
}

}  // namespace detail

inline bool sat_functional(const FunctionalEhtModel& m, Mask at, const FormulaPtr& f) {
  detail::validate_functional(m);
  AtomTable table = m.atoms;
  detail::CompiledEht cf = detail::compile(f, table);
  for (std::size_t i = 0; i < m.worlds.size(); ++i)
    if (m.worlds[i].there == at) return detail::sat_functional_at(m, cf, cf.root, i, false);
  throw ArgumentError("sat_functional: valuation not in the model");
}

inline bool sat_relational(const RelationalEhtModel& m, Mask at, const FormulaPtr& f) {
  detail::validate_relational(m);
  AtomTable table = m.atoms;
  detail::CompiledEht cf = detail::compile(f, table);
  detail::RelEval ev(cf, m);
  for (std::size_t i = 0; i < m.cluster.size(); ++i)
    if (m.cluster[i].there == at) return ev.cluster_world_sat(static_cast<int>(i));
  for (std::size_t i = 0; i < m.periphery.size(); ++i)
    if (m.periphery[i].there == at) return ev.periphery_world_sat(static_cast<int>(i));
  throw ArgumentError("sat_relational: valuation not in the model");
}

// Total-model check: the formula holds at every world, cluster and periphery.
inline bool classical_model_check(const RelationalEhtModel& m, const FormulaPtr& f) {
  detail::validate_relational(m);
  if (!m.total()) throw ArgumentError("classical_model_check: model is not total");
  AtomTable table = m.atoms;
  detail::CompiledEht cf = detail::compile(f, table);
  detail::RelEval ev(cf, m);
  return ev.model_sat_everywhere();
}

// ── program translation ─────────────────────────────────────────────────────

struct Translation {
  FormulaPtr formula;
  std::map<std::string, std::string> neg_atom_of;  // original atom -> fresh atom for ~p
};

namespace detail {

inline FormulaPtr conjoin(FormulaPtr acc, FormulaPtr next) {
  return acc ? f_and(std::move(acc), std::move(next)) : next;
}

}  // namespace detail

inline Translation translate_program(const Program& prog) {
  if (prog.has_wv_rules())
    throw UnsupportedError("world-view constructs have no EHT translation");

  Translation tr;
  auto atoms = prog.atoms();
  std::set<std::string> strong;
  for (const auto& l : prog.objective_literals())
    if (l.strong_neg) strong.insert(l.atom);
  for (const auto& a : strong) {
    std::string fresh = "neg_" + a;
    while (atoms.count(fresh)) fresh += "_";
    atoms.insert(fresh);
    tr.neg_atom_of[a] = fresh;
  }

  auto lit_f = [&](const ObjectiveLiteral& l) {
    return f_atom(l.strong_neg ? tr.neg_atom_of.at(l.atom) : l.atom);
  };
  auto elem_f = [&](const BodyElement& e) -> FormulaPtr {
    if (const auto* o = std::get_if<ExtendedObjectiveLiteral>(&e)) {
      FormulaPtr f = lit_f(o->lit);
      for (int i = 0; i < o->naf_depth; ++i) f = f_neg(f);
      return f;
    }
    const auto& g = std::get<ExtendedSubjectiveLiteral>(e);
    FormulaPtr inner = lit_f(g.subj.lit);
    FormulaPtr f;
    switch (g.subj.modality) {
      case Modality::K: f = f_k(inner); break;
      case Modality::M: f = f_neg(f_k(f_neg(inner))); break;
      case Modality::KHat: f = f_khat(inner); break;
    }
    return g.negated ? f_neg(f) : f;
  };

  FormulaPtr all;
  for (const auto& r : prog.rules) {
    FormulaPtr body;
    for (const auto& e : r.body) body = detail::conjoin(body, elem_f(e));
    FormulaPtr head;
    for (const auto& l : r.head) head = head ? f_or(head, lit_f(l)) : lit_f(l);
    if (!head) head = f_bottom();
    FormulaPtr rf = body ? f_implies(body, head) : head;  // empty body: top -> head simplifies
    all = detail::conjoin(all, rf);
  }
  for (const auto& a : strong)
    all = detail::conjoin(all, f_neg(f_and(f_atom(a), f_atom(tr.neg_atom_of.at(a)))));
  tr.formula = all ? all : f_top();
  return tr;
}

inline FormulaPtr translate(const Program& prog) { return translate_program(prog).formula; }

// ── bounded validity ────────────────────────────────────────────────────────

enum class EhtVariant { Functional, KD45, SW5 };

inline const char* to_string(EhtVariant v) {
  switch (v) {
    case EhtVariant::Functional: return "functional";
    case EhtVariant::KD45: return "kd45";
    case EhtVariant::SW5: return "sw5";
  }
  return "?";
}

struct ValidityBounds {
  int max_atoms = 2;
  int max_cluster = 3;
  int max_periphery = 1;
  long long max_search = 4'000'000;
};

struct Countermodel {
  EhtVariant variant = EhtVariant::Functional;
  AtomTable atoms;
  std::vector<RelationalWorld> cluster;
  std::vector<RelationalWorld> periphery;
  Mask at_world = 0;

  // Cluster worlds as (H,T) pairs, periphery pairs marked with '*'.
  std::string str() const {
    std::string out = "{ ";
    bool first = true;
    auto emit = [&](const RelationalWorld& w, bool peri) {
      for (Mask h : w.heres) {
        if (!first) out += ", ";
        first = false;
        if (peri) out += "*";
        out += "(" + atoms.mask_str(h) + "," + atoms.mask_str(w.there) + ")";
      }
    };
    for (const auto& w : cluster) emit(w, false);
    for (const auto& w : periphery) emit(w, true);
    out += " } fails at " + atoms.mask_str(at_world);
    return out;
  }
};

struct ValidityResult {
  bool valid = false;
  std::optional<Countermodel> countermodel;
};

namespace detail {

inline std::vector<Mask> submasks(Mask t) {
  std::vector<Mask> out;
  Mask s = t;
  while (true) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & t;
  }
  return out;  // t first, 0 last
}

// enumerate k-combinations of indexes [0, n)
template <typename F>
inline void combinations(int n, int k, F&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
    if (depth == k) return fn(idx);
    for (int i = start; i < n; ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      if (!rec(i + 1, depth + 1)) return false;
    }
    return true;
  };
  rec(0, 0);
}

}  // namespace detail

// Exhaustive validity within bounds: every model shape over atoms(f), every
// (multivalued) subset assignment, every world designated.  Returns the first
// failing pointed model as a countermodel.
inline ValidityResult eht_valid(const FormulaPtr& f, EhtVariant variant,
                                const ValidityBounds& bounds = {}) {
  auto names = formula_atoms(f);
  if (static_cast<int>(names.size()) > bounds.max_atoms)
    throw BoundError("formula has " + std::to_string(names.size()) + " atoms, bound is " +
                     std::to_string(bounds.max_atoms));
  AtomTable table;
  for (const auto& n : names) table.add(n);
  detail::CompiledEht cf = detail::compile(f, table);
  int n_vals = 1 << table.size();

  long long budget = bounds.max_search;
  auto spend = [&](long long units) {
    budget -= units;
    if (budget < 0) throw BoundError("validity search space exceeds the configured bound");
  };

  ValidityResult result;
  result.valid = true;

  std::vector<std::vector<Mask>> subs;
  for (int v = 0; v < n_vals; ++v) subs.push_back(detail::submasks(static_cast<Mask>(v)));

  if (variant == EhtVariant::Functional) {
    for (int k = 1; k <= bounds.max_cluster && result.valid; ++k) {
      detail::combinations(n_vals, k, [&](const std::vector<int>& idx) {
        FunctionalEhtModel m;
        m.atoms = table;
        for (int i : idx) m.worlds.push_back({0, static_cast<Mask>(i)});
        std::function<bool(std::size_t)> assign = [&](std::size_t wi) -> bool {
          if (wi == m.worlds.size()) {
            spend(static_cast<long long>(m.worlds.size()));
            for (std::size_t d = 0; d < m.worlds.size(); ++d) {
              if (!detail::sat_functional_at(m, cf, cf.root, d, false)) {
                Countermodel cm;
                cm.variant = variant;
                cm.atoms = table;
                for (const auto& w : m.worlds) cm.cluster.push_back({w.there, {w.here}});
                cm.at_world = m.worlds[d].there;
                result = {false, cm};
                return false;
              }
            }
            return true;
          }
          for (Mask h : subs[static_cast<std::size_t>(m.worlds[wi].there)]) {
            m.worlds[wi].here = h;
            if (!assign(wi + 1)) return false;
          }
          return true;
        };
        return assign(0);
      });
    }
    return result;
  }

  RelationalMode mode = variant == EhtVariant::KD45 ? RelationalMode::KD45 : RelationalMode::SW5;
  for (int k = 1; k <= bounds.max_cluster && result.valid; ++k) {
    detail::combinations(n_vals, k, [&](const std::vector<int>& cidx) {
      std::vector<char> in_cluster(static_cast<std::size_t>(n_vals), 0);
      for (int i : cidx) in_cluster[static_cast<std::size_t>(i)] = 1;
      std::vector<int> rest;
      for (int i = 0; i < n_vals; ++i)
        if (!in_cluster[static_cast<std::size_t>(i)]) rest.push_back(i);

      for (int pk = 0; pk <= bounds.max_periphery; ++pk) {
        bool go_on = true;
        detail::combinations(static_cast<int>(rest.size()), pk, [&](const std::vector<int>& pidx) {
          RelationalEhtModel m;
          m.atoms = table;
          m.mode = mode;
          for (int i : cidx) m.cluster.push_back({static_cast<Mask>(i), {}});
          for (int i : pidx) m.periphery.push_back({static_cast<Mask>(rest[static_cast<std::size_t>(i)]), {}});
          std::vector<RelationalWorld*> ws;
          for (auto& w : m.cluster) ws.push_back(&w);
          for (auto& w : m.periphery) ws.push_back(&w);
          // every world takes a nonempty set of here-subsets
          std::function<bool(std::size_t)> assign = [&](std::size_t wi) -> bool {
            if (wi == ws.size()) {
              spend(static_cast<long long>(ws.size()));
              detail::RelEval ev(cf, m);
              for (std::size_t d = 0; d < ws.size(); ++d) {
                bool ok = d < m.cluster.size()
                              ? ev.cluster_world_sat(static_cast<int>(d))
                              : ev.periphery_world_sat(static_cast<int>(d - m.cluster.size()));
                if (!ok) {
                  Countermodel cm;
                  cm.variant = variant;
                  cm.atoms = table;
                  cm.cluster = m.cluster;
                  cm.periphery = m.periphery;
                  cm.at_world = ws[d]->there;
                  result = {false, cm};
                  return false;
                }
              }
              return true;
            }
            const auto& pool = subs[static_cast<std::size_t>(ws[wi]->there)];
            if (pool.size() > 24)
              throw BoundError("validity search space exceeds the configured bound");
            for (std::uint32_t sel = 1; sel < (1u << pool.size()); ++sel) {
              ws[wi]->heres.clear();
              for (std::size_t b = 0; b < pool.size(); ++b)
                if (sel & (1u << b)) ws[wi]->heres.push_back(pool[b]);
              if (!assign(wi + 1)) return false;
            }
            return true;
          };
          go_on = assign(0);
          return go_on;
        });
        if (!go_on || !result.valid) break;
      }
      return result.valid;
    });
  }
  return result;
}

}  // namespace elp
