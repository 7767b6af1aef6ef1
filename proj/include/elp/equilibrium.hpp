// equilibrium.hpp — epistemic equilibrium models.
//
// ES15: EEMs are classical S5-models passing functional truth-minimality (no
// single-valued subset function other than id satisfies the formula at every
// world); AEEMs drop EEMs that are subset-dominated or strictly below another
// EEM in the phi-indexed preorder built from the augmented-model test (⊨*).
//
// ES20/ES21: EEMs are classical KD45/SW5-models (cluster plus optional
// periphery) passing relational truth-minimality (no multivalued subset
// function other than id satisfies the formula at every world); AEEMs are the
// cluster-only members with no proper extension among the EEMs.
//
// The minimality searches share one routine: "does a non-identity subset
// assignment exist that satisfies the formula at every required world?"  It
// guesses the here-level verdict of each distinct modal subformula per scope,
// derives per-pair hard constraints and per-verdict witness obligations, and
// runs a small coverage DP over the per-world here-choices.  A plain
// enumeration fallback (and the test suite's independent oracle) covers the
// rare cases whose guess space is too large.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elp/core.hpp"
#include "elp/eht.hpp"
#include "elp/syntax.hpp"

namespace elp {
namespace detail {

// ── shared context ──────────────────────────────────────────────────────────

struct EqContext {
  AtomTable table;
  CompiledEht cf;
  std::vector<Mask> universe;  // ascending; candidate worlds for every search
  Bounds bounds;
};

inline bool eval_objective(const CompiledEht& cf, int node, Mask t) {
  const auto& n = cf.nodes[static_cast<std::size_t>(node)];
  switch (n.kind) {
    case EhtFormula::Kind::Bottom: return false;
    case EhtFormula::Kind::Atom: return (t >> n.atom) & 1;
    case EhtFormula::Kind::And:
      return eval_objective(cf, n.lhs, t) && eval_objective(cf, n.rhs, t);
    case EhtFormula::Kind::Or:
      return eval_objective(cf, n.lhs, t) || eval_objective(cf, n.rhs, t);
    case EhtFormula::Kind::Implies:
      return !eval_objective(cf, n.lhs, t) || eval_objective(cf, n.rhs, t);
    default: throw ArgumentError("modal operator in objective evaluation");
  }
}

inline bool node_is_objective(const CompiledEht& cf, int node) {
  const auto& n = cf.nodes[static_cast<std::size_t>(node)];
  switch (n.kind) {
    case EhtFormula::Kind::Bottom:
    case EhtFormula::Kind::Atom: return true;
    case EhtFormula::Kind::K:
    case EhtFormula::Kind::KHat: return false;
    default:
      return node_is_objective(cf, n.lhs) && node_is_objective(cf, n.rhs);
  }
}

inline EqContext make_eq_context(const FormulaPtr& f, const Bounds& bounds) {
  EqContext ctx;
  ctx.bounds = bounds;
  for (const auto& a : formula_atoms(f)) ctx.table.add(a);
  ctx.cf = compile(f, ctx.table);

  // Worlds of any classical model must locally satisfy every modal-free
  // top-level conjunct, so those prune the universe soundly.
  std::vector<int> objective_conjuncts;
  std::function<void(int)> split = [&](int node) {
    const auto& n = ctx.cf.nodes[static_cast<std::size_t>(node)];
    if (n.kind == EhtFormula::Kind::And) {
      split(n.lhs);
      split(n.rhs);
      return;
    }
    if (node_is_objective(ctx.cf, node)) objective_conjuncts.push_back(node);
  };
  split(ctx.cf.root);

  int n = ctx.table.size();
  for (Mask m = 0; m < (Mask(1) << n); ++m) {
    bool ok = true;
    for (int c : objective_conjuncts)
      if (!eval_objective(ctx.cf, c, m)) {
        ok = false;
        break;
      }
    if (ok) ctx.universe.push_back(m);
  }
  if (static_cast<int>(ctx.universe.size()) > bounds.max_classical_models)
    throw BoundError("classical-model bound exceeded: " + std::to_string(ctx.universe.size()) +
                     " candidate worlds, bound is " +
                     std::to_string(bounds.max_classical_models));
  if (ctx.universe.size() > 22)
    throw BoundError("candidate-world pool too large for cluster enumeration");
  return ctx;
}

// ── total (classical) evaluation over a shape ───────────────────────────────

class TotalEval {
 public:
  TotalEval(const CompiledEht& cf, const std::vector<Mask>& cluster,
            const std::vector<Mask>& periphery, RelationalMode mode)
      : cf_(cf), cluster_(cluster), periphery_(periphery), mode_(mode) {
    n_scopes_ = 1 + (mode == RelationalMode::SW5 ? static_cast<int>(periphery.size()) : 0);
    cache_.assign(static_cast<std::size_t>(cf.n_modals()) * n_scopes_, -1);
  }

  int scope_of_periphery(int pi) const {
    return mode_ == RelationalMode::SW5 ? 1 + pi : 0;
  }

  bool at(int node, Mask t, int scope) {
    const auto& n = cf_.nodes[static_cast<std::size_t>(node)];
    switch (n.kind) {
      case EhtFormula::Kind::Bottom: return false;
      case EhtFormula::Kind::Atom: return (t >> n.atom) & 1;
      case EhtFormula::Kind::And: return at(n.lhs, t, scope) && at(n.rhs, t, scope);
      case EhtFormula::Kind::Or: return at(n.lhs, t, scope) || at(n.rhs, t, scope);
      case EhtFormula::Kind::Implies: return !at(n.lhs, t, scope) || at(n.rhs, t, scope);
      case EhtFormula::Kind::K:
      case EhtFormula::Kind::KHat: return verdict(node, scope);
    }
    return false;
  }

  bool verdict(int node, int scope) {
    const auto& n = cf_.nodes[static_cast<std::size_t>(node)];
    std::size_t slot =
        static_cast<std::size_t>(n.modal_idx) * n_scopes_ + static_cast<std::size_t>(scope);
    if (cache_[slot] >= 0) return cache_[slot] != 0;
    bool is_k = n.kind == EhtFormula::Kind::K;
    bool acc = is_k;
    for (Mask t : cluster_) {
      bool v = at(n.lhs, t, 0);
      acc = is_k ? (acc && v) : (acc || v);
      if (is_k ? !acc : acc) break;
    }
    if (scope > 0 && (is_k ? acc : !acc))
      acc = at(n.lhs, periphery_[static_cast<std::size_t>(scope - 1)], scope);
    cache_[slot] = acc ? 1 : 0;
    return acc;
  }

  bool everywhere() {
    for (Mask t : cluster_)
      if (!at(cf_.root, t, 0)) return false;
    for (std::size_t i = 0; i < periphery_.size(); ++i)
      if (!at(cf_.root, periphery_[i], scope_of_periphery(static_cast<int>(i)))) return false;
    return true;
  }
  bool cluster_world_sat(std::size_t i) { return at(cf_.root, cluster_[i], 0); }

 private:
  const CompiledEht& cf_;
  const std::vector<Mask>& cluster_;
  const std::vector<Mask>& periphery_;
  RelationalMode mode_;
  int n_scopes_;
  std::vector<int8_t> cache_;
};

inline bool classical_s5_sat(const EqContext& ctx, const std::vector<Mask>& cluster) {
  static const std::vector<Mask> none;
  TotalEval ev(ctx.cf, cluster, none, RelationalMode::KD45);
  return ev.everywhere();
}

inline bool classical_shape_sat(const EqContext& ctx, const std::vector<Mask>& cluster,
                                const std::vector<Mask>& periphery, RelationalMode mode) {
  TotalEval ev(ctx.cf, cluster, periphery, mode);
  return ev.everywhere();
}

// ── the deviant-assignment search ───────────────────────────────────────────

struct DeviantSpec {
  std::vector<Mask> cluster;
  std::vector<Mask> periphery;            // only for the relational conditions
  RelationalMode mode = RelationalMode::KD45;
  bool multivalued = false;               // false: single-valued subset function
  std::vector<char> required;             // per cluster world; periphery always required
  int pinned = -1;                        // cluster index forced total (models_star's A0)
};

// Pair evaluation under guessed here-level verdicts and fixed total verdicts.
struct GuessEval {
  const CompiledEht& cf;
  const std::vector<std::vector<int8_t>>& totals;  // [scope][modal]
  const std::vector<std::vector<int8_t>>& guess;   // [scope][modal]

  bool ev(int node, Mask t, Mask h, bool id, int scope) const {
    const auto& n = cf.nodes[static_cast<std::size_t>(node)];
    switch (n.kind) {
      case EhtFormula::Kind::Bottom: return false;
      case EhtFormula::Kind::Atom: {
        Mask ms = id ? t : h;
        return (ms >> n.atom) & 1;
      }
      case EhtFormula::Kind::And: return ev(n.lhs, t, h, id, scope) && ev(n.rhs, t, h, id, scope);
      case EhtFormula::Kind::Or: return ev(n.lhs, t, h, id, scope) || ev(n.rhs, t, h, id, scope);
      case EhtFormula::Kind::Implies: {
        bool at_id = !ev(n.lhs, t, t, true, scope) || ev(n.rhs, t, t, true, scope);
        if (id) return at_id;
        return at_id && (!ev(n.lhs, t, h, false, scope) || ev(n.rhs, t, h, false, scope));
      }
      case EhtFormula::Kind::K:
      case EhtFormula::Kind::KHat: {
        const auto& src = id ? totals : guess;
        return src[static_cast<std::size_t>(scope)][static_cast<std::size_t>(n.modal_idx)] != 0;
      }
    }
    return false;
  }
};

// Plain enumeration of subset assignments; correct everywhere, used when the
// guess space is too large, and mirrored by the tests' independent oracle.
inline bool exists_deviant_direct(const EqContext& ctx, const DeviantSpec& spec) {
  std::size_t n_cluster = spec.cluster.size();
  std::vector<Mask> theres = spec.cluster;
  theres.insert(theres.end(), spec.periphery.begin(), spec.periphery.end());
  std::vector<std::vector<Mask>> pools;
  double space = 1;
  for (std::size_t i = 0; i < theres.size(); ++i) {
    if (static_cast<int>(i) == spec.pinned)
      pools.push_back({theres[i]});
    else
      pools.push_back(submasks(theres[i]));
    double options = spec.multivalued && static_cast<int>(i) != spec.pinned
                         ? std::pow(2.0, static_cast<double>(pools.back().size())) - 1
                         : static_cast<double>(pools.back().size());
    space *= options;
    if (space > static_cast<double>(ctx.bounds.max_search))
      throw BoundError("minimality search space exceeds the configured bound");
  }

  RelationalEhtModel m;
  m.atoms = ctx.table;
  m.mode = spec.mode;
  for (std::size_t i = 0; i < n_cluster; ++i) m.cluster.push_back({spec.cluster[i], {}});
  for (std::size_t i = 0; i < spec.periphery.size(); ++i)
    m.periphery.push_back({spec.periphery[i], {}});
  auto world_of = [&](std::size_t i) -> RelationalWorld& {
    return i < n_cluster ? m.cluster[i] : m.periphery[i - n_cluster];
  };

  bool found = false;
  std::function<void(std::size_t, bool)> assign = [&](std::size_t wi, bool nontotal) {
    if (found) return;
    if (wi == theres.size()) {
      if (!nontotal) return;  // identity assignment
      RelEval ev(ctx.cf, m);
      for (std::size_t i = 0; i < n_cluster; ++i) {
        if (!spec.required[i]) continue;
        if (!ev.cluster_world_sat(static_cast<int>(i))) return;
      }
      for (std::size_t i = 0; i < spec.periphery.size(); ++i)
        if (!ev.periphery_world_sat(static_cast<int>(i))) return;
      found = true;
      return;
    }
    auto& w = world_of(wi);
    const auto& pool = pools[wi];
    if (!spec.multivalued || static_cast<int>(wi) == spec.pinned) {
      for (Mask h : pool) {
        w.heres = {h};
        assign(wi + 1, nontotal || h != w.there);
      }
    } else {
      if (pool.size() > 24) throw BoundError("minimality search space exceeds the configured bound");
      for (std::uint32_t sel = 1; sel < (1u << pool.size()); ++sel) {
        w.heres.clear();
        for (std::size_t b = 0; b < pool.size(); ++b)
          if (sel & (1u << b)) w.heres.push_back(pool[b]);
        bool total_choice = w.heres.size() == 1 && w.heres[0] == w.there;
        assign(wi + 1, nontotal || !total_choice);
      }
    }
  };
  assign(0, false);
  return found;
}

// Exists a subset assignment s ≠ id (single- or multivalued, as requested)
// satisfying the formula at every required world?
inline bool exists_deviant(const EqContext& ctx, const DeviantSpec& spec) {
  const CompiledEht& cf = ctx.cf;
  int q = cf.n_modals();
  std::size_t n_cluster = spec.cluster.size();

  // Modal-free formulas decompose per world: every world independently needs
  // some admissible here-set, and at least one unpinned world must admit a
  // proper one.
  if (q == 0) {
    static const std::vector<std::vector<int8_t>> none;
    GuessEval ge{cf, none, none};
    bool any_proper = false;
    auto world_can = [&](Mask t, bool required, bool pinned) {
      bool total_ok = !required || ge.ev(cf.root, t, t, false, 0);
      if (pinned) return total_ok;
      bool proper_ok = false;
      for (Mask h : submasks(t)) {
        if (h == t) continue;
        if (!required || ge.ev(cf.root, t, h, false, 0)) {
          proper_ok = true;
          break;
        }
      }
      any_proper = any_proper || proper_ok;
      return total_ok || proper_ok;
    };
    for (std::size_t i = 0; i < n_cluster; ++i)
      if (!world_can(spec.cluster[i], spec.required[i] != 0, static_cast<int>(i) == spec.pinned))
        return false;
    for (Mask t : spec.periphery)
      if (!world_can(t, true, false)) return false;
    return any_proper;
  }

  int n_scopes = 1 + (spec.mode == RelationalMode::SW5 ? static_cast<int>(spec.periphery.size()) : 0);
  if (q * n_scopes > 10) return exists_deviant_direct(ctx, spec);

  // Fixed id-level verdicts from the total shape.
  std::vector<std::vector<int8_t>> totals(static_cast<std::size_t>(n_scopes),
                                          std::vector<int8_t>(static_cast<std::size_t>(q), 0));
  {
    TotalEval te(cf, spec.cluster, spec.periphery, spec.mode);
    for (int s = 0; s < n_scopes; ++s)
      for (int i = 0; i < q; ++i)
        totals[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] =
            te.verdict(cf.modal_nodes[static_cast<std::size_t>(i)], s) ? 1 : 0;
  }

  std::size_t n_worlds = n_cluster + spec.periphery.size();
  auto there_of = [&](std::size_t w) {
    return w < n_cluster ? spec.cluster[w] : spec.periphery[w - n_cluster];
  };
  auto eval_scope_of = [&](std::size_t w) -> int {
    if (w < n_cluster) return 0;
    return spec.mode == RelationalMode::SW5 ? 1 + static_cast<int>(w - n_cluster) : 0;
  };
  // scopes whose K/KHAT domain contains world w
  auto domains_of = [&](std::size_t w) -> std::vector<int> {
    if (w < n_cluster) {
      std::vector<int> all;
      for (int s = 0; s < n_scopes; ++s) all.push_back(s);
      return all;
    }
    if (spec.mode == RelationalMode::SW5) return {1 + static_cast<int>(w - n_cluster)};
    return {};  // KD45 periphery pairs are quantified by nobody
  };

  std::vector<std::vector<int8_t>> guess(static_cast<std::size_t>(n_scopes),
                                         std::vector<int8_t>(static_cast<std::size_t>(q), 0));
  GuessEval ge{cf, totals, guess};

  long long n_guesses = 1ll << (q * n_scopes);
  for (long long g = 0; g < n_guesses; ++g) {
    for (int s = 0; s < n_scopes; ++s)
      for (int i = 0; i < q; ++i)
        guess[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] =
            (g >> (s * q + i)) & 1 ? 1 : 0;

    // witness obligations: (scope, modal, pair must satisfy child?)
    struct Oblig {
      int scope, modal;
      bool need_sat;
    };
    std::vector<Oblig> obligations;
    for (int s = 0; s < n_scopes; ++s)
      for (int i = 0; i < q; ++i) {
        bool is_k = cf.nodes[static_cast<std::size_t>(cf.modal_nodes[static_cast<std::size_t>(i)])]
                        .kind == EhtFormula::Kind::K;
        bool v = guess[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] != 0;
        if (is_k && !v) obligations.push_back({s, i, false});   // some pair fails the child
        if (!is_k && v) obligations.push_back({s, i, true});    // some pair satisfies it
      }
    if (obligations.size() > 16) return exists_deviant_direct(ctx, spec);
    std::uint32_t full = obligations.empty() ? 0 : (1u << obligations.size()) - 1;

    // Per-world choices: (coverage, nontotal) pairs reachable by an admitted
    // here-set (single) or here-set collection (multivalued).
    bool feasible = true;
    std::size_t n_states = (static_cast<std::size_t>(full) + 1) * 2;
    std::vector<char> reach(n_states, 0);
    reach[0] = 1;

    for (std::size_t w = 0; w < n_worlds && feasible; ++w) {
      Mask t = there_of(w);
      int wscope = eval_scope_of(w);
      bool required = w >= n_cluster || spec.required[w] != 0;
      auto doms = domains_of(w);

      struct PairInfo {
        Mask h;
        std::uint32_t cover;
      };
      std::vector<PairInfo> admitted;
      for (Mask h : submasks(t)) {
        if (static_cast<int>(w) == spec.pinned && h != t) continue;
        // child verdict values at this pair
        std::vector<char> psat(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i) {
          const auto& mn = cf.nodes[static_cast<std::size_t>(cf.modal_nodes[static_cast<std::size_t>(i)])];
          psat[static_cast<std::size_t>(i)] = ge.ev(mn.lhs, t, h, false, wscope) ? 1 : 0;
        }
        bool ok = !required || ge.ev(cf.root, t, h, false, wscope);
        for (int s : doms) {
          if (!ok) break;
          for (int i = 0; i < q && ok; ++i) {
            bool is_k =
                cf.nodes[static_cast<std::size_t>(cf.modal_nodes[static_cast<std::size_t>(i)])]
                    .kind == EhtFormula::Kind::K;
            bool v = guess[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] != 0;
            if (is_k && v && !psat[static_cast<std::size_t>(i)]) ok = false;
            if (!is_k && !v && psat[static_cast<std::size_t>(i)]) ok = false;
          }
        }
        if (!ok) continue;
        std::uint32_t cover = 0;
        for (std::size_t ob = 0; ob < obligations.size(); ++ob) {
          const auto& o = obligations[ob];
          bool in_domain = std::find(doms.begin(), doms.end(), o.scope) != doms.end();
          if (in_domain && (psat[static_cast<std::size_t>(o.modal)] != 0) == o.need_sat)
            cover |= 1u << ob;
        }
        admitted.push_back({h, cover});
      }
      if (admitted.empty()) {
        feasible = false;
        break;
      }

      // reachable (cover, nontotal) transitions for this world
      std::vector<std::pair<std::uint32_t, bool>> choices;
      if (!spec.multivalued || static_cast<int>(w) == spec.pinned) {
        for (const auto& p : admitted) choices.push_back({p.cover, p.h != t});
      } else {
        bool total_admitted = false;
        std::uint32_t total_cover = 0;
        std::set<std::uint32_t> nontotal_covers;
        for (const auto& p : admitted) {
          if (p.h == t) {
            total_admitted = true;
            total_cover = p.cover;
          } else {
            nontotal_covers.insert(p.cover);
          }
        }
        // close unions over collections containing at least one non-total pair
        bool grew = true;
        while (grew) {
          grew = false;
          std::vector<std::uint32_t> snapshot(nontotal_covers.begin(), nontotal_covers.end());
          for (std::uint32_t x : snapshot)
            for (const auto& p : admitted) {
              std::uint32_t u = x | p.cover;
              if (nontotal_covers.insert(u).second) grew = true;
            }
        }
        if (total_admitted) choices.push_back({total_cover, false});
        for (std::uint32_t c : nontotal_covers) choices.push_back({c, true});
      }

      std::vector<char> next(n_states, 0);
      for (std::size_t st = 0; st < n_states; ++st) {
        if (!reach[st]) continue;
        std::uint32_t cov = static_cast<std::uint32_t>(st >> 1);
        bool nt = st & 1;
        for (const auto& [c, cnt] : choices) {
          std::size_t ns = ((cov | c) << 1) | (nt || cnt ? 1 : 0);
          next[ns] = 1;
        }
      }
      reach = std::move(next);
    }

    if (feasible && reach[(static_cast<std::size_t>(full) << 1) | 1]) return true;
  }
  return false;
}

// ── conversions ─────────────────────────────────────────────────────────────

inline Valuation valuation_of(const AtomTable& table, Mask m) {
  std::vector<ObjectiveLiteral> lits;
  for (int i = 0; i < table.size(); ++i)
    if (m & (Mask(1) << i)) lits.push_back({table.name(i), false});
  return Valuation(lits);
}

inline BeliefView view_of(const AtomTable& table, const std::vector<Mask>& worlds) {
  BeliefView v;
  for (Mask m : worlds) v.insert(valuation_of(table, m));
  return v;
}

inline Mask mask_of_valuation(const AtomTable& table, const Valuation& v) {
  Mask m = 0;
  for (const auto& l : v) {
    if (l.strong_neg)
      throw ArgumentError("strong negation has no direct formula-level valuation");
    int i = table.find(l.atom);
    if (i < 0) throw ArgumentError("atom '" + l.atom + "' does not occur in the formula");
    m |= Mask(1) << i;
  }
  return m;
}

}  // namespace detail

// ── ES15: functional equilibrium models ─────────────────────────────────────

inline std::set<BeliefView> eem15(const FormulaPtr& f, const Bounds& bounds = {}) {
  auto ctx = detail::make_eq_context(f, bounds);
  std::set<BeliefView> out;
  std::size_t n = ctx.universe.size();
  for (std::uint32_t sel = 1; sel < (1u << n); ++sel) {
    std::vector<Mask> cluster;
    for (std::size_t i = 0; i < n; ++i)
      if (sel & (1u << i)) cluster.push_back(ctx.universe[i]);
    if (!detail::classical_s5_sat(ctx, cluster)) continue;
    detail::DeviantSpec spec;
    spec.cluster = cluster;
    spec.required.assign(cluster.size(), 1);
    if (!detail::exists_deviant(ctx, spec)) out.insert(detail::view_of(ctx.table, cluster));
  }
  return out;
}

namespace detail {

inline bool models_star_masks(EqContext& ctx, const std::vector<Mask>& designated, Mask a0) {
  std::vector<Mask> worlds = designated;
  int pin = -1;
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == a0) pin = static_cast<int>(i);
  if (pin < 0) {
    pin = static_cast<int>(worlds.size());
    worlds.push_back(a0);
  }
  // classical multipointed satisfaction at the designated worlds
  static const std::vector<Mask> none;
  TotalEval te(ctx.cf, worlds, none, RelationalMode::KD45);
  for (std::size_t i = 0; i < designated.size(); ++i)
    if (!te.cluster_world_sat(i)) return false;
  // every non-identity subset function fixing a0 must fail at some designated world
  DeviantSpec spec;
  spec.cluster = worlds;
  spec.required.assign(worlds.size(), 1);
  if (static_cast<std::size_t>(pin) == designated.size()) spec.required[static_cast<std::size_t>(pin)] = 0;
  spec.pinned = pin;
  return !exists_deviant(ctx, spec);
}

}  // namespace detail

// The augmented-model test: the view plus one extra world classically
// satisfies f at the view's worlds, and no non-identity subset function
// fixing the extra world satisfies f at all of them.
inline bool models_star(const BeliefView& view, const Valuation& a0, const FormulaPtr& f,
                        const Bounds& bounds = {}) {
  if (view.empty()) throw ArgumentError("models_star: empty belief view");
  auto ctx = detail::make_eq_context(f, bounds);
  std::vector<Mask> designated;
  for (const auto& v : view) designated.push_back(detail::mask_of_valuation(ctx.table, v));
  return detail::models_star_masks(ctx, designated, detail::mask_of_valuation(ctx.table, a0));
}

struct PreorderWitness {
  Valuation a0;
  bool left_star = false;
  bool right_star = false;
};

inline std::vector<PreorderWitness> preorder_witnesses(const FormulaPtr& f, const BeliefView& a,
                                                       const BeliefView& b,
                                                       const std::set<BeliefView>& eems,
                                                       const Bounds& bounds = {}) {
  auto ctx = detail::make_eq_context(f, bounds);
  std::set<Valuation> pool;
  for (const auto& e : eems)
    for (const auto& v : e) pool.insert(v);
  std::vector<Mask> am, bm;
  for (const auto& v : a) am.push_back(detail::mask_of_valuation(ctx.table, v));
  for (const auto& v : b) bm.push_back(detail::mask_of_valuation(ctx.table, v));
  std::vector<PreorderWitness> out;
  for (const auto& v : pool) {
    Mask a0 = detail::mask_of_valuation(ctx.table, v);
    out.push_back({v, detail::models_star_masks(ctx, am, a0),
                   detail::models_star_masks(ctx, bm, a0)});
  }
  return out;
}

// a <=_f b : every augmenting world that works for a also works for b.
inline bool preorder_leq(const FormulaPtr& f, const BeliefView& a, const BeliefView& b,
                         const std::set<BeliefView>& eems, const Bounds& bounds = {}) {
  for (const auto& w : preorder_witnesses(f, a, b, eems, bounds))
    if (w.left_star && !w.right_star) return false;
  return true;
}

struct Aeem15Result {
  std::set<BeliefView> views;
  // pairs (x, y) with x a proper subset of y while y is strictly below x in
  // the preorder — the coexistence the selection process leaves unproven
  std::vector<std::pair<BeliefView, BeliefView>> order_conflicts;
};

inline Aeem15Result aeem15_full(const FormulaPtr& f, const Bounds& bounds = {}) {
  auto ctx = detail::make_eq_context(f, bounds);
  std::set<BeliefView> eems_set = eem15(f, bounds);
  std::vector<BeliefView> eems(eems_set.begin(), eems_set.end());

  std::set<Valuation> pool;
  for (const auto& e : eems)
    for (const auto& v : e) pool.insert(v);
  std::vector<Mask> pool_masks;
  for (const auto& v : pool) pool_masks.push_back(detail::mask_of_valuation(ctx.table, v));

  // star profile per EEM over the pooled augmenting worlds
  std::vector<std::vector<char>> star(eems.size(), std::vector<char>(pool_masks.size()));
  for (std::size_t i = 0; i < eems.size(); ++i) {
    std::vector<Mask> masks;
    for (const auto& v : eems[i]) masks.push_back(detail::mask_of_valuation(ctx.table, v));
    for (std::size_t j = 0; j < pool_masks.size(); ++j)
      star[i][j] = detail::models_star_masks(ctx, masks, pool_masks[j]) ? 1 : 0;
  }
  auto leq = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < pool_masks.size(); ++k)
      if (star[i][k] && !star[j][k]) return false;
    return true;
  };
  auto subset = [&](const BeliefView& x, const BeliefView& y) {
    return x.size() < y.size() &&
           std::includes(y.begin(), y.end(), x.begin(), x.end());
  };

  Aeem15Result out;
  for (std::size_t i = 0; i < eems.size(); ++i) {
    bool eliminated = false;
    for (std::size_t j = 0; j < eems.size() && !eliminated; ++j) {
      if (i == j) continue;
      if (subset(eems[i], eems[j])) eliminated = true;
      else if (leq(i, j) && !leq(j, i)) eliminated = true;
    }
    if (!eliminated) out.views.insert(eems[i]);
  }
  for (std::size_t i = 0; i < eems.size(); ++i)
    for (std::size_t j = 0; j < eems.size(); ++j) {
      if (i == j) continue;
      if (subset(eems[i], eems[j]) && leq(j, i) && !leq(i, j))
        out.order_conflicts.push_back({eems[i], eems[j]});
    }
  return out;
}

inline std::set<BeliefView> aeem15(const FormulaPtr& f, const Bounds& bounds = {}) {
  return aeem15_full(f, bounds).views;
}

// ── ES20/ES21: relational equilibrium models ────────────────────────────────

struct RelationalShape {
  BeliefView cluster;
  std::set<Valuation> periphery;

  auto operator<=>(const RelationalShape&) const = default;
};

struct EemSet {
  FormulaPtr formula;
  RelationalMode mode = RelationalMode::KD45;
  std::set<BeliefView> s5_members;
  std::vector<RelationalShape> extended_members;
};

namespace detail {

inline bool shape_minimal(EqContext& ctx, const std::vector<Mask>& cluster,
                          const std::vector<Mask>& periphery, RelationalMode mode,
                          bool multivalued) {
  DeviantSpec spec;
  spec.cluster = cluster;
  spec.periphery = periphery;
  spec.mode = mode;
  spec.multivalued = multivalued;
  spec.required.assign(cluster.size(), 1);
  return !exists_deviant(ctx, spec);
}

template <typename F>
inline void peripheries_upto(const std::vector<Mask>& rest, int cap, F&& fn) {
  int n = static_cast<int>(rest.size());
  for (int k = 1; k <= cap && k <= n; ++k) {
    bool stop = false;
    combinations(n, k, [&](const std::vector<int>& idx) {
      std::vector<Mask> p;
      for (int i : idx) p.push_back(rest[static_cast<std::size_t>(i)]);
      if (!fn(p)) {
        stop = true;
        return false;
      }
      return true;
    });
    if (stop) break;
  }
}

}  // namespace detail

inline EemSet eem_relational(const FormulaPtr& f, RelationalMode mode, const Bounds& bounds = {},
                             bool functional_minimality = false) {
  auto ctx = detail::make_eq_context(f, bounds);
  EemSet out;
  out.formula = f;
  out.mode = mode;
  std::size_t n = ctx.universe.size();
  for (std::uint32_t sel = 1; sel < (1u << n); ++sel) {
    std::vector<Mask> cluster;
    std::vector<Mask> rest;
    for (std::size_t i = 0; i < n; ++i)
      (sel & (1u << i) ? cluster : rest).push_back(ctx.universe[i]);
    if (!detail::classical_s5_sat(ctx, cluster)) continue;
    if (detail::shape_minimal(ctx, cluster, {}, mode, !functional_minimality))
      out.s5_members.insert(detail::view_of(ctx.table, cluster));
    detail::peripheries_upto(rest, bounds.max_periphery, [&](const std::vector<Mask>& peri) {
      if (detail::classical_shape_sat(ctx, cluster, peri, mode) &&
          detail::shape_minimal(ctx, cluster, peri, mode, !functional_minimality)) {
        RelationalShape shape;
        shape.cluster = detail::view_of(ctx.table, cluster);
        for (Mask m : peri) shape.periphery.insert(detail::valuation_of(ctx.table, m));
        out.extended_members.push_back(std::move(shape));
      }
      return true;
    });
  }
  return out;
}

// Cluster-only equilibrium models with no proper extension among the
// equilibrium models of the same mode.
inline std::set<BeliefView> aeem_relational(const FormulaPtr& f, RelationalMode mode,
                                            const Bounds& bounds = {},
                                            bool functional_minimality = false) {
  auto ctx = detail::make_eq_context(f, bounds);
  std::set<BeliefView> out;
  std::size_t n = ctx.universe.size();
  for (std::uint32_t sel = 1; sel < (1u << n); ++sel) {
    std::vector<Mask> cluster;
    std::vector<Mask> rest;
    for (std::size_t i = 0; i < n; ++i)
      (sel & (1u << i) ? cluster : rest).push_back(ctx.universe[i]);
    if (!detail::classical_s5_sat(ctx, cluster)) continue;
    if (!detail::shape_minimal(ctx, cluster, {}, mode, !functional_minimality)) continue;
    bool extended = false;
    detail::peripheries_upto(rest, bounds.max_periphery, [&](const std::vector<Mask>& peri) {
      if (detail::classical_shape_sat(ctx, cluster, peri, mode) &&
          detail::shape_minimal(ctx, cluster, peri, mode, !functional_minimality)) {
        extended = true;
        return false;
      }
      return true;
    });
    if (!extended) out.insert(detail::view_of(ctx.table, cluster));
  }
  return out;
}

}  // namespace elp
