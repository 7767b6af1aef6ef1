// Acceptance suite: end-to-end checks of the workbench against its frozen
// expected results, one line per criterion.  Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "elp/elp.hpp"

using namespace elp;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const std::exception& e) {
    failure = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (failure.empty()) {
    std::printf("[PASS] criterion %d: %s (%lld ms)\n", number, title.c_str(),
                static_cast<long long>(ms));
  } else {
    ++g_failures;
    std::printf("[FAIL] criterion %d: %s\n       %s\n", number, title.c_str(), failure.c_str());
  }
}

struct CheckFail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFail(what);
}

Valuation val(std::initializer_list<const char*> lits) {
  std::vector<ObjectiveLiteral> v;
  for (const char* s : lits) v.push_back({s, false});
  return Valuation(v);
}

BeliefView view(std::initializer_list<Valuation> vs) { return {vs}; }

std::set<BeliefView> none() { return {}; }
std::set<BeliefView> just(const BeliefView& v) { return {v}; }

void expect_views(const Program& prog, SemanticsId sem, const std::set<BeliefView>& want) {
  auto got = solve(prog, sem).views;
  expect(got == want, std::string(to_string(sem)) + ": expected " + views_str(want) + ", got " +
                          views_str(got));
}

// ── exhaustive small-program family for criterion 8 ─────────────────────────
// Atoms a, b; heads over {none, a, b, a or b}; bodies of at most one element
// drawn from the objective pool over a, b plus the subjective pool over a
// (so every program has at most the two epistemic negations "not K a", "M a");
// programs are up to three distinct such rules.

std::vector<Rule> rule_pool() {
  std::vector<std::string> heads = {"", "a", "b", "a or b"};
  std::vector<std::string> bodies = {"",          "a",        "b",        "not a",
                                     "not b",     "not not a", "not not b", "K a",
                                     "M a",       "not K a",  "not M a"};
  std::vector<Rule> pool;
  for (const auto& h : heads)
    for (const auto& b : bodies) {
      if (h.empty() && b.empty()) continue;
      std::string text = h.empty() ? (":- " + b + ".")
                                   : (b.empty() ? h + "." : h + " :- " + b + ".");
      pool.push_back(parse_program(text).rules[0]);
    }
  return pool;
}

// world views by direct brute force over all belief views (no Phi-enumeration)
std::set<BeliefView> brute_force_reduct_views(const Program& prog, ReductVariant variant) {
  auto pool = detail::candidate_valuations(prog, Bounds{});
  struct Kept {
    std::set<EpistemicNegation> sat;
    BeliefView view;
  };
  std::vector<Kept> kept;
  for (std::uint32_t m = 1; m < (1u << pool.size()); ++m) {
    BeliefView v;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (m & (1u << i)) v.insert(pool[i]);
    if (!classical_s5_check(v, prog)) continue;
    auto as = answer_sets(modal_reduct(prog, v, variant));
    if (BeliefView(as.begin(), as.end()) != v) continue;
    kept.push_back({satisfied_ep(prog, v).satisfied, v});
  }
  std::set<BeliefView> out;
  for (const auto& c : kept) {
    bool maximal = true;
    for (const auto& o : kept)
      if (c.sat != o.sat && std::includes(o.sat.begin(), o.sat.end(), c.sat.begin(), c.sat.end()))
        maximal = false;
    if (maximal) out.insert(c.view);
  }
  return out;
}

// ── validity-suite instantiation schemata ───────────────────────────────────

std::vector<FormulaPtr> instantiation_pool() {
  return {f_atom("p"), f_atom("q"), f_neg(f_atom("p")), f_k(f_atom("p")),
          f_khat(f_atom("q"))};
}

void expect_valid_everywhere(const FormulaPtr& f, const ValidityBounds& vb,
                             const std::string& label) {
  for (auto variant : {EhtVariant::Functional, EhtVariant::KD45, EhtVariant::SW5}) {
    auto res = eht_valid(f, variant, vb);
    expect(res.valid, label + " not valid in " + to_string(variant) +
                          (res.countermodel ? ": " + res.countermodel->str() : ""));
  }
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");

  const Program psi = parse_program("a or b. a :- K b. b :- K a.");
  const Program psi_prime = parse_program("a or b. a :- K b. b :- K a. :- not K a.");
  const BeliefView two_worlds = view({val({"a"}), val({"b"})});
  const BeliefView ab = view({val({"a", "b"})});

  criterion(1, "mutual-knowledge program and its subjective constraint", [&] {
    for (auto sem : {SemanticsId::Es16, SemanticsId::Es18, SemanticsId::Es15})
      expect_views(psi, sem, just(two_worlds));
    for (auto sem : {SemanticsId::Es15, SemanticsId::Es16, SemanticsId::Es18})
      expect_views(psi_prime, sem, just(ab));
    expect_views(psi_prime, SemanticsId::Es20, none());
    expect_views(psi_prime, SemanticsId::Es21, none());
  });

  criterion(2, "splitting example: fragment, pre-selection members, full program", [&] {
    Program sigma1 = parse_program("a or b. c :- K a.");
    expect_views(sigma1, SemanticsId::Es16, just(two_worlds));
    expect_views(sigma1, SemanticsId::Es18, just(two_worlds));

    BeliefView ac = view({val({"a", "c"})});
    FormulaPtr f1 = translate(sigma1);
    auto e15 = eem15(f1);
    expect(e15.count(two_worlds) && e15.count(ac),
           "EEM15 of the fragment misses a pre-selection member");
    auto e20 = eem_relational(f1, RelationalMode::KD45);
    expect(e20.s5_members.count(two_worlds) && e20.s5_members.count(ac),
           "EEM20 of the fragment misses a pre-selection member");

    Program sigma = parse_program("a or b. c :- K a. :- not c.");
    for (auto sem : {SemanticsId::Es15, SemanticsId::Es16, SemanticsId::Es18})
      expect_views(sigma, sem, just(ac));
    expect_views(sigma, SemanticsId::Es20, none());
    expect_views(sigma, SemanticsId::Es21, just(ac));
  });

  criterion(3, "may-be-believed rule separates the relational semantics", [&] {
    Program delta = parse_program("a or b. b :- M a.");
    BeliefView b = view({val({"b"})});
    expect_views(delta, SemanticsId::Es15, just(b));
    expect_views(delta, SemanticsId::Es21, just(b));
    expect_views(delta, SemanticsId::Es20, none());
  });

  criterion(4, "constraint-protected disjunction", [&] {
    Program upsilon = parse_program("a or b. c or d :- not K a. :- c. :- d.");
    BeliefView a = view({val({"a"})});
    for (auto sem :
         {SemanticsId::Es15, SemanticsId::Es16, SemanticsId::Es18, SemanticsId::Es21})
      expect_views(upsilon, sem, just(a));
    expect_views(upsilon, SemanticsId::Es20, none());
  });

  criterion(5, "modal-operator contrasts", [&] {
    FormulaPtr m_p = f_neg(f_k(f_neg(f_atom("p"))));  // M p translated
    expect(aeem15(m_p).empty(), "M p unexpectedly has an AEEM under es15");
    expect(aeem_relational(m_p, RelationalMode::SW5).empty(),
           "M p unexpectedly has an AEEM under es21");

    FormulaPtr khat_p = f_khat(f_atom("p"));
    expect(aeem15(khat_p) == just(view({val({}), val({"p"})})),
           "KHAT p should have the two-world view under es15");

    FormulaPtr k_p = f_k(f_atom("p"));
    expect(aeem_relational(k_p, RelationalMode::KD45).empty(),
           "K p should have no AEEM under es20");
    expect(aeem_relational(k_p, RelationalMode::SW5) == just(view({val({"p"})})),
           "K p should have exactly {{p}} under es21");
  });

  criterion(6, "validity suite within bounds (2 atoms, cluster <= 3, periphery <= 1)", [&] {
    ValidityBounds vb;  // defaults are exactly the stated bounds
    auto pool = instantiation_pool();

    for (const auto& x : pool)
      for (const auto& y : pool) {
        expect_valid_everywhere(f_iff(f_neg(f_and(x, y)), f_or(f_neg(x), f_neg(y))),
                                vb, "de Morgan (and)");
        expect_valid_everywhere(f_iff(f_neg(f_or(x, y)), f_and(f_neg(x), f_neg(y))),
                                vb, "de Morgan (or)");
      }
    for (const auto& x : pool) {
      expect_valid_everywhere(f_or(f_neg(x), f_neg(f_neg(x))), vb, "weak excluded middle");
      expect_valid_everywhere(f_iff(f_neg(f_neg(f_neg(x))), f_neg(x)), vb, "triple negation");
    }

    // (--x & c -> y) <-> (c -> -x | y)  and  (-x & c -> y) <-> (c -> --x | y)
    for (const auto& x : pool)
      for (const auto& c : pool)
        for (const auto& y : pool) {
          expect_valid_everywhere(
              f_iff(f_implies(f_and(f_neg(f_neg(x)), c), y), f_implies(c, f_or(f_neg(x), y))),
              vb, "double-negation shift (i)");
          expect_valid_everywhere(
              f_iff(f_implies(f_and(f_neg(x), c), y), f_implies(c, f_or(f_neg(f_neg(x)), y))),
              vb, "double-negation shift (ii)");
        }

    // the chi = top corollary
    for (const auto& x : pool)
      for (const auto& y : pool) {
        expect_valid_everywhere(f_iff(f_implies(f_neg(f_neg(x)), y), f_or(f_neg(x), y)), vb,
                                "corollary (i)");
        expect_valid_everywhere(f_iff(f_implies(f_neg(x), y), f_or(y, f_neg(f_neg(x)))), vb,
                                "corollary (ii)");
      }

    // the belief chain -K-x <-> --KHAT x <-> KHAT --x
    for (const auto& x : pool) {
      expect_valid_everywhere(f_iff(f_neg(f_k(f_neg(x))), f_neg(f_neg(f_khat(x)))), vb,
                              "belief chain (left)");
      expect_valid_everywhere(f_iff(f_neg(f_neg(f_khat(x))), f_khat(f_neg(f_neg(x)))), vb,
                              "belief chain (right)");
    }

    // box-double-negation exchange --K x <-> K --x
    for (const auto& x : pool)
      expect_valid_everywhere(f_iff(f_neg(f_neg(f_k(x))), f_k(f_neg(f_neg(x)))), vb,
                              "--K <-> K-- exchange");

    // reflexivity: an SW5 axiom, refuted in KD45 for world-level instantiations
    for (const auto& x : pool) {
      expect(eht_valid(f_implies(f_k(x), x), EhtVariant::SW5, vb).valid,
             "K x -> x not SW5-valid");
      expect(eht_valid(f_implies(f_k(x), x), EhtVariant::Functional, vb).valid,
             "K x -> x not functionally valid");
    }
    for (const auto& x : {f_atom("p"), f_atom("q"), f_neg(f_atom("p"))}) {
      auto res = eht_valid(f_implies(f_k(x), x), EhtVariant::KD45, vb);
      expect(!res.valid && res.countermodel.has_value(),
             "K x -> x lacks the expected KD45 countermodel");
    }
    // scope-global instantiations stay KD45-valid
    for (const auto& x : {f_k(f_atom("p")), f_khat(f_atom("q"))})
      expect(eht_valid(f_implies(f_k(x), x), EhtVariant::KD45, vb).valid,
             "K x -> x should be KD45-valid for modal x");
  });

  criterion(7, "supra-ASP over 100 seeded random non-epistemic programs", [&] {
    std::mt19937 rng(20260809);
    static const char* names[] = {"a", "b", "c"};
    for (int trial = 0; trial < 100; ++trial) {
      Program p;
      int nr = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < nr; ++i) {
        Rule r;
        std::size_t nh = rng() % 3;
        for (std::size_t h = 0; h < nh; ++h) r.head.push_back({names[rng() % 3], false});
        std::size_t nb = rng() % 3;
        if (r.head.empty() && nb == 0) nb = 1;
        for (std::size_t b = 0; b < nb; ++b)
          r.body.push_back(ExtendedObjectiveLiteral{{names[rng() % 3], false},
                                                    static_cast<int>(rng() % 3)});
        p.rules.push_back(r);
      }
      auto as = answer_sets(p);
      std::set<BeliefView> want;
      if (!as.empty()) want.insert(BeliefView(as.begin(), as.end()));
      for (auto sem : all_semantics()) {
        auto got = solve(p, sem).views;
        expect(got == want, "trial " + std::to_string(trial) + " (" + render(p) + ") under " +
                                to_string(sem) + ": got " + views_str(got) + ", want " +
                                views_str(want));
      }
    }
    // the classical excluded-middle idiom through the formula pipeline
    FormulaPtr pnp = parse_eht_formula("p | -p");
    auto want = just(view({val({}), val({"p"})}));
    expect(aeem15(pnp) == want, "p | -p under es15");
    expect(aeem_relational(pnp, RelationalMode::KD45) == want, "p | -p under es20");
    expect(aeem_relational(pnp, RelationalMode::SW5) == want, "p | -p under es21");
    // and the program spelling of the same idiom for all five semantics
    Program idiom = parse_program("p :- not not p.");
    for (auto sem : all_semantics()) expect_views(idiom, sem, want);
  });

  criterion(8, "oracle equivalence on the exhaustive two-atom family", [&] {
    auto pool = rule_pool();
    std::vector<Program> family;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      family.push_back(Program{{pool[i]}});
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        family.push_back(Program{{pool[i], pool[j]}});
        for (std::size_t k = j + 1; k < pool.size(); ++k)
          family.push_back(Program{{pool[i], pool[j], pool[k]}});
      }
    }
    Bounds capped;
    Bounds uncapped;
    uncapped.max_periphery = 8;
    long long mismatches = 0;
    for (const auto& prog : family) {
      for (auto variant : {ReductVariant::Es18, ReductVariant::Es16}) {
        if (world_views_reduct(prog, variant).views != brute_force_reduct_views(prog, variant))
          ++mismatches;
      }
      FormulaPtr f = translate(prog);
      for (auto mode : {RelationalMode::KD45, RelationalMode::SW5})
        if (aeem_relational(f, mode, capped) != aeem_relational(f, mode, uncapped))
          ++mismatches;
    }
    expect(mismatches == 0, std::to_string(mismatches) + " mismatches over " +
                                std::to_string(family.size()) + " programs");
  });

  criterion(9, "subjective-constraint monotonicity spot checks", [&] {
    Rule r4 = parse_program(":- not K a.").rules[0];
    auto es18 = check_scm(psi, r4, SemanticsId::Es18);
    expect(!es18.holds, "scm unexpectedly holds under es18");
    expect(es18.witness_view == ab,
           "es18 witness should be the merged view { {a,b} }");
    expect(check_scm(psi, r4, SemanticsId::Es20).holds, "scm fails under es20");
    expect(check_scm(psi, r4, SemanticsId::Es21).holds, "scm fails under es21");
  });

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
