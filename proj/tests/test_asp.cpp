#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "elp/asp.hpp"
#include "elp/parser.hpp"
#include "elp/printer.hpp"

using namespace elp;

namespace {

Valuation val(std::initializer_list<const char*> lits) {
  std::vector<ObjectiveLiteral> v;
  for (const char* s : lits) {
    std::string t = s;
    if (!t.empty() && t[0] == '~') v.push_back({t.substr(1), true});
    else v.push_back({t, false});
  }
  return Valuation(v);
}

std::set<Valuation> vals(std::initializer_list<Valuation> vs) { return {vs}; }

// ── independent here-and-there oracle ───────────────────────────────────────
// Hand-rolled HT evaluation of a non-epistemic atom-only program at a pair
// (H, T): answer sets are the T with (T,T) a model and no H strictly below.
// Deliberately separate from the library's reduct machinery.

bool ht_sat_lit(const Valuation& H, const Valuation& T, const ExtendedObjectiveLiteral& e,
                bool there) {
  const Valuation& w = there ? T : H;
  switch (e.naf_depth) {
    case 0: return w.contains(e.lit);
    case 1: return !T.contains(e.lit);  // negation looks at "there" on both levels
    default: return T.contains(e.lit);
  }
}

bool ht_sat_rule(const Valuation& H, const Valuation& T, const Rule& r, bool there) {
  // an HT pair satisfies the rule if body -> head holds at "here" and
  // classically at "there"
  auto level = [&](bool lv) {
    for (const auto& e : r.body)
      if (!ht_sat_lit(H, T, std::get<ExtendedObjectiveLiteral>(e), lv)) return true;
    for (const auto& l : r.head)
      if ((lv ? T : H).contains(l)) return true;
    return false;
  };
  return there ? level(true) : level(false) && level(true);
}

bool ht_sat_program(const Valuation& H, const Valuation& T, const Program& p, bool there) {
  for (const auto& r : p.rules)
    if (!ht_sat_rule(H, T, r, there)) return false;
  return true;
}

std::set<Valuation> ht_equilibrium_answer_sets(const Program& p) {
  std::set<std::string> atoms = p.atoms();
  std::vector<std::string> as(atoms.begin(), atoms.end());
  std::set<Valuation> out;
  for (std::uint32_t tm = 0; tm < (1u << as.size()); ++tm) {
    std::vector<ObjectiveLiteral> tl;
    for (std::size_t i = 0; i < as.size(); ++i)
      if (tm & (1u << i)) tl.push_back({as[i], false});
    Valuation T(tl);
    if (!ht_sat_program(T, T, p, true)) continue;
    bool minimal = true;
    for (std::uint32_t hm = tm; minimal && tm != 0;) {
      hm = (hm - 1) & tm;
      std::vector<ObjectiveLiteral> hl;
      for (std::size_t i = 0; i < as.size(); ++i)
        if (hm & (1u << i)) hl.push_back({as[i], false});
      Valuation H(hl);
      if (H != T && ht_sat_program(H, T, p, false)) minimal = false;
      if (hm == 0) break;
    }
    if (minimal) out.insert(T);
  }
  return out;
}

Program random_objective_program(std::mt19937& rng, int n_atoms, int max_rules) {
  static const char* names[] = {"a", "b", "c"};
  Program p;
  int nr = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_rules));
  for (int i = 0; i < nr; ++i) {
    Rule r;
    std::size_t nh = rng() % 3;
    for (std::size_t h = 0; h < nh; ++h)
      r.head.push_back({names[rng() % static_cast<unsigned>(n_atoms)], false});
    std::size_t nb = rng() % 3;
    if (r.head.empty() && nb == 0) nb = 1;
    for (std::size_t b = 0; b < nb; ++b)
      r.body.push_back(ExtendedObjectiveLiteral{
          {names[rng() % static_cast<unsigned>(n_atoms)], false}, static_cast<int>(rng() % 3)});
    p.rules.push_back(r);
  }
  return p;
}

}  // namespace

TEST_CASE("extended objective literal satisfaction") {
  REQUIRE_FALSE(satisfies_objective(val({"p"}), {{"p", false}, 1}));
  REQUIRE(satisfies_objective(val({}), {{"p", false}, 1}));
  REQUIRE(satisfies_objective(val({"p"}), {{"p", false}, 2}));
  REQUIRE(satisfies_objective(val({"p"}), {{"p", false}, 0}));
  REQUIRE_FALSE(satisfies_objective(val({"p"}), {{"p", true}, 0}));
  REQUIRE(satisfies_objective(val({"~p"}), {{"p", true}, 0}));
  REQUIRE_THROWS_AS(satisfies_objective(val({}), {{"p", false}, 3}), ArgumentError);
}

TEST_CASE("valuations reject inconsistency") {
  REQUIRE_THROWS_AS(Valuation({{"p", false}, {"p", true}}), ArgumentError);
}

TEST_CASE("gl reduct deletes or drops per naf depth") {
  REQUIRE(render(gl_reduct(parse_program("p :- not q."), val({}))) == "p.");
  REQUIRE(render(gl_reduct(parse_program("p :- not q."), val({"q"}))) == "");
  REQUIRE(render(gl_reduct(parse_program("p."), val({"p"}))) == "p.");
  REQUIRE(render(gl_reduct(parse_program("a :- not not a."), val({"a"}))) == "a.");
  REQUIRE(render(gl_reduct(parse_program("a :- not not a."), val({}))) == "");
  REQUIRE_THROWS_AS(gl_reduct(parse_program("a :- K b."), val({})), ArgumentError);
}

TEST_CASE("cross-check of the depth-2 reduct against the answer-set oracle") {
  REQUIRE(answer_sets(parse_program("a :- not not a.")) == vals({val({}), val({"a"})}));
}

TEST_CASE("answer set basics") {
  REQUIRE(answer_sets(parse_program("p.")) == vals({val({"p"})}));
  REQUIRE(answer_sets(parse_program("p :- not p.")).empty());
  REQUIRE(answer_sets(parse_program("p or q.")) == vals({val({"p"}), val({"q"})}));
  REQUIRE(answer_sets(parse_program("p :- not q. q :- not p.")) ==
          vals({val({"p"}), val({"q"})}));
  REQUIRE(answer_sets(parse_program("")) == vals({val({})}));
  REQUIRE(answer_sets(parse_program("p. :- p.")).empty());
}

TEST_CASE("disjunctive minimality is checked by subset enumeration") {
  REQUIRE(answer_sets(parse_program("a or b. a :- b. b :- a.")) == vals({val({"a", "b"})}));
  REQUIRE(answer_sets(parse_program("a or b. :- not a. :- not b.")).empty());
}

TEST_CASE("strong negation behaves as a fresh atom plus consistency") {
  REQUIRE(answer_sets(parse_program("~p.")) == vals({val({"~p"})}));
  REQUIRE(answer_sets(parse_program("p. ~p.")).empty());
  REQUIRE(answer_sets(parse_program("~p :- not p.")) == vals({val({"~p"})}));
}

TEST_CASE("atom bound is enforced with a named bound") {
  std::string text;
  for (char c = 'a'; c <= 'm'; ++c) text += std::string(1, c) + ". ";
  try {
    answer_sets(parse_program(text));
    FAIL("expected BoundError");
  } catch (const BoundError& e) {
    REQUIRE(std::string(e.what()).find("12") != std::string::npos);
  }
}

TEST_CASE("answer sets match the independent HT-equilibrium oracle") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 400; ++trial) {
    Program p = random_objective_program(rng, 3, 4);
    INFO(render(p));
    REQUIRE(answer_sets(p) == ht_equilibrium_answer_sets(p));
  }
}

TEST_CASE("every answer set is a consistent minimal classical model of its reduct") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    Program p = random_objective_program(rng, 3, 4);
    for (const auto& v : answer_sets(p)) {
      Program r = gl_reduct(p, v);
      REQUIRE(detail::classically_satisfies(v, p));
      REQUIRE(detail::classically_satisfies(v, r));
      for (const auto& w : answer_sets(p))
        if (w != v)
          REQUIRE_FALSE((w.proper_subset_of(v) && detail::classically_satisfies(w, r)));
    }
  }
}

TEST_CASE("classical S5 check over belief views") {
  Program psi = parse_program("a or b. a :- K b. b :- K a.");
  BeliefView two = {val({"a"}), val({"b"})};
  REQUIRE(classical_s5_check(two, psi));

  Program psi_prime = parse_program("a or b. a :- K b. b :- K a. :- not K a.");
  REQUIRE_FALSE(classical_s5_check(two, psi_prime));
  REQUIRE(classical_s5_check({val({"a", "b"})}, psi_prime));

  REQUIRE(classical_s5_check({val({})}, parse_program("")));
  REQUIRE_THROWS_AS(classical_s5_check({}, psi), ArgumentError);

  // wv rules are not satisfaction-bearing
  Program wv = parse_program("a or b. :-wv not K a.");
  REQUIRE(classical_s5_check(two, wv));

  // M and KHAT on total views
  Program m = parse_program("c :- M a.");
  REQUIRE(classical_s5_check({val({"a", "c"}), val({"c"})}, m));
  REQUIRE_FALSE(classical_s5_check({val({"a"}), val({})}, m));
  Program kh = parse_program("c :- KHAT a.");
  REQUIRE_FALSE(classical_s5_check({val({"a"}), val({})}, kh));
}
