#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "elp/parser.hpp"
#include "elp/printer.hpp"
#include "elp/properties.hpp"

using namespace elp;

namespace {

Valuation val(std::initializer_list<const char*> lits) {
  std::vector<ObjectiveLiteral> v;
  for (const char* s : lits) v.push_back({s, false});
  return Valuation(v);
}

BeliefView view(std::initializer_list<Valuation> vs) { return {vs}; }

const char* kPsi = "a or b. a :- K b. b :- K a.";
const char* kR4 = ":- not K a.";

}  // namespace

TEST_CASE("compare across all five semantics on the contested program") {
  Program psi_prime = parse_program("a or b. a :- K b. b :- K a. :- not K a.");
  auto report = compare(psi_prime, all_semantics());
  std::set<BeliefView> one = {view({val({"a", "b"})})};
  REQUIRE(report.per_semantics.at(SemanticsId::Es15) == one);
  REQUIRE(report.per_semantics.at(SemanticsId::Es16) == one);
  REQUIRE(report.per_semantics.at(SemanticsId::Es18) == one);
  REQUIRE(report.per_semantics.at(SemanticsId::Es20).empty());
  REQUIRE(report.per_semantics.at(SemanticsId::Es21).empty());
  bool agree_note = false;
  for (const auto& n : report.notes)
    if (n.find("es16 and es18 agree") != std::string::npos) agree_note = true;
  REQUIRE(agree_note);
}

TEST_CASE("compare on the M-rule program") {
  Program delta = parse_program("a or b. b :- M a.");
  auto report = compare(delta, {SemanticsId::Es15, SemanticsId::Es20, SemanticsId::Es21});
  REQUIRE(report.per_semantics.at(SemanticsId::Es15) == std::set<BeliefView>{view({val({"b"})})});
  REQUIRE(report.per_semantics.at(SemanticsId::Es20).empty());
  REQUIRE(report.per_semantics.at(SemanticsId::Es21) == std::set<BeliefView>{view({val({"b"})})});
}

TEST_CASE("compare on the constraint-protected disjunction") {
  Program upsilon = parse_program("a or b. c or d :- not K a. :- c. :- d.");
  auto report = compare(upsilon, all_semantics());
  std::set<BeliefView> a_only = {view({val({"a"})})};
  for (auto s : {SemanticsId::Es15, SemanticsId::Es16, SemanticsId::Es18, SemanticsId::Es21})
    REQUIRE(report.per_semantics.at(s) == a_only);
  REQUIRE(report.per_semantics.at(SemanticsId::Es20).empty());
}

TEST_CASE("compare is stable under rule reordering") {
  std::mt19937 rng(8128);
  for (const char* text :
       {"a or b. a :- K b. b :- K a. :- not K a.", "a or b. c :- K a. :- not c.",
        "a or b. b :- M a."}) {
    Program prog = parse_program(text);
    auto baseline = compare(prog, all_semantics());
    for (int shuffle = 0; shuffle < 4; ++shuffle) {
      Program shuffled = prog;
      std::shuffle(shuffled.rules.begin(), shuffled.rules.end(), rng);
      auto report = compare(shuffled, all_semantics());
      for (auto s : all_semantics())
        REQUIRE(report.per_semantics.at(s) == baseline.per_semantics.at(s));
    }
  }
}

TEST_CASE("SCM verdicts on the contested constraint") {
  Program psi = parse_program(kPsi);
  Rule r4 = parse_program(kR4).rules[0];

  auto es18 = check_scm(psi, r4, SemanticsId::Es18);
  REQUIRE_FALSE(es18.holds);
  REQUIRE(es18.witness_view == view({val({"a", "b"})}));

  REQUIRE(check_scm(psi, r4, SemanticsId::Es20).holds);
  REQUIRE(check_scm(psi, r4, SemanticsId::Es21).holds);
  REQUIRE_FALSE(check_scm(psi, r4, SemanticsId::Es15).holds);
  REQUIRE_FALSE(check_scm(psi, r4, SemanticsId::Es16).holds);
}

TEST_CASE("SCM holds when the constraint is satisfied") {
  Program a = parse_program("a.");
  Rule c = parse_program(":- not K a.").rules[0];
  for (auto s : all_semantics()) {
    auto verdict = check_scm(a, c, s);
    REQUIRE(verdict.holds);
    REQUIRE(solve(a, s).views == std::set<BeliefView>{view({val({"a"})})});
  }
}

TEST_CASE("SCM accepts wv-constraints and rejects non-subjective rules") {
  Program psi = parse_program(kPsi);
  Rule wv = parse_program(":-wv not K a.").rules[0];
  REQUIRE(check_scm(psi, wv, SemanticsId::Es18).holds);  // wv rules only strike views
  Rule objective = parse_program(":- a.").rules[0];
  REQUIRE_THROWS_AS(check_scm(psi, objective, SemanticsId::Es18), ArgumentError);
}

TEST_CASE("SCM sampling over subjective constraints holds for ES20 on the whole corpus") {
  const char* constraints[] = {":- K a.", ":- not K a.", ":- M b.", ":- not M b.",
                               ":- K a, not K b."};
  for (const char* prog_text :
       {kPsi, "a or b. a :- K b. b :- K a. :- not K a.", "a or b. c :- K a.",
        "a or b. c :- K a. :- not c.", "a or b. b :- M a.",
        "a or b. c or d :- not K a. :- c. :- d."}) {
    Program prog = parse_program(prog_text);
    for (const char* c : constraints) {
      Rule r = parse_program(c).rules[0];
      INFO(prog_text << " + " << c);
      REQUIRE(check_scm(prog, r, SemanticsId::Es20).holds);
    }
  }
}

TEST_CASE("supra-ASP spot checks") {
  for (auto s : all_semantics()) {
    REQUIRE(check_supra_asp(parse_program("p :- not q. q :- not p."), s).holds);
    REQUIRE(check_supra_asp(parse_program("p."), s).holds);
    REQUIRE(check_supra_asp(parse_program("p :- not p."), s).holds);
  }
  REQUIRE(solve(parse_program("p :- not q. q :- not p."), SemanticsId::Es20).views ==
          std::set<BeliefView>{view({val({"p"}), val({"q"})})});
  REQUIRE_THROWS_AS(check_supra_asp(parse_program("a :- K b."), SemanticsId::Es18),
                    ArgumentError);
}

TEST_CASE("supra-S5 spot checks") {
  REQUIRE(check_supra_s5(parse_program("a or b. c :- K a. :- not c."), SemanticsId::Es21).holds);
  REQUIRE(check_supra_s5(parse_program(kPsi), SemanticsId::Es18).holds);
  for (auto s : all_semantics()) REQUIRE(check_supra_s5(parse_program(""), s).holds);
}

TEST_CASE("solve reports strong negation in views") {
  Program p = parse_program("~p. q :- K ~p.");
  for (auto s : all_semantics()) {
    INFO(to_string(s));
    REQUIRE(solve(p, s).views ==
            std::set<BeliefView>{view({Valuation{{"p", true}, {"q", false}}})});
  }
}

TEST_CASE("solve rejects KHAT under the reduct semantics and accepts it elsewhere") {
  Program p = parse_program("a :- KHAT a.");
  REQUIRE_THROWS_AS(solve(p, SemanticsId::Es18), UnsupportedError);
  REQUIRE_THROWS_AS(solve(p, SemanticsId::Es16), UnsupportedError);
  REQUIRE(aeem15(parse_eht_formula("KHAT p")) ==
          std::set<BeliefView>{view({val({}), val({"p"})})});
  // self-supported belief stays unfounded under the equilibrium semantics
  for (auto s : {SemanticsId::Es15, SemanticsId::Es20, SemanticsId::Es21})
    REQUIRE(solve(p, s).views == std::set<BeliefView>{view({val({})})});
}

TEST_CASE("empty program has the empty-valuation world view everywhere") {
  Program p = parse_program("");
  for (auto s : all_semantics())
    REQUIRE(solve(p, s).views == std::set<BeliefView>{view({val({})})});
}

TEST_CASE("random epistemic programs: every returned view is an S5-model") {
  std::mt19937 rng(246810);
  static const char* names[] = {"a", "b"};
  for (int trial = 0; trial < 120; ++trial) {
    Program p;
    int nr = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nr; ++i) {
      Rule r;
      std::size_t nh = rng() % 3;
      for (std::size_t h = 0; h < nh; ++h)
        r.head.push_back({names[rng() % 2], rng() % 5 == 0});
      std::size_t nb = rng() % 3;
      if (r.head.empty() && nb == 0) nb = 1;
      for (std::size_t b = 0; b < nb; ++b) {
        if (rng() % 3 == 0) {
          Modality m = static_cast<Modality>(rng() % 3);
          r.body.push_back(
              ExtendedSubjectiveLiteral{{m, {names[rng() % 2], rng() % 5 == 0}}, rng() % 2 == 0});
        } else {
          r.body.push_back(ExtendedObjectiveLiteral{{names[rng() % 2], rng() % 5 == 0},
                                                    static_cast<int>(rng() % 3)});
        }
      }
      p.rules.push_back(r);
    }
    bool khat = p.has_modality(Modality::KHat);
    for (auto s : all_semantics()) {
      if (khat && (s == SemanticsId::Es16 || s == SemanticsId::Es18)) continue;
      INFO(render(p));
      INFO(to_string(s));
      auto verdict = check_supra_s5(p, s);
      REQUIRE(verdict.holds);
    }
  }
}

TEST_CASE("self-supported knowledge stays unfounded under every semantics") {
  Program p = parse_program("a :- K a.");
  for (auto s : all_semantics()) {
    INFO(to_string(s));
    REQUIRE(solve(p, s).views == std::set<BeliefView>{view({val({})})});
  }
}

TEST_CASE("belief cycle: derived per-semantics values") {
  // a :- M a. reads "a holds if a may be believed"; the reflexive relational
  // semantics agrees with the reduct ones, while the irreflexive one also
  // keeps the empty view (the extension that would strike it fails the
  // truth-minimality condition).
  Program p = parse_program("a :- M a.");
  std::set<BeliefView> a_only = {view({val({"a"})})};
  REQUIRE(solve(p, SemanticsId::Es16).views == a_only);
  REQUIRE(solve(p, SemanticsId::Es18).views == a_only);
  REQUIRE(solve(p, SemanticsId::Es15).views == a_only);
  REQUIRE(solve(p, SemanticsId::Es21).views == a_only);
  REQUIRE(solve(p, SemanticsId::Es20).views ==
          std::set<BeliefView>{view({val({})}), view({val({"a"})})});
}
