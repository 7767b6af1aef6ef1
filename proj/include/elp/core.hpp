// core.hpp — shared value types for ground epistemic logic programs.
//
// A Valuation is a consistent set of objective literals (an answer-set
// candidate); a BeliefView is a nonempty set of valuations (a candidate
// world-view, i.e. a classical S5 cluster).  Both are immutable after
// construction and ordered, so they can live in std::set and print
// deterministically.

#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace elp {

// ── errors ──────────────────────────────────────────────────────────────────

class ElpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text.  Carries a 1-based line/column when known.
class ParseError : public ElpError {
 public:
  ParseError(const std::string& msg, int line = 0, int col = 0)
      : ElpError(line > 0 ? msg + " (line " + std::to_string(line) + ", column " +
                                std::to_string(col) + ")"
                          : msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_;
  int col_;
};

// A configured search bound was exceeded.  CLI maps this to exit code 2.
class BoundError : public ElpError {
 public:
  using ElpError::ElpError;
};

// Construct is outside the chosen semantics (e.g. KHAT under a reduct
// semantics, or a world-view construct under ES16).
class UnsupportedError : public ElpError {
 public:
  using ElpError::ElpError;
};

// Violated precondition on an operation argument.
class ArgumentError : public ElpError {
 public:
  using ElpError::ElpError;
};

// ── semantics identifiers ───────────────────────────────────────────────────

enum class SemanticsId { Es15, Es16, Es18, Es20, Es21 };

inline const char* to_string(SemanticsId s) {
  switch (s) {
    case SemanticsId::Es15: return "es15";
    case SemanticsId::Es16: return "es16";
    case SemanticsId::Es18: return "es18";
    case SemanticsId::Es20: return "es20";
    case SemanticsId::Es21: return "es21";
  }
  return "?";
}

inline SemanticsId semantics_from_string(const std::string& s) {
  if (s == "es15") return SemanticsId::Es15;
  if (s == "es16") return SemanticsId::Es16;
  if (s == "es18") return SemanticsId::Es18;
  if (s == "es20") return SemanticsId::Es20;
  if (s == "es21") return SemanticsId::Es21;
  throw ArgumentError("unknown semantics '" + s + "' (expected es15|es16|es18|es20|es21)");
}

inline const std::vector<SemanticsId>& all_semantics() {
  static const std::vector<SemanticsId> all = {SemanticsId::Es15, SemanticsId::Es16,
                                               SemanticsId::Es18, SemanticsId::Es20,
                                               SemanticsId::Es21};
  return all;
}

// ── bounds ──────────────────────────────────────────────────────────────────

// Knobs for the exhaustive searches.  Defaults keep every desk-scale program
// sub-second; exceeding any of them raises BoundError rather than hanging.
struct Bounds {
  int max_atoms = 12;             // answer-set candidate enumeration
  int max_ep = 12;                // epistemic-negation subset enumeration
  int max_classical_models = 16;  // equilibrium universe size
  int max_periphery = 2;          // extension worlds tried per cluster
  long long max_search = 4'000'000;  // guard on (multivalued) subset-function spaces
};

// ── objective literals ──────────────────────────────────────────────────────

// p or ~p.  Double strong negation is not representable.
struct ObjectiveLiteral {
  std::string atom;
  bool strong_neg = false;

  auto operator<=>(const ObjectiveLiteral&) const = default;

  std::string str() const { return strong_neg ? "~" + atom : atom; }
};

inline ObjectiveLiteral pos(std::string atom) { return {std::move(atom), false}; }
inline ObjectiveLiteral sneg(std::string atom) { return {std::move(atom), true}; }

// ── valuations ──────────────────────────────────────────────────────────────

// Consistent literal set: p and ~p never both members.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<ObjectiveLiteral> lits)
      : Valuation(std::vector<ObjectiveLiteral>(lits)) {}
  explicit Valuation(std::vector<ObjectiveLiteral> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
    for (const auto& l : lits_) {
      if (l.strong_neg && contains({l.atom, false}))
        throw ArgumentError("inconsistent valuation: contains both " + l.atom + " and ~" +
                            l.atom);
    }
  }

  bool contains(const ObjectiveLiteral& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }
  bool empty() const { return lits_.empty(); }
  std::size_t size() const { return lits_.size(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  const std::vector<ObjectiveLiteral>& literals() const { return lits_; }

  bool subset_of(const Valuation& other) const {
    return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
  }
  bool proper_subset_of(const Valuation& other) const {
    return lits_.size() < other.lits_.size() && subset_of(other);
  }

  auto operator<=>(const Valuation&) const = default;

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < lits_.size(); ++i) {
      if (i) out += ",";
      out += lits_[i].str();
    }
    return out + "}";
  }

 private:
  std::vector<ObjectiveLiteral> lits_;  // sorted, unique
};

// Nonempty set of valuations.  Emptiness is not representable as a view at
// the type level; solvers never emit an empty view, and checks taking a view
// reject empty input.
using BeliefView = std::set<Valuation>;

inline std::string view_str(const BeliefView& view) {
  std::string out = "{ ";
  bool first = true;
  for (const auto& v : view) {
    if (!first) out += ", ";
    first = false;
    out += v.str();
  }
  return out + " }";
}

inline std::string views_str(const std::set<BeliefView>& views) {
  if (views.empty()) return "(none)";
  std::string out;
  for (const auto& v : views) {
    if (!out.empty()) out += "\n";
    out += view_str(v);
  }
  return out;
}

}  // namespace elp
