// elp — command line front end for the epistemic logic program workbench.
//
//   elp solve     --semantics es18 program.lp
//   elp compare   program.lp
//   elp reduct    --variant es18 --view "{a,c}" program.lp
//   elp translate program.lp
//   elp check     --property scm --semantics es18 --constraint ":- not K a." program.lp
//   elp validate  --variant functional "---p <-> -p"
//
// Programs come from a file argument or stdin.  Exit codes: 0 success (also
// for "no world views"), 1 usage or parse errors, 2 bound exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elp/elp.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw elp::ArgumentError("cannot open input file '" + path + "'");
    ss << in.rdbuf();
  }
  std::string text = ss.str();
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);  // UTF-8 BOM
  return text;
}

std::vector<elp::SemanticsId> parse_semantics_list(const std::string& spec) {
  if (spec == "all") return elp::all_semantics();
  std::vector<elp::SemanticsId> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(elp::semantics_from_string(item));
  }
  if (out.empty()) throw elp::ArgumentError("empty semantics selection");
  return out;
}

// "{a,~b}" -> valuation
elp::Valuation parse_valuation_arg(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw elp::ArgumentError("valuation must look like \"{a,~b}\": got '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<elp::ObjectiveLiteral> lits;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    elp::ObjectiveLiteral lit = elp::literal_from_string(item);
    if (lit.atom.empty() || !std::islower(static_cast<unsigned char>(lit.atom[0])))
      throw elp::ArgumentError("bad literal '" + item + "' in valuation argument");
    lits.push_back(lit);
  }
  return elp::Valuation(lits);
}

struct Output {
  bool json = false;
  elp::Json doc;
  std::string text;

  void flush() const {
    if (json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"ground epistemic logic program workbench"};
  app.require_subcommand(1);

  std::string semantics_spec = "all";
  std::string format = "text";
  std::string input_path;
  elp::SolveOptions opts;
  int max_atoms = opts.bounds.max_atoms;
  int max_models = opts.bounds.max_classical_models;
  int max_periphery = opts.bounds.max_periphery;

  auto add_common = [&](CLI::App* cmd, bool with_input = true) {
    cmd->add_option("--semantics", semantics_spec,
                    "es15|es16|es18|es20|es21, comma list, or 'all'");
    cmd->add_option("--max-atoms", max_atoms, "answer-set atom bound");
    cmd->add_option("--max-models", max_models, "equilibrium candidate-world bound");
    cmd->add_option("--max-periphery", max_periphery, "extension worlds tried per cluster");
    cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    if (with_input) cmd->add_option("file", input_path, "program file (default: stdin)");
  };

  auto* solve_cmd = app.add_subcommand("solve", "compute world views");
  add_common(solve_cmd);
  bool es21_func = false;
  solve_cmd->add_flag("--es21-functional-minimality", es21_func,
                      "experimental: es21 with functional truth-minimality");

  auto* compare_cmd = app.add_subcommand("compare", "tabulate world views per semantics");
  add_common(compare_cmd);

  auto* reduct_cmd = app.add_subcommand("reduct", "print the modal reduct w.r.t. a view");
  std::string reduct_variant = "es18";
  std::vector<std::string> view_args;
  reduct_cmd->add_option("--variant", reduct_variant, "es18|es16");
  reduct_cmd->add_option("--view", view_args, "valuation \"{a,c}\" (repeatable)")->required();
  add_common(reduct_cmd);

  auto* translate_cmd = app.add_subcommand("translate", "print the EHT formula of a program");
  add_common(translate_cmd);

  auto* check_cmd = app.add_subcommand("check", "run a property check");
  std::string property = "supra-s5";
  std::string constraint_text;
  check_cmd->add_option("--property", property, "scm|supra-asp|supra-s5")
      ->check(CLI::IsMember({"scm", "supra-asp", "supra-s5"}));
  check_cmd->add_option("--constraint", constraint_text,
                        "subjective constraint rule for scm, e.g. \":- not K a.\"");
  add_common(check_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "bounded EHT validity check");
  std::string validity_variant = "functional";
  std::string formula_text;
  int v_atoms = 2, v_cluster = 3, v_periphery = 1;
  validate_cmd->add_option("--variant", validity_variant, "functional|kd45|sw5")
      ->check(CLI::IsMember({"functional", "kd45", "sw5"}));
  validate_cmd->add_option("--max-atoms", v_atoms, "formula atom bound");
  validate_cmd->add_option("--max-cluster", v_cluster, "cluster size bound");
  validate_cmd->add_option("--max-periphery", v_periphery, "periphery size bound");
  validate_cmd->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  validate_cmd->add_option("formula", formula_text, "EHT formula text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  opts.bounds.max_atoms = max_atoms;
  opts.bounds.max_classical_models = max_models;
  opts.bounds.max_periphery = max_periphery;
  opts.es21_functional_minimality = es21_func;

  Output out;
  out.json = format == "json";

  if (solve_cmd->parsed() || compare_cmd->parsed()) {
    elp::Program prog = elp::parse_program(read_input(input_path));
    auto semantics = parse_semantics_list(semantics_spec);
    if (compare_cmd->parsed()) {
      auto report = elp::compare(prog, semantics, opts);
      out.doc = elp::report_to_json(report);
      std::ostringstream text;
      text << "program:\n" << elp::render(prog) << "\n\n";
      for (const auto& [sem, views] : report.per_semantics) {
        text << to_string(sem) << ": ";
        if (views.empty())
          text << "no world views\n";
        else {
          text << views.size() << (views.size() == 1 ? " world view\n" : " world views\n");
          for (const auto& v : views) text << "  " << elp::view_str(v) << "\n";
        }
      }
      for (const auto& n : report.notes) text << "note: " << n << "\n";
      out.text = text.str();
    } else {
      std::vector<elp::SolveResult> results;
      results.reserve(semantics.size());
      for (auto s : semantics) results.push_back(elp::solve(prog, s, opts));
      out.doc = elp::results_to_json(prog, results);
      std::ostringstream text;
      for (const auto& r : results) {
        text << to_string(r.semantics) << ": ";
        if (r.views.empty())
          text << "no world views\n";
        else {
          text << r.views.size() << (r.views.size() == 1 ? " world view\n" : " world views\n");
          for (const auto& v : r.views) text << "  " << elp::view_str(v) << "\n";
        }
        for (const auto& n : r.notes) text << "  note: " << n << "\n";
      }
      out.text = text.str();
    }
  } else if (reduct_cmd->parsed()) {
    elp::Program prog = elp::parse_program(read_input(input_path));
    elp::BeliefView view;
    for (const auto& v : view_args) view.insert(parse_valuation_arg(v));
    auto variant = reduct_variant == "es16" ? elp::ReductVariant::Es16
                                            : elp::ReductVariant::Es18;
    if (reduct_variant != "es16" && reduct_variant != "es18")
      throw elp::ArgumentError("reduct variant must be es18 or es16");
    elp::Program reduct = elp::modal_reduct(prog, view, variant);
    out.doc["program"] = elp::render(prog);
    out.doc["variant"] = reduct_variant;
    out.doc["view"] = elp::to_json(view);
    out.doc["reduct"] = elp::render(reduct);
    out.text = elp::render(reduct) + "\n";
  } else if (translate_cmd->parsed()) {
    elp::Program prog = elp::parse_program(read_input(input_path));
    auto formula = elp::translate(prog);
    out.doc["program"] = elp::render(prog);
    out.doc["formula"] = elp::render(formula);
    out.text = elp::render(formula) + "\n";
  } else if (check_cmd->parsed()) {
    elp::Program prog = elp::parse_program(read_input(input_path));
    auto semantics = parse_semantics_list(semantics_spec);
    std::vector<elp::PropertyVerdict> verdicts;
    for (auto s : semantics) {
      if (property == "scm") {
        if (constraint_text.empty())
          throw elp::ArgumentError("--property scm needs --constraint");
        elp::Program c = elp::parse_program(constraint_text);
        if (c.rules.size() != 1)
          throw elp::ArgumentError("--constraint must contain exactly one rule");
        verdicts.push_back(elp::check_scm(prog, c.rules[0], s, opts));
      } else if (property == "supra-asp") {
        verdicts.push_back(elp::check_supra_asp(prog, s, opts));
      } else {
        verdicts.push_back(elp::check_supra_s5(prog, s, opts));
      }
    }
    out.doc["program"] = elp::render(prog);
    out.doc["checks"] = elp::Json::array();
    std::ostringstream text;
    for (const auto& v : verdicts) {
      out.doc["checks"].push_back(elp::verdict_to_json(v));
      text << to_string(v.property) << " under " << to_string(v.semantics) << ": "
           << (v.holds ? "holds" : "FAILS") << "\n";
      if (v.witness) text << "  witness: " << *v.witness << "\n";
    }
    out.text = text.str();
  } else if (validate_cmd->parsed()) {
    auto f = elp::parse_eht_formula(formula_text);
    elp::EhtVariant variant = validity_variant == "kd45"  ? elp::EhtVariant::KD45
                              : validity_variant == "sw5" ? elp::EhtVariant::SW5
                                                          : elp::EhtVariant::Functional;
    elp::ValidityBounds vb;
    vb.max_atoms = v_atoms;
    vb.max_cluster = v_cluster;
    vb.max_periphery = v_periphery;
    auto res = elp::eht_valid(f, variant, vb);
    out.doc["formula"] = elp::render(f);
    out.doc["variant"] = validity_variant;
    out.doc["valid"] = res.valid;
    if (res.valid) {
      out.text = "valid within bounds\n";
    } else {
      out.doc["countermodel"] = res.countermodel->str();
      out.text = "countermodel: " + res.countermodel->str() + "\n";
    }
  }

  out.flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const elp::BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const elp::ElpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
