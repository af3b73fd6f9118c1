#include <CLI11.hpp>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "rsfan/acceptance.hpp"
#include "rsfan/charfan.hpp"
#include "rsfan/examples.hpp"
#include "rsfan/io.hpp"
#include "rsfan/kernels.hpp"
#include "rsfan/order.hpp"
#include "rsfan/pring.hpp"

using json = nlohmann::ordered_json;
using namespace rsfan;

namespace {

FiniteTS load(const std::string& path) { return load_structure(path); }

Mask parse_char_subset(const CharSet& x, const std::string& arg) {
  if (arg.empty()) return x.size() == 64 ? ~Mask{0} : (Mask{1} << x.size()) - 1;
  Mask m = 0;
  std::istringstream is(arg);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    int idx = -1;
    if (!tok.empty() && tok[0] == 'h') idx = std::atoi(tok.c_str() + 1);
    else idx = std::atoi(tok.c_str());
    if (idx < 1 || idx > x.size()) throw PreconditionError("no character " + tok);
    m |= bit(idx - 1);
  }
  return m;
}

json axiom_json(const AxiomReport& rep) {
  json out = json::array();
  for (const AxiomResult& r : rep.results) {
    json row;
    row["axiom"] = r.axiom;
    row["pass"] = r.pass;
    if (!r.pass) row["witness"] = r.witness;
    out.push_back(row);
  }
  return out;
}

void print_char_table(const FiniteTS& g, const CharSet& x) {
  std::cout << "characters of " << g.label << " (" << x.size() << ")\n";
  size_t label_w = 2;
  for (auto& l : x.labels) label_w = std::max(label_w, l.size());
  std::cout << std::string(label_w + 4, ' ');
  for (auto& nm : g.names) std::cout << std::setw(std::max<int>(3, nm.size() + 1)) << nm;
  std::cout << "\n";
  for (int i = 0; i < x.size(); ++i) {
    std::cout << std::left << std::setw(label_w) << x.labels[i] << std::right << " -> ";
    for (Elem a = 0; a < g.size(); ++a)
      std::cout << std::setw(std::max<int>(3, g.name(a).size() + 1)) << static_cast<int>(x[i](a));
    std::cout << "   Z: " << mask_to_string(g, zero_set(x[i])) << "\n";
  }
}

int cmd_check_ts(const std::string& path, bool as_json) {
  FiniteTS g = load(path);
  AxiomReport rep = check_ts_axioms(g);
  if (as_json) {
    json out;
    out["command"] = "check-ts";
    out["structure"] = g.label;
    out["elements"] = g.size();
    out["axioms"] = axiom_json(rep);
    out["pass"] = rep.all_pass();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "structure " << g.label << " (" << g.size() << " elements)\n" << rep.to_string();
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_chars(const std::string& path, bool dot, bool as_json) {
  FiniteTS g = load(path);
  CharSet x = enumerate_characters(g);
  auto sp = specialization_poset(x);
  if (dot) {
    std::cout << sp.poset.to_dot("spec_" + g.label);
    return 0;
  }
  if (as_json) {
    json out;
    out["command"] = "chars";
    out["structure"] = g.label;
    out["count"] = x.size();
    json chars = json::array();
    for (int i = 0; i < x.size(); ++i) {
      json row;
      row["label"] = x.labels[i];
      json vals = json::object();
      for (Elem a = 0; a < g.size(); ++a) vals[g.name(a)] = x[i](a);
      row["values"] = vals;
      chars.push_back(row);
    }
    out["characters"] = chars;
    out["root_system"] = sp.is_root_system;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  print_char_table(g, x);
  std::cout << "specialization root system: " << (sp.is_root_system ? "yes" : "no") << "\n";
  for (auto& [a, b] : hasse_names(sp.poset)) std::cout << "  " << a << " ~> " << b << "\n";
  return 0;
}

int cmd_verify_rs(const std::string& path, const std::string& chars_arg, bool as_json) {
  FiniteTS g = load(path);
  CharSet x = enumerate_characters(g);
  Mask subset = parse_char_subset(x, chars_arg);
  RSModel m = induce_d(g, x, subset);
  AxiomReport rep = check_rs_axioms(m);
  if (as_json) {
    json out;
    out["command"] = "verify-rs";
    out["structure"] = g.label;
    out["characters"] = popcount(subset);
    out["axioms"] = axiom_json(rep);
    out["pass"] = rep.all_pass();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "representation induced by " << popcount(subset) << " characters on " << g.label << "\n"
              << rep.to_string();
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_make_fan(const std::string& path) {
  FiniteTS g = load(path);
  FanModel f = make_fan(g);
  std::cout << "fan on " << g.label << " (" << g.size() << " elements)\n";
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = 0; b < g.size(); ++b) {
      std::cout << "D(" << g.name(a) << "," << g.name(b) << ") = " << mask_to_string(g, f.rs.D.at(a, b))
                << "   Dt = " << mask_to_string(g, f.rs.Dt.at(a, b)) << "\n";
    }
  return 0;
}

int cmd_is_fan(const std::string& path, const std::string& chars_arg, bool as_json) {
  FiniteTS g = load(path);
  CharSet x = enumerate_characters(g);
  Mask subset = parse_char_subset(x, chars_arg);
  FanEquivalence eq = fan_equivalence(g, x, subset);
  if (as_json) {
    json out;
    out["command"] = "is-fan";
    out["structure"] = g.label;
    out["fan1"] = eq.is_fan1;
    out["fan2"] = eq.is_fan2;
    out["qfan"] = eq.is_qfan;
    out["agree"] = eq.agree;
    if (!eq.detail.empty()) out["detail"] = eq.detail;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "fan1 (X is the whole character space): " << (eq.is_fan1 ? "yes" : "no") << "\n"
              << "fan2 (RS axioms + 3-closed + maximality): " << (eq.is_fan2 ? "yes" : "no") << "\n"
              << "q-fan: " << (eq.is_qfan ? "yes" : "no") << "\n"
              << "verdicts agree: " << (eq.agree ? "yes" : "no") << "\n";
  }
  return eq.agree ? 0 : 1;
}

int cmd_order(const std::string& path, const std::string& dot_path, bool spec) {
  FiniteTS g = load(path);
  Poset p;
  std::string name;
  if (spec) {
    p = specialization_poset(enumerate_characters(g)).poset;
    name = "spec_" + g.label;
  } else {
    p = repr_poset(make_fan(g).rs).poset;
    name = "repr_" + g.label;
  }
  std::string dot = p.to_dot(name);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    out << dot;
    std::cout << "wrote " << dot_path << "\n";
  } else {
    std::cout << dot;
  }
  return 0;
}

int cmd_quotient(const std::string& path, const std::string& ideal_arg, const std::string& chars_arg) {
  FiniteTS g = load(path);
  FanModel f = make_fan(g);
  CharSet x = enumerate_characters(g);
  if (!ideal_arg.empty()) {
    Mask ideal = 0;
    std::istringstream is(ideal_arg);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      Elem e = g.index_of(tok);
      if (e < 0) throw PreconditionError("unknown element '" + tok + "'");
      ideal |= bit(e);
    }
    IdealQuotient iq = ideal_quotient(f, ideal);
    const FiniteTS& q = iq.quotient.fan.rs.ts;
    std::cout << "quotient by ideal " << mask_to_string(g, ideal) << ": " << q.size() << " classes\n";
    std::cout << serialize_structure(q);
    std::cout << "unit group excluding zero is a group of exponent 2: "
              << (iq.exponent_two_group ? "yes" : "no") << "\n";
    std::cout << "minimal representation law: " << (iq.rsg_fan ? "yes" : "no") << "\n";
    std::cout << "witness and kernel characterisations agree: "
              << (iq.witness_matches_kernel ? "yes" : "no") << "\n";
    if (!iq.collapses_to_one.empty()) {
      std::cout << "collapse onto 1:";
      for (Elem a : iq.collapses_to_one) std::cout << " " << g.name(a);
      std::cout << "\n";
    }
    return (iq.exponent_two_group && iq.rsg_fan && iq.witness_matches_kernel) ? 0 : 1;
  }
  Mask subset = parse_char_subset(x, chars_arg);
  QuotientFan q = quotient_fan(f, x, subset);
  std::cout << "quotient by " << popcount(subset) << " characters: " << q.fan.rs.ts.size() << " classes\n";
  std::cout << serialize_structure(q.fan.rs.ts);
  std::cout << "fan: " << ((q.condition_z && q.rs_axioms_pass && q.induced_matches_closed_form) ? "yes" : "no")
            << "\n";
  return 0;
}

int cmd_characterize(const std::string& path, bool as_json) {
  FiniteTS g = load(path);
  RSModel m = make_fan(g).rs;
  CharacterizationReport rep = check_characterization(m);
  ChainVerdict tot = totally_ordered_spec_implies_fan(m);
  ChainVerdict two = two_chains_implies_fan(m);
  if (as_json) {
    json out;
    out["command"] = "characterize";
    out["structure"] = g.label;
    out["is_fan"] = rep.is_fan;
    out["cond_2i"] = rep.cond_2i;
    out["cond_2ii"] = rep.cond_2ii;
    out["cond_2iii"] = rep.cond_2iii;
    out["equivalence_holds"] = rep.equivalence_holds;
    out["totally_ordered_applicable"] = tot.applicable;
    out["two_chain_applicable"] = two.applicable;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "structure " << g.label << "\n"
              << "  fan: " << (rep.is_fan ? "yes" : "no") << "\n"
              << "  (2.i) zero-sets form a chain: " << (rep.cond_2i ? "yes" : "no") << "\n"
              << "  (2.ii) inclusions upgrade to specializations: " << (rep.cond_2ii ? "yes" : "no") << "\n"
              << "  (2.iii) ideal quotients minimal: " << (rep.cond_2iii ? "yes" : "no") << "\n"
              << "  equivalence holds: " << (rep.equivalence_holds ? "yes" : "no") << "\n"
              << "  character space totally ordered: " << (tot.applicable ? "yes" : "no") << "\n"
              << "  two-chain cover with realized ideals: " << (two.applicable ? "yes" : "no") << "\n";
  }
  return rep.equivalence_holds ? 0 : 1;
}

int cmd_examples(const std::string& which, bool dot) {
  FiniteTS g = build_from_presentation(examples::presentation_of(which));
  if (dot) {
    std::cout << repr_poset(make_fan(g).rs).poset.to_dot("repr_" + g.label);
    return 0;
  }
  std::cout << serialize_structure(g);
  std::cout << "# " << g.size() << " elements, " << enumerate_characters(g).size() << " characters\n";
  return 0;
}

int cmd_rs3_search(const std::string& path, int max_size, std::uint64_t seed) {
  (void)seed;  // the enumeration is exhaustive and deterministic
  FiniteTS g = load(path);
  Rs3Search res = find_rs3_counterexample(g, max_size);
  std::cout << "structure " << g.label << ", separating subsets up to size " << max_size << ": examined "
            << res.examined << "\n";
  if (res.found) {
    std::cout << "strong associativity fails for the subset of characters " << res.subset << "\n";
    auto [a, b, c, d, e] = res.witness;
    std::cout << "witness: " << g.name(a) << " in Dt(" << g.name(b) << "," << g.name(c) << "), " << g.name(c)
              << " in Dt(" << g.name(d) << "," << g.name(e) << ")\n";
    return 2;
  }
  std::cout << "no failure found\n";
  return 0;
}

int cmd_pring(const std::string& preorder, int range) {
  using namespace pring;
  PreorderSpec t = preorder == "sos" ? sos_preorder() : lex_preorder();
  auto sample = grid_sample(range);
  auto rep = verify_total_preorder(t, sample);
  auto pr = [&](const char* what, const CheckResult& r) {
    std::cout << "  " << what << ": " << (r.pass ? "pass" : "FAIL") << (r.pass ? "" : "  at " + r.witness)
              << "\n";
  };
  std::cout << "preorder '" << t.name << "' on the range-" << range << " sample (" << sample.size()
            << " elements)\n";
  pr("squares", rep.squares);
  pr("products", rep.products);
  pr("sums", rep.sums);
  pr("proper", rep.proper);
  pr("total", rep.total);
  DualNumber X{Rat(1), Rat(0)}, zero{Rat(0), Rat(0)};
  SupportReport sup = support(t, sample, {{X, zero}});
  std::cout << "  support:";
  for (auto& v : sup.support) std::cout << " " << to_string(v);
  std::cout << "\n";
  for (auto& v : sup.radical_violations) std::cout << "  not radical: " << v << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_reproduce(const std::string& data_dir, std::uint64_t seed, bool as_json) {
  AcceptanceOptions opts;
  if (!data_dir.empty()) opts.data_dir = data_dir;
  opts.seed = seed;
  auto rows = run_acceptance(opts);
  if (as_json) {
    json out = json::array();
    for (auto& r : rows) {
      json row;
      row["id"] = r.id;
      row["label"] = r.label;
      row["pass"] = r.pass;
      row["detail"] = r.detail;
      out.push_back(row);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format_acceptance(rows);
  }
  for (auto& r : rows)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite ternary semigroups, real semigroups and fans"};
  app.require_subcommand(1);

  std::string path, chars_arg, ideal_arg, dot_path, which, preorder = "lex", data_dir;
  bool dot = false, as_json = false, spec = false;
  int max_size = 4, range = 5;
  std::uint64_t seed = 20170301;

  auto* c_check = app.add_subcommand("check-ts", "check the five defining axioms");
  c_check->add_option("file", path)->required();
  c_check->add_flag("--json", as_json);

  auto* c_chars = app.add_subcommand("chars", "enumerate the characters");
  c_chars->add_option("file", path)->required();
  c_chars->add_flag("--dot", dot, "emit the specialization order as DOT");
  c_chars->add_flag("--json", as_json);

  auto* c_verify = app.add_subcommand("verify-rs", "check the real-semigroup axioms of an induced model");
  c_verify->add_option("file", path)->required();
  c_verify->add_option("--chars", chars_arg, "comma-separated character labels, default all");
  c_verify->add_flag("--json", as_json);

  auto* c_fan = app.add_subcommand("make-fan", "print the closed-form representation tables");
  c_fan->add_option("file", path)->required();

  auto* c_isfan = app.add_subcommand("is-fan", "compare the two fan notions");
  c_isfan->add_option("file", path)->required();
  c_isfan->add_option("--chars", chars_arg);
  c_isfan->add_flag("--json", as_json);

  auto* c_order = app.add_subcommand("order", "representation or specialization order as DOT");
  c_order->add_option("file", path)->required();
  c_order->add_option("--dot", dot_path, "output file (stdout when omitted)");
  c_order->add_flag("--spec", spec, "specialization order of the character space");

  auto* c_quot = app.add_subcommand("quotient", "quotient by characters or by an ideal");
  c_quot->add_option("file", path)->required();
  c_quot->add_option("--ideal", ideal_arg, "comma-separated element names");
  c_quot->add_option("--chars", chars_arg, "comma-separated character labels");

  auto* c_char = app.add_subcommand("characterize", "fan characterization report");
  c_char->add_option("file", path)->required();
  c_char->add_flag("--json", as_json);

  auto* c_ex = app.add_subcommand("examples", "print a built-in structure");
  c_ex->add_option("name", which, "three|f1|f1-idem|f2|f3|f4")->required();
  c_ex->add_flag("--dot", dot, "emit the representation order as DOT");

  auto* c_rs3 = app.add_subcommand("rs3-search", "search induced models for associativity failures");
  c_rs3->add_option("file", path)->required();
  c_rs3->add_option("--max-size", max_size, "largest character subset size");
  c_rs3->add_option("--seed", seed, "accepted for interface stability; search is exhaustive");

  auto* c_pring = app.add_subcommand("pring", "preordered-ring checks on dual numbers");
  auto* c_pcheck = c_pring->add_subcommand("check", "verify a named preorder on a grid sample");
  c_pcheck->add_option("--preorder", preorder, "lex|sos");
  c_pcheck->add_option("--range", range, "grid radius");

  auto* c_rep = app.add_subcommand("reproduce", "run the whole verification battery");
  c_rep->add_option("--data", data_dir, "data directory holding the golden files");
  c_rep->add_option("--seed", seed, "seed for the randomized searches");
  c_rep->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) return cmd_check_ts(path, as_json);
    if (c_chars->parsed()) return cmd_chars(path, dot, as_json);
    if (c_verify->parsed()) return cmd_verify_rs(path, chars_arg, as_json);
    if (c_fan->parsed()) return cmd_make_fan(path);
    if (c_isfan->parsed()) return cmd_is_fan(path, chars_arg, as_json);
    if (c_order->parsed()) return cmd_order(path, dot_path, spec);
    if (c_quot->parsed()) return cmd_quotient(path, ideal_arg, chars_arg);
    if (c_char->parsed()) return cmd_characterize(path, as_json);
    if (c_ex->parsed()) {
      std::string nm = which;
      for (auto& ch : nm)
        if (ch == '-') ch = '_';
      return cmd_examples(nm, dot);
    }
    if (c_rs3->parsed()) return cmd_rs3_search(path, max_size, seed);
    if (c_pring->parsed()) return cmd_pring(preorder, range);
    if (c_rep->parsed()) return cmd_reproduce(data_dir, seed, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
