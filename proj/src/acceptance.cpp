#include "rsfan/acceptance.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "rsfan/charfan.hpp"
#include "rsfan/examples.hpp"
#include "rsfan/kernels.hpp"
#include "rsfan/order.hpp"
#include "rsfan/pring.hpp"

namespace rsfan {

namespace {

struct GoldenPoset {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

GoldenPoset load_golden(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open golden file " + path);
  GoldenPoset g;
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::string kw;
    if (!(is >> kw)) continue;
    if (kw == "nodes") {
      std::string nm;
      while (is >> nm) g.nodes.push_back(nm);
    } else if (kw == "edge") {
      std::string a, b;
      if (!(is >> a >> b)) throw ParseError("bad edge line in " + path);
      g.edges.emplace_back(a, b);
    } else {
      throw ParseError("bad line in " + path + ": " + line);
    }
  }
  std::sort(g.nodes.begin(), g.nodes.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool poset_matches(const Poset& p, const GoldenPoset& g, std::string& why) {
  std::vector<std::string> nodes = p.names;
  std::sort(nodes.begin(), nodes.end());
  if (nodes != g.nodes) {
    why = "node set differs";
    return false;
  }
  auto edges = hasse_names(p);
  if (edges != g.edges) {
    why = "edge set differs (" + std::to_string(edges.size()) + " vs " + std::to_string(g.edges.size()) + ")";
    return false;
  }
  return true;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

struct Ctx {
  AcceptanceOptions opts;
  std::vector<AcceptanceRow> rows;

  void add(const std::string& id, const std::string& label, bool pass, const std::string& detail) {
    rows.push_back({id, label, pass, detail});
  }
};

void criterion_cardinalities(Ctx& c) {
  struct Want {
    const char* name;
    int elems;
    int chars;
  };
  const Want wants[] = {{"three", 3, 1}, {"f1", 7, 3},  {"f1_idem", 5, 2},
                        {"f2", 23, 11},  {"f3", 15, 7}, {"f4", 13, 6}};
  bool ok = true;
  std::ostringstream det;
  for (const Want& w : wants) {
    FiniteTS g = build_from_presentation(examples::presentation_of(w.name));
    int nc = enumerate_characters(g).size();
    det << w.name << ":" << g.size() << "/" << nc << " ";
    if (g.size() != w.elems || nc != w.chars) ok = false;
  }
  c.add("A1", "cardinalities and character counts", ok, det.str());
}

void criterion_figures(Ctx& c) {
  bool ok = true;
  std::string why, detail;
  auto check_spec = [&](const FiniteTS& g, const std::string& golden) {
    auto sp = specialization_poset(enumerate_characters(g));
    if (!poset_matches(sp.poset, load_golden(c.opts.data_dir + "/golden/" + golden), why)) {
      ok = false;
      detail += golden + ": " + why + "; ";
    }
  };
  auto check_repr = [&](const FiniteTS& g, const std::string& golden) {
    auto rep = repr_poset(make_fan(g).rs);
    if (!poset_matches(rep.poset, load_golden(c.opts.data_dir + "/golden/" + golden), why)) {
      ok = false;
      detail += golden + ": " + why + "; ";
    }
  };
  check_spec(examples::f1(), "spec_f1.hasse");
  check_spec(examples::f2(), "spec_f2.hasse");
  check_spec(examples::f4(), "spec_f4.hasse");
  check_repr(examples::f1(), "repr_f1.hasse");
  check_repr(examples::f1_idem(), "repr_f1_idem.hasse");
  check_repr(examples::f2(), "repr_f2.hasse");
  check_repr(examples::f4(), "repr_f4.hasse");
  c.add("A2", "diagram posets match the golden edge lists", ok, ok ? "7 posets" : detail);
}

void criterion_rs_axioms(Ctx& c) {
  bool ok = true;
  std::string detail;
  for (const FiniteTS& g : examples::all()) {
    AxiomReport rep = check_rs_axioms(make_fan(g).rs, {c.opts.parallel});
    if (!rep.all_pass()) {
      ok = false;
      detail += g.label + " fails; ";
    }
  }
  // randomized separating subsets: everything but strong associativity
  std::mt19937_64 rng(c.opts.seed);
  int tested = 0;
  std::vector<FiniteTS> corpus = examples::all();
  std::vector<CharSet> spaces;
  for (auto& g : corpus) spaces.push_back(enumerate_characters(g));
  int guard = 0;
  while (tested < c.opts.random_subsets && guard < 100000) {
    ++guard;
    size_t pick = rng() % corpus.size();
    const FiniteTS& g = corpus[pick];
    const CharSet& x = spaces[pick];
    Mask subset = rng() & full_mask(x.size());
    if (!subset) continue;
    if (!separates_points(g, x, subset)) continue;
    RSModel m = induce_d(g, x, subset, c.opts.parallel);
    AxiomReport rep = check_rs_axioms(m, {c.opts.parallel, /*skip_rs3=*/true});
    if (!rep.all_pass()) {
      ok = false;
      detail += g.label + " subset " + std::to_string(subset) + " fails " + rep.to_string() + "; ";
      break;
    }
    ++tested;
  }
  if (tested < c.opts.random_subsets) {
    ok = false;
    detail += "only " + std::to_string(tested) + " separating subsets sampled";
  }
  c.add("A3", "RS axiom suite on fans; induced models pass all but RS3", ok,
        detail.empty() ? std::to_string(tested) + " randomized separating subsets" : detail);
}

void criterion_fan_equivalence(Ctx& c) {
  bool ok = true;
  std::string detail;
  int pairs = 0;
  auto run = [&](const FiniteTS& g, bool all_subsets) {
    CharSet full = enumerate_characters(g);
    Mask top = full_mask(full.size());
    if (all_subsets) {
      for (Mask s = 1; s <= top; ++s) {
        if (!is_3_closed(full, s)) continue;
        FanEquivalence eq = fan_equivalence(g, full, s, c.opts.parallel);
        ++pairs;
        if (!eq.agree) {
          ok = false;
          detail += g.label + " subset " + std::to_string(s) + ": fan1=" + std::to_string(eq.is_fan1) +
                    " fan2=" + std::to_string(eq.is_fan2) + "; ";
        }
      }
    } else {
      FanEquivalence eq = fan_equivalence(g, full, top, c.opts.parallel);
      ++pairs;
      if (!eq.agree || !eq.is_fan1 || !eq.is_fan2) {
        ok = false;
        detail += g.label + " full space: fan1/fan2 disagree; ";
      }
    }
  };
  run(examples::f1(), true);
  run(examples::f4(), true);
  for (const FiniteTS& g : examples::all()) run(g, false);
  c.add("A4", "fan1 and fan2 verdicts agree", ok,
        detail.empty() ? std::to_string(pairs) + " (G,X) pairs" : detail);
}

void criterion_lattice(Ctx& c) {
  bool ok = true;
  std::string detail;
  auto lattice_of = [&](const FiniteTS& g) { return fan_lattice(make_fan(g)); };
  for (const FiniteTS& g : examples::all()) {
    LatticeReport rep = lattice_of(g);
    if (!rep.bounded_lattice || !rep.closed_forms || !rep.de_morgan || !rep.kleene) {
      ok = false;
      detail += g.label + ": lattice laws fail (" + rep.detail + "); ";
    }
    if (rep.pentagon_found == rep.modular) {
      ok = false;
      detail += g.label + ": pentagon search disagrees with the modular law; ";
    }
  }
  LatticeReport f1 = lattice_of(examples::f1());
  if (!f1.modular || f1.distributive) {
    ok = false;
    detail += "F1 should be modular and not distributive; ";
  }
  for (const char* name : {"f2", "f4"}) {
    LatticeReport rep = lattice_of(build_from_presentation(examples::presentation_of(name)));
    if (rep.modular || !rep.pentagon_found) {
      ok = false;
      detail += std::string(name) + " should contain a pentagon; ";
    }
  }
  c.add("A5", "bounded lattices with closed-form meets/joins; modularity as stated", ok,
        detail.empty() ? "6 fans" : detail);
}

void criterion_chain_length(Ctx& c) {
  ChainLengthReport rep = chain_length(examples::f2());
  bool ok = rep.length == 4 && rep.spectrum_size == 3 && rep.within_bound;
  c.add("A6", "chain length of the F2 subbasic sets", ok,
        "length=" + std::to_string(rep.length) + " bound=" + std::to_string(2 * rep.spectrum_size));
}

void criterion_quotients(Ctx& c) {
  bool ok = true;
  std::string detail;
  int quotients = 0;
  for (const FiniteTS& g : examples::all()) {
    FanModel f = make_fan(g);
    CharSet full = enumerate_characters(g);
    if (full.size() <= 12) {
      Mask top = full_mask(full.size());
      for (Mask s = 1; s <= top; ++s) {
        if (!is_3_closed(full, s)) continue;
        QuotientFan q = quotient_fan(f, full, s, c.opts.parallel);
        ++quotients;
        if (!q.condition_z || !q.rs_axioms_pass || !q.induced_matches_closed_form) {
          ok = false;
          detail += g.label + "/" + std::to_string(s) + " not a fan; ";
        }
      }
    }
    for (const IdealInfo& info : ideals(g).ideals) {
      if (!info.proper) continue;
      IdealQuotient iq = ideal_quotient(f, info.members, c.opts.parallel);
      if (!iq.exponent_two_group || !iq.rsg_fan || !iq.witness_matches_kernel || !iq.ideals_above_collapse) {
        ok = false;
        detail += g.label + " mod " + mask_to_string(g, info.members) + " fails; ";
      }
    }
  }
  // the named collapse: z falls onto 1 in F3 modulo the zero ideal
  {
    FiniteTS g = examples::f3();
    IdealQuotient iq = ideal_quotient(make_fan(g), bit(g.zero), c.opts.parallel);
    bool z_collapses = false;
    for (Elem a : iq.collapses_to_one)
      if (g.name(a) == "z") z_collapses = true;
    if (!z_collapses) {
      ok = false;
      detail += "z does not collapse to 1 in F3/{0}; ";
    }
  }
  c.add("A7", "fan quotients by 3-closed sets and by ideals", ok,
        detail.empty() ? std::to_string(quotients) + " character quotients + all ideal quotients" : detail);
}

void criterion_characterization(Ctx& c) {
  bool ok = true;
  std::string detail;
  int models = 0;
  auto check_fan_side = [&](const FiniteTS& g, const std::string& what) {
    CharacterizationReport rep = check_characterization(make_fan(g).rs, c.opts.parallel);
    ++models;
    if (!rep.is_fan || !rep.cond_2i || !rep.cond_2ii || !rep.cond_2iii || !rep.equivalence_holds) {
      ok = false;
      detail += what + ": " + rep.detail + "; ";
    }
  };
  for (const FiniteTS& g : examples::all()) check_fan_side(g, g.label);

  std::mt19937_64 rng(c.opts.seed + 1);
  for (int i = 0; i < c.opts.random_presentations; ++i) {
    FiniteTS g = examples::random_ts(rng);
    if (satisfies_condition_z(g).holds) {
      check_fan_side(g, "random fan #" + std::to_string(i));
      continue;
    }
    // no condition [Z]: the representation induced by the full space cannot
    // satisfy all axioms; when it does pass, the biconditional still applies
    CharSet full = enumerate_characters(g);
    RSModel m = induce_d(g, full, c.opts.parallel);
    AxiomReport rep = check_rs_axioms(m, {c.opts.parallel});
    ++models;
    if (rep.all_pass()) {
      CharacterizationReport ch = check_characterization(m, c.opts.parallel);
      if (ch.is_fan || ch.cond_2i || !ch.equivalence_holds) {
        ok = false;
        detail += "random non-[Z] #" + std::to_string(i) + " breaks the biconditional; ";
      }
    } else if (rep.find("RS3") && rep.find("RS3")->pass) {
      ok = false;
      detail += "random non-[Z] #" + std::to_string(i) + " fails an axiom other than RS3; ";
    }
  }
  c.add("A8", "three-condition characterization across the corpus", ok,
        detail.empty() ? std::to_string(models) + " models" : detail);
}

void criterion_cardinality_relation(Ctx& c) {
  bool ok = true;
  std::string detail;
  int fans = 0;
  auto check = [&](const FiniteTS& g, const std::string& what) {
    int nx = enumerate_characters(g).size();
    ++fans;
    if (g.size() != 2 * nx + 1) {
      ok = false;
      detail += what + ": " + std::to_string(g.size()) + " != 2*" + std::to_string(nx) + "+1; ";
    }
  };
  for (const FiniteTS& g : examples::all()) check(g, g.label);
  std::mt19937_64 rng(c.opts.seed + 2);
  for (int i = 0; i < c.opts.random_presentations; ++i) {
    FiniteTS g = examples::random_ts(rng);
    if (satisfies_condition_z(g).holds) check(g, "random fan #" + std::to_string(i));
  }
  c.add("A9", "card(F) = 2 |X_F| + 1 on every generated fan", ok,
        detail.empty() ? std::to_string(fans) + " fans" : detail);
}

void criterion_pring(Ctx& c) {
  using namespace pring;
  bool ok = true;
  std::string detail;
  for (int range : {2, 5, 10}) {
    auto rep = verify_total_preorder(lex_preorder(), grid_sample(range));
    if (!rep.pass()) {
      ok = false;
      detail += "lex fails at range " + std::to_string(range) + "; ";
    }
  }
  DualNumber X{Rat(1), Rat(0)}, zero{Rat(0), Rat(0)};
  SupportReport sup = support(lex_preorder(), grid_sample(5), {{X, zero}});
  if (sup.support.size() != 1 || !(sup.support[0] == zero)) {
    ok = false;
    detail += "support of the lex preorder is not {0}; ";
  }
  if (sup.radical_violations.size() != 1) {
    ok = false;
    detail += "the (X, 0) radical violation did not trigger; ";
  }
  c.add("A10", "lex preorder checks on the dual-number samples", ok, detail.empty() ? "ranges 2,5,10" : detail);
}

void criterion_density(Ctx& c) {
  bool ok = true;
  std::string detail;
  std::uint64_t examined_total = 0;
  for (const FiniteTS& g : examples::all()) {
    CharSet full = enumerate_characters(g);
    std::uint64_t examined = 0;
    auto found = kernels::proper_qfan_subset(g, full, &examined, c.opts.parallel);
    examined_total += examined;
    if (found) {
      ok = false;
      detail += g.label + " has a proper separating 3-closed subset; ";
    }
  }
  c.add("A11", "no proper 3-closed separating character subset exists", ok,
        detail.empty() ? std::to_string(examined_total) + " subsets examined" : detail);
}

}  // namespace

std::vector<AcceptanceRow> run_acceptance(const AcceptanceOptions& opts) {
  Ctx c;
  c.opts = opts;
  if (c.opts.data_dir.empty()) c.opts.data_dir = RSFAN_DATA_DIR;
  criterion_cardinalities(c);
  criterion_figures(c);
  criterion_rs_axioms(c);
  criterion_fan_equivalence(c);
  criterion_lattice(c);
  criterion_chain_length(c);
  criterion_quotients(c);
  criterion_characterization(c);
  criterion_cardinality_relation(c);
  criterion_pring(c);
  criterion_density(c);
  return c.rows;
}

std::string format_acceptance(const std::vector<AcceptanceRow>& rows) {
  std::ostringstream os;
  bool all = true;
  for (const AcceptanceRow& r : rows) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.label;
    if (!r.detail.empty()) os << "  [" << r.detail << "]";
    os << "\n";
    all = all && r.pass;
  }
  os << (all ? "acceptance: all criteria pass\n" : "acceptance: FAILURES PRESENT\n");
  return os.str();
}

}  // namespace rsfan
