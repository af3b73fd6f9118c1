#include "rsfan/examples.hpp"

namespace rsfan::examples {

namespace {

Relation rel(const std::vector<std::string>& gens, const std::string& lhs, const std::string& rhs) {
  Relation r;
  r.lhs = parse_monomial(lhs, gens);
  r.rhs = parse_monomial(rhs, gens);
  r.lhs_text = lhs;
  r.rhs_text = rhs;
  return r;
}

Presentation make_pres(std::string label, std::vector<std::string> gens,
                       std::vector<std::pair<std::string, std::string>> eqs) {
  Presentation p;
  p.label = std::move(label);
  p.generators = std::move(gens);
  for (auto& [l, r] : eqs) p.relations.push_back(rel(p.generators, l, r));
  return p;
}

}  // namespace

Presentation presentation_of(const std::string& which) {
  if (which == "three") return make_pres("3", {}, {});
  if (which == "f1") return make_pres("F1", {"x"}, {});
  if (which == "f1_idem") return make_pres("F1i", {"x"}, {{"x^2", "x"}});
  if (which == "f2")
    return make_pres("F2", {"x", "y", "z"}, {{"x^2", "y^2"}, {"x^2 z^2", "x^2"}, {"y^2 z^2", "x^2"}});
  if (which == "f3")
    return make_pres("F3", {"x", "y", "z"},
                     {{"x^2", "y^2"}, {"x^2 z^2", "x^2"}, {"y^2 z^2", "x^2"}, {"x z", "x"}});
  if (which == "f4")
    return make_pres("F4", {"x", "y", "z"},
                     {{"x^2", "y^2"}, {"x^2 z^2", "x^2"}, {"y^2 z^2", "x^2"}, {"x z", "x"}, {"z^2", "1"}});
  throw StructuralError("unknown example: " + which);
}

FiniteTS three() { return build_from_presentation(presentation_of("three")); }
FiniteTS f1() { return build_from_presentation(presentation_of("f1")); }
FiniteTS f1_idem() { return build_from_presentation(presentation_of("f1_idem")); }
FiniteTS f2() { return build_from_presentation(presentation_of("f2")); }
FiniteTS f3() { return build_from_presentation(presentation_of("f3")); }
FiniteTS f4() { return build_from_presentation(presentation_of("f4")); }

std::vector<FiniteTS> all() { return {three(), f1(), f1_idem(), f2(), f3(), f4()}; }

FiniteTS free1() { return free_ts({"x"}, "free1"); }
FiniteTS free2() { return free_ts({"x", "y"}, "free2"); }
FiniteTS free3() { return free_ts({"x", "y", "z"}, "free3"); }

FiniteTS random_ts(std::mt19937_64& rng, int max_gens) {
  static const std::vector<std::string> gen_pool = {"x", "y", "z"};
  for (;;) {
    int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_gens));
    std::vector<std::string> gens(gen_pool.begin(), gen_pool.begin() + k);
    // candidate relation sides: all monomials of degree <= 2k, sign +, plus 1
    std::vector<std::string> sides = {"1"};
    FiniteTS f = free_ts(gens);
    for (Elem a = 0; a < f.size(); ++a) {
      const std::string& nm = f.name(a);
      if (nm != "0" && nm[0] != '-' && nm != "1") sides.push_back(nm);
    }
    Presentation p;
    p.label = "random";
    p.generators = gens;
    int nrel = static_cast<int>(rng() % 4);  // 0..3 relations
    for (int i = 0; i < nrel; ++i) {
      const std::string& l = sides[rng() % sides.size()];
      const std::string& r = sides[rng() % sides.size()];
      if (l == r) continue;
      Relation rr = rel(gens, l, r);
      rr.lhs_text = l;
      rr.rhs_text = r;
      p.relations.push_back(rr);
    }
    try {
      return build_from_presentation(p);
    } catch (const DegeneratePresentationError&) {
      continue;  // e.g. x = 1 together with x = -1
    }
  }
}

}  // namespace rsfan::examples
