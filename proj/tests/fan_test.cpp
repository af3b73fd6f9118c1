#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsfan/examples.hpp"
#include "rsfan/fan.hpp"
#include "rsfan/kernels.hpp"

using namespace rsfan;

namespace {

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

Mask names_mask(const FiniteTS& g, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* nm : names) {
    Elem e = g.index_of(nm);
    REQUIRE(e >= 0);
    m |= bit(e);
  }
  return m;
}

}  // namespace

TEST_CASE("the closed-form construction needs condition [Z]") {
  CHECK_THROWS_AS(make_fan(examples::free2()), PreconditionError);
}

TEST_CASE("closed-form representation equals the one induced by all characters") {
  for (const FiniteTS& g : examples::all()) {
    FanModel f = make_fan(g);
    RSModel induced = induce_d(g, enumerate_characters(g));
    CHECK_MESSAGE(f.rs.D == induced.D, g.label);
    CHECK_MESSAGE(f.rs.Dt == induced.Dt, g.label);
  }
  std::mt19937_64 rng(31);
  int fans = 0;
  while (fans < 15) {
    FiniteTS g = examples::random_ts(rng);
    if (!satisfies_condition_z(g).holds) continue;
    ++fans;
    FanModel f = make_fan(g);
    RSModel induced = induce_d(g, enumerate_characters(g));
    CHECK(f.rs.D == induced.D);
    CHECK(f.rs.Dt == induced.Dt);
  }
}

TEST_CASE("every fan of the corpus passes the whole axiom suite") {
  for (const FiniteTS& g : examples::all()) CHECK(check_rs_axioms(make_fan(g).rs).all_pass());
}

TEST_CASE("transversal rows on named forms") {
  {
    RSModel m = make_fan(examples::three()).rs;
    CHECK(m.Dt.at(m.ts.one, m.ts.minus_one) == m.ts.all_mask());
  }
  {
    FiniteTS g = examples::f1();
    FanModel f = make_fan(g);
    Elem x = g.index_of("x");
    CHECK(f.rs.Dt.at(x, g.neg(x)) == names_mask(g, {"0", "x", "-x", "x^2", "-x^2"}));
  }
  {
    FiniteTS g = examples::f2();
    FanModel f = make_fan(g);
    // the zero set of z sits strictly inside the zero set of x, so the row
    // (z, x) collapses onto its first entry
    CHECK(f.rs.Dt.at(g.index_of("z"), g.index_of("x")) == names_mask(g, {"z"}));
    CHECK(f.rs.Dt.at(g.index_of("x"), g.index_of("z")) == names_mask(g, {"z"}));
  }
}

TEST_CASE("transversal rows are never empty and the case split is consistent") {
  for (const FiniteTS& g : examples::all()) {
    FanModel f = make_fan(g);
    for (Elem a = 0; a < g.size(); ++a)
      for (Elem b = 0; b < g.size(); ++b) {
        CHECK(f.rs.Dt.at(a, b) != 0);
        if (b == g.neg(a)) CHECK(f.rs.Dt.at(a, b) == principal_ideal(g, a));
      }
  }
}

TEST_CASE("interdefinability of the two clauses") {
  CHECK(check_interdefinability(examples::three()));
  CHECK(check_interdefinability(examples::f1()));
  CHECK(check_interdefinability(examples::f4()));
  CHECK(check_interdefinability(examples::f2()));
}

TEST_CASE("fan equivalence on full spaces and named subsets") {
  {
    FiniteTS g = examples::f1();
    CharSet x = enumerate_characters(g);
    FanEquivalence full = fan_equivalence(g, x, full_mask(x.size()));
    CHECK(full.is_fan1);
    CHECK(full.is_fan2);
    CHECK(full.agree);
    FanEquivalence part = fan_equivalence(g, x, bit(0) | bit(1));  // {h1,h2}
    CHECK_FALSE(part.is_fan1);
    CHECK_FALSE(part.is_fan2);
    CHECK(part.agree);
  }
  {
    RSModel m = three_rs();
    CharSet x = enumerate_characters(m.ts);
    FanEquivalence eq = fan_equivalence(m.ts, x, bit(0));
    CHECK(eq.is_fan1);
    CHECK(eq.is_fan2);
  }
}

TEST_CASE("fan equivalence verdicts agree on every 3-closed subset") {
  for (const FiniteTS& g : {examples::f1(), examples::f4()}) {
    CharSet x = enumerate_characters(g);
    for (Mask s = 1; s <= full_mask(x.size()); ++s) {
      if (!is_3_closed(x, s)) continue;
      FanEquivalence eq = fan_equivalence(g, x, s);
      CHECK_MESSAGE(eq.agree, g.label, " subset ", s);
    }
  }
}

TEST_CASE("units form the minimal reduced-special-group representation") {
  {
    FiniteTS g = examples::f4();
    UnitsReport rep = units_rsg(make_fan(g));
    CHECK(rep.units == names_mask(g, {"1", "-1", "z", "-z"}));
    CHECK(rep.rsg_fan);
    CHECK(rep.dt_matches_d);
  }
  {
    FiniteTS g = examples::f1();
    UnitsReport rep = units_rsg(make_fan(g));
    CHECK(rep.units == names_mask(g, {"1", "-1"}));
    CHECK(rep.rsg_fan);
  }
  {
    FiniteTS g = examples::f2();
    UnitsReport rep = units_rsg(make_fan(g));
    CHECK(rep.units == names_mask(g, {"1", "-1"}));
    CHECK(rep.rsg_fan);
  }
}

TEST_CASE("TS-morphisms out of a fan preserve representation") {
  {
    FiniteTS g = examples::f2();
    FanModel f = make_fan(g);
    RSModel three = three_rs();
    CharSet x = enumerate_characters(g);
    auto to_elem = [&](int v) { return v == 1 ? three.ts.one : (v == 0 ? three.ts.zero : three.ts.minus_one); };
    for (int i = 0; i < x.size(); ++i) {
      std::vector<Elem> map(g.size());
      for (Elem a = 0; a < g.size(); ++a) map[a] = to_elem(x[i](a));
      CHECK(check_hom_preservation(f, three, map));
    }
  }
  {
    FiniteTS g = examples::f1();
    FanModel f = make_fan(g);
    std::vector<Elem> identity(g.size());
    for (Elem a = 0; a < g.size(); ++a) identity[a] = a;
    CHECK(check_hom_preservation(f, f.rs, identity));
  }
  {
    FiniteTS g = examples::f1();
    FanModel f = make_fan(g);
    RSModel three = three_rs();
    std::vector<Elem> bad(g.size(), three.ts.one);
    CHECK_THROWS_AS(check_hom_preservation(f, three, bad), PreconditionError);
  }
}

TEST_CASE("ideals of a fan are saturated and prime; the subsemigroup criterion") {
  for (const FiniteTS& g : examples::all()) {
    FanIdealsReport rep = check_fan_ideals(make_fan(g));
    CHECK_MESSAGE(rep.ideals_saturated_prime, g.label, ": ", rep.detail);
    CHECK_MESSAGE(rep.subsemigroup_criterion, g.label, ": ", rep.detail);
  }
}

TEST_CASE("three-generator square configurations and condition [Z]") {
  auto build = [](std::vector<std::pair<std::string, std::string>> eqs) {
    Presentation p;
    p.label = "case";
    p.generators = {"x", "y", "z"};
    for (auto& [l, r] : eqs) {
      Relation rel;
      rel.lhs = parse_monomial(l, p.generators);
      rel.rhs = parse_monomial(r, p.generators);
      rel.lhs_text = l;
      rel.rhs_text = r;
      p.relations.push_back(rel);
    }
    return build_from_presentation(p);
  };
  {
    // all squares equal: [Z] holds automatically
    FiniteTS g = build({{"x^2", "y^2"}, {"y^2", "z^2"}});
    CHECK(satisfies_condition_z(g).holds);
    CHECK(g.size() == 2 * enumerate_characters(g).size() + 1);
  }
  {
    // equal squares for two generators but no clause tying in the third
    FiniteTS g = build({{"x^2", "y^2"}});
    CHECK_FALSE(satisfies_condition_z(g).holds);
  }
  {
    // pairwise different squares in a chain of zero sets
    FiniteTS g = build({{"x^2 y^2", "x^2"}, {"x^2 z^2", "x^2"}, {"y^2 z^2", "y^2"}});
    CHECK(satisfies_condition_z(g).holds);
    CHECK(enumerate_characters(g).size() == 15);
    CHECK(g.size() == 31);
    CHECK(check_rs_axioms(make_fan(g).rs).all_pass());
  }
}

TEST_CASE("an invertible generator gives the four-element group with a zero") {
  Presentation p;
  p.label = "unit";
  p.generators = {"x"};
  Relation r;
  r.lhs = parse_monomial("x^2", p.generators);
  r.rhs = parse_monomial("1", p.generators);
  r.lhs_text = "x^2";
  r.rhs_text = "1";
  p.relations = {r};
  FiniteTS g = build_from_presentation(p);
  CHECK(g.size() == 5);
  CHECK(enumerate_characters(g).size() == 2);
  UnitsReport units = units_rsg(make_fan(g));
  CHECK(popcount(units.units) == 4);
  CHECK(units.rsg_fan);
}

TEST_CASE("necessary condition, contrapositively: no full RS without [Z]") {
  // the free two-generator structure fails [Z]; its full character space is a
  // q-fan, so the induced model cannot pass all axioms
  FiniteTS g = examples::free2();
  CharSet x = enumerate_characters(g);
  CHECK(is_q_fan(x, g).is_qfan);
  RSModel m = induce_d(g, x);
  CHECK_FALSE(check_rs_axioms(m).all_pass());
}
