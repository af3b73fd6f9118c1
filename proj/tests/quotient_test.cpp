#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsfan/examples.hpp"
#include "rsfan/quotient.hpp"

using namespace rsfan;

namespace {

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

TEST_CASE("the kernel of the full space is the identity congruence") {
  for (const FiniteTS& g : examples::all()) {
    CharSet x = enumerate_characters(g);
    Congruence c = congruence_from_chars(g, x, full_mask(x.size()));
    CHECK(c.class_count == g.size());
  }
}

TEST_CASE("an empty character set cannot induce a congruence") {
  FiniteTS g = examples::f1();
  CHECK_THROWS_AS(congruence_from_chars(g, enumerate_characters(g), Mask{0}), PreconditionError);
}

TEST_CASE("the kernel of a single generic character collapses F1 onto 3") {
  FiniteTS g = examples::f1();
  CharSet x = enumerate_characters(g);
  Congruence c = congruence_from_chars(g, x, bit(1));  // h2 sends x to 1
  CHECK(c.class_count == 3);
  CHECK(c.same(g.index_of("x"), g.index_of("x^2")));
  CHECK(c.same(g.index_of("x"), g.one));
  CHECK(c.same(g.index_of("-x"), g.minus_one));
  CHECK_FALSE(c.same(g.one, g.zero));
  FiniteTS q = quotient_ts(g, c, "F1/h2");
  CHECK(q.size() == 3);
  CHECK(check_ts_axioms(q).all_pass());
}

TEST_CASE("lifted characters are exactly the characters of the quotient") {
  for (const FiniteTS& g : {examples::f1(), examples::f4()}) {
    CharSet x = enumerate_characters(g);
    for (Mask s = 1; s <= full_mask(x.size()); ++s) {
      if (!is_3_closed(x, s)) continue;
      Congruence c = congruence_from_chars(g, x, s);
      FiniteTS q = quotient_ts(g, c, "q");
      CHECK(lifted_characters_match(g, x, s, q));
    }
  }
}

TEST_CASE("quotients of fans by 3-closed sets are fans") {
  for (const FiniteTS& g : examples::all()) {
    FanModel f = make_fan(g);
    CharSet x = enumerate_characters(g);
    if (x.size() > 12) continue;
    for (Mask s = 1; s <= full_mask(x.size()); ++s) {
      if (!is_3_closed(x, s)) continue;
      QuotientFan q = quotient_fan(f, x, s);
      CHECK_MESSAGE(q.condition_z, g.label, " subset ", s);
      CHECK_MESSAGE(q.rs_axioms_pass, g.label, " subset ", s);
      CHECK_MESSAGE(q.induced_matches_closed_form, g.label, " subset ", s);
    }
  }
}

TEST_CASE("quotient by a set that is not 3-closed is rejected") {
  FiniteTS g = examples::f2();
  CharSet x = enumerate_characters(g);
  // {h2, h8}: h2^2 h8 kills x and y but sends z to -1, which is h3
  Mask s = bit(1) | bit(7);
  REQUIRE_FALSE(is_3_closed(x, s));
  CHECK_THROWS_AS(quotient_fan(make_fan(g), x, s), PreconditionError);
}

TEST_CASE("quotient by the full space is the structure itself") {
  FiniteTS g = examples::f4();
  FanModel f = make_fan(g);
  CharSet x = enumerate_characters(g);
  QuotientFan q = quotient_fan(f, x, full_mask(x.size()));
  CHECK(q.fan.rs.ts.size() == g.size());
  CHECK(q.fan.rs.D == f.rs.D);
}

TEST_CASE("quotient of F2 by its closed point collapses onto 3") {
  FiniteTS g = examples::f2();
  QuotientFan q = quotient_fan(make_fan(g), enumerate_characters(g), bit(0));  // {h1}
  CHECK(q.fan.rs.ts.size() == 3);
  CHECK(q.rs_axioms_pass);
}

TEST_CASE("the subset-to-congruence map is injective and inclusion-reversing") {
  for (const FiniteTS& g : {examples::f1(), examples::f1_idem(), examples::f4()}) {
    CongruenceFamily fam = all_congruences(make_fan(g));
    CHECK(fam.injective);
    CHECK(fam.inclusion_reversing);
    CHECK_FALSE(fam.closed_subsets.empty());
  }
}

TEST_CASE("ideal quotients: the collapse of F3 modulo the zero ideal") {
  FiniteTS g = examples::f3();
  IdealQuotient iq = ideal_quotient(make_fan(g), bit(g.zero));
  bool z_to_one = false;
  for (Elem a : iq.collapses_to_one) z_to_one = z_to_one || g.name(a) == "z";
  CHECK(z_to_one);
  CHECK(iq.exponent_two_group);
  CHECK(iq.rsg_fan);
  CHECK(iq.witness_matches_kernel);
  CHECK(iq.quotient.fan.rs.ts.size() == 9);
}

TEST_CASE("ideal quotient of F1 by its maximal ideal is 3") {
  FiniteTS g = examples::f1();
  Mask maximal = 0;
  for (auto& info : ideals(g).ideals)
    if (info.proper && popcount(info.members) == 5) maximal = info.members;
  REQUIRE(maximal != 0);
  IdealQuotient iq = ideal_quotient(make_fan(g), maximal);
  CHECK(iq.quotient.fan.rs.ts.size() == 3);
  CHECK(iq.rsg_fan);
  CHECK(popcount(iq.fiber) == 1);
}

TEST_CASE("every proper ideal of every example yields a reduced-special-group fan") {
  for (const FiniteTS& g : examples::all()) {
    FanModel f = make_fan(g);
    for (auto& info : ideals(g).ideals) {
      if (!info.proper) continue;
      IdealQuotient iq = ideal_quotient(f, info.members);
      CHECK_MESSAGE(iq.exponent_two_group, g.label, " ", mask_to_string(g, info.members));
      CHECK_MESSAGE(iq.rsg_fan, g.label, " ", mask_to_string(g, info.members));
      CHECK_MESSAGE(iq.witness_matches_kernel, g.label, " ", mask_to_string(g, info.members));
      CHECK_MESSAGE(iq.ideals_above_collapse, g.label, " ", mask_to_string(g, info.members));
    }
  }
}

TEST_CASE("the projection onto a fan quotient preserves representation") {
  FiniteTS g = examples::f3();
  FanModel f = make_fan(g);
  CharSet x = enumerate_characters(g);
  Mask s = closure_3(x, bit(1));  // a 3-closed set containing h2
  QuotientFan q = quotient_fan(f, x, s);
  std::vector<Elem> proj(g.size());
  for (Elem a = 0; a < g.size(); ++a) proj[a] = q.cong.cls[a];
  CHECK(check_hom_preservation(f, q.fan.rs, proj));
}

TEST_CASE("improper ideals and non-ideals are rejected") {
  FiniteTS g = examples::f1();
  FanModel f = make_fan(g);
  CHECK_THROWS_AS(ideal_quotient(f, g.all_mask()), PreconditionError);
  CHECK_THROWS_AS(ideal_quotient(f, bit(g.one)), PreconditionError);
}
