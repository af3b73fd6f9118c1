#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsfan/charfan.hpp"
#include "rsfan/examples.hpp"

using namespace rsfan;

TEST_CASE("the three conditions hold on every corpus fan") {
  for (const FiniteTS& g : examples::all()) {
    CharacterizationReport rep = check_characterization(make_fan(g).rs);
    CHECK_MESSAGE(rep.is_fan, g.label);
    CHECK_MESSAGE(rep.cond_2i, g.label);
    CHECK_MESSAGE(rep.cond_2ii, g.label, " ", rep.detail);
    CHECK_MESSAGE(rep.cond_2iii, g.label, " ", rep.detail);
    CHECK(rep.equivalence_holds);
  }
}

TEST_CASE("the biconditional across random presentations") {
  std::mt19937_64 rng(41);
  int fans = 0, others = 0;
  while (fans + others < 30) {
    FiniteTS g = examples::random_ts(rng);
    if (satisfies_condition_z(g).holds) {
      CharacterizationReport rep = check_characterization(make_fan(g).rs);
      CHECK(rep.equivalence_holds);
      CHECK(rep.is_fan);
      ++fans;
    } else {
      RSModel m = induce_d(g, enumerate_characters(g));
      if (!check_rs_axioms(m).all_pass()) {
        ++others;  // not a real semigroup; the theorem does not speak about it
        continue;
      }
      CharacterizationReport rep = check_characterization(m);
      CHECK(rep.equivalence_holds);
      CHECK_FALSE(rep.is_fan);
      ++others;
    }
  }
  CHECK(fans > 0);
}

TEST_CASE("interpolation along an ideal between two zero sets") {
  FiniteTS g = examples::f2();
  FanModel f = make_fan(g);
  CharSet x = enumerate_characters(g);
  // h4 ~> h2 ~> h1; interpolating along Z(h2) from (h4, h1) recovers h2
  const Character &h4 = x[3], &h2 = x[1], &h1 = x[0];
  REQUIRE(specializes(h4, h2));
  REQUIRE(specializes(h2, h1));
  InterpolationResult res = interpolate_character(f, h4, h1, zero_set(h2));
  CHECK(res.is_char);
  CHECK(res.chain);
  CHECK(res.zero_set_is_i);
  CHECK(res.unique);
  CHECK(res.square_route);
  CHECK(res.f == h2);
}

TEST_CASE("interpolation at the endpoint ideals returns the endpoints") {
  FiniteTS g = examples::f1();
  FanModel f = make_fan(g);
  CharSet x = enumerate_characters(g);
  const Character &h2 = x[1], &h1 = x[0];
  REQUIRE(specializes(h2, h1));
  CHECK(interpolate_character(f, h2, h1, zero_set(h2)).f == h2);
  CHECK(interpolate_character(f, h2, h1, zero_set(h1)).f == h1);
}

TEST_CASE("interpolation sweep: every chain and every intermediate ideal") {
  for (const FiniteTS& g : examples::all()) {
    FanModel f = make_fan(g);
    CharSet x = enumerate_characters(g);
    auto ideal_report = ideals(g);
    for (int i = 0; i < x.size(); ++i)
      for (int j = 0; j < x.size(); ++j) {
        if (!specializes(x[i], x[j])) continue;
        for (const IdealInfo& info : ideal_report.ideals) {
          Mask zi = zero_set(x[i]), zj = zero_set(x[j]);
          if ((zi & info.members) != zi || (info.members & zj) != info.members) continue;
          InterpolationResult res = interpolate_character(f, x[i], x[j], info.members);
          CHECK(res.is_char);
          CHECK(res.chain);
          CHECK(res.zero_set_is_i);
          CHECK(res.unique);
          CHECK(res.square_route);
        }
      }
  }
}

TEST_CASE("interpolation preconditions name the failing inclusion") {
  FiniteTS g = examples::f2();
  FanModel f = make_fan(g);
  CharSet x = enumerate_characters(g);
  CHECK_THROWS_AS(interpolate_character(f, x[3], x[0], bit(g.zero) | bit(g.index_of("x"))),
                  PreconditionError);                                            // not an ideal
  CHECK_THROWS_AS(interpolate_character(f, x[0], x[3], zero_set(x[1])), PreconditionError);  // no chain
}

TEST_CASE("every proper ideal of a fan is a zero set") {
  for (const FiniteTS& g : examples::all()) CHECK(zero_set_surjectivity(make_fan(g)));
  std::mt19937_64 rng(43);
  int fans = 0;
  while (fans < 10) {
    FiniteTS g = examples::random_ts(rng);
    if (!satisfies_condition_z(g).holds) continue;
    CHECK(zero_set_surjectivity(make_fan(g)));
    ++fans;
  }
}

TEST_CASE("totally ordered character spaces force fans") {
  {
    ChainVerdict v = totally_ordered_spec_implies_fan(make_fan(examples::f1_idem()).rs);
    CHECK(v.applicable);
    CHECK(v.fan_confirmed);
    CHECK(v.unique_zero_sets);
  }
  {
    ChainVerdict v = totally_ordered_spec_implies_fan(three_rs());
    CHECK(v.applicable);
    CHECK(v.fan_confirmed);
  }
  {
    ChainVerdict v = totally_ordered_spec_implies_fan(make_fan(examples::f2()).rs);
    CHECK_FALSE(v.applicable);  // the leaf level is an antichain
  }
}

TEST_CASE("two overlapping specialization chains force fans") {
  {
    // h2 ~> h1 and h3 ~> h1 cover the one-generator space; both chains touch
    // every saturated prime ideal
    ChainVerdict v = two_chains_implies_fan(make_fan(examples::f1()).rs);
    CHECK(v.applicable);
    CHECK(v.fan_confirmed);
  }
  {
    // a single chain is a degenerate cover
    ChainVerdict v = two_chains_implies_fan(make_fan(examples::f1_idem()).rs);
    CHECK(v.applicable);
    CHECK(v.fan_confirmed);
  }
  {
    // the four-leaf antichain needs more than two chains
    ChainVerdict v = two_chains_implies_fan(make_fan(examples::f2()).rs);
    CHECK_FALSE(v.applicable);
  }
  {
    ChainVerdict v = two_chains_implies_fan(make_fan(examples::f4()).rs);
    CHECK_FALSE(v.applicable);
  }
}

TEST_CASE("saturated prime ideals of corpus fans are all the proper ideals") {
  for (const FiniteTS& g : examples::all()) {
    RSModel m = make_fan(g).rs;
    CHECK(static_cast<int>(saturated_prime_ideals(m).size()) == ideals(g).proper_count);
  }
}
