#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsfan/examples.hpp"
#include "rsfan/kernels.hpp"

using namespace rsfan;

namespace {

// brute-force ideal enumeration over all subsets, for small structures
std::vector<Mask> ideals_bruteforce(const FiniteTS& g) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= g.all_mask(); ++s)
    if (is_ideal(g, s)) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("the three-element structure satisfies every axiom") {
  FiniteTS g = examples::three();
  CHECK(g.size() == 3);
  CHECK(check_ts_axioms(g).all_pass());
  CHECK(g.neg(g.one) == g.minus_one);
  CHECK(g.mul(g.minus_one, g.minus_one) == g.one);
}

TEST_CASE("a table where (-1)(-1) = -1 fails TS3 with a witness") {
  // two elements {1:=0, 0:=1} won't do; build 3 elements with a broken square
  std::vector<Elem> table = {
      0, 1, 2,  // 1 * .
      1, 1, 1,  // 0 * .
      2, 1, 2,  // -1 * . with (-1)(-1) = -1
  };
  FiniteTS g = make_ts("broken", {"1", "0", "-1"}, table, 0, 1, 2);
  AxiomReport rep = check_ts_axioms(g);
  CHECK_FALSE(rep.all_pass());
  REQUIRE(rep.find("TS3") != nullptr);
  CHECK_FALSE(rep.find("TS3")->pass);
  CHECK_FALSE(rep.find("TS3")->witness.empty());
}

TEST_CASE("malformed tables are a structural error, not an axiom failure") {
  CHECK_THROWS_AS(make_ts("bad", {"1", "0", "-1"}, {0, 1, 2, 0}, 0, 1, 2), StructuralError);
  CHECK_THROWS_AS(make_ts("bad", {"1", "0", "-1"}, std::vector<Elem>(9, 7), 0, 1, 2), StructuralError);
  CHECK_THROWS_AS(make_ts("bad", {"1", "1", "-1"}, std::vector<Elem>(9, 0), 0, 1, 2), StructuralError);
}

TEST_CASE("free structures and the named presentations have the stated sizes") {
  CHECK(examples::f1().size() == 7);
  CHECK(examples::f1_idem().size() == 5);
  CHECK(examples::f2().size() == 23);
  CHECK(examples::f3().size() == 15);
  CHECK(examples::f4().size() == 13);
  CHECK(examples::free2().size() == 19);
  CHECK(examples::free3().size() == 55);
}

TEST_CASE("element listings follow the conventional monomial order") {
  CHECK(examples::f1().names ==
        std::vector<std::string>{"1", "0", "-1", "x", "-x", "x^2", "-x^2"});
  CHECK(examples::f2().names ==
        std::vector<std::string>{"1",  "0",  "-1",   "x",     "-x",  "y",   "-y",  "z",   "-z",
                                 "x^2", "-x^2", "z^2", "-z^2", "xy",  "-xy", "xz",  "-xz", "yz",
                                 "-yz", "x^2z", "-x^2z", "xyz", "-xyz"});
  CHECK(examples::f3().names ==
        std::vector<std::string>{"1", "0", "-1", "x", "-x", "y", "-y", "z", "-z", "x^2", "-x^2",
                                 "z^2", "-z^2", "xy", "-xy"});
  CHECK(examples::f4().names ==
        std::vector<std::string>{"1", "0", "-1", "x", "-x", "y", "-y", "z", "-z", "x^2", "-x^2",
                                 "xy", "-xy"});
}

TEST_CASE("every presentation-built structure passes the axiom suite") {
  for (const FiniteTS& g : examples::all()) CHECK_MESSAGE(check_ts_axioms(g).all_pass(), g.label);
  CHECK(check_ts_axioms(examples::free2()).all_pass());
  CHECK(check_ts_axioms(examples::free3()).all_pass());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) CHECK(check_ts_axioms(examples::random_ts(rng)).all_pass());
}

TEST_CASE("presentations forcing 1 = -1 are rejected") {
  Presentation p;
  p.label = "bad";
  p.generators = {"x"};
  Relation r1, r2;
  r1.lhs = parse_monomial("x", p.generators);
  r1.rhs = parse_monomial("1", p.generators);
  r2.lhs = parse_monomial("x", p.generators);
  r2.rhs = parse_monomial("-1", p.generators);
  p.relations = {r1, r2};
  CHECK_THROWS_AS(build_from_presentation(p), DegeneratePresentationError);
}

TEST_CASE("divisibility: four equivalent formulations agree") {
  for (const FiniteTS& g : examples::all()) {
    CharSet full = enumerate_characters(g);
    for (Elem a = 0; a < g.size(); ++a)
      for (Elem b = 0; b < g.size(); ++b) {
        bool fast = divides(g, a, b);
        CHECK(fast == ref::divides_by_witness(g, a, b));
        CHECK(fast == ref::divides_by_zero_sets(g, full, a, b));
        // principal ideals reverse the divisibility order
        Mask ia = principal_ideal(g, a), ib = principal_ideal(g, b);
        CHECK(fast == ((ib & ia) == ib));
      }
  }
}

TEST_CASE("divisibility on the named examples") {
  FiniteTS f1 = examples::f1();
  CHECK(divides(f1, f1.index_of("1"), f1.index_of("x")));
  CHECK_FALSE(divides(f1, f1.index_of("x"), f1.index_of("1")));
  FiniteTS f2 = examples::f2();
  CHECK(divides(f2, f2.index_of("z"), f2.index_of("x")));
}

TEST_CASE("condition [Z] holds on the examples and fails on the free pair") {
  for (const FiniteTS& g : examples::all()) CHECK(satisfies_condition_z(g).holds);
  ConditionZ cz = satisfies_condition_z(examples::free2());
  CHECK_FALSE(cz.holds);
  CHECK(examples::free2().name(cz.witness_a) == "x");
  CHECK(examples::free2().name(cz.witness_b) == "y");
}

TEST_CASE("ideal enumeration matches the subset brute force on small structures") {
  for (const FiniteTS& g : {examples::three(), examples::f1(), examples::f1_idem()}) {
    auto rep = ideals(g);
    auto brute = ideals_bruteforce(g);
    REQUIRE(rep.ideals.size() == brute.size());
    for (size_t i = 0; i < brute.size(); ++i) {
      bool found = false;
      for (auto& info : rep.ideals) found = found || info.members == brute[i];
      CHECK(found);
    }
  }
}

TEST_CASE("ideals of F1 form the stated chain") {
  FiniteTS g = examples::f1();
  auto rep = ideals(g);
  REQUIRE(rep.ideals.size() == 3);
  CHECK(rep.ideals[0].members == bit(g.zero));
  CHECK(mask_to_string(g, rep.ideals[1].members) == "{0, x, -x, x^2, -x^2}");
  CHECK(rep.ideals[2].members == g.all_mask());
  CHECK(rep.chain);
  CHECK(rep.all_proper_prime);
}

TEST_CASE("F2 has a chain of three proper ideals and (x) is principal") {
  FiniteTS g = examples::f2();
  auto rep = ideals(g);
  CHECK(rep.proper_count == 3);
  CHECK(rep.chain);
  CHECK(rep.all_proper_prime);
  Mask px = principal_ideal(g, g.index_of("x"));
  bool found = false;
  for (auto& info : rep.ideals) found = found || info.members == px;
  CHECK(found);
  CHECK(popcount(px) == 17);
}

TEST_CASE("the condition [Z] equivalences of the ideal lattice") {
  // chain of ideals <=> all proper ideals prime <=> condition [Z]
  auto check_equiv = [](const FiniteTS& g) {
    auto rep = ideals(g);
    bool cz = satisfies_condition_z(g).holds;
    CHECK(cz == rep.chain);
    CHECK(cz == rep.all_proper_prime);
  };
  for (const FiniteTS& g : examples::all()) check_equiv(g);
  check_equiv(examples::free2());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; ++i) check_equiv(examples::random_ts(rng));
}

TEST_CASE("idempotents are product-closed and contain the constants") {
  for (const FiniteTS& g : examples::all()) {
    Mask id = idempotents(g);
    CHECK(has(id, g.one));
    CHECK(has(id, g.zero));
    for (Mask s = id; s; s &= s - 1)
      for (Mask t = id; t; t &= t - 1) CHECK(has(id, g.mul(lowest(s), lowest(t))));
  }
}
