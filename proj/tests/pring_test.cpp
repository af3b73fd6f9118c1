#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsfan/pring.hpp"

using namespace rsfan::pring;

namespace {

DualNumber dn(long long a, long long b) { return {Rat(a), Rat(b)}; }

}  // namespace

TEST_CASE("dual-number arithmetic squares the nilpotent away") {
  CHECK(dn(1, 0) * dn(1, 0) == dn(0, 0));              // X^2 = 0
  CHECK(dn(2, 3) * dn(-1, 4) == dn(5, 12));            // (2X+3)(-X+4) = 5X+12
  CHECK(dn(2, 3) + dn(-1, 4) == dn(1, 7));
  CHECK((-dn(2, -3)) == dn(-2, 3));
  CHECK(to_string(dn(-5, 3)) == "-5X+3");
  CHECK(to_string(dn(0, -1)) == "0X-1");
}

TEST_CASE("membership in the lexicographic preorder") {
  auto t = lex_preorder();
  CHECK(t.member(dn(2, 0)));
  CHECK_FALSE(t.member(dn(0, -1)));
  CHECK(t.member(dn(-5, 3)));
  CHECK_FALSE(t.member(dn(-1, 0)));
}

TEST_CASE("the lexicographic rule is a total preorder on every sample") {
  for (int range : {2, 5, 10}) {
    auto rep = verify_total_preorder(lex_preorder(), grid_sample(range));
    CHECK_MESSAGE(rep.pass(), "range ", range);
  }
}

TEST_CASE("sums of squares are not total on the dual numbers") {
  auto rep = verify_total_preorder(sos_preorder(), grid_sample(2));
  CHECK(rep.squares.pass);
  CHECK(rep.products.pass);
  CHECK(rep.sums.pass);
  CHECK(rep.proper.pass);
  CHECK_FALSE(rep.total.pass);  // X escapes T and -T
}

TEST_CASE("sums of squares on the integers are proper and total on the sample") {
  auto rep = verify_int_preorder([](long long n) { return n >= 0; }, 3);
  CHECK(rep.proper);
  CHECK(rep.total);
}

TEST_CASE("the support of the lexicographic preorder is the zero ideal") {
  for (int range : {2, 5}) {
    SupportReport rep = support(lex_preorder(), grid_sample(range), {});
    REQUIRE(rep.support.size() == 1);
    CHECK(rep.support[0] == dn(0, 0));
  }
}

TEST_CASE("the nilpotent witnesses that the zero ideal is not radical") {
  SupportReport rep = support(lex_preorder(), grid_sample(2), {{dn(1, 0), dn(0, 0)}, {dn(0, 1), dn(0, 0)}});
  REQUIRE(rep.radical_violations.size() == 1);  // X fails, the unit 1 does not
  CHECK(rep.radical_violations[0].find("1X+0") != std::string::npos);
  SupportReport zero_case = support(lex_preorder(), grid_sample(2), {{dn(0, 0), dn(0, 0)}});
  CHECK(zero_case.radical_violations.empty());  // 0 always sits in the support
}

TEST_CASE("the preorder itself fails primeness; its cone completion passes") {
  // the support of the lexicographic rule is the non-prime zero ideal:
  // (2X)(3X) = 0 with neither factor in the support
  auto lex = ts_char_subset_conditions(lex_preorder(), lex_preorder(), grid_sample(3));
  CHECK(lex.contains_t.pass);
  CHECK(lex.product_closed.pass);
  CHECK(lex.no_minus_one.pass);
  CHECK(lex.total.pass);
  CHECK_FALSE(lex.support_prime.pass);
  CHECK(lex.support_convex.pass);
  // the closed half plane has the whole nilpotent line as its support
  auto cone = ts_char_subset_conditions(cone_preorder(), lex_preorder(), grid_sample(3));
  CHECK(cone.pass_six());
  CHECK(cone.additive.pass);
}

TEST_CASE("the open half plane with zero fails totality at the nilpotent") {
  auto rep = ts_char_subset_conditions(sos_preorder(), lex_preorder(), grid_sample(2));
  CHECK_FALSE(rep.total.pass);
  CHECK(rep.total.witness.find("X") != std::string::npos);
  // it also fails to contain the preorder (the positive a-axis is missing)
  CHECK_FALSE(rep.contains_t.pass);
}

TEST_CASE("adjoining the negated nilpotent breaks primeness of the support") {
  auto s = with_extra(lex_preorder(), {dn(-1, 0)}, "lex+(-X)");
  auto rep = ts_char_subset_conditions(s, lex_preorder(), grid_sample(2));
  CHECK_FALSE(rep.support_prime.pass);  // (2X)(2X) = 0 lies in the support, 2X does not
}
