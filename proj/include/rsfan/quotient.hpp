#ifndef RSFAN_QUOTIENT_HPP
#define RSFAN_QUOTIENT_HPP

#include "rsfan/fan.hpp"

namespace rsfan {

// A TS-congruence given by its class map; classes are numbered by their
// smallest member so quotient element order stays canonical.
struct Congruence {
  std::vector<int> cls;  // element -> class
  int class_count = 0;
  Mask inducing_chars = 0;  // when built from characters

  bool same(Elem a, Elem b) const { return cls[a] == cls[b]; }
};

// Kernel congruence of a nonempty set of characters.
Congruence congruence_from_chars(const FiniteTS& g, const CharSet& x, Mask subset);

// The quotient structure; class names are the names of the smallest members.
FiniteTS quotient_ts(const FiniteTS& g, const Congruence& c, const std::string& label);

// Characters of g/H are exactly the lifts of the members of a 3-closed H.
bool lifted_characters_match(const FiniteTS& g, const CharSet& x, Mask subset, const FiniteTS& q);

struct QuotientFan {
  FanModel fan;        // the closed-form representation on the quotient
  Congruence cong;
  bool induced_matches_closed_form = false;  // pushed-down rows equal the clauses
  bool condition_z = false;
  bool rs_axioms_pass = false;
};

// Quotient of a fan by a nonempty 3-closed set of characters; fans are closed
// under this. Throws PreconditionError when the subset is empty or not
// 3-closed.
QuotientFan quotient_fan(const FanModel& f, const CharSet& x, Mask subset, bool parallel = true);

struct CongruenceFamily {
  std::vector<Mask> closed_subsets;  // nonempty 3-closed subsets of the space
  bool injective = false;            // distinct subsets give distinct congruences
  bool inclusion_reversing = false;  // larger subsets give finer congruences
};

CongruenceFamily all_congruences(const FanModel& f);

struct IdealQuotient {
  Mask ideal = 0;
  Mask fiber = 0;  // characters with zero set exactly the ideal
  QuotientFan quotient;
  bool witness_matches_kernel = false;  // a ~ b iff az = bz for some z outside
  bool exponent_two_group = false;      // nonzero classes square to the class of 1
  bool rsg_fan = false;                 // minimal representation law on nonzero classes
  bool ideals_above_collapse = false;   // ideals J strictly above map onto everything
  std::vector<Elem> collapses_to_one;   // elements identified with 1
};

// Quotient modulo the congruence determined by a proper ideal (the kernel of
// all characters whose zero set is exactly the ideal).
IdealQuotient ideal_quotient(const FanModel& f, Mask ideal, bool parallel = true);

}  // namespace rsfan

#endif
