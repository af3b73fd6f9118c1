#ifndef RSFAN_FAN_HPP
#define RSFAN_FAN_HPP

#include "rsfan/rs.hpp"

namespace rsfan {

// A real semigroup whose representation came from the closed-form clauses on
// a condition-[Z] structure.
struct FanModel {
  RSModel rs;
};

// Builds the representation by the closed forms
//   D(a,b)  = a Id(G) u b Id(G) u { x : xa = -xb and x = a^2 x }
//   Dt(a,b) = a G            if b = -a          (checked first; it wins)
//             {a}            if Z(a) strictly inside Z(b)
//             {b}            if Z(b) strictly inside Z(a)
//             {a,b}          if Z(a) = Z(b), b != -a
// and throws PreconditionError with a witness pair when condition [Z] fails.
FanModel make_fan(const FiniteTS& g);

// Zero-set comparison done algebraically: Z(a) included in Z(b) iff a^2b^2 = b^2.
bool zle(const FiniteTS& g, Elem a, Elem b);

// The two clauses define each other: D plus [t-rep] reproduces the Dt clause,
// and Dt plus  a in D(b,c) <=> a in Dt(a^2 b, a^2 c)  reproduces the D clause.
bool check_interdefinability(const FiniteTS& g);

struct FanEquivalence {
  bool is_fan1 = false;  // X equals the full character space
  bool is_fan2 = false;  // RS axioms + 3-closed + the maximality condition
  bool is_qfan = false;
  bool rs_axioms_pass = false;
  bool closed3 = false;
  bool maximality = false;  // every admissible subsemigroup is some h^{-1}[0,1]
  bool agree = false;
  std::string detail;
};

// The two fan notions compared on (g, X-subset). Requires condition [Z].
FanEquivalence fan_equivalence(const FiniteTS& g, const CharSet& full, Mask subset, bool parallel = true);

struct UnitsReport {
  Mask units = 0;  // { a : a^2 = 1 }
  bool rsg_fan = false;
  bool dt_matches_d = false;
  std::string detail;
};

// Restriction of the representation to the invertible elements; checks the
// minimal binary representation law of reduced-special-group fans.
UnitsReport units_rsg(const FanModel& f);

// f maps g-elements to h-elements. Throws PreconditionError unless f is a
// TS-homomorphism; returns whether representation is preserved (always, for
// fans into real semigroups).
bool check_hom_preservation(const FanModel& fan, const RSModel& target, const std::vector<Elem>& f);

struct FanIdealsReport {
  bool ideals_saturated_prime = false;  // every proper ideal
  bool subsemigroup_criterion = false;  // saturated iff contains Id(G) and S n -S ideal
  std::string detail;
};

bool is_saturated(const RSModel& m, Mask s);

FanIdealsReport check_fan_ideals(const FanModel& f);

// All product-closed subsets containing 1, for small structures; closures of
// small seed sets when full enumeration is infeasible.
std::vector<Mask> subsemigroups(const FiniteTS& g);

}  // namespace rsfan

#endif
