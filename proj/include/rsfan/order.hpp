#ifndef RSFAN_ORDER_HPP
#define RSFAN_ORDER_HPP

#include "rsfan/fan.hpp"
#include "rsfan/poset.hpp"
#include "rsfan/rs.hpp"

namespace rsfan {

// a <= b  iff  a in D(1,b) and -b in D(1,-a)
bool repr_leq(const RSModel& m, Elem a, Elem b);

// value order on {-1,0,1} with 1 < 0 < -1
int rank3(int v);

struct ReprOrderReport {
  Poset poset;
  AxiomReport properties;  // the ten recorded properties of the order
};

// Builds the representation partial order and checks, exhaustively, the ten
// properties it satisfies on any real semigroup (involution, bounds,
// idempotent characterisation, the character-level oracle, the zero-set
// sandwich, invertibility propagation, products of bounds, inf/sup of a,-a,
// and the Kleene inequality).
ReprOrderReport repr_poset(const RSModel& m);

struct LatticeReport {
  bool bounded_lattice = false;  // meets/joins exist, bottom 1, top -1
  bool closed_forms = false;     // brute-force bounds match the closed forms
  bool de_morgan = false;
  bool kleene = false;
  bool modular = false;
  bool distributive = false;
  bool pentagon_found = false;
  std::array<Elem, 5> pentagon{-1, -1, -1, -1, -1};  // bottom, low, high, side, top
  std::vector<Elem> meet, join;                      // n*n tables when lattice
  std::string detail;
};

LatticeReport fan_lattice(const FanModel& f);

struct ChainLengthReport {
  int length = 0;          // largest number of distinct nonempty U(a) in a strict chain
  int distinct_usets = 0;  // distinct nonempty U(a)
  int spectrum_size = 0;   // proper ideals
  bool within_bound = false;  // length <= 2 * spectrum_size
};

// U(a) = { h : h(a) = 1 } over the full character space.
ChainLengthReport chain_length(const FiniteTS& g);

struct UnitIncompReport {
  bool pass = false;
  std::string detail;
};

// Units other than +-1 are incomparable with everything except the bounds.
UnitIncompReport unit_incomparability(const FanModel& f);

}  // namespace rsfan

#endif
