#ifndef RSFAN_RS_HPP
#define RSFAN_RS_HPP

#include <array>
#include <optional>

#include "rsfan/chars.hpp"
#include "rsfan/ts.hpp"

namespace rsfan {

// Membership in the unique representation relations on {-1,0,1}.
bool d3_contains(int a, int b, int c);
bool dt3_contains(int a, int b, int c);

// Ternary relation on a FiniteTS: rows indexed by the form entries (b,c),
// each row a bit mask of the represented elements a. Rows over the first
// coordinate are the hot path of the quantifier loops.
struct DTable {
  int n = 0;
  std::vector<Mask> rows;

  DTable() = default;
  explicit DTable(int size) : n(size), rows(static_cast<size_t>(size) * size, 0) {}
  Mask& at(Elem b, Elem c) { return rows[static_cast<size_t>(b) * n + c]; }
  Mask at(Elem b, Elem c) const { return rows[static_cast<size_t>(b) * n + c]; }
  bool contains(Elem a, Elem b, Elem c) const { return has(at(b, c), a); }
  bool operator==(const DTable&) const = default;
};

struct RSModel {
  FiniteTS ts;
  DTable D;
  DTable Dt;
};

// [t-rep]: a in Dt(b,c)  <=>  a in D(b,c) and -b in D(-a,c) and -c in D(b,-a)
DTable derive_transversal(const FiniteTS& ts, const DTable& d);

// The unique real semigroup on {1,0,-1}, tables hard-coded.
RSModel three_rs();

// Representation induced by a set of characters: a in D(b,c) iff every h in
// the set has h(a) in D3(h(b),h(c)); transversal rows induced the same way
// from Dt3. The two routes to Dt (induced vs [t-rep] from D) are checked to
// coincide. Throws PreconditionError when the subset is empty.
RSModel induce_d(const FiniteTS& g, const CharSet& x, Mask subset, bool parallel = true);
RSModel induce_d(const FiniteTS& g, const CharSet& x, bool parallel = true);

struct RsOptions {
  bool parallel = true;
  bool skip_rs3 = false;  // bulk searches where only the other axioms matter
};

// Per-axiom report for [RS0]..[RS8]. RS3 is decided by the direct search and
// cross-checked against the RS3' form whenever RS2 holds; a disagreement is a
// bug and throws.
AxiomReport check_rs_axioms(const RSModel& m, const RsOptions& opts = {});

// The weak associativity transposition with D in place of Dt; a consequence
// of the other axioms on induced models.
bool weak_rs3_prime(const RSModel& m);

// TS-characters of m.ts that also preserve D, in canonical order. For fans
// this is the whole TS-character space.
CharSet rs_characters(const RSModel& m);

struct Rs3Search {
  bool found = false;
  Mask subset = 0;
  std::array<Elem, 5> witness{-1, -1, -1, -1, -1};  // a,b,c,d,e
  std::uint64_t examined = 0;
};

// Searches separating subsets H of the character space, sizes ascending and
// each size in lexicographic order, for an induced model violating RS3.
Rs3Search find_rs3_counterexample(const FiniteTS& g, int max_subset_size, bool parallel = true);

}  // namespace rsfan

#endif
