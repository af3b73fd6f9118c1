#ifndef RSFAN_PRESENTATION_HPP
#define RSFAN_PRESENTATION_HPP

#include <string>
#include <vector>

#include "rsfan/ts.hpp"

namespace rsfan {

// A signed monomial over the generators of a presentation: sign, one exponent
// in {0,1,2} per generator, or the distinguished zero. Exponents are already
// reduced modulo x^3 = x.
struct Monomial {
  bool is_zero = false;
  bool negative = false;
  std::vector<int> exp;  // one entry per generator, values 0..2

  static Monomial zero(int k) {
    Monomial m;
    m.is_zero = true;
    m.exp.assign(k, 0);
    return m;
  }
};

Monomial mul_monomial(const Monomial& a, const Monomial& b);

struct Relation {
  Monomial lhs, rhs;
  std::string lhs_text, rhs_text;
};

struct Presentation {
  std::string label;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
};

// "x^2 z" or "-x^2z" or "1" / "-1" / "0"; factors may be juxtaposed when all
// generator names are single characters, otherwise separated by spaces or '*'.
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& generators);
std::string monomial_name(const Monomial& m, const std::vector<std::string>& generators);

// The free ternary semigroup on k named generators: all signed monomials with
// exponents in {0,1,2} plus zero, 2*3^k + 1 elements, in canonical order.
FiniteTS free_ts(std::vector<std::string> generators, std::string label = "");

// Free TS modulo the congruence closure of the relations, with [TS5] collapse
// (classes forced onto their negatives are merged into the class of 0).
// Throws DegeneratePresentationError when the closure identifies 1 with -1.
FiniteTS build_from_presentation(const Presentation& p);

}  // namespace rsfan

#endif
