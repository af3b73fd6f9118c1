#ifndef RSFAN_CHARFAN_HPP
#define RSFAN_CHARFAN_HPP

#include "rsfan/quotient.hpp"

namespace rsfan {

struct CharacterizationReport {
  bool is_fan = false;    // representation equals the closed-form one
  bool cond_2i = false;   // condition [Z]
  bool cond_2ii = false;  // zero-set inclusions upgrade to specializations
  bool cond_2iii = false; // ideal quotients carry the minimal representation
  bool equivalence_holds = false;
  std::string detail;
};

// The three-condition characterization of fans among real semigroups;
// requires a model passing the RS axioms.
CharacterizationReport check_characterization(const RSModel& m, bool parallel = true);

struct InterpolationResult {
  Character f;
  bool is_char = false;
  bool chain = false;        // g ~> f ~> h
  bool zero_set_is_i = false;
  bool unique = false;       // only specialization of g with that zero set
  bool square_route = false; // f = h'^2 g for every h' with Z(h') = I
};

// Given g ~> h and an ideal between their zero sets, produces the character
// that is 0 on the ideal and follows g elsewhere. Throws PreconditionError
// naming the failing inclusion.
InterpolationResult interpolate_character(const FanModel& fan, const Character& g, const Character& h,
                                          Mask ideal);

// Every proper ideal of a fan is the zero set of some character.
bool zero_set_surjectivity(const FanModel& fan);

struct ChainVerdict {
  bool applicable = false;
  bool fan_confirmed = false;
  bool unique_zero_sets = false;  // totally-ordered case only
  std::string detail;
};

// If the character space is a specialization chain, the model is a fan and
// each saturated prime ideal is the zero set of a unique character.
ChainVerdict totally_ordered_spec_implies_fan(const RSModel& m);

// If the character space is covered by two specialization chains, each
// realizing every saturated prime ideal as a zero set, the model is a fan.
ChainVerdict two_chains_implies_fan(const RSModel& m);

// Proper prime ideals that are saturated for the model's representation.
std::vector<Mask> saturated_prime_ideals(const RSModel& m);

}  // namespace rsfan

#endif
