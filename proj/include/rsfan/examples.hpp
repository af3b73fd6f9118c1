#ifndef RSFAN_EXAMPLES_HPP
#define RSFAN_EXAMPLES_HPP

#include <random>
#include <vector>

#include "rsfan/presentation.hpp"
#include "rsfan/ts.hpp"

namespace rsfan::examples {

// The canonical structures: 3 = {1,0,-1}; the one-generator structures F1 and
// its x^2 = x collapse; the three-generator structures F2, F3, F4.
FiniteTS three();
FiniteTS f1();       // 7 elements
FiniteTS f1_idem();  // x^2 = x, 5 elements
FiniteTS f2();       // x^2 = y^2, x^2 z^2 = y^2 z^2 = x^2, 23 elements
FiniteTS f3();       // F2 plus xz = x, 15 elements
FiniteTS f4();       // F3 plus z^2 = 1, 13 elements

Presentation presentation_of(const std::string& which);

// Every named example, in a fixed order (three, f1, f1_idem, f2, f3, f4).
std::vector<FiniteTS> all();

// The free structures used by negative tests (condition [Z] fails from two
// generators up).
FiniteTS free1();
FiniteTS free2();
FiniteTS free3();

// Deterministic random presentation on up to max_gens generators; may return
// structures that fail condition [Z]. Degenerate presentations are retried
// internally, so this always yields a valid ternary semigroup.
FiniteTS random_ts(std::mt19937_64& rng, int max_gens = 3);

}  // namespace rsfan::examples

#endif
