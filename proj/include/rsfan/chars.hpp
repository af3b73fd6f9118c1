#ifndef RSFAN_CHARS_HPP
#define RSFAN_CHARS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsfan/poset.hpp"
#include "rsfan/ts.hpp"

namespace rsfan {

// A TS-homomorphism into 3 = {-1,0,1}, stored as a dense value vector indexed
// by element id.
struct Character {
  std::vector<std::int8_t> vals;

  int size() const { return static_cast<int>(vals.size()); }
  int operator()(Elem a) const { return vals[a]; }
  bool operator==(const Character& o) const { return vals == o.vals; }
  bool operator!=(const Character& o) const { return vals != o.vals; }
};

Character char_product(const Character& a, const Character& b, const Character& c);
Character char_square_times(const Character& a, const Character& b);  // a^2 * b

// h^{-1}[0]
Mask zero_set(const Character& h);
// h^{-1}[{0,1}]
Mask nonneg_set(const Character& h);

bool is_character(const FiniteTS& g, const Character& h);

// A finite set of characters over a common structure. Members are kept in the
// canonical order produced by enumerate_characters; `labels` names them
// h1, h2, ... in that order.
struct CharSet {
  std::vector<Character> members;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(members.size()); }
  const Character& operator[](int i) const { return members[i]; }
  int index_of(const Character& h) const;  // -1 if absent
  CharSet subset(Mask which) const;
};

// The full space Hom_TS(G, 3), canonically ordered: zero-set size descending,
// ties broken by the set of proper specializations already labelled, then by
// value vectors with values ranked 0 < 1 < -1.
CharSet enumerate_characters(const FiniteTS& g);

// Applies the same canonical order and h-labels to any list of characters.
CharSet make_canonical_charset(std::vector<Character> members);

// g ~> h, i.e. h = h^2 g pointwise.
bool specializes(const Character& g, const Character& h);

enum class ZeroSetOrder { equal, left_in_right, right_in_left, incomparable };
ZeroSetOrder compare_zero_sets(const Character& g, const Character& h);

struct SpecializationPoset {
  Poset poset;            // i <= j  iff  x_i ~> x_j (specializations upward)
  bool is_root_system = false;
};

SpecializationPoset specialization_poset(const CharSet& x);

struct QFanResult {
  bool is_qfan = false;
  bool closed3 = false;
  bool separating = false;
  std::string reason;  // first failure, with witness
};

// 3-closed (products of any three members stay inside, repetitions allowed)
// and separating points of g.
QFanResult is_q_fan(const CharSet& x, const FiniteTS& g);

bool is_3_closed(const CharSet& full, Mask subset);
Mask closure_3(const CharSet& full, Mask seed);
bool separates_points(const FiniteTS& g, const CharSet& x, Mask subset,
                      Elem* wa = nullptr, Elem* wb = nullptr);

struct DensityResult {
  bool qfan_iff_full = false;  // the finite density statement for this input
  bool is_qfan = false;
  bool is_full = false;
};

// Finite form of the density theorem: a 3-closed X is a q-fan iff X = X_G.
DensityResult finite_density_check(const FiniteTS& g, const CharSet& full, Mask subset);

}  // namespace rsfan

#endif
