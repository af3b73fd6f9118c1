#ifndef RSFAN_TS_HPP
#define RSFAN_TS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsfan/common.hpp"

namespace rsfan {

// A finite ternary semigroup candidate: element list, total commutative
// product given as an index table, and the three distinguished constants.
// Construction validates shape only; whether the axioms hold is the job of
// check_ts_axioms, so that broken candidates can be represented and reported.
struct FiniteTS {
  std::string label;
  std::vector<std::string> names;
  std::vector<Elem> table;  // n*n row-major
  Elem one = 0;
  Elem zero = 0;
  Elem minus_one = 0;

  // Presentation metadata, kept when the structure was built from one.
  std::vector<std::string> generators;
  std::vector<Elem> generator_elems;
  std::vector<std::pair<std::string, std::string>> relations;

  int size() const { return static_cast<int>(names.size()); }
  Elem mul(Elem a, Elem b) const { return table[static_cast<size_t>(a) * names.size() + b]; }
  Elem sq(Elem a) const { return mul(a, a); }
  Elem neg(Elem a) const { return mul(minus_one, a); }
  Mask all_mask() const { return size() == kMaxElems ? ~Mask{0} : (Mask{1} << size()) - 1; }

  const std::string& name(Elem a) const { return names[a]; }
  // -1 when absent
  Elem index_of(const std::string& nm) const;

  // a * S for a set S
  Mask mul_set(Elem a, Mask s) const;
};

// Throws StructuralError on malformed data (wrong table size, out-of-range
// index, duplicate or missing constant names, more than 64 elements).
FiniteTS make_ts(std::string label, std::vector<std::string> names, std::vector<Elem> table,
                 Elem one, Elem zero, Elem minus_one);

struct AxiomResult {
  std::string axiom;
  bool pass = false;
  std::string witness;  // empty when pass
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_pass() const {
    for (auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  const AxiomResult* find(const std::string& axiom) const;
  std::string to_string() const;
};

// [TS1]..[TS5], each with a witness tuple on failure.
AxiomReport check_ts_axioms(const FiniteTS& g);

// a | b, decided algebraically by a^2 b^2 = b^2.
bool divides(const FiniteTS& g, Elem a, Elem b);

struct ConditionZ {
  bool holds = false;
  Elem witness_a = -1, witness_b = -1;  // incomparable zero-sets on failure
};

// [Z]: any two zero-sets comparable; equivalently a^2 b^2 in {a^2, b^2}.
ConditionZ satisfies_condition_z(const FiniteTS& g);

// Id(G) = { x^2 : x in G }
Mask idempotents(const FiniteTS& g);

// c * G
Mask principal_ideal(const FiniteTS& g, Elem c);

bool is_ideal(const FiniteTS& g, Mask members);
bool is_prime_ideal(const FiniteTS& g, Mask members);  // proper and prime

struct IdealInfo {
  Mask members = 0;
  bool proper = false;
  bool prime = false;
};

struct IdealReport {
  std::vector<IdealInfo> ideals;  // sorted by (popcount, mask), includes G itself
  bool chain = false;             // totally ordered under inclusion
  bool all_proper_prime = false;
  int proper_count = 0;
};

// All ideals of g (unions of principal ideals), with primality flags.
IdealReport ideals(const FiniteTS& g);

std::string mask_to_string(const FiniteTS& g, Mask m);

}  // namespace rsfan

#endif
