#ifndef RSFAN_KERNELS_HPP
#define RSFAN_KERNELS_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "rsfan/chars.hpp"
#include "rsfan/rs.hpp"

// Enumeration cores behind the axiom checks and subset searches: bit-mask
// tables, loops parallelized over the first coordinate (or subset blocks).
// The naive serial counterparts live in rsfan::ref and are compared against
// these in the tests and in the benchmark.
namespace rsfan::kernels {

// Induced representation rows over the characters selected by `subset`.
void induced_tables(const FiniteTS& g, const CharSet& x, Mask subset, DTable& d, DTable& dt, bool parallel);

// First RS3 violation (a,b,c,d,e) in lexicographic scan order, or nullopt.
std::optional<std::array<Elem, 5>> rs3_violation(const FiniteTS& ts, const DTable& dt, bool parallel);

// First RS3' violation (a,b,c,d) in scan order, or nullopt.
std::optional<std::array<Elem, 4>> rs3_prime_violation(const FiniteTS& ts, const DTable& dt);

// Exhaustive scan of all proper nonempty subsets of the full character space
// for one that is 3-closed and separates points (the finite density search).
// Returns the smallest such subset mask, or nullopt when none exists.
std::optional<Mask> proper_qfan_subset(const FiniteTS& g, const CharSet& full, std::uint64_t* examined,
                                       bool parallel);

}  // namespace rsfan::kernels

// Naive single-threaded reference implementations, written directly from the
// defining clauses. Kept deliberately independent of the mask kernels.
namespace rsfan::ref {

bool in_d3(int a, int b, int c);   // clause [R] specialised to {-1,0,1}
bool in_dt3(int a, int b, int c);  // clause [TR] specialised to {-1,0,1}

void induced_tables(const FiniteTS& g, const CharSet& x, Mask subset, DTable& d, DTable& dt);

std::optional<std::array<Elem, 5>> rs3_violation(const FiniteTS& ts, const DTable& dt);

std::optional<Mask> proper_qfan_subset(const FiniteTS& g, const CharSet& full, std::uint64_t* examined);

// Literal loop transcriptions of [RS0]..[RS8].
AxiomReport check_rs_axioms(const RSModel& m);

// Divisibility the slow ways: exists x with b = ax, and zero-set inclusion
// over the full character space.
bool divides_by_witness(const FiniteTS& g, Elem a, Elem b);
bool divides_by_zero_sets(const FiniteTS& g, const CharSet& full, Elem a, Elem b);

}  // namespace rsfan::ref

#endif
