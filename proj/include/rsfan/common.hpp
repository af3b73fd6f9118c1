#ifndef RSFAN_COMMON_HPP
#define RSFAN_COMMON_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rsfan {

// Element index into a FiniteTS. Structures are capped at 64 elements so
// element sets fit in one machine word.
using Elem = int;
using Mask = std::uint64_t;

inline constexpr int kMaxElems = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(Elem a) { return Mask{1} << a; }
inline bool has(Mask m, Elem a) { return (m >> a) & 1; }

// Iterate set bits: for (Mask s = m; s; s &= s - 1) { Elem a = lowest(s); ... }
inline Elem lowest(Mask m) { return std::countr_zero(m); }

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data (non-square table, bad index, unknown name).
struct StructuralError : Error {
  using Error::Error;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

// Presentation whose congruence closure identifies 1 with -1.
struct DegeneratePresentationError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace rsfan

#endif
