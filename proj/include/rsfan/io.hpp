#ifndef RSFAN_IO_HPP
#define RSFAN_IO_HPP

#include <string>

#include "rsfan/presentation.hpp"
#include "rsfan/ts.hpp"

namespace rsfan {

// Text structure format. Two bodies share a common header:
//
//   ts F2                     # label
//   constants 1 0 -1          # names of one, zero, minus-one
//
// followed either by a presentation block
//
//   generators x y z
//   relations
//   x^2 = y^2
//   x^2 z^2 = x^2
//   end
//
// or by an explicit table
//
//   elements 1 0 -1
//   table
//   1 0 -1
//   0 0 0
//   -1 0 1
//   end
//
// '#' starts a comment. Parse errors carry line numbers.
FiniteTS parse_structure(const std::string& text);
FiniteTS load_structure(const std::string& path);

// Writes the presentation form when one is attached, the table form
// otherwise; parsing the result reproduces the structure exactly.
std::string serialize_structure(const FiniteTS& g);

}  // namespace rsfan

#endif
