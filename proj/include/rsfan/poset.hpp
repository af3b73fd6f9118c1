#ifndef RSFAN_POSET_HPP
#define RSFAN_POSET_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rsfan/common.hpp"

namespace rsfan {

// A finite partial order with Hasse-edge extraction. Construction validates
// reflexivity, antisymmetry and transitivity.
struct Poset {
  std::vector<std::string> names;
  std::vector<Mask> up;  // up[i] = { j : i <= j }

  int size() const { return static_cast<int>(names.size()); }
  bool leq(int i, int j) const { return has(up[i], j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  // (lower, upper) pairs of the transitive reduction, sorted
  std::vector<std::pair<int, int>> hasse() const;
  // longest chain strictly below i
  std::vector<int> heights() const;
  int width() const;  // size of a maximum antichain (n <= 24)

  // All subsets that are chains, as masks (small posets only).
  std::vector<Mask> all_chains() const;

  std::string to_dot(const std::string& graph_name) const;
};

Poset make_poset(std::vector<std::string> names, const std::function<bool(int, int)>& leq);

// Sorted "a b" name pairs, one per Hasse edge; stable golden format.
std::vector<std::pair<std::string, std::string>> hasse_names(const Poset& p);

}  // namespace rsfan

#endif
