#include "rsfan/poset.hpp"

#include <algorithm>
#include <sstream>

namespace rsfan {

Poset make_poset(std::vector<std::string> names, const std::function<bool(int, int)>& leq) {
  const int n = static_cast<int>(names.size());
  if (n > kMaxElems) throw StructuralError("poset too large");
  Poset p;
  p.names = std::move(names);
  p.up.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) p.up[i] |= bit(j);
  for (int i = 0; i < n; ++i) {
    if (!p.leq(i, i)) throw StructuralError("relation not reflexive at " + p.names[i]);
    for (int j = 0; j < n; ++j) {
      if (i != j && p.leq(i, j) && p.leq(j, i))
        throw StructuralError("relation not antisymmetric at " + p.names[i] + "," + p.names[j]);
      if (p.leq(i, j) && (p.up[j] & ~p.up[i]))
        throw StructuralError("relation not transitive at " + p.names[i] + "," + p.names[j]);
    }
  }
  return p;
}

std::vector<std::pair<int, int>> Poset::hasse() const {
  // remove edges implied by 2-step paths; n is tens, cubic is fine
  std::vector<std::pair<int, int>> edges;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<int> Poset::heights() const {
  const int n = size();
  std::vector<int> h(n, -1);
  std::function<int(int)> rec = [&](int i) {
    if (h[i] >= 0) return h[i];
    h[i] = 0;
    for (int j = 0; j < n; ++j)
      if (j != i && leq(j, i)) h[i] = std::max(h[i], rec(j) + 1);
    return h[i];
  };
  for (int i = 0; i < n; ++i) rec(i);
  return h;
}

int Poset::width() const {
  const int n = size();
  if (n > 24) throw StructuralError("width computation limited to 24 elements");
  int best = 0;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (popcount(m) <= best) continue;
    bool antichain = true;
    for (Mask s = m; s && antichain; s &= s - 1) {
      int i = lowest(s);
      for (Mask t = s & (s - 1); t && antichain; t &= t - 1)
        if (comparable(i, lowest(t))) antichain = false;
    }
    if (antichain) best = popcount(m);
  }
  return best;
}

std::vector<Mask> Poset::all_chains() const {
  const int n = size();
  if (n > 20) throw StructuralError("chain enumeration limited to 20 elements");
  std::vector<Mask> out;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    bool chain = true;
    for (Mask s = m; s && chain; s &= s - 1) {
      int i = lowest(s);
      for (Mask t = s & (s - 1); t && chain; t &= t - 1)
        if (!comparable(i, lowest(t))) chain = false;
    }
    if (chain) out.push_back(m);
  }
  return out;
}

std::string Poset::to_dot(const std::string& graph_name) const {
  const auto h = heights();
  int maxh = 0;
  for (int x : h) maxh = std::max(maxh, x);
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  os << "  rankdir=BT;\n  node [shape=none, fontsize=12];\n";
  for (int lev = 0; lev <= maxh; ++lev) {
    os << "  { rank=same;";
    for (int i = 0; i < size(); ++i)
      if (h[i] == lev) os << " \"" << names[i] << "\";";
    os << " }\n";
  }
  for (auto [a, b] : hasse()) os << "  \"" << names[a] << "\" -> \"" << names[b] << "\";\n";
  os << "}\n";
  return os.str();
}

std::vector<std::pair<std::string, std::string>> hasse_names(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : p.hasse()) out.emplace_back(p.names[a], p.names[b]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rsfan
