#include "rsfan/ts.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rsfan {

Elem FiniteTS::index_of(const std::string& nm) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == nm) return i;
  return -1;
}

Mask FiniteTS::mul_set(Elem a, Mask s) const {
  Mask out = 0;
  for (Mask t = s; t; t &= t - 1) out |= bit(mul(a, lowest(t)));
  return out;
}

FiniteTS make_ts(std::string label, std::vector<std::string> names, std::vector<Elem> table,
                 Elem one, Elem zero, Elem minus_one) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw StructuralError("empty element list");
  if (n > kMaxElems) throw StructuralError("structures with more than 64 elements are not supported");
  if (static_cast<int>(table.size()) != n * n)
    throw StructuralError("table is not square: expected " + std::to_string(n * n) + " entries, got " +
                          std::to_string(table.size()));
  for (Elem e : table)
    if (e < 0 || e >= n) throw StructuralError("table index out of range: " + std::to_string(e));
  for (Elem c : {one, zero, minus_one})
    if (c < 0 || c >= n) throw StructuralError("constant index out of range");
  std::set<std::string> seen(names.begin(), names.end());
  if (static_cast<int>(seen.size()) != n) throw StructuralError("duplicate element names");
  FiniteTS g;
  g.label = std::move(label);
  g.names = std::move(names);
  g.table = std::move(table);
  g.one = one;
  g.zero = zero;
  g.minus_one = minus_one;
  return g;
}

const AxiomResult* AxiomReport::find(const std::string& axiom) const {
  for (auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

std::string AxiomReport::to_string() const {
  std::ostringstream os;
  for (auto& r : results) {
    os << r.axiom << ": " << (r.pass ? "pass" : "FAIL");
    if (!r.pass && !r.witness.empty()) os << "  [" << r.witness << "]";
    os << "\n";
  }
  return os.str();
}

AxiomReport check_ts_axioms(const FiniteTS& g) {
  const int n = g.size();
  AxiomReport rep;
  auto nm = [&](Elem a) { return g.name(a); };

  // [TS1] commutative semigroup with unit
  {
    AxiomResult r{"TS1", true, ""};
    for (Elem a = 0; a < n && r.pass; ++a)
      for (Elem b = 0; b < n && r.pass; ++b) {
        if (g.mul(a, b) != g.mul(b, a)) {
          r.pass = false;
          r.witness = nm(a) + "*" + nm(b) + " != " + nm(b) + "*" + nm(a);
        }
      }
    for (Elem a = 0; a < n && r.pass; ++a)
      for (Elem b = 0; b < n && r.pass; ++b)
        for (Elem c = 0; c < n && r.pass; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
            r.pass = false;
            r.witness = "(" + nm(a) + "*" + nm(b) + ")*" + nm(c) + " != " + nm(a) + "*(" + nm(b) + "*" + nm(c) + ")";
          }
    for (Elem a = 0; a < n && r.pass; ++a)
      if (g.mul(g.one, a) != a) {
        r.pass = false;
        r.witness = "1*" + nm(a) + " = " + nm(g.mul(g.one, a));
      }
    rep.results.push_back(std::move(r));
  }
  // [TS2] x^3 = x
  {
    AxiomResult r{"TS2", true, ""};
    for (Elem a = 0; a < n && r.pass; ++a)
      if (g.mul(g.sq(a), a) != a) {
        r.pass = false;
        r.witness = nm(a) + "^3 = " + nm(g.mul(g.sq(a), a));
      }
    rep.results.push_back(std::move(r));
  }
  // [TS3] -1 != 1 and (-1)(-1) = 1
  {
    AxiomResult r{"TS3", true, ""};
    if (g.minus_one == g.one) {
      r.pass = false;
      r.witness = "-1 = 1";
    } else if (g.mul(g.minus_one, g.minus_one) != g.one) {
      r.pass = false;
      r.witness = "(-1)*(-1) = " + nm(g.mul(g.minus_one, g.minus_one));
    }
    rep.results.push_back(std::move(r));
  }
  // [TS4] x*0 = 0
  {
    AxiomResult r{"TS4", true, ""};
    for (Elem a = 0; a < n && r.pass; ++a)
      if (g.mul(a, g.zero) != g.zero) {
        r.pass = false;
        r.witness = nm(a) + "*0 = " + nm(g.mul(a, g.zero));
      }
    rep.results.push_back(std::move(r));
  }
  // [TS5] -x = x  =>  x = 0
  {
    AxiomResult r{"TS5", true, ""};
    for (Elem a = 0; a < n && r.pass; ++a)
      if (g.neg(a) == a && a != g.zero) {
        r.pass = false;
        r.witness = "-" + nm(a) + " = " + nm(a) + " but " + nm(a) + " != 0";
      }
    rep.results.push_back(std::move(r));
  }
  return rep;
}

bool divides(const FiniteTS& g, Elem a, Elem b) {
  return g.mul(g.sq(a), g.sq(b)) == g.sq(b);
}

ConditionZ satisfies_condition_z(const FiniteTS& g) {
  const int n = g.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      Elem p = g.mul(g.sq(a), g.sq(b));
      if (p != g.sq(a) && p != g.sq(b)) return {false, a, b};
    }
  return {true, -1, -1};
}

Mask idempotents(const FiniteTS& g) {
  Mask m = 0;
  for (Elem a = 0; a < g.size(); ++a) m |= bit(g.sq(a));
  return m;
}

Mask principal_ideal(const FiniteTS& g, Elem c) {
  Mask m = 0;
  for (Elem a = 0; a < g.size(); ++a) m |= bit(g.mul(c, a));
  return m;
}

bool is_ideal(const FiniteTS& g, Mask members) {
  if (!has(members, g.zero)) return false;
  for (Mask t = members; t; t &= t - 1) {
    Elem a = lowest(t);
    for (Elem x = 0; x < g.size(); ++x)
      if (!has(members, g.mul(a, x))) return false;
  }
  return true;
}

bool is_prime_ideal(const FiniteTS& g, Mask members) {
  if (!is_ideal(g, members) || members == g.all_mask()) return false;
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = a; b < g.size(); ++b)
      if (has(members, g.mul(a, b)) && !has(members, a) && !has(members, b)) return false;
  return true;
}

IdealReport ideals(const FiniteTS& g) {
  // Every ideal is a union of the principal ideals it contains, so the ideal
  // lattice is the union-closure of the principal ideals.
  std::set<Mask> principals;
  for (Elem c = 0; c < g.size(); ++c) principals.insert(principal_ideal(g, c));
  std::set<Mask> all(principals.begin(), principals.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(all.begin(), all.end());
    for (Mask a : cur)
      for (Mask b : principals)
        if (all.insert(a | b).second) grew = true;
  }

  IdealReport rep;
  for (Mask m : all) {
    IdealInfo info;
    info.members = m;
    info.proper = (m != g.all_mask());
    info.prime = is_prime_ideal(g, m);
    rep.ideals.push_back(info);
  }
  std::sort(rep.ideals.begin(), rep.ideals.end(), [](const IdealInfo& x, const IdealInfo& y) {
    if (popcount(x.members) != popcount(y.members)) return popcount(x.members) < popcount(y.members);
    return x.members < y.members;
  });
  rep.chain = true;
  for (size_t i = 0; i < rep.ideals.size() && rep.chain; ++i)
    for (size_t j = i + 1; j < rep.ideals.size() && rep.chain; ++j) {
      Mask a = rep.ideals[i].members, b = rep.ideals[j].members;
      if ((a & b) != a && (a & b) != b) rep.chain = false;
    }
  rep.all_proper_prime = true;
  for (auto& info : rep.ideals) {
    if (info.proper) {
      ++rep.proper_count;
      if (!info.prime) rep.all_proper_prime = false;
    }
  }
  return rep;
}

std::string mask_to_string(const FiniteTS& g, Mask m) {
  std::string out = "{";
  bool first = true;
  for (Mask t = m; t; t &= t - 1) {
    if (!first) out += ", ";
    out += g.name(lowest(t));
    first = false;
  }
  return out + "}";
}

}  // namespace rsfan
