#include "rsfan/fan.hpp"

#include <algorithm>
#include <set>

namespace rsfan {

bool zle(const FiniteTS& g, Elem a, Elem b) { return g.mul(g.sq(a), g.sq(b)) == g.sq(b); }

FanModel make_fan(const FiniteTS& g) {
  ConditionZ cz = satisfies_condition_z(g);
  if (!cz.holds)
    throw PreconditionError("condition [Z] fails: zero-sets of " + g.name(cz.witness_a) + " and " +
                            g.name(cz.witness_b) + " are incomparable");
  const int n = g.size();
  const Mask id = idempotents(g);

  FanModel f;
  f.rs.ts = g;
  f.rs.D = DTable(n);
  f.rs.Dt = DTable(n);

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Mask row = g.mul_set(a, id) | g.mul_set(b, id);
      for (Elem x = 0; x < n; ++x)
        if (g.mul(x, a) == g.neg(g.mul(x, b)) && x == g.mul(g.sq(a), x)) row |= bit(x);
      f.rs.D.at(a, b) = row;
    }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Mask row;
      if (b == g.neg(a)) {
        row = principal_ideal(g, a);  // a G = b G
      } else if (g.sq(a) == g.sq(b)) {
        row = bit(a) | bit(b);
      } else if (zle(g, a, b)) {
        row = bit(a);
      } else {
        row = bit(b);
      }
      f.rs.Dt.at(a, b) = row;
    }
  return f;
}

bool check_interdefinability(const FiniteTS& g) {
  FanModel f = make_fan(g);
  const int n = g.size();
  // (1) D clause + [t-rep] gives the Dt clause
  if (derive_transversal(g, f.rs.D) != f.rs.Dt) return false;
  // (2) Dt clause + (a in D(b,c) <=> a in Dt(a^2 b, a^2 c)) gives the D clause
  DTable d2(n);
  for (Elem b = 0; b < n; ++b)
    for (Elem c = 0; c < n; ++c)
      for (Elem a = 0; a < n; ++a)
        if (f.rs.Dt.contains(a, g.mul(g.sq(a), b), g.mul(g.sq(a), c))) d2.at(b, c) |= bit(a);
  return d2 == f.rs.D;
}

namespace {

// Subsets S with S u -S = G, product-closed, S n -S a proper prime ideal.
// Id(G) is forced into S, the rest is a choice per {a,-a} pair.
template <typename Fn>
void for_each_admissible_subsemigroup(const FiniteTS& g, Fn&& fn) {
  const int n = g.size();
  const Mask id = idempotents(g);
  std::vector<std::pair<Elem, Elem>> pairs2;  // neither in forced part: 3 choices
  std::vector<Elem> pairs1;                   // negative of a forced element: 2 choices
  Mask seen = 0;
  for (Elem a = 0; a < n; ++a) {
    if (has(seen, a)) continue;
    Elem b = g.neg(a);
    seen |= bit(a) | bit(b);
    bool ain = has(id, a), bin = has(id, b);
    if (ain && bin) continue;
    if (ain) {
      pairs1.push_back(b);
    } else if (bin) {
      pairs1.push_back(a);
    } else {
      pairs2.emplace_back(a, b);
    }
  }
  std::uint64_t total = 1;
  for (size_t i = 0; i < pairs1.size(); ++i) total *= 2;
  for (size_t i = 0; i < pairs2.size(); ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mask s = id;
    std::uint64_t c = code;
    for (Elem e : pairs1) {
      if (c % 2) s |= bit(e);
      c /= 2;
    }
    for (auto [a, b] : pairs2) {
      switch (c % 3) {
        case 0: s |= bit(a); break;
        case 1: s |= bit(b); break;
        default: s |= bit(a) | bit(b); break;
      }
      c /= 3;
    }
    // product closure
    bool closed = true;
    for (Mask u = s; u && closed; u &= u - 1)
      for (Mask v = u; v && closed; v &= v - 1)
        if (!has(s, g.mul(lowest(u), lowest(v)))) closed = false;
    if (!closed) continue;
    Mask neg_s = 0;
    for (Mask u = s; u; u &= u - 1) neg_s |= bit(g.neg(lowest(u)));
    Mask support = s & neg_s;
    if (!is_prime_ideal(g, support)) continue;
    fn(s);
  }
}

}  // namespace

FanEquivalence fan_equivalence(const FiniteTS& g, const CharSet& full, Mask subset, bool parallel) {
  ConditionZ cz = satisfies_condition_z(g);
  if (!cz.holds) throw PreconditionError("fan equivalence requires condition [Z]");
  if (subset == 0) throw PreconditionError("fan equivalence requires a nonempty character set");

  FanEquivalence out;
  const Mask all = full.size() == 64 ? ~Mask{0} : (Mask{1} << full.size()) - 1;
  out.is_fan1 = (subset == all);

  CharSet sub = full.subset(subset);
  QFanResult qf = is_q_fan(sub, g);
  out.is_qfan = qf.is_qfan;
  out.closed3 = qf.closed3;

  RSModel induced = induce_d(g, full, subset, parallel);
  out.rs_axioms_pass = check_rs_axioms(induced, {parallel}).all_pass();

  out.maximality = true;
  for_each_admissible_subsemigroup(g, [&](Mask s) {
    if (!out.maximality) return;
    bool witnessed = false;
    for (Mask t = subset; t && !witnessed; t &= t - 1)
      if (nonneg_set(full[lowest(t)]) == s) witnessed = true;
    if (!witnessed) {
      out.maximality = false;
      out.detail = "no character with h^{-1}[0,1] = " + mask_to_string(g, s);
    }
  });

  out.is_fan2 = out.rs_axioms_pass && out.closed3 && out.maximality;
  out.agree = (out.is_fan1 == out.is_fan2);
  return out;
}

UnitsReport units_rsg(const FanModel& f) {
  const FiniteTS& g = f.rs.ts;
  const int n = g.size();
  UnitsReport rep;
  for (Elem a = 0; a < n; ++a)
    if (g.sq(a) == g.one) rep.units |= bit(a);

  rep.rsg_fan = true;
  rep.dt_matches_d = true;
  for (Mask s = rep.units; s; s &= s - 1)
    for (Mask t = rep.units; t; t &= t - 1) {
      Elem b = lowest(s), c = lowest(t);
      if ((f.rs.Dt.at(b, c) & rep.units) != (f.rs.D.at(b, c) & rep.units)) {
        rep.dt_matches_d = false;
        rep.detail = "Dt and D differ on units at (" + g.name(b) + "," + g.name(c) + ")";
      }
      for (Mask u = rep.units; u; u &= u - 1) {
        Elem a = lowest(u);
        bool want = (c == g.neg(b)) || a == b || a == c;
        if (f.rs.D.contains(a, b, c) != want) {
          rep.rsg_fan = false;
          rep.detail = "minimal representation law fails at " + g.name(a) + " in D(" + g.name(b) + "," +
                       g.name(c) + ")";
        }
      }
    }
  return rep;
}

bool check_hom_preservation(const FanModel& fan, const RSModel& target, const std::vector<Elem>& f) {
  const FiniteTS& g = fan.rs.ts;
  const FiniteTS& h = target.ts;
  if (static_cast<int>(f.size()) != g.size()) throw PreconditionError("map arity mismatch");
  if (f[g.one] != h.one || f[g.zero] != h.zero || f[g.minus_one] != h.minus_one)
    throw PreconditionError("map does not preserve the constants");
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = 0; b < g.size(); ++b)
      if (f[g.mul(a, b)] != h.mul(f[a], f[b]))
        throw PreconditionError("map does not preserve products at (" + g.name(a) + "," + g.name(b) + ")");
  for (Elem b = 0; b < g.size(); ++b)
    for (Elem c = 0; c < g.size(); ++c)
      for (Mask s = fan.rs.D.at(b, c); s; s &= s - 1)
        if (!target.D.contains(f[lowest(s)], f[b], f[c])) return false;
  return true;
}

bool is_saturated(const RSModel& m, Mask s) {
  for (Mask u = s; u; u &= u - 1)
    for (Mask v = s; v; v &= v - 1)
      if (m.D.at(lowest(u), lowest(v)) & ~s) return false;
  return true;
}

std::vector<Mask> subsemigroups(const FiniteTS& g) {
  // product-closed subsets containing the unit
  const int n = g.size();
  std::vector<Mask> out;
  if (n <= 13) {
    for (Mask s = 1; s <= g.all_mask(); ++s) {
      if (!has(s, g.one)) continue;
      bool closed = true;
      for (Mask u = s; u && closed; u &= u - 1)
        for (Mask v = u; v && closed; v &= v - 1)
          if (!has(s, g.mul(lowest(u), lowest(v)))) closed = false;
      if (closed) out.push_back(s);
    }
    return out;
  }
  // larger structures: closures of seeds of size <= 2, with and without Id(G)
  auto close = [&](Mask seed) {
    Mask cur = seed;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Mask u = cur; u; u &= u - 1)
        for (Mask v = cur; v; v &= v - 1) {
          Elem p = g.mul(lowest(u), lowest(v));
          if (!has(cur, p)) {
            cur |= bit(p);
            grew = true;
          }
        }
    }
    return cur;
  };
  std::set<Mask> seen;
  const Mask id = idempotents(g);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      seen.insert(close(bit(g.one) | bit(a) | bit(b)));
      seen.insert(close(bit(g.one) | bit(a) | bit(b) | id));
    }
  out.assign(seen.begin(), seen.end());
  return out;
}

FanIdealsReport check_fan_ideals(const FanModel& f) {
  const FiniteTS& g = f.rs.ts;
  FanIdealsReport rep;
  rep.ideals_saturated_prime = true;
  for (const IdealInfo& info : ideals(g).ideals) {
    if (!is_saturated(f.rs, info.members)) {
      rep.ideals_saturated_prime = false;
      rep.detail = "ideal " + mask_to_string(g, info.members) + " not saturated";
    }
    if (info.proper && !info.prime) {
      rep.ideals_saturated_prime = false;
      rep.detail = "ideal " + mask_to_string(g, info.members) + " not prime";
    }
  }
  rep.subsemigroup_criterion = true;
  const Mask id = idempotents(g);
  for (Mask s : subsemigroups(g)) {
    Mask neg_s = 0;
    for (Mask u = s; u; u &= u - 1) neg_s |= bit(g.neg(lowest(u)));
    bool criterion = ((id & ~s) == 0) && is_ideal(g, s & neg_s);
    if (is_saturated(f.rs, s) != criterion) {
      rep.subsemigroup_criterion = false;
      rep.detail = "saturation criterion fails for " + mask_to_string(g, s);
    }
  }
  return rep;
}

}  // namespace rsfan
