#include "rsfan/order.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rsfan {

bool repr_leq(const RSModel& m, Elem a, Elem b) {
  const FiniteTS& g = m.ts;
  return m.D.contains(a, g.one, b) && m.D.contains(g.neg(b), g.one, g.neg(a));
}

int rank3(int v) { return v == 1 ? 0 : (v == 0 ? 1 : 2); }

ReprOrderReport repr_poset(const RSModel& m) {
  const FiniteTS& g = m.ts;
  const int n = g.size();
  ReprOrderReport rep;
  rep.poset = make_poset(g.names, [&](int i, int j) { return repr_leq(m, i, j); });
  const Poset& p = rep.poset;
  auto nm = [&](Elem a) { return g.name(a); };
  auto add = [&](std::string what, bool pass, std::string wit) {
    rep.properties.results.push_back({std::move(what), pass, pass ? std::string{} : std::move(wit)});
  };

  // (1) partial order (validated by construction) with antitone negation
  {
    bool ok = true;
    std::string wit;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        if (p.leq(a, b) != p.leq(g.neg(b), g.neg(a))) {
          ok = false;
          wit = nm(a) + " <= " + nm(b) + " vs negatives";
        }
    add("involution", ok, wit);
  }
  // (2) 1 <= a <= -1
  {
    bool ok = true;
    std::string wit;
    for (Elem a = 0; a < n && ok; ++a)
      if (!p.leq(g.one, a) || !p.leq(a, g.minus_one)) {
        ok = false;
        wit = nm(a) + " escapes the bounds";
      }
    add("bounds", ok, wit);
  }
  // (3) a <= 0 iff a = a^2;  0 <= a iff a = -a^2
  {
    bool ok = true;
    std::string wit;
    for (Elem a = 0; a < n && ok; ++a) {
      if (p.leq(a, g.zero) != (a == g.sq(a))) {
        ok = false;
        wit = nm(a) + " <= 0 mismatch";
      }
      if (p.leq(g.zero, a) != (a == g.neg(g.sq(a)))) {
        ok = false;
        wit = "0 <= " + nm(a) + " mismatch";
      }
    }
    add("idempotents", ok, wit);
  }
  // (4) character oracle with 1 < 0 < -1 pointwise
  {
    CharSet xs = rs_characters(m);
    bool ok = true;
    std::string wit;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b) {
        bool oracle = true;
        for (int i = 0; i < xs.size() && oracle; ++i)
          if (rank3(xs[i](a)) > rank3(xs[i](b))) oracle = false;
        if (oracle != p.leq(a, b)) {
          ok = false;
          wit = nm(a) + " <= " + nm(b) + ": syntactic " + (p.leq(a, b) ? "yes" : "no") + ", characters say otherwise";
        }
      }
    add("character-oracle", ok, wit);
  }
  // (5) a^2 <= b <= -a^2 iff Z(a) included in Z(b) iff b = a^2 b
  {
    bool ok = true;
    std::string wit;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b) {
        bool sandwich = p.leq(g.sq(a), b) && p.leq(b, g.neg(g.sq(a)));
        bool alg = (b == g.mul(g.sq(a), b));
        bool inc = zle(g, a, b);
        if (sandwich != inc || inc != alg) {
          ok = false;
          wit = "sandwich mismatch at (" + nm(a) + "," + nm(b) + ")";
        }
      }
    add("zero-set-sandwich", ok, wit);
  }
  // (6) a^2 <= ab <= -a^2
  {
    bool ok = true;
    std::string wit;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        if (!p.leq(g.sq(a), g.mul(a, b)) || !p.leq(g.mul(a, b), g.neg(g.sq(a)))) {
          ok = false;
          wit = "(" + nm(a) + "," + nm(b) + ")";
        }
    add("square-bounds", ok, wit);
  }
  // (7) a^2 <= b <= -a^2 and b invertible => a invertible
  {
    bool ok = true;
    std::string wit;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        if (p.leq(g.sq(a), b) && p.leq(b, g.neg(g.sq(a))) && g.sq(b) == g.one && g.sq(a) != g.one) {
          ok = false;
          wit = "(" + nm(a) + "," + nm(b) + ")";
        }
    add("invertibility", ok, wit);
  }
  // (8) a <= x,y => a <= -xy
  {
    bool ok = true;
    std::string wit;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem x = 0; x < n && ok; ++x)
        for (Elem y = 0; y < n && ok; ++y)
          if (p.leq(a, x) && p.leq(a, y) && !p.leq(a, g.neg(g.mul(x, y)))) {
            ok = false;
            wit = nm(a) + " <= " + nm(x) + "," + nm(y) + " but not <= -(" + nm(x) + nm(y) + ")";
          }
    add("product-bound", ok, wit);
  }
  // (9) a meet -a = a^2, a join -a = -a^2 (exact bounds)
  {
    bool ok = true;
    std::string wit;
    for (Elem a = 0; a < n && ok; ++a) {
      Elem inf = g.sq(a), sup = g.neg(g.sq(a));
      if (!p.leq(inf, a) || !p.leq(inf, g.neg(a)) || !p.leq(a, sup) || !p.leq(g.neg(a), sup)) {
        ok = false;
        wit = nm(a);
      }
      for (Elem c = 0; c < n && ok; ++c) {
        if (p.leq(c, a) && p.leq(c, g.neg(a)) && !p.leq(c, inf)) {
          ok = false;
          wit = nm(a) + " inf not greatest";
        }
        if (p.leq(a, c) && p.leq(g.neg(a), c) && !p.leq(sup, c)) {
          ok = false;
          wit = nm(a) + " sup not least";
        }
      }
    }
    add("self-bounds", ok, wit);
  }
  // (10) Kleene inequality a^2 <= 0 <= -b^2
  {
    bool ok = true;
    std::string wit;
    for (Elem a = 0; a < n && ok; ++a)
      if (!p.leq(g.sq(a), g.zero) || !p.leq(g.zero, g.neg(g.sq(a)))) {
        ok = false;
        wit = nm(a);
      }
    add("kleene", ok, wit);
  }
  return rep;
}

LatticeReport fan_lattice(const FanModel& f) {
  const RSModel& m = f.rs;
  const FiniteTS& g = m.ts;
  const int n = g.size();
  LatticeReport rep;
  Poset p = make_poset(g.names, [&](int i, int j) { return repr_leq(m, i, j); });
  auto nm = [&](Elem a) { return g.name(a); };

  rep.meet.assign(static_cast<size_t>(n) * n, -1);
  rep.join.assign(static_cast<size_t>(n) * n, -1);
  rep.bounded_lattice = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      // brute-force greatest lower bound
      Elem glb = -1, lub = -1;
      for (Elem c = 0; c < n; ++c) {
        if (p.leq(c, a) && p.leq(c, b) && (glb < 0 || p.leq(glb, c))) glb = c;
        if (p.leq(a, c) && p.leq(b, c) && (lub < 0 || p.leq(c, lub))) lub = c;
      }
      // confirm they really bound every candidate
      for (Elem c = 0; c < n && glb >= 0; ++c)
        if (p.leq(c, a) && p.leq(c, b) && !p.leq(c, glb)) glb = -1;
      for (Elem c = 0; c < n && lub >= 0; ++c)
        if (p.leq(a, c) && p.leq(b, c) && !p.leq(lub, c)) lub = -1;
      if (glb < 0 || lub < 0) {
        rep.bounded_lattice = false;
        rep.detail = "no meet/join for (" + nm(a) + "," + nm(b) + ")";
        return rep;
      }
      rep.meet[static_cast<size_t>(a) * n + b] = glb;
      rep.join[static_cast<size_t>(a) * n + b] = lub;
    }
  // bottom and top
  for (Elem a = 0; a < n; ++a)
    if (!p.leq(g.one, a) || !p.leq(a, g.minus_one)) rep.bounded_lattice = false;

  auto meet = [&](Elem a, Elem b) { return rep.meet[static_cast<size_t>(a) * n + b]; };
  auto join = [&](Elem a, Elem b) { return rep.join[static_cast<size_t>(a) * n + b]; };

  // closed forms: min/max for comparable pairs, else squares
  rep.closed_forms = true;
  for (Elem a = 0; a < n && rep.closed_forms; ++a)
    for (Elem b = 0; b < n && rep.closed_forms; ++b) {
      Elem want_meet, want_join;
      if (p.comparable(a, b)) {
        want_meet = p.leq(a, b) ? a : b;
        want_join = p.leq(a, b) ? b : a;
      } else {
        Elem sa = g.sq(a), sb = g.sq(b);
        want_meet = p.leq(sa, sb) ? sa : sb;
        Elem na = g.neg(sa), nb = g.neg(sb);
        want_join = p.leq(na, nb) ? nb : na;
      }
      if (meet(a, b) != want_meet || join(a, b) != want_join) {
        rep.closed_forms = false;
        rep.detail = "closed form mismatch at (" + nm(a) + "," + nm(b) + ")";
      }
    }

  rep.de_morgan = true;
  rep.kleene = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (g.neg(meet(a, b)) != join(g.neg(a), g.neg(b))) rep.de_morgan = false;
      if (g.neg(join(a, b)) != meet(g.neg(a), g.neg(b))) rep.de_morgan = false;
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!p.leq(meet(a, g.neg(a)), g.zero) || !p.leq(g.zero, join(b, g.neg(b)))) rep.kleene = false;

  rep.modular = true;
  rep.distributive = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (p.leq(a, c) && join(a, meet(b, c)) != meet(join(a, b), c)) rep.modular = false;
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) rep.distributive = false;
      }

  // pentagon: x < z, y incomparable to both, equal meets and joins with y
  for (Elem x = 0; x < n && !rep.pentagon_found; ++x)
    for (Elem z = 0; z < n && !rep.pentagon_found; ++z) {
      if (x == z || !p.leq(x, z)) continue;
      for (Elem y = 0; y < n && !rep.pentagon_found; ++y) {
        if (p.comparable(y, x) || p.comparable(y, z)) continue;
        if (meet(x, y) == meet(z, y) && join(x, y) == join(z, y)) {
          rep.pentagon_found = true;
          rep.pentagon = {meet(x, y), x, z, y, join(x, y)};
        }
      }
    }
  return rep;
}

ChainLengthReport chain_length(const FiniteTS& g) {
  CharSet xs = enumerate_characters(g);
  ChainLengthReport rep;
  std::set<Mask> usets;
  for (Elem a = 0; a < g.size(); ++a) {
    Mask u = 0;
    for (int i = 0; i < xs.size(); ++i)
      if (xs[i](a) == 1) u |= bit(i);
    if (u) usets.insert(u);
  }
  rep.distinct_usets = static_cast<int>(usets.size());
  std::vector<Mask> v(usets.begin(), usets.end());
  std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  // longest strict inclusion chain, counted in sets
  std::vector<int> best(v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (v[j] != v[i] && (v[j] & v[i]) == v[j]) best[i] = std::max(best[i], best[j] + 1);
  for (int b : best) rep.length = std::max(rep.length, b);

  rep.spectrum_size = ideals(g).proper_count;
  rep.within_bound = rep.length <= 2 * rep.spectrum_size;
  return rep;
}

UnitIncompReport unit_incomparability(const FanModel& f) {
  const RSModel& m = f.rs;
  const FiniteTS& g = m.ts;
  const int n = g.size();
  UnitIncompReport rep;
  rep.pass = true;
  for (Elem w = 0; w < n; ++w) {
    if (g.sq(w) != g.one || w == g.one || w == g.minus_one) continue;
    for (Elem x = 0; x < n; ++x) {
      if (g.sq(x) == g.one) {
        // distinct units away from the bounds are incomparable
        if (x != w && x != g.one && x != g.minus_one && (repr_leq(m, x, w) || repr_leq(m, w, x))) {
          rep.pass = false;
          rep.detail = "units " + g.name(x) + " and " + g.name(w) + " comparable";
        }
        continue;
      }
      if (repr_leq(m, x, w) || repr_leq(m, w, x)) {
        rep.pass = false;
        rep.detail = g.name(x) + " comparable with unit " + g.name(w);
      }
    }
  }
  return rep;
}

}  // namespace rsfan
