#include <sstream>
#include <vector>

#include "rsfan/kernels.hpp"

namespace rsfan::ref {

bool in_d3(int a, int b, int c) {
  // a = 0, or a != 0 and a in {b, c}
  return a == 0 || a == b || a == c;
}

bool in_dt3(int a, int b, int c) { return (a == 0 && b == -c) || (a != 0 && (a == b || a == c)); }

void induced_tables(const FiniteTS& g, const CharSet& x, Mask subset, DTable& d, DTable& dt) {
  const int n = g.size();
  d = DTable(n);
  dt = DTable(n);
  for (Elem b = 0; b < n; ++b)
    for (Elem c = 0; c < n; ++c)
      for (Elem a = 0; a < n; ++a) {
        bool ind = true, indt = true;
        for (Mask s = subset; s && (ind || indt); s &= s - 1) {
          const Character& h = x[lowest(s)];
          if (!in_d3(h(a), h(b), h(c))) ind = false;
          if (!in_dt3(h(a), h(b), h(c))) indt = false;
        }
        if (ind) d.at(b, c) |= bit(a);
        if (indt) dt.at(b, c) |= bit(a);
      }
}

std::optional<std::array<Elem, 5>> rs3_violation(const FiniteTS& ts, const DTable& dt) {
  const int n = ts.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (!dt.contains(a, b, c)) continue;
        for (Elem d = 0; d < n; ++d)
          for (Elem e = 0; e < n; ++e) {
            if (!dt.contains(c, d, e)) continue;
            bool ok = false;
            for (Elem x = 0; x < n && !ok; ++x)
              if (dt.contains(x, b, d) && dt.contains(a, x, e)) ok = true;
            if (!ok) return std::array<Elem, 5>{a, b, c, d, e};
          }
      }
  return std::nullopt;
}

std::optional<Mask> proper_qfan_subset(const FiniteTS& g, const CharSet& full, std::uint64_t* examined) {
  const int m = full.size();
  if (m >= 30) throw PreconditionError("character space too large for exhaustive subset search");
  const Mask top = (Mask{1} << m) - 1;
  std::uint64_t count = 0;
  for (Mask s = 1; s < top; ++s) {
    ++count;
    CharSet sub = full.subset(s);
    if (is_q_fan(sub, g).is_qfan) {
      if (examined) *examined = count;
      return s;
    }
  }
  if (examined) *examined = count;
  return std::nullopt;
}

AxiomReport check_rs_axioms(const RSModel& m) {
  const FiniteTS& g = m.ts;
  const int n = g.size();
  auto nm = [&](Elem a) { return g.name(a); };

  auto rs0 = [&]() -> AxiomResult {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (m.D.contains(c, a, b) != m.D.contains(c, b, a))
            return {"RS0", false, nm(c) + " in D(" + nm(a) + "," + nm(b) + ") but not symmetrically"};
    return {"RS0", true, ""};
  };
  auto rs1 = [&]() -> AxiomResult {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (!m.D.contains(a, a, b)) return {"RS1", false, nm(a) + " not in D(" + nm(a) + "," + nm(b) + ")"};
    return {"RS1", true, ""};
  };
  auto rs2 = [&]() -> AxiomResult {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          if (!m.D.contains(a, b, c)) continue;
          for (Elem d = 0; d < n; ++d)
            if (!m.D.contains(g.mul(a, d), g.mul(b, d), g.mul(c, d)))
              return {"RS2", false,
                      nm(a) + " in D(" + nm(b) + "," + nm(c) + ") but " + nm(g.mul(a, d)) + " not in D(" +
                          nm(g.mul(b, d)) + "," + nm(g.mul(c, d)) + ")"};
        }
    return {"RS2", true, ""};
  };
  auto rs3 = [&]() -> AxiomResult {
    auto w = rs3_violation(g, m.Dt);
    if (!w) return {"RS3", true, ""};
    auto [a, b, c, d, e] = *w;
    return {"RS3", false,
            nm(a) + " in Dt(" + nm(b) + "," + nm(c) + "), " + nm(c) + " in Dt(" + nm(d) + "," + nm(e) +
                "), no witness x"};
  };
  auto rs4 = [&]() -> AxiomResult {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          for (Elem d = 0; d < n; ++d)
            for (Elem e = 0; e < n; ++e)
              if (m.D.contains(e, g.mul(g.sq(c), a), g.mul(g.sq(d), b)) && !m.D.contains(e, a, b))
                return {"RS4", false,
                        nm(e) + " in D(" + nm(g.mul(g.sq(c), a)) + "," + nm(g.mul(g.sq(d), b)) + ") \\ D(" +
                            nm(a) + "," + nm(b) + ")"};
    return {"RS4", true, ""};
  };
  auto rs5 = [&]() -> AxiomResult {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem d = 0; d < n; ++d) {
          if (g.mul(a, d) != g.mul(b, d)) continue;
          for (Elem e = 0; e < n; ++e) {
            if (g.mul(a, e) != g.mul(b, e)) continue;
            for (Elem c = 0; c < n; ++c)
              if (m.D.contains(c, d, e) && g.mul(a, c) != g.mul(b, c))
                return {"RS5", false,
                        "a=" + nm(a) + " b=" + nm(b) + " c=" + nm(c) + " d=" + nm(d) + " e=" + nm(e)};
          }
        }
    return {"RS5", true, ""};
  };
  auto rs6 = [&]() -> AxiomResult {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (m.D.contains(c, a, b) && !m.Dt.contains(c, g.mul(g.sq(c), a), g.mul(g.sq(c), b)))
            return {"RS6", false, nm(c) + " in D(" + nm(a) + "," + nm(b) + ") but not in Dt(c^2a,c^2b)"};
    return {"RS6", true, ""};
  };
  auto rs7 = [&]() -> AxiomResult {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (a == b) continue;
        for (Elem c = 0; c < n; ++c)
          if (m.Dt.contains(c, a, g.neg(b)) && m.Dt.contains(c, b, g.neg(a)))
            return {"RS7", false,
                    nm(c) + " in Dt(" + nm(a) + ",-" + nm(b) + ") and Dt(" + nm(b) + ",-" + nm(a) +
                        ") with " + nm(a) + " != " + nm(b)};
      }
    return {"RS7", true, ""};
  };
  auto rs8 = [&]() -> AxiomResult {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (m.D.contains(a, b, c) && !m.D.contains(g.sq(a), g.sq(b), g.sq(c)))
            return {"RS8", false, nm(a) + " in D(" + nm(b) + "," + nm(c) + ") but squares fail"};
    return {"RS8", true, ""};
  };

  AxiomReport rep;
  rep.results = {rs0(), rs1(), rs2(), rs3(), rs4(), rs5(), rs6(), rs7(), rs8()};
  return rep;
}

bool divides_by_witness(const FiniteTS& g, Elem a, Elem b) {
  for (Elem x = 0; x < g.size(); ++x)
    if (g.mul(a, x) == b) return true;
  return false;
}

bool divides_by_zero_sets(const FiniteTS&, const CharSet& full, Elem a, Elem b) {
  for (int i = 0; i < full.size(); ++i)
    if (full[i](a) == 0 && full[i](b) != 0) return false;
  return true;
}

}  // namespace rsfan::ref
