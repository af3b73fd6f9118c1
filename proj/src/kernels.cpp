#include "rsfan/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <vector>

namespace rsfan::kernels {

void induced_tables(const FiniteTS& g, const CharSet& x, Mask subset, DTable& d, DTable& dt, bool parallel) {
  const int n = g.size();
  d = DTable(n);
  dt = DTable(n);

  // per-character masks of elements by value
  std::vector<std::array<Mask, 3>> byval;  // index v+1
  std::vector<int> idxs;
  for (Mask s = subset; s; s &= s - 1) idxs.push_back(lowest(s));
  byval.resize(idxs.size());
  for (size_t t = 0; t < idxs.size(); ++t) {
    byval[t] = {0, 0, 0};
    const Character& h = x[idxs[t]];
    for (Elem a = 0; a < n; ++a) byval[t][h(a) + 1] |= bit(a);
  }

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (Elem b = 0; b < n; ++b) {
    for (Elem c = 0; c < n; ++c) {
      Mask md = g.all_mask(), mdt = g.all_mask();
      for (size_t t = 0; t < idxs.size(); ++t) {
        const Character& h = x[idxs[t]];
        int hb = h(b), hc = h(c);
        Mask okd = 0, okdt = 0;
        for (int v = -1; v <= 1; ++v) {
          if (d3_contains(v, hb, hc)) okd |= byval[t][v + 1];
          if (dt3_contains(v, hb, hc)) okdt |= byval[t][v + 1];
        }
        md &= okd;
        mdt &= okdt;
        if (!md && !mdt) break;
      }
      d.at(b, c) = md;
      dt.at(b, c) = mdt;
    }
  }
  (void)parallel;
}

namespace {

using Witness5 = std::array<Elem, 5>;

// cols[a][e] = set of x with a in Dt(x,e)
std::vector<Mask> transpose_first(const FiniteTS& ts, const DTable& dt) {
  const int n = ts.size();
  std::vector<Mask> cols(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem e = 0; e < n; ++e)
      for (Mask s = dt.at(x, e); s; s &= s - 1)
        cols[static_cast<size_t>(lowest(s)) * n + e] |= bit(x);
  return cols;
}

}  // namespace

std::optional<Witness5> rs3_violation(const FiniteTS& ts, const DTable& dt, bool parallel) {
  const int n = ts.size();
  const auto cols = transpose_first(ts, dt);

  // pairs (d,e) with c in Dt(d,e), grouped by c
  std::vector<std::vector<std::pair<Elem, Elem>>> pairs_for(n);
  for (Elem dd = 0; dd < n; ++dd)
    for (Elem e = 0; e < n; ++e)
      for (Mask s = dt.at(dd, e); s; s &= s - 1) pairs_for[lowest(s)].emplace_back(dd, e);

  Witness5 best{n, n, n, n, n};
  bool found = false;

#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
  {
    Witness5 local{n, n, n, n, n};
    bool local_found = false;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1) nowait
#endif
    for (Elem a = 0; a < n; ++a) {
      // a worksharing loop cannot break; later a's only give larger witnesses
      if (local_found) continue;
      for (Elem b = 0; b < n && !local_found; ++b)
        for (Elem c = 0; c < n && !local_found; ++c) {
          if (!dt.contains(a, b, c)) continue;
          for (auto [dd, e] : pairs_for[c]) {
            if (dt.at(b, dd) & cols[static_cast<size_t>(a) * n + e]) continue;
            local = {a, b, c, dd, e};
            local_found = true;
            break;
          }
        }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      if (local_found && (!found || local < best)) {
        best = local;
        found = true;
      }
    }
  }
  (void)parallel;
  if (!found) return std::nullopt;
  // pairs_for is in (d,e) scan order and the loops above are lexicographic in
  // (a,b,c), so `best` is the least witness overall.
  return best;
}

std::optional<std::array<Elem, 4>> rs3_prime_violation(const FiniteTS& ts, const DTable& dt) {
  const int n = ts.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!dt.at(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          if (!(dt.at(a, b) & dt.at(c, d))) continue;
          if (!(dt.at(a, ts.neg(c)) & dt.at(ts.neg(b), d))) return std::array<Elem, 4>{a, b, c, d};
        }
    }
  return std::nullopt;
}

std::optional<Mask> proper_qfan_subset(const FiniteTS& g, const CharSet& full, std::uint64_t* examined,
                                       bool parallel) {
  const int m = full.size();
  const int n = g.size();
  if (m >= 30) throw PreconditionError("character space too large for exhaustive subset search");
  const Mask top = (Mask{1} << m) - 1;

  // triple product table over the full space (closed by construction)
  std::vector<std::uint8_t> trip(static_cast<size_t>(m) * m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        int idx = full.index_of(char_product(full[i], full[j], full[k]));
        if (idx < 0) throw StructuralError("full character space is not 3-closed");
        trip[(static_cast<size_t>(i) * m + j) * m + k] = static_cast<std::uint8_t>(idx);
      }

  // for every element pair, the set of characters distinguishing it
  std::vector<Mask> pairsep;
  pairsep.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      Mask s = 0;
      for (int i = 0; i < m; ++i)
        if (full[i](a) != full[i](b)) s |= bit(i);
      pairsep.push_back(s);
    }

  std::uint64_t count = 0;
  Mask best = 0;
  bool found = false;

#ifdef _OPENMP
#pragma omp parallel reduction(+ : count) if (parallel)
#endif
  {
    Mask local_best = 0;
    bool local_found = false;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (std::int64_t sub = 1; sub < static_cast<std::int64_t>(top); ++sub) {
      Mask s = static_cast<Mask>(sub);
      ++count;
      bool sep = true;
      for (const Mask p : pairsep)
        if (!(p & s)) {
          sep = false;
          break;
        }
      if (!sep) continue;
      bool closed = true;
      for (Mask u = s; u && closed; u &= u - 1)
        for (Mask v = s; v && closed; v &= v - 1)
          for (Mask w = s; w && closed; w &= w - 1) {
            int p = trip[(static_cast<size_t>(lowest(u)) * m + lowest(v)) * m + lowest(w)];
            if (!has(s, p)) closed = false;
          }
      if (!closed) continue;
      if (!local_found || s < local_best) {
        local_found = true;
        local_best = s;
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      if (local_found && (!found || local_best < best)) {
        found = true;
        best = local_best;
      }
    }
  }
  (void)parallel;
  if (examined) *examined = count;
  if (!found) return std::nullopt;
  return best;
}

}  // namespace rsfan::kernels
