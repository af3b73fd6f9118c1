#include "rsfan/chars.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rsfan {

Character char_product(const Character& a, const Character& b, const Character& c) {
  Character out;
  out.vals.resize(a.vals.size());
  for (size_t i = 0; i < a.vals.size(); ++i)
    out.vals[i] = static_cast<std::int8_t>(a.vals[i] * b.vals[i] * c.vals[i]);
  return out;
}

Character char_square_times(const Character& a, const Character& b) { return char_product(a, a, b); }

Mask zero_set(const Character& h) {
  Mask m = 0;
  for (int i = 0; i < h.size(); ++i)
    if (h.vals[i] == 0) m |= bit(i);
  return m;
}

Mask nonneg_set(const Character& h) {
  Mask m = 0;
  for (int i = 0; i < h.size(); ++i)
    if (h.vals[i] == 0 || h.vals[i] == 1) m |= bit(i);
  return m;
}

bool is_character(const FiniteTS& g, const Character& h) {
  if (h.size() != g.size()) return false;
  if (h(g.one) != 1 || h(g.zero) != 0 || h(g.minus_one) != -1) return false;
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = a; b < g.size(); ++b)
      if (h(g.mul(a, b)) != h(a) * h(b)) return false;
  return true;
}

int CharSet::index_of(const Character& h) const {
  for (int i = 0; i < size(); ++i)
    if (members[i] == h) return i;
  return -1;
}

CharSet CharSet::subset(Mask which) const {
  CharSet out;
  for (Mask t = which; t; t &= t - 1) {
    int i = lowest(t);
    out.members.push_back(members[i]);
    out.labels.push_back(labels[i]);
  }
  return out;
}

bool specializes(const Character& g, const Character& h) {
  for (int a = 0; a < g.size(); ++a)
    if (h.vals[a] != h.vals[a] * h.vals[a] * g.vals[a]) return false;
  return true;
}

ZeroSetOrder compare_zero_sets(const Character& g, const Character& h) {
  Mask zg = zero_set(g), zh = zero_set(h);
  if (zg == zh) return ZeroSetOrder::equal;
  if ((zg & zh) == zg) return ZeroSetOrder::left_in_right;
  if ((zg & zh) == zh) return ZeroSetOrder::right_in_left;
  return ZeroSetOrder::incomparable;
}

namespace {

// A small generating set: the declared generators when present, extended (or
// built from scratch) greedily until products of constants and picks reach
// every element.
std::vector<Elem> generating_set(const FiniteTS& g) {
  std::vector<Elem> gens = g.generator_elems;
  auto closure = [&](const std::vector<Elem>& base) {
    Mask reach = bit(g.one) | bit(g.zero) | bit(g.minus_one);
    for (Elem e : base) reach |= bit(e);
    bool grew = true;
    while (grew) {
      grew = false;
      for (Mask s = reach; s; s &= s - 1)
        for (Mask t = reach; t; t &= t - 1) {
          Elem p = g.mul(lowest(s), lowest(t));
          if (!has(reach, p)) {
            reach |= bit(p);
            grew = true;
          }
        }
    }
    return reach;
  };
  Mask reach = closure(gens);
  while (reach != g.all_mask()) {
    for (Elem a = 0; a < g.size(); ++a)
      if (!has(reach, a)) {
        gens.push_back(a);
        break;
      }
    reach = closure(gens);
  }
  return gens;
}

int value_rank(int v) { return v == 0 ? 0 : (v == 1 ? 1 : 2); }

}  // namespace

CharSet enumerate_characters(const FiniteTS& g) {
  const int n = g.size();
  std::vector<Elem> gens = generating_set(g);
  const int k = static_cast<int>(gens.size());

  std::vector<Character> found;
  std::set<std::vector<std::int8_t>> seen;
  static const int kTryOrder[3] = {0, 1, -1};
  std::vector<int> choice(k, 0);

  // backtrack over generator values only, extending multiplicatively
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k) {
      constexpr std::int8_t kUnset = 99;
      std::vector<std::int8_t> v(n, kUnset);
      v[g.one] = 1;
      v[g.zero] = 0;
      v[g.minus_one] = -1;
      if (v[g.one] != 1 || v[g.zero] != 0 || v[g.minus_one] != -1) return;  // merged constants
      for (int i = 0; i < k; ++i) {
        std::int8_t val = static_cast<std::int8_t>(kTryOrder[choice[i]]);
        if (v[gens[i]] != kUnset && v[gens[i]] != val) return;
        v[gens[i]] = val;
      }
      bool grew = true, ok = true;
      while (grew && ok) {
        grew = false;
        for (Elem a = 0; a < n && ok; ++a) {
          if (v[a] == kUnset) continue;
          for (Elem b = a; b < n && ok; ++b) {
            if (v[b] == kUnset) continue;
            Elem c = g.mul(a, b);
            std::int8_t val = static_cast<std::int8_t>(v[a] * v[b]);
            if (v[c] == kUnset) {
              v[c] = val;
              grew = true;
            } else if (v[c] != val) {
              ok = false;
            }
          }
        }
      }
      if (!ok) return;
      for (Elem a = 0; a < n; ++a)
        if (v[a] == kUnset) return;  // not generating; cannot happen
      Character h{std::move(v)};
      if (is_character(g, h) && seen.insert(h.vals).second) found.push_back(std::move(h));
      return;
    }
    for (int c = 0; c < 3; ++c) {
      choice[depth] = c;
      rec(depth + 1);
    }
  };
  rec(0);
  return make_canonical_charset(std::move(found));
}

CharSet make_canonical_charset(std::vector<Character> members) {
  // Canonical order: zero-set size descending; within a tier, sort by the
  // index list of proper specializations among already-placed characters (all
  // of which have strictly larger zero-sets), then by value vectors with
  // 0 < 1 < -1. This reproduces the layered labelling of the diagrams.
  std::stable_sort(members.begin(), members.end(), [](const Character& a, const Character& b) {
    return popcount(zero_set(a)) > popcount(zero_set(b));
  });
  std::vector<Character> placed;
  std::vector<Character> out;
  size_t i = 0;
  while (i < members.size()) {
    size_t j = i;
    int zc = popcount(zero_set(members[i]));
    while (j < members.size() && popcount(zero_set(members[j])) == zc) ++j;
    std::vector<Character> tier(members.begin() + i, members.begin() + j);
    auto profile = [&](const Character& h) {
      std::vector<int> prof;
      for (size_t t = 0; t < placed.size(); ++t)
        if (placed[t] != h && specializes(h, placed[t])) prof.push_back(static_cast<int>(t));
      return prof;
    };
    std::sort(tier.begin(), tier.end(), [&](const Character& a, const Character& b) {
      auto pa = profile(a), pb = profile(b);
      if (pa != pb) return pa < pb;
      for (size_t t = 0; t < a.vals.size(); ++t)
        if (a.vals[t] != b.vals[t]) return value_rank(a.vals[t]) < value_rank(b.vals[t]);
      return false;
    });
    for (auto& h : tier) {
      placed.push_back(h);
      out.push_back(std::move(h));
    }
    i = j;
  }

  CharSet cs;
  cs.members = std::move(out);
  for (size_t t = 0; t < cs.members.size(); ++t) cs.labels.push_back("h" + std::to_string(t + 1));
  return cs;
}

SpecializationPoset specialization_poset(const CharSet& x) {
  if (x.size() == 0) throw PreconditionError("specialization poset of an empty character set");
  SpecializationPoset out;
  out.poset = make_poset(x.labels, [&](int i, int j) { return specializes(x[i], x[j]); });
  out.is_root_system = true;
  for (int i = 0; i < x.size() && out.is_root_system; ++i) {
    Mask ups = out.poset.up[i] & ~bit(i);
    for (Mask s = ups; s && out.is_root_system; s &= s - 1)
      for (Mask t = s & (s - 1); t && out.is_root_system; t &= t - 1)
        if (!out.poset.comparable(lowest(s), lowest(t))) out.is_root_system = false;
  }
  return out;
}

bool is_3_closed(const CharSet& full, Mask subset) {
  for (Mask s = subset; s; s &= s - 1)
    for (Mask t = subset; t; t &= t - 1)
      for (Mask u = subset; u; u &= u - 1) {
        Character p = char_product(full[lowest(s)], full[lowest(t)], full[lowest(u)]);
        int idx = full.index_of(p);
        if (idx < 0 || !has(subset, idx)) return false;
      }
  return true;
}

Mask closure_3(const CharSet& full, Mask seed) {
  Mask cur = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Mask s = cur; s; s &= s - 1)
      for (Mask t = cur; t; t &= t - 1)
        for (Mask u = cur; u; u &= u - 1) {
          Character p = char_product(full[lowest(s)], full[lowest(t)], full[lowest(u)]);
          int idx = full.index_of(p);
          if (idx < 0) throw StructuralError("triple product left the ambient character set");
          if (!has(cur, idx)) {
            cur |= bit(idx);
            grew = true;
          }
        }
  }
  return cur;
}

bool separates_points(const FiniteTS& g, const CharSet& x, Mask subset, Elem* wa, Elem* wb) {
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = a + 1; b < g.size(); ++b) {
      bool sep = false;
      for (Mask s = subset; s && !sep; s &= s - 1)
        if (x[lowest(s)](a) != x[lowest(s)](b)) sep = true;
      if (!sep) {
        if (wa) *wa = a;
        if (wb) *wb = b;
        return false;
      }
    }
  return true;
}

QFanResult is_q_fan(const CharSet& x, const FiniteTS& g) {
  QFanResult r;
  Mask all = x.size() == 64 ? ~Mask{0} : (Mask{1} << x.size()) - 1;
  // 3-closedness: products must stay inside x itself
  r.closed3 = true;
  for (int i = 0; i < x.size() && r.closed3; ++i)
    for (int j = 0; j < x.size() && r.closed3; ++j)
      for (int k = 0; k < x.size() && r.closed3; ++k) {
        Character p = char_product(x[i], x[j], x[k]);
        if (x.index_of(p) < 0) {
          r.closed3 = false;
          r.reason = "not 3-closed: " + x.labels[i] + "*" + x.labels[j] + "*" + x.labels[k] + " is outside";
        }
      }
  Elem a = -1, b = -1;
  r.separating = separates_points(g, x, all, &a, &b);
  if (!r.separating && r.reason.empty())
    r.reason = "does not separate " + g.name(a) + " from " + g.name(b);
  r.is_qfan = r.closed3 && r.separating;
  return r;
}

DensityResult finite_density_check(const FiniteTS& g, const CharSet& full, Mask subset) {
  if (!is_3_closed(full, subset)) throw PreconditionError("finite_density_check requires a 3-closed subset");
  DensityResult out;
  Mask all = full.size() == 64 ? ~Mask{0} : (Mask{1} << full.size()) - 1;
  out.is_full = (subset == all);
  out.is_qfan = subset != 0 && separates_points(g, full, subset);
  out.qfan_iff_full = (out.is_qfan == out.is_full);
  return out;
}

}  // namespace rsfan
