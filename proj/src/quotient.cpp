#include "rsfan/quotient.hpp"

#include <algorithm>
#include <map>

namespace rsfan {

Congruence congruence_from_chars(const FiniteTS& g, const CharSet& x, Mask subset) {
  if (subset == 0) throw PreconditionError("congruence needs a nonempty set of characters");
  const int n = g.size();
  Congruence c;
  c.cls.assign(n, -1);
  c.inducing_chars = subset;
  std::map<std::vector<std::int8_t>, int> kernel;
  // first pass: group by value vectors
  std::vector<int> group(n);
  for (Elem a = 0; a < n; ++a) {
    std::vector<std::int8_t> key;
    key.reserve(static_cast<size_t>(popcount(subset)));
    for (Mask s = subset; s; s &= s - 1) key.push_back(static_cast<std::int8_t>(x[lowest(s)](a)));
    auto it = kernel.emplace(std::move(key), static_cast<int>(kernel.size())).first;
    group[a] = it->second;
  }
  // second pass: renumber classes by smallest member
  std::vector<int> renum(kernel.size(), -1);
  for (Elem a = 0; a < n; ++a)
    if (renum[group[a]] < 0) renum[group[a]] = c.class_count++;
  for (Elem a = 0; a < n; ++a) c.cls[a] = renum[group[a]];
  return c;
}

FiniteTS quotient_ts(const FiniteTS& g, const Congruence& c, const std::string& label) {
  const int n = g.size();
  const int m = c.class_count;
  std::vector<Elem> rep(m, -1);
  for (Elem a = 0; a < n; ++a)
    if (rep[c.cls[a]] < 0) rep[c.cls[a]] = a;
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) names[i] = g.names[rep[i]];
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[static_cast<size_t>(i) * m + j] = c.cls[g.mul(rep[i], rep[j])];
  // compatibility with the product (guaranteed for kernel congruences)
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (c.cls[g.mul(a, b)] != table[static_cast<size_t>(c.cls[a]) * m + c.cls[b]])
        throw StructuralError("partition is not compatible with the product");
  return make_ts(label, std::move(names), std::move(table), c.cls[g.one], c.cls[g.zero], c.cls[g.minus_one]);
}

bool lifted_characters_match(const FiniteTS& g, const CharSet& x, Mask subset, const FiniteTS& q) {
  Congruence c = congruence_from_chars(g, x, subset);
  std::vector<Elem> rep(c.class_count, -1);
  for (Elem a = 0; a < g.size(); ++a)
    if (rep[c.cls[a]] < 0) rep[c.cls[a]] = a;
  std::vector<std::vector<std::int8_t>> lifts;
  for (Mask s = subset; s; s &= s - 1) {
    std::vector<std::int8_t> lift(c.class_count);
    for (int i = 0; i < c.class_count; ++i) lift[i] = static_cast<std::int8_t>(x[lowest(s)](rep[i]));
    lifts.push_back(std::move(lift));
  }
  std::sort(lifts.begin(), lifts.end());
  lifts.erase(std::unique(lifts.begin(), lifts.end()), lifts.end());

  CharSet qchars = enumerate_characters(q);
  std::vector<std::vector<std::int8_t>> actual;
  for (int i = 0; i < qchars.size(); ++i) actual.push_back(qchars[i].vals);
  std::sort(actual.begin(), actual.end());
  return lifts == actual;
}

QuotientFan quotient_fan(const FanModel& f, const CharSet& x, Mask subset, bool parallel) {
  const FiniteTS& g = f.rs.ts;
  if (subset == 0) throw PreconditionError("fan quotient needs a nonempty set of characters");
  if (!is_3_closed(x, subset)) throw PreconditionError("fan quotient needs a 3-closed set of characters");

  QuotientFan out;
  out.cong = congruence_from_chars(g, x, subset);
  FiniteTS q = quotient_ts(g, out.cong, g.label + "/H");
  out.condition_z = satisfies_condition_z(q).holds;
  out.fan = make_fan(q);
  out.rs_axioms_pass = check_rs_axioms(out.fan.rs, {parallel}).all_pass();

  // the representation induced on classes must be the closed-form one
  const int m = q.size();
  std::vector<Elem> rep(m, -1);
  for (Elem a = 0; a < g.size(); ++a)
    if (rep[out.cong.cls[a]] < 0) rep[out.cong.cls[a]] = a;
  RSModel induced = induce_d(g, x, subset, parallel);
  out.induced_matches_closed_form = true;
  for (int b = 0; b < m && out.induced_matches_closed_form; ++b)
    for (int c = 0; c < m && out.induced_matches_closed_form; ++c)
      for (int a = 0; a < m; ++a)
        if (induced.D.contains(rep[a], rep[b], rep[c]) != out.fan.rs.D.contains(a, b, c)) {
          out.induced_matches_closed_form = false;
          break;
        }
  return out;
}

CongruenceFamily all_congruences(const FanModel& f) {
  const FiniteTS& g = f.rs.ts;
  CharSet x = enumerate_characters(g);
  if (x.size() > 16) throw PreconditionError("character space too large for congruence enumeration");
  const Mask top = (Mask{1} << x.size()) - 1;
  CongruenceFamily fam;
  std::vector<Congruence> congs;
  for (Mask s = 1; s <= top; ++s)
    if (is_3_closed(x, s)) {
      fam.closed_subsets.push_back(s);
      congs.push_back(congruence_from_chars(g, x, s));
    }
  fam.injective = true;
  for (size_t i = 0; i < congs.size() && fam.injective; ++i)
    for (size_t j = i + 1; j < congs.size() && fam.injective; ++j)
      if (congs[i].cls == congs[j].cls) fam.injective = false;
  fam.inclusion_reversing = true;
  for (size_t i = 0; i < congs.size() && fam.inclusion_reversing; ++i)
    for (size_t j = 0; j < congs.size() && fam.inclusion_reversing; ++j) {
      if (i == j) continue;
      Mask a = fam.closed_subsets[i], b = fam.closed_subsets[j];
      if ((a & b) != a) continue;  // want a subset of b
      // more characters refine: classes of b must sit inside classes of a
      for (Elem u = 0; u < g.size() && fam.inclusion_reversing; ++u)
        for (Elem v = 0; v < g.size(); ++v)
          if (congs[j].same(u, v) && !congs[i].same(u, v)) {
            fam.inclusion_reversing = false;
            break;
          }
    }
  return fam;
}

IdealQuotient ideal_quotient(const FanModel& f, Mask ideal, bool parallel) {
  const FiniteTS& g = f.rs.ts;
  if (!is_ideal(g, ideal)) throw PreconditionError("not an ideal: " + mask_to_string(g, ideal));
  if (ideal == g.all_mask()) throw PreconditionError("ideal quotient needs a proper ideal");

  IdealQuotient out;
  out.ideal = ideal;
  CharSet x = enumerate_characters(g);
  for (int i = 0; i < x.size(); ++i)
    if (zero_set(x[i]) == ideal) out.fiber |= bit(i);
  if (out.fiber == 0)
    throw Error("internal: no character has the given ideal as zero set (not a fan?)");

  out.quotient = quotient_fan(f, x, out.fiber, parallel);
  const Congruence& c = out.quotient.cong;

  // kernel characterisation vs multiplicative witness, for pairs outside
  out.witness_matches_kernel = true;
  for (Elem a = 0; a < g.size() && out.witness_matches_kernel; ++a)
    for (Elem b = 0; b < g.size() && out.witness_matches_kernel; ++b) {
      if (has(ideal, a) || has(ideal, b)) continue;
      bool wit = false;
      for (Elem z = 0; z < g.size() && !wit; ++z)
        if (!has(ideal, z) && g.mul(a, z) == g.mul(b, z)) wit = true;
      if (wit != c.same(a, b)) out.witness_matches_kernel = false;
    }

  const FiniteTS& q = out.quotient.fan.rs.ts;
  const int zero_cls = c.cls[g.zero];
  out.exponent_two_group = true;
  for (int i = 0; i < q.size(); ++i)
    if (i != zero_cls && q.sq(i) != q.one) out.exponent_two_group = false;
  if (q.one == q.minus_one) out.exponent_two_group = false;

  // minimal representation law on the nonzero classes
  out.rsg_fan = true;
  for (int b = 0; b < q.size() && out.rsg_fan; ++b)
    for (int cc = 0; cc < q.size() && out.rsg_fan; ++cc) {
      if (b == zero_cls || cc == zero_cls) continue;
      for (int a = 0; a < q.size(); ++a) {
        if (a == zero_cls) continue;
        bool want = (cc == q.neg(b)) || a == b || a == cc;
        if (out.quotient.fan.rs.D.contains(a, b, cc) != want) {
          out.rsg_fan = false;
          break;
        }
      }
    }

  out.ideals_above_collapse = true;
  for (const IdealInfo& info : ideals(g).ideals) {
    Mask j = info.members;
    if (j == ideal || (j & ideal) != ideal) continue;  // want J strictly above
    Mask image = 0;
    for (Mask s = j; s; s &= s - 1) image |= bit(c.cls[lowest(s)]);
    if (image != q.all_mask()) out.ideals_above_collapse = false;
  }

  for (Elem a = 0; a < g.size(); ++a)
    if (a != g.one && c.cls[a] == c.cls[g.one]) out.collapses_to_one.push_back(a);
  return out;
}

}  // namespace rsfan
