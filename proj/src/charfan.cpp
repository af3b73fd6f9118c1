#include "rsfan/charfan.hpp"

#include <algorithm>

namespace rsfan {

std::vector<Mask> saturated_prime_ideals(const RSModel& m) {
  std::vector<Mask> out;
  for (const IdealInfo& info : ideals(m.ts).ideals)
    if (info.proper && info.prime && is_saturated(m, info.members)) out.push_back(info.members);
  return out;
}

namespace {

// x ~I y  iff  h(x) = h(y) for every character in the model's space whose
// zero set is exactly I; the quotient carries the representation induced by
// that fiber.
struct FiberQuotient {
  Congruence cong;
  FiniteTS q;
  DTable d;
  bool ok = false;
};

FiberQuotient fiber_quotient(const RSModel& m, const CharSet& xs, Mask ideal) {
  FiberQuotient out;
  Mask fiber = 0;
  for (int i = 0; i < xs.size(); ++i)
    if (zero_set(xs[i]) == ideal) fiber |= bit(i);
  if (fiber == 0) return out;
  out.cong = congruence_from_chars(m.ts, xs, fiber);
  out.q = quotient_ts(m.ts, out.cong, m.ts.label + "/I");
  const int k = out.q.size();
  std::vector<Elem> rep(k, -1);
  for (Elem a = 0; a < m.ts.size(); ++a)
    if (rep[out.cong.cls[a]] < 0) rep[out.cong.cls[a]] = a;
  out.d = DTable(k);
  for (int b = 0; b < k; ++b)
    for (int c = 0; c < k; ++c)
      for (int a = 0; a < k; ++a) {
        bool in = true;
        for (Mask s = fiber; s && in; s &= s - 1) {
          const Character& h = xs[lowest(s)];
          if (!d3_contains(h(rep[a]), h(rep[b]), h(rep[c]))) in = false;
        }
        if (in) out.d.at(b, c) |= bit(a);
      }
  out.ok = true;
  return out;
}

}  // namespace

CharacterizationReport check_characterization(const RSModel& m, bool parallel) {
  (void)parallel;
  const FiniteTS& g = m.ts;
  CharacterizationReport rep;

  ConditionZ cz = satisfies_condition_z(g);
  rep.cond_2i = cz.holds;
  rep.is_fan = cz.holds && make_fan(g).rs.D == m.D;

  CharSet xs = rs_characters(m);

  rep.cond_2ii = true;
  for (int i = 0; i < xs.size() && rep.cond_2ii; ++i)
    for (int j = 0; j < xs.size() && rep.cond_2ii; ++j) {
      if ((zero_set(xs[i]) & zero_set(xs[j])) != zero_set(xs[i])) continue;  // want Z(g) in Z(h)
      bool found = false;
      for (int k = 0; k < xs.size() && !found; ++k)
        if (zero_set(xs[k]) == zero_set(xs[j]) && specializes(xs[i], xs[k])) found = true;
      if (!found) {
        rep.cond_2ii = false;
        rep.detail = "no specialization of " + xs.labels[i] + " with the zero set of " + xs.labels[j];
      }
    }

  rep.cond_2iii = true;
  for (Mask ideal : saturated_prime_ideals(m)) {
    FiberQuotient fq = fiber_quotient(m, xs, ideal);
    if (!fq.ok) {
      rep.cond_2iii = false;
      rep.detail = "no character with zero set " + mask_to_string(g, ideal);
      break;
    }
    const int zero_cls = fq.cong.cls[g.zero];
    for (int b = 0; b < fq.q.size() && rep.cond_2iii; ++b)
      for (int c = 0; c < fq.q.size() && rep.cond_2iii; ++c) {
        if (b == zero_cls || c == zero_cls) continue;
        for (int a = 0; a < fq.q.size(); ++a) {
          if (a == zero_cls) continue;
          bool want = (c == fq.q.neg(b)) || a == b || a == c;
          if (fq.d.contains(a, b, c) != want) {
            rep.cond_2iii = false;
            rep.detail = "minimal law fails in the quotient by " + mask_to_string(g, ideal);
            break;
          }
        }
      }
    if (!rep.cond_2iii) break;
  }

  rep.equivalence_holds = (rep.is_fan == (rep.cond_2i && rep.cond_2ii && rep.cond_2iii));
  return rep;
}

InterpolationResult interpolate_character(const FanModel& fan, const Character& g, const Character& h,
                                          Mask ideal) {
  const FiniteTS& ts = fan.rs.ts;
  if (!specializes(g, h)) throw PreconditionError("first character does not specialize to the second");
  if (!is_ideal(ts, ideal)) throw PreconditionError("interpolation set is not an ideal");
  Mask zg = zero_set(g), zh = zero_set(h);
  if ((zg & ideal) != zg) throw PreconditionError("Z(g) is not contained in the ideal");
  if ((ideal & zh) != ideal) throw PreconditionError("the ideal is not contained in Z(h)");

  InterpolationResult out;
  out.f.vals.resize(ts.size());
  for (Elem a = 0; a < ts.size(); ++a) out.f.vals[a] = has(ideal, a) ? 0 : g(a);

  out.is_char = is_character(ts, out.f);
  out.chain = specializes(g, out.f) && specializes(out.f, h);
  out.zero_set_is_i = zero_set(out.f) == ideal;

  CharSet xs = enumerate_characters(ts);
  out.unique = true;
  for (int i = 0; i < xs.size(); ++i)
    if (xs[i] != out.f && zero_set(xs[i]) == ideal && specializes(g, xs[i])) out.unique = false;

  out.square_route = true;
  for (int i = 0; i < xs.size(); ++i)
    if (zero_set(xs[i]) == ideal && char_square_times(xs[i], g) != out.f) out.square_route = false;
  return out;
}

bool zero_set_surjectivity(const FanModel& fan) {
  CharSet xs = enumerate_characters(fan.rs.ts);
  for (const IdealInfo& info : ideals(fan.rs.ts).ideals) {
    if (!info.proper) continue;
    bool found = false;
    for (int i = 0; i < xs.size() && !found; ++i)
      if (zero_set(xs[i]) == info.members) found = true;
    if (!found) return false;
  }
  return true;
}

ChainVerdict totally_ordered_spec_implies_fan(const RSModel& m) {
  ChainVerdict out;
  CharSet xs = rs_characters(m);
  out.applicable = true;
  for (int i = 0; i < xs.size() && out.applicable; ++i)
    for (int j = i + 1; j < xs.size(); ++j)
      if (!specializes(xs[i], xs[j]) && !specializes(xs[j], xs[i])) {
        out.applicable = false;
        out.detail = xs.labels[i] + " and " + xs.labels[j] + " are incomparable";
        break;
      }
  if (!out.applicable) return out;

  out.fan_confirmed = satisfies_condition_z(m.ts).holds && make_fan(m.ts).rs.D == m.D;
  out.unique_zero_sets = true;
  for (Mask ideal : saturated_prime_ideals(m)) {
    int count = 0;
    for (int i = 0; i < xs.size(); ++i)
      if (zero_set(xs[i]) == ideal) ++count;
    if (count != 1) out.unique_zero_sets = false;
  }
  return out;
}

ChainVerdict two_chains_implies_fan(const RSModel& m) {
  if (!satisfies_condition_z(m.ts).holds)
    throw PreconditionError("the two-chain criterion assumes condition [Z]");
  ChainVerdict out;
  CharSet xs = rs_characters(m);
  Poset sp = make_poset(xs.labels, [&](int i, int j) { return specializes(xs[i], xs[j]); });
  // a union of two chains has no antichain of size three
  if (sp.width() > 2) {
    out.detail = "width " + std::to_string(sp.width());
    return out;
  }
  std::vector<Mask> chains = sp.all_chains();
  const Mask all = xs.size() == 64 ? ~Mask{0} : (Mask{1} << xs.size()) - 1;
  std::vector<Mask> prime_ideals = saturated_prime_ideals(m);

  auto realizes_all = [&](Mask chain) {
    for (Mask ideal : prime_ideals) {
      bool found = false;
      for (Mask s = chain; s && !found; s &= s - 1)
        if (zero_set(xs[lowest(s)]) == ideal) found = true;
      if (!found) return false;
    }
    return true;
  };

  // chains may overlap; search covers where both parts realize every ideal
  for (size_t i = 0; i < chains.size() && !out.applicable; ++i) {
    if (!realizes_all(chains[i])) continue;
    for (size_t j = i; j < chains.size() && !out.applicable; ++j) {
      if ((chains[i] | chains[j]) != all) continue;
      if (!realizes_all(chains[j])) continue;
      out.applicable = true;
      out.detail = "cover: {" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
  }
  if (out.applicable)
    out.fan_confirmed = make_fan(m.ts).rs.D == m.D;
  return out;
}

}  // namespace rsfan
