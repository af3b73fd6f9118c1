#include "rsfan/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rsfan {

namespace {

// x^3 = x keeps exponents in {0,1,2}: overflow folds back by parity.
int add_exp(int a, int b) {
  int s = a + b;
  if (s <= 2) return s;
  return (s % 2 == 0) ? 2 : 1;
}

// Monomial listing order used throughout: constants first, then monomials by
// (number of distinct generators, total degree, exponent vector with larger
// leading exponents first), each immediately followed by its negative. This
// reproduces the conventional listing 1,0,-1,x,-x,y,-y,z,-z,x^2,...,xyz,-xyz.
struct MonKey {
  int cls;  // 0 = one, 1 = zero, 2 = minus_one, 3 = monomial
  int distinct = 0;
  int degree = 0;
  std::vector<int> exp;
  bool negative = false;

  bool operator<(const MonKey& o) const {
    if (cls != o.cls) return cls < o.cls;
    if (distinct != o.distinct) return distinct < o.distinct;
    if (degree != o.degree) return degree < o.degree;
    for (size_t i = 0; i < exp.size(); ++i)
      if (exp[i] != o.exp[i]) return exp[i] > o.exp[i];
    return negative < o.negative;
  }
};

MonKey key_of(const Monomial& m) {
  MonKey k;
  if (m.is_zero) {
    k.cls = 1;
    return k;
  }
  k.distinct = 0;
  k.degree = 0;
  for (int e : m.exp) {
    if (e > 0) ++k.distinct;
    k.degree += e;
  }
  if (k.degree == 0) {
    k.cls = m.negative ? 2 : 0;
    return k;
  }
  k.cls = 3;
  k.exp = m.exp;
  k.negative = m.negative;
  return k;
}

std::vector<Monomial> all_monomials(int k) {
  std::vector<Monomial> out;
  std::vector<int> exp(k, 0);
  // all exponent vectors in {0,1,2}^k
  while (true) {
    for (bool neg : {false, true}) {
      Monomial m;
      m.negative = neg;
      m.exp = exp;
      out.push_back(m);
    }
    int i = k - 1;
    while (i >= 0 && exp[i] == 2) exp[i--] = 0;
    if (i < 0) break;
    ++exp[i];
  }
  out.push_back(Monomial::zero(k));
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return key_of(a) < key_of(b); });
  return out;
}

}  // namespace

Monomial mul_monomial(const Monomial& a, const Monomial& b) {
  const int k = static_cast<int>(a.exp.size());
  if (a.is_zero || b.is_zero) return Monomial::zero(k);
  Monomial m;
  m.negative = a.negative != b.negative;
  m.exp.resize(k);
  for (int i = 0; i < k; ++i) m.exp[i] = add_exp(a.exp[i], b.exp[i]);
  return m;
}

std::string monomial_name(const Monomial& m, const std::vector<std::string>& gens) {
  if (m.is_zero) return "0";
  bool single_char = std::all_of(gens.begin(), gens.end(), [](const std::string& g) { return g.size() == 1; });
  std::string body;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!body.empty() && !single_char) body += "*";
    body += gens[i];
    if (m.exp[i] == 2) body += "^2";
  }
  if (body.empty()) return m.negative ? "-1" : "1";
  return m.negative ? "-" + body : body;
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& gens) {
  const int k = static_cast<int>(gens.size());
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '*')) ++i;
  };
  skip_ws();
  Monomial m;
  m.exp.assign(k, 0);
  if (i < text.size() && text[i] == '-') {
    m.negative = true;
    ++i;
  }
  skip_ws();
  if (i < text.size() && (text[i] == '0' || text[i] == '1')) {
    if (text[i] == '0') {
      if (m.negative) throw ParseError("'-0' is not a monomial: " + text);
      m = Monomial::zero(k);
    }
    ++i;
    skip_ws();
    if (i != text.size()) throw ParseError("trailing input after constant in monomial: " + text);
    return m;
  }
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    // longest generator-name match at this position
    int best = -1;
    size_t best_len = 0;
    for (int gi = 0; gi < k; ++gi) {
      const std::string& g = gens[gi];
      if (text.compare(i, g.size(), g) == 0 && g.size() > best_len) {
        best = gi;
        best_len = g.size();
      }
    }
    if (best < 0) throw ParseError("cannot read monomial '" + text + "' at position " + std::to_string(i));
    i += best_len;
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i >= text.size() || (text[i] != '1' && text[i] != '2'))
        throw ParseError("exponent must be 1 or 2 in monomial: " + text);
      e = text[i] - '0';
      ++i;
    }
    m.exp[best] = add_exp(m.exp[best], e);
    any = true;
  }
  if (!any) throw ParseError("empty monomial: " + text);
  return m;
}

FiniteTS free_ts(std::vector<std::string> gens, std::string label) {
  const int k = static_cast<int>(gens.size());
  auto mons = all_monomials(k);
  const int n = static_cast<int>(mons.size());
  if (n > kMaxElems)
    throw StructuralError("free ternary semigroup on " + std::to_string(k) + " generators exceeds 64 elements");

  std::map<std::pair<bool, std::vector<int>>, Elem> index;  // (negative, exp), zero handled apart
  Elem zero_idx = -1;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = monomial_name(mons[i], gens);
    if (mons[i].is_zero)
      zero_idx = i;
    else
      index[{mons[i].negative, mons[i].exp}] = i;
  }
  auto idx = [&](const Monomial& m) -> Elem {
    if (m.is_zero) return zero_idx;
    return index.at({m.negative, m.exp});
  };

  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = idx(mul_monomial(mons[a], mons[b]));

  Monomial one_m;
  one_m.exp.assign(k, 0);
  Monomial mone_m = one_m;
  mone_m.negative = true;

  FiniteTS g = make_ts(label.empty() ? "free" + std::to_string(k) : std::move(label), std::move(names),
                       std::move(table), idx(one_m), zero_idx, idx(mone_m));
  g.generators = std::move(gens);
  for (size_t i = 0; i < g.generators.size(); ++i) {
    Monomial m;
    m.exp.assign(k, 0);
    m.exp[i] = 1;
    g.generator_elems.push_back(idx(m));
  }
  return g;
}

FiniteTS build_from_presentation(const Presentation& p) {
  FiniteTS f = free_ts(p.generators);
  const int n = f.size();

  // union-find
  std::vector<Elem> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Elem a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  // canonical representative = smallest index, so class names stay minimal
  auto unite = [&](Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  };

  std::vector<std::pair<Elem, Elem>> pending;
  for (const Relation& r : p.relations) {
    Monomial l = r.lhs, rr = r.rhs;
    if (static_cast<int>(l.exp.size()) != static_cast<int>(p.generators.size()) ||
        static_cast<int>(rr.exp.size()) != static_cast<int>(p.generators.size()))
      throw StructuralError("relation arity does not match generators");
    auto find_elem = [&](const Monomial& m) {
      Elem e = f.index_of(monomial_name(m, p.generators));
      if (e < 0) throw StructuralError("relation side is not a free-TS element");
      return e;
    };
    pending.emplace_back(find_elem(l), find_elem(rr));
  }

  // Congruence closure: merging a ~ b forces ac ~ bc for every c. Then the
  // [TS5] collapse x ~ -x => x ~ 0 may enable further merges; iterate to a
  // fixpoint.
  while (!pending.empty()) {
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      if (!unite(a, b)) continue;
      for (Elem c = 0; c < n; ++c) {
        Elem x = find(f.mul(a, c)), y = find(f.mul(b, c));
        if (x != y) pending.emplace_back(x, y);
      }
    }
    for (Elem a = 0; a < n; ++a)
      if (find(a) == find(f.neg(a)) && find(a) != find(f.zero)) pending.emplace_back(a, f.zero);
  }

  if (find(f.one) == find(f.minus_one) || find(f.one) == find(f.zero))
    throw DegeneratePresentationError("presentation collapses 1 with -1: quotient is not a ternary semigroup");

  // classes in canonical order of their representatives
  std::vector<Elem> reps;
  std::vector<int> cls(n, -1);
  for (Elem a = 0; a < n; ++a)
    if (find(a) == a) {
      cls[a] = static_cast<int>(reps.size());
      reps.push_back(a);
    }
  for (Elem a = 0; a < n; ++a) cls[a] = cls[find(a)];

  const int m = static_cast<int>(reps.size());
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) names[i] = f.names[reps[i]];
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[static_cast<size_t>(i) * m + j] = cls[f.mul(reps[i], reps[j])];

  FiniteTS g = make_ts(p.label, std::move(names), std::move(table), cls[f.one], cls[f.zero], cls[f.minus_one]);
  g.generators = p.generators;
  for (Elem e : f.generator_elems) g.generator_elems.push_back(cls[e]);
  for (const Relation& r : p.relations) g.relations.emplace_back(r.lhs_text, r.rhs_text);
  return g;
}

}  // namespace rsfan
