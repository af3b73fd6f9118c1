#include "rsfan/pring.hpp"

#include <algorithm>
#include <sstream>

namespace rsfan::pring {

std::string to_string(const DualNumber& v) {
  auto rat = [](const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
  };
  std::string out = rat(v.a) + "X";
  if (v.b >= Rat(0)) out += "+";
  return out + rat(v.b);
}

PreorderSpec lex_preorder() {
  return {"lex", [](const DualNumber& v) { return v.b > Rat(0) || (v.b == Rat(0) && v.a >= Rat(0)); }};
}

PreorderSpec sos_preorder() {
  // (aX+b)^2 = 2ab X + b^2; sums of these are exactly {b > 0} plus 0
  return {"sos", [](const DualNumber& v) { return v.b > Rat(0) || (v.a == Rat(0) && v.b == Rat(0)); }};
}

PreorderSpec cone_preorder() {
  return {"cone", [](const DualNumber& v) { return v.b >= Rat(0); }};
}

PreorderSpec with_extra(PreorderSpec base, std::vector<DualNumber> extra, const std::string& name) {
  auto fn = [base = std::move(base.member), extra = std::move(extra)](const DualNumber& v) {
    if (base(v)) return true;
    return std::find(extra.begin(), extra.end(), v) != extra.end();
  };
  return {name, std::move(fn)};
}

std::vector<DualNumber> grid_sample(int range) {
  std::vector<DualNumber> out;
  for (int a = -range; a <= range; ++a)
    for (int b = -range; b <= range; ++b) out.push_back({Rat(a), Rat(b)});
  return out;
}

TotalPreorderReport verify_total_preorder(const PreorderSpec& t, const std::vector<DualNumber>& sample) {
  TotalPreorderReport rep;
  for (const DualNumber& u : sample) {
    if (rep.squares.pass && !t.member(u.square())) rep.squares = {false, to_string(u) + " squared"};
    if (rep.total.pass && !t.member(u) && !t.member(-u)) rep.total = {false, to_string(u)};
  }
  const DualNumber minus_one{Rat(0), Rat(-1)};
  if (t.member(minus_one)) rep.proper = {false, "-1"};
  for (const DualNumber& u : sample) {
    if (!t.member(u)) continue;
    for (const DualNumber& v : sample) {
      if (!t.member(v)) continue;
      if (rep.products.pass && !t.member(u * v))
        rep.products = {false, to_string(u) + " * " + to_string(v)};
      if (rep.sums.pass && !t.member(u + v)) rep.sums = {false, to_string(u) + " + " + to_string(v)};
    }
    if (!rep.products.pass && !rep.sums.pass) break;
  }
  return rep;
}

SupportReport support(const PreorderSpec& t, const std::vector<DualNumber>& sample,
                      const std::vector<std::pair<DualNumber, DualNumber>>& radical_witnesses) {
  SupportReport rep;
  auto in_support = [&](const DualNumber& v) { return t.member(v) && t.member(-v); };
  for (const DualNumber& u : sample)
    if (in_support(u)) rep.support.push_back(u);
  for (const auto& [a, tt] : radical_witnesses) {
    DualNumber probe = a.square() + tt;
    if (in_support(probe) && !in_support(a))
      rep.radical_violations.push_back("(" + to_string(a) + ", " + to_string(tt) + "): " + to_string(probe) +
                                       " in the support but " + to_string(a) + " is not");
  }
  return rep;
}

SixConditionReport ts_char_subset_conditions(const PreorderSpec& s, const PreorderSpec& t,
                                             const std::vector<DualNumber>& sample) {
  SixConditionReport rep;
  auto in_support = [&](const DualNumber& v) { return s.member(v) && s.member(-v); };
  const DualNumber minus_one{Rat(0), Rat(-1)};
  if (s.member(minus_one)) rep.no_minus_one = {false, "-1"};
  for (const DualNumber& u : sample) {
    if (rep.contains_t.pass && t.member(u) && !s.member(u)) rep.contains_t = {false, to_string(u)};
    if (rep.total.pass && !s.member(u) && !s.member(-u)) rep.total = {false, to_string(u)};
  }
  for (const DualNumber& u : sample)
    for (const DualNumber& v : sample) {
      if (rep.product_closed.pass && s.member(u) && s.member(v) && !s.member(u * v))
        rep.product_closed = {false, to_string(u) + " * " + to_string(v)};
      if (rep.support_prime.pass && in_support(u * v) && !in_support(u) && !in_support(v))
        rep.support_prime = {false, to_string(u) + " * " + to_string(v) + " = " + to_string(u * v)};
      if (rep.support_convex.pass && t.member(u) && t.member(v) && in_support(u + v) &&
          (!in_support(u) || !in_support(v)))
        rep.support_convex = {false, to_string(u) + " + " + to_string(v)};
      if (rep.additive.pass && s.member(u) && s.member(v) && !s.member(u + v))
        rep.additive = {false, to_string(u) + " + " + to_string(v)};
    }
  return rep;
}

IntPreorderReport verify_int_preorder(const std::function<bool(long long)>& member, long long range) {
  IntPreorderReport rep;
  rep.proper = !member(-1);
  rep.total = true;
  for (long long n = -range; n <= range; ++n)
    if (!member(n) && !member(-n)) {
      rep.total = false;
      rep.witness = std::to_string(n);
      break;
    }
  return rep;
}

}  // namespace rsfan::pring
