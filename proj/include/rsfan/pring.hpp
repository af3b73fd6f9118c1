#ifndef RSFAN_PRING_HPP
#define RSFAN_PRING_HPP

#include <boost/rational.hpp>
#include <functional>
#include <string>
#include <vector>

namespace rsfan::pring {

using Rat = boost::rational<long long>;

// a X + b in Q[X]/(X^2); rational coefficients keep every test exact.
struct DualNumber {
  Rat a{0}, b{0};

  friend DualNumber operator*(const DualNumber& u, const DualNumber& v) {
    return {u.a * v.b + v.a * u.b, u.b * v.b};
  }
  friend DualNumber operator+(const DualNumber& u, const DualNumber& v) { return {u.a + v.a, u.b + v.b}; }
  DualNumber operator-() const { return {-a, -b}; }
  DualNumber square() const { return *this * *this; }
  bool operator==(const DualNumber&) const = default;
};

std::string to_string(const DualNumber& v);  // "aX+b"

// A decidable membership rule named for reports.
struct PreorderSpec {
  std::string name;
  std::function<bool(const DualNumber&)> member;
};

// aX + b in T iff b > 0, or b = 0 and a >= 0.
PreorderSpec lex_preorder();
// Sums of squares of the ring itself, which work out to {b > 0} plus 0.
PreorderSpec sos_preorder();
// The closed half plane {b >= 0}: the prime-cone completion of the
// lexicographic rule, whose support is the whole nilpotent line.
PreorderSpec cone_preorder();
// A rule extended by finitely many extra members.
PreorderSpec with_extra(PreorderSpec base, std::vector<DualNumber> extra, const std::string& name);

// All aX + b with numerators in -range..range (integer coefficients).
std::vector<DualNumber> grid_sample(int range);

struct CheckResult {
  bool pass = true;
  std::string witness;
};

struct TotalPreorderReport {
  CheckResult squares;   // s^2 in T for every sample s
  CheckResult products;  // closed under product on the sample
  CheckResult sums;      // closed under sum on the sample
  CheckResult proper;    // -1 not in T
  CheckResult total;     // s in T or -s in T
  bool pass() const {
    return squares.pass && products.pass && sums.pass && proper.pass && total.pass;
  }
};

TotalPreorderReport verify_total_preorder(const PreorderSpec& t, const std::vector<DualNumber>& sample);

struct SupportReport {
  std::vector<DualNumber> support;  // T n -T restricted to the sample
  // for each witness pair (a, t): a^2 + t in support must force a in support
  std::vector<std::string> radical_violations;
};

SupportReport support(const PreorderSpec& t, const std::vector<DualNumber>& sample,
                      const std::vector<std::pair<DualNumber, DualNumber>>& radical_witnesses);

struct SixConditionReport {
  CheckResult contains_t;      // (1)
  CheckResult product_closed;  // (2)
  CheckResult no_minus_one;    // (3)
  CheckResult total;           // (4)
  CheckResult support_prime;   // (5)
  CheckResult support_convex;  // (6)
  CheckResult additive;        // the extra fan criterion
  bool pass_six() const {
    return contains_t.pass && product_closed.pass && no_minus_one.pass && total.pass &&
           support_prime.pass && support_convex.pass;
  }
};

SixConditionReport ts_char_subset_conditions(const PreorderSpec& s, const PreorderSpec& t,
                                             const std::vector<DualNumber>& sample);

// The integer-side checks used by the sums-of-squares example on Z.
struct IntPreorderReport {
  bool proper = false;
  bool total = false;
  std::string witness;
};

IntPreorderReport verify_int_preorder(const std::function<bool(long long)>& member, long long range);

}  // namespace rsfan::pring

#endif
