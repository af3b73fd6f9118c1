// Timing comparison of the enumeration cores: naive reference loops vs the
// mask kernels, serial and parallel.
#include <chrono>
#include <cstdio>
#include <string>

#include "rsfan/examples.hpp"
#include "rsfan/kernels.hpp"

using namespace rsfan;
using h_clock = std::chrono::high_resolution_clock;

namespace {

template <typename Fn>
double time_ms(Fn&& fn, int reps = 3) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = h_clock::now();
    fn();
    auto t1 = h_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* what, double ref, double serial, double par) {
  std::printf("%-28s %10.2f %10.2f %10.2f %8.1fx %8.1fx\n", what, ref, serial, par,
              ref / (serial > 0 ? serial : 1e-9), ref / (par > 0 ? par : 1e-9));
}

}  // namespace

int main() {
  std::printf("%-28s %10s %10s %10s %8s %8s\n", "kernel", "ref ms", "serial ms", "omp ms", "vs ref",
              "vs ref");

  {
    FiniteTS g = examples::f2();
    CharSet x = enumerate_characters(g);
    Mask all = (Mask{1} << x.size()) - 1;
    DTable d, dt;
    double ref = time_ms([&] { ref::induced_tables(g, x, all, d, dt); });
    double ser = time_ms([&] { kernels::induced_tables(g, x, all, d, dt, false); });
    double par = time_ms([&] { kernels::induced_tables(g, x, all, d, dt, true); });
    row("induced tables, F2", ref, ser, par);

    RSModel m = induce_d(g, x, all, false);
    ref = time_ms([&] { (void)ref::rs3_violation(g, m.Dt); });
    ser = time_ms([&] { (void)kernels::rs3_violation(g, m.Dt, false); });
    par = time_ms([&] { (void)kernels::rs3_violation(g, m.Dt, true); });
    row("strong associativity, F2", ref, ser, par);

    std::uint64_t n1 = 0, n2 = 0;
    ref = time_ms([&] { (void)ref::proper_qfan_subset(g, x, &n1); });
    ser = time_ms([&] { (void)kernels::proper_qfan_subset(g, x, &n2, false); });
    par = time_ms([&] { (void)kernels::proper_qfan_subset(g, x, &n2, true); });
    row("density subset scan, F2", ref, ser, par);
    std::printf("  subsets examined: %llu (ref) / %llu (kernel)\n",
                static_cast<unsigned long long>(n1), static_cast<unsigned long long>(n2));
  }

  {
    FiniteTS g = examples::free3();
    CharSet x = enumerate_characters(g);
    Mask all = (Mask{1} << x.size()) - 1;
    DTable d, dt;
    double ref = time_ms([&] { ref::induced_tables(g, x, all, d, dt); }, 1);
    double ser = time_ms([&] { kernels::induced_tables(g, x, all, d, dt, false); });
    double par = time_ms([&] { kernels::induced_tables(g, x, all, d, dt, true); });
    row("induced tables, free3", ref, ser, par);

    RSModel m = induce_d(g, x, all, false);
    ref = time_ms([&] { (void)ref::rs3_violation(g, m.Dt); }, 1);
    ser = time_ms([&] { (void)kernels::rs3_violation(g, m.Dt, false); });
    par = time_ms([&] { (void)kernels::rs3_violation(g, m.Dt, true); });
    row("strong associativity, free3", ref, ser, par);
  }
  return 0;
}
