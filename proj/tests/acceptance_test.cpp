// The acceptance gate: every criterion of the verification battery, one
// pass/fail line each. The same battery backs the `reproduce` subcommand.
#include <cstdio>

#include "rsfan/acceptance.hpp"

int main() {
  rsfan::AcceptanceOptions opts;
  auto rows = rsfan::run_acceptance(opts);
  std::fputs(rsfan::format_acceptance(rows).c_str(), stdout);
  for (const auto& r : rows)
    if (!r.pass) return 1;
  return 0;
}
