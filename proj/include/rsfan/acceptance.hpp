#ifndef RSFAN_ACCEPTANCE_HPP
#define RSFAN_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rsfan {

struct AcceptanceRow {
  std::string id;
  std::string label;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  std::string data_dir;  // directory holding golden/ (defaults to the build-time path)
  std::uint64_t seed = 20170301;
  int random_presentations = 40;
  int random_subsets = 120;
  bool parallel = true;
};

// Runs the whole verification battery and returns one row per criterion.
std::vector<AcceptanceRow> run_acceptance(const AcceptanceOptions& opts = {});

std::string format_acceptance(const std::vector<AcceptanceRow>& rows);

}  // namespace rsfan

#endif
