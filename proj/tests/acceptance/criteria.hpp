#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace acceptance {

struct Outcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// filter: empty or "acceptance" runs everything; otherwise a comma list of ids.
std::vector<Outcome> run_all(const std::string& filter, std::uint64_t seed = 20261015);

}  // namespace acceptance
