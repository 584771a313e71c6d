#pragma once

#include <string>
#include <vector>

#include "core/contraction.hpp"

namespace rdmkit {

struct VerifyConfig {
  std::vector<int> dims;
  int n_max = 4;
  int k_max = 3;
  std::vector<std::uint64_t> seeds;
  double tolerance = 1e-9;
};

struct VerifyCase {
  int dim = 0;
  int n = 0;
  int k = 0;
  Sector sector = Sector::Fermi;
  std::uint64_t seed = 0;
  double max_deviation = 0.0;  // worst pairwise entry deviation across paths
  bool ok = false;
  std::string error;
};

struct VerifyReport {
  std::vector<VerifyCase> cases;
  int failures = 0;
};

// Runs every (dim, n, k, sector, seed) cell of the grid through all three
// contraction paths and compares the unnormalized results entrywise.
// Parallel over cells; worker count from RDMKIT_THREADS (default: hardware).
VerifyReport run_verify(const VerifyConfig& config);

std::string verify_report_json(const VerifyConfig& config, const VerifyReport& report);

}  // namespace rdmkit
