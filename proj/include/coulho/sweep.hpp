#pragma once

#include <string>
#include <vector>

#include "coulho/variational.hpp"

namespace coulho {

struct SweepConfig {
  double gamma = 0.0;
  double a_min = -8.0;
  double a_max = 8.0;
  int steps = 161;
  int levels = 5;
  int n_max = 6;
  int basis_size = kDefaultBasisSize;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  void validate() const;
};

inline constexpr double kSweepConvergenceTolerance = 1e-6;

struct SweepRow {
  double a = 0.0;
  std::vector<double> W;  // levels entries, NaN when unavailable
  int usable_N = 0;
  double max_convergence = 0.0;  // worst estimate over the displayed levels
  std::string status;            // "ok", "shrunk", "unconverged", "shrunk;unconverged", "shortfall"
};

struct SweepPoint {
  int n = 0;
  int k = 0;
  double a_root = 0.0;
  double W = 0.0;
  int matched_level = 0;
  double W_variational = 0.0;
  double mismatch = 0.0;
};

struct SweepTable {
  SweepConfig config;
  std::vector<SweepRow> rows;      // ascending in a
  std::vector<SweepPoint> points;  // ordered by n, then k
};

/// Evenly spaced grid a_min .. a_max (both included).
std::vector<double> sweep_grid(const SweepConfig& config);

/// Grid points are solved concurrently; assembly order is fixed.
SweepTable compute_sweep(const SweepConfig& config);

}  // namespace coulho
