#pragma once

// Exhaustive ground truth for small instances: every assignment of Steiner
// points to half-unit grid points in the terminal bounding box.
//
// An optimal half-integral embedding always exists, and clamping into the
// bounding box never lengthens anything, so the minimum over this finite set
// is the global optimum.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lrst/model.hpp"

namespace lrst {

struct OracleBudget {
  // Upper bound on grid_size^(number of Steiner points).
  std::uint64_t max_placements = 10'000'000;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grid points that are multiples of `unit` inside the terminal bounding
/// box (inclusive), sorted by (x, y).
std::vector<HalfPoint> enumerate_grid(const Instance& inst, Length unit);

struct OracleOptions {
  OracleBudget budget;
  Length unit = 1;
  // Skip partial assignments that are already infeasible or already more
  // expensive than the incumbent. Both cuts are exact; turning them off
  // gives the literal product enumeration.
  bool exact_cuts = true;
};

struct OracleResult {
  Length cost = 0;
  Embedding embedding;
  std::uint64_t leaves_visited = 0;
};

/// Minimum-cost feasible embedding with Steiner points on the grid. Ties go
/// to the lexicographically smallest position vector in vertex-id order.
/// Throws OracleBudgetExceeded, or InfeasibleInstance when nothing on the
/// grid is feasible.
OracleResult brute_force_optimum(const Instance& inst, const OracleOptions& options = {});

}  // namespace lrst
