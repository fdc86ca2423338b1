#pragma once

// Scaling solver: solves the instance level by level with steps 2^k
// half-units, k = m..0, warm-starting each level from the previous one.

#include <optional>
#include <string_view>
#include <vector>

#include "lrst/dp.hpp"
#include "lrst/model.hpp"

namespace lrst {

enum class Mode {
  // Level k solves the rounded instance I_k exactly (terminals snapped to
  // the 2^k grid toward the root, limits rounded down).
  kStrict,
  // Every level uses the original positions and limits; coarse levels only
  // restrict the Steiner points to a coarser grid.
  kPractical,
};

std::string_view mode_name(Mode mode);
/// Accepts "strict" and "practical"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view name);

struct SolveConfig {
  Mode mode = Mode::kPractical;
  std::optional<int> max_rounds_per_level;
  int repair_cap = 16;
  bool emit_level_trace = true;
};

struct LevelTrace {
  int k = 0;
  Length step = 0;            // half-units
  int dp_rounds = 0;
  int repair_iterations = 0;
  bool repair_fallback = false;
  Length start_cost = 0;      // after warm start and repair
  Length cost_after = 0;
};

struct SolveReport {
  Embedding final_embedding;
  Length cost = 0;
  PathLengths path_lengths;
  bool feasible = false;
  std::vector<LevelTrace> levels;
  int m = 0;
  Length start_cost = 0;  // cost of the trivial embedding
  Mode mode = Mode::kPractical;
};

/// The rounded instance I_k: each terminal truncated toward the root onto
/// the 2^k grid (real units), each finite limit reduced by the distance moved
/// and rounded down to a multiple of 2^k. Throws InfeasibleInstance if `inst`
/// is infeasible.
///
/// With terminals inside root paths a rounded limit can fall below the
/// rounded tree's shortest path; such limits are raised to that length so
/// that I_k stays feasible.
Instance round_instance(const Instance& inst, int k);

/// Smallest m >= 0 with |x|, |y| < 2^m for every terminal relative to the root.
int grid_exponent(const Instance& inst);

struct RepairResult {
  Embedding embedding;
  int iterations = 0;
  bool fell_back = false;
};

/// Restores feasibility by moving terminal-free components toward their
/// predecessors by the view's step, one move at a time. Falls back to the
/// trivial embedding when stuck or after `repair_cap` sweeps.
RepairResult repair(const EvalContext& view, Embedding emb, int repair_cap = 16);

/// Re-pins the terminals of `prev` to the view's positions and repairs if needed.
RepairResult warm_start(const EvalContext& view, const Embedding& prev, int repair_cap = 16);

/// Throws InfeasibleInstance when no feasible embedding exists.
SolveReport solve(const Instance& inst, const SolveConfig& config = {});

}  // namespace lrst
