#pragma once

// Budgeted tree dynamic program: the best simultaneous displacement of all
// Steiner points by {-s, 0, +s}^2 under the length restrictions, and the
// local search that repeats it until no round improves.

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lrst/model.hpp"

namespace lrst {

/// Topology, terminal positions and limits in force, and the step size.
///
/// `view` may differ from the user's instance in terminal positions and
/// limits (the rounded instances of the strict scaling mode).
struct EvalContext {
  Instance view;
  Length step = 1;  // half-units, a power of two
};

/// The nine displacements {-s,0,+s}^2, zero first, then lexicographic.
/// Index 0 is (0,0); ties in the DP go to the lower index.
std::array<HalfPoint, 9> displacements(Length step);

/// Memoized gamma(v, delta, lambda) over a base embedding.
///
/// gamma is the minimum length of the subtree of v when v sits at
/// base(v) + delta, every subtree vertex is displaced within {-s,0,+s}^2,
/// terminals stay put, and every terminal t below v satisfies
/// dist(v, t) <= l_t - lambda. lambda is the root-to-v length already used.
class DpContext {
 public:
  /// Throws std::invalid_argument if `base` does not pin the view's terminals.
  DpContext(const EvalContext& eval, Embedding base);

  /// kInfinity when infeasible. Throws std::invalid_argument if `delta` is
  /// not in {-s,0,+s}^2.
  Length gamma(int v, HalfPoint delta, Length lambda);

  /// Optimal embedding for gamma(root, (0,0), 0) by argmin backtracking.
  /// Returns nullopt when that value is infinite.
  std::optional<Embedding> reconstruct();

  /// Number of distinct lambda values memoized for (v, delta).
  std::size_t lambda_count(int v, HalfPoint delta) const;
  std::size_t memo_size() const;

 private:
  Length gamma_at(int v, int d, Length lambda);
  int displacement_index(HalfPoint delta) const;

  EvalContext eval_;
  Embedding base_;
  std::array<HalfPoint, 9> moves_;
  std::vector<std::array<std::unordered_map<Length, Length>, 9>> memo_;
};

struct RoundResult {
  Embedding embedding;
  Length cost = 0;
};

/// One DP round from `emb`. Throws std::invalid_argument if `emb` is not a
/// feasible embedding of eval.view.
RoundResult improve_round(const EvalContext& eval, const Embedding& emb);

struct SearchResult {
  Embedding embedding;
  Length cost = 0;
  int rounds = 0;  // DP rounds run, the final non-improving one included
};

/// Repeats improve_round while the cost strictly decreases.
SearchResult local_search(const EvalContext& eval, Embedding emb, std::optional<int> max_rounds = std::nullopt);

}  // namespace lrst
