#pragma once

// Constant-coordinate components of an embedded tree and how moving them
// changes the total length and the root-terminal path lengths.

#include <optional>
#include <string>
#include <vector>

#include "lrst/model.hpp"

namespace lrst {

/// A connected set of vertices sharing one axis coordinate.
///
/// Components produced by maximal_components() are maximal: no neighbor
/// outside `members` has coordinate `coord`.
struct Component {
  Axis axis = Axis::X;
  std::vector<int> members;   // ascending vertex index (= ascending id)
  Length coord = 0;
  std::vector<int> gamma_lt;  // outside neighbors with smaller coordinate
  std::vector<int> gamma_gt;  // outside neighbors with larger coordinate
  // Empty when the component contains the root.
  std::optional<int> predecessor;
  // +1 if the predecessor is in gamma_lt, -1 if in gamma_gt; empty with the root.
  std::optional<int> sign;
  bool terminal_free = true;

  bool contains(int v) const;
};

/// Partition of all vertices into maximal components along `axis`, sorted by
/// (coord, smallest member id).
std::vector<Component> maximal_components(const Instance& inst, const Embedding& emb, Axis axis);

struct Frontier {
  const std::vector<int>& gamma_lt;
  const std::vector<int>& gamma_gt;
  std::optional<int> predecessor;
  std::optional<int> sign;
};

Frontier component_frontier(const Component& c);

/// R(C): terminals whose root path meets C and enters and leaves it on the
/// same side. Throws std::invalid_argument unless C is terminal-free.
std::vector<int> affected_terminals(const Instance& inst, const Component& c);

/// Translates the non-terminal members of `c` by `delta` along its axis.
Embedding move_component(const Instance& inst, const Embedding& emb, const Component& c, Length delta);

/// True iff for every edge, the coordinate order of its endpoints under
/// `before` (per axis, with ties) is kept by `after`.
bool preserves_local_order(const Instance& inst, const Embedding& before, const Embedding& after);

struct ComponentMove {
  const Component* component;
  Length delta;
};

struct MovePrediction {
  Length cost_delta = 0;
  // Indexed by vertex; nonzero only for terminals.
  std::vector<Length> path_delta;
};

/// Describes why a simultaneous move is outside the exact-prediction
/// premises, or nullopt if the prediction applies. Premises: components of
/// one axis are pairwise disjoint, components carrying a terminal do not
/// move, and the moved embedding preserves the local order.
std::optional<std::string> move_precondition_violation(const Instance& inst, const Embedding& emb,
                                                       const std::vector<ComponentMove>& moves);

/// Applies all moves simultaneously.
Embedding apply_moves(const Instance& inst, const Embedding& emb, const std::vector<ComponentMove>& moves);

/// Predicted change of cost and of every root-terminal path length, or
/// nullopt when move_precondition_violation() reports a problem.
std::optional<MovePrediction> predict_deltas(const Instance& inst, const Embedding& emb,
                                             const std::vector<ComponentMove>& moves);

/// True iff every two sets are nested or disjoint. Sets must be sorted.
bool check_laminar(const std::vector<std::vector<int>>& family);

}  // namespace lrst
