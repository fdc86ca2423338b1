#include "lrst/components.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrst {

bool Component::contains(int v) const { return std::binary_search(members.begin(), members.end(), v); }

std::vector<Component> maximal_components(const Instance& inst, const Embedding& emb, Axis axis) {
  const int n = inst.size();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Component> out;

  for (int start = 0; start < n; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    Component c;
    c.axis = axis;
    c.coord = coordinate(emb[start], axis);
    const int id = static_cast<int>(out.size());
    std::vector<int> stack{start};
    label[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      c.members.push_back(v);
      for (int w : inst.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] < 0 && coordinate(emb[w], axis) == c.coord) {
          label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());

    for (int v : c.members) {
      if (inst.is_terminal(v)) c.terminal_free = false;
      for (int w : inst.neighbors(v)) {
        const Length wc = coordinate(emb[w], axis);
        if (wc < c.coord) c.gamma_lt.push_back(w);
        if (wc > c.coord) c.gamma_gt.push_back(w);
      }
    }
    std::sort(c.gamma_lt.begin(), c.gamma_lt.end());
    std::sort(c.gamma_gt.begin(), c.gamma_gt.end());

    if (!c.contains(inst.root())) {
      // The member closest to the root is the unique one whose parent is outside.
      for (int v : c.members) {
        int p = inst.parent(v);
        if (!c.contains(p)) {
          c.predecessor = p;
          c.sign = std::binary_search(c.gamma_lt.begin(), c.gamma_lt.end(), p) ? 1 : -1;
          break;
        }
      }
    }
    out.push_back(std::move(c));
  }

  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    if (a.coord != b.coord) return a.coord < b.coord;
    return a.members.front() < b.members.front();
  });
  return out;
}

Frontier component_frontier(const Component& c) {
  return Frontier{c.gamma_lt, c.gamma_gt, c.predecessor, c.sign};
}

std::vector<int> affected_terminals(const Instance& inst, const Component& c) {
  if (!c.terminal_free) throw std::invalid_argument("R(C) is defined only for terminal-free components");
  if (!c.predecessor) return {};
  const bool pred_low = *c.sign > 0;

  std::vector<int> out;
  for (int t : inst.terminals()) {
    // Walk up from t; the last vertex before entering C is the exit neighbor.
    int below = t;
    int v = inst.parent(t);
    while (v >= 0 && !c.contains(v)) {
      below = v;
      v = inst.parent(v);
    }
    if (v < 0) continue;  // path does not meet C
    const bool exit_low = std::binary_search(c.gamma_lt.begin(), c.gamma_lt.end(), below);
    const bool exit_high = std::binary_search(c.gamma_gt.begin(), c.gamma_gt.end(), below);
    if ((pred_low && exit_low) || (!pred_low && exit_high)) out.push_back(t);
  }
  return out;
}

Embedding move_component(const Instance& inst, const Embedding& emb, const Component& c, Length delta) {
  Embedding out = emb;
  for (int v : c.members) {
    if (!inst.is_terminal(v)) out[v] = shifted(out[v], c.axis, delta);
  }
  return out;
}

bool preserves_local_order(const Instance& inst, const Embedding& before, const Embedding& after) {
  for (const auto& [u, w] : inst.edges()) {
    for (Axis axis : {Axis::X, Axis::Y}) {
      const Length bu = coordinate(before[u], axis);
      const Length bw = coordinate(before[w], axis);
      const Length au = coordinate(after[u], axis);
      const Length aw = coordinate(after[w], axis);
      if (bu <= bw && !(au <= aw)) return false;
      if (bw <= bu && !(aw <= au)) return false;
    }
  }
  return true;
}

Embedding apply_moves(const Instance& inst, const Embedding& emb, const std::vector<ComponentMove>& moves) {
  Embedding out = emb;
  for (const auto& m : moves) {
    for (int v : m.component->members) {
      if (!inst.is_terminal(v)) out[v] = shifted(out[v], m.component->axis, m.delta);
    }
  }
  return out;
}

std::optional<std::string> move_precondition_violation(const Instance& inst, const Embedding& emb,
                                                       const std::vector<ComponentMove>& moves) {
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Component& a = *moves[i].component;
    if (moves[i].delta != 0 && !a.terminal_free) {
      return "component at " + std::string(axis_name(a.axis)) + "=" + std::to_string(a.coord) +
             " contains a terminal and cannot move";
    }
    for (std::size_t j = i + 1; j < moves.size(); ++j) {
      const Component& b = *moves[j].component;
      if (a.axis != b.axis) continue;
      for (int v : a.members) {
        if (b.contains(v)) return "components overlap at vertex '" + inst.id(v) + "'";
      }
    }
  }
  if (!preserves_local_order(inst, emb, apply_moves(inst, emb, moves))) {
    return "the move does not preserve the local order";
  }
  return std::nullopt;
}

std::optional<MovePrediction> predict_deltas(const Instance& inst, const Embedding& emb,
                                             const std::vector<ComponentMove>& moves) {
  if (move_precondition_violation(inst, emb, moves)) return std::nullopt;
  MovePrediction pred;
  pred.path_delta.assign(static_cast<std::size_t>(inst.size()), 0);
  for (const auto& m : moves) {
    if (m.delta == 0) continue;
    const Component& c = *m.component;
    pred.cost_delta += m.delta * (static_cast<Length>(c.gamma_lt.size()) - static_cast<Length>(c.gamma_gt.size()));
    if (!c.sign) continue;
    for (int t : affected_terminals(inst, c)) {
      pred.path_delta[static_cast<std::size_t>(t)] += 2 * *c.sign * m.delta;
    }
  }
  return pred;
}

bool check_laminar(const std::vector<std::vector<int>>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto& a = family[i];
      const auto& b = family[j];
      if (std::includes(a.begin(), a.end(), b.begin(), b.end())) continue;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty()) return false;
    }
  }
  return true;
}

}  // namespace lrst
