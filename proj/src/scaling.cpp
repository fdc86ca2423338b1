#include "lrst/scaling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lrst/components.hpp"

namespace lrst {

std::string_view mode_name(Mode mode) { return mode == Mode::kStrict ? "strict" : "practical"; }

Mode parse_mode(std::string_view name) {
  if (name == "strict") return Mode::kStrict;
  if (name == "practical") return Mode::kPractical;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected strict or practical)");
}

Instance round_instance(const Instance& inst, int k) {
  if (k < 0 || k > 59) throw std::invalid_argument("rounding exponent out of range");
  if (!inst.is_feasible()) throw InfeasibleInstance("cannot round an infeasible instance");
  // 2^k real units.
  const Length unit = Length{2} << k;
  const HalfPoint root = inst.root_position();
  InstanceData data = inst.data();
  for (auto& [id, term] : data.terminals) {
    const HalfPoint rel = term.position - root;
    // Integer division truncates toward zero, i.e. toward the root.
    const HalfPoint snapped = root + HalfPoint{unit * (rel.x2 / unit), unit * (rel.y2 / unit)};
    const Length moved = l1_distance(term.position, snapped);
    term.position = snapped;
    if (!is_infinite(term.limit)) term.limit = unit * ((term.limit - moved) / unit);
  }
  Instance rounded = Instance::build(std::move(data));
  if (rounded.is_feasible()) return rounded;
  // Only reachable when terminals sit inside root paths: snapping both ends
  // of a terminal-to-terminal hop can lengthen it. Lift such limits to the
  // shortest length the rounded tree allows.
  InstanceData lifted = rounded.data();
  for (auto& [id, term] : lifted.terminals) {
    if (!is_infinite(term.limit)) {
      term.limit = std::max(term.limit, rounded.shortest_root_distance(rounded.index_of(id)));
    }
  }
  return Instance::build(std::move(lifted));
}

int grid_exponent(const Instance& inst) {
  const HalfPoint root = inst.root_position();
  Length widest = 0;  // real units
  for (int t : inst.terminals()) {
    const HalfPoint rel = inst.terminal_position(t) - root;
    widest = std::max({widest, abs_length(rel.x2) / 2, abs_length(rel.y2) / 2});
  }
  int m = 0;
  while ((Length{1} << m) <= widest) ++m;
  return m;
}

namespace {

// Moves the Steiner vertices in `group` by `delta` along `axis`.
Embedding shift_group(const Instance& inst, const Embedding& emb, const std::vector<int>& group, Axis axis,
                      Length delta) {
  Embedding out = emb;
  for (int v : group) {
    if (!inst.is_terminal(v)) out[v] = shifted(out[v], axis, delta);
  }
  return out;
}

// One move that shortens the root-t path without raising the total excess.
// First choice: a maximal terminal-free component with t in R(C). Second
// choice: an all-Steiner run of t's path that the path enters and leaves on
// the same side.
std::optional<Embedding> shorten_path(const EvalContext& ctx, const Embedding& emb, int t, Length excess) {
  const Instance& inst = ctx.view;
  for (Axis axis : {Axis::X, Axis::Y}) {
    for (const Component& c : maximal_components(inst, emb, axis)) {
      if (!c.terminal_free || !c.sign) continue;
      const auto r = affected_terminals(inst, c);
      if (!std::binary_search(r.begin(), r.end(), t)) continue;
      Embedding moved = move_component(inst, emb, c, -*c.sign * ctx.step);
      if (limit_excess(inst, moved) < excess) return moved;
    }
  }

  std::vector<int> path;
  for (int v = t; v >= 0; v = inst.parent(v)) path.push_back(v);
  std::reverse(path.begin(), path.end());
  for (Axis axis : {Axis::X, Axis::Y}) {
    std::size_t i = 1;
    while (i + 1 < path.size()) {
      const Length c = coordinate(emb[path[i]], axis);
      std::size_t j = i;
      while (j + 1 < path.size() && coordinate(emb[path[j + 1]], axis) == c) ++j;
      if (j + 1 >= path.size()) break;
      const Length before = coordinate(emb[path[i - 1]], axis);
      const Length after = coordinate(emb[path[j + 1]], axis);
      const bool same_side = (before < c && after < c) || (before > c && after > c);
      const bool steiner_only = std::none_of(path.begin() + static_cast<std::ptrdiff_t>(i),
                                             path.begin() + static_cast<std::ptrdiff_t>(j + 1),
                                             [&](int v) { return inst.is_terminal(v); });
      if (same_side && steiner_only) {
        std::vector<int> run(path.begin() + static_cast<std::ptrdiff_t>(i),
                             path.begin() + static_cast<std::ptrdiff_t>(j + 1));
        Embedding moved = shift_group(inst, emb, run, axis, before < c ? -ctx.step : ctx.step);
        if (limit_excess(inst, moved) < excess) return moved;
      }
      i = j + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

RepairResult repair(const EvalContext& view, Embedding emb, int repair_cap) {
  if (repair_cap < 1) throw std::invalid_argument("repair_cap must be at least 1");
  const Instance& inst = view.view;
  check_embedding(inst, emb);
  RepairResult out{std::move(emb), 0, false};

  for (int sweep = 0; sweep < repair_cap; ++sweep) {
    Length excess = limit_excess(inst, out.embedding);
    if (excess == 0) return out;
    bool progressed = false;
    for (int t : inst.terminals()) {
      if (root_distances(inst, out.embedding)[static_cast<std::size_t>(t)] <= inst.limit(t)) continue;
      auto moved = shorten_path(view, out.embedding, t, excess);
      if (!moved) continue;
      out.embedding = std::move(*moved);
      excess = limit_excess(inst, out.embedding);
      ++out.iterations;
      progressed = true;
      if (excess == 0) return out;
    }
    if (!progressed) break;
  }
  if (limit_excess(inst, out.embedding) == 0) return out;
  out.embedding = trivial_embedding(inst);
  out.fell_back = true;
  return out;
}

RepairResult warm_start(const EvalContext& view, const Embedding& prev, int repair_cap) {
  const Instance& inst = view.view;
  if (prev.positions.size() != static_cast<std::size_t>(inst.size())) {
    throw std::invalid_argument("warm start embedding does not match the instance");
  }
  Embedding emb = prev;
  for (int t : inst.terminals()) emb[t] = inst.terminal_position(t);
  if (is_feasible(inst, emb)) return RepairResult{std::move(emb), 0, false};
  return repair(view, std::move(emb), repair_cap);
}

SolveReport solve(const Instance& inst, const SolveConfig& config) {
  if (!inst.is_feasible()) {
    throw InfeasibleInstance("instance '" + inst.name() +
                             "' is infeasible: some terminal is farther from the root than its limit");
  }
  SolveReport report;
  report.mode = config.mode;
  report.m = grid_exponent(inst);
  report.start_cost = cost(inst, trivial_embedding(inst));

  Embedding current;
  for (int k = report.m; k >= 0; --k) {
    EvalContext ctx{config.mode == Mode::kStrict ? round_instance(inst, k) : inst, Length{1} << k};
    LevelTrace level;
    level.k = k;
    level.step = ctx.step;
    if (k == report.m) {
      current = trivial_embedding(ctx.view);
    } else {
      RepairResult warm = warm_start(ctx, current, config.repair_cap);
      current = std::move(warm.embedding);
      level.repair_iterations = warm.iterations;
      level.repair_fallback = warm.fell_back;
    }
    level.start_cost = cost(ctx.view, current);
    SearchResult searched = local_search(ctx, std::move(current), config.max_rounds_per_level);
    current = std::move(searched.embedding);
    level.dp_rounds = searched.rounds;
    level.cost_after = searched.cost;
    if (config.emit_level_trace) report.levels.push_back(level);
  }

  report.final_embedding = std::move(current);
  report.cost = cost(inst, report.final_embedding);
  report.path_lengths = path_lengths(inst, report.final_embedding);
  report.feasible = report.path_lengths.is_feasible;
  return report;
}

}  // namespace lrst
