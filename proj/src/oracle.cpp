#include "lrst/oracle.hpp"

#include <algorithm>
#include <string>

namespace lrst {

std::vector<HalfPoint> enumerate_grid(const Instance& inst, Length unit) {
  if (unit < 1) throw std::invalid_argument("grid unit must be at least one half-unit");
  const BoundingBox box = terminal_bounding_box(inst);
  auto first_multiple = [unit](Length lo) {
    Length q = lo / unit;
    if (q * unit < lo) ++q;
    return q * unit;
  };
  std::vector<HalfPoint> out;
  for (Length x = first_multiple(box.lo.x2); x <= box.hi.x2; x += unit) {
    for (Length y = first_multiple(box.lo.y2); y <= box.hi.y2; y += unit) out.push_back({x, y});
  }
  return out;
}

namespace {

// min over real q of sum |q - p|, which bounds any grid placement from below.
Length median_cost(std::vector<HalfPoint> pts) {
  if (pts.empty()) return 0;
  Length total = 0;
  for (Axis axis : {Axis::X, Axis::Y}) {
    std::vector<Length> c;
    for (auto p : pts) c.push_back(coordinate(p, axis));
    std::sort(c.begin(), c.end());
    const Length med = c[c.size() / 2];
    for (Length v : c) total += abs_length(v - med);
  }
  return total;
}

class Enumerator {
 public:
  Enumerator(const Instance& inst, const OracleOptions& options, std::vector<HalfPoint> grid)
      : inst_(inst), cuts_(options.exact_cuts), grid_(std::move(grid)) {
    const int n = inst.size();
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (int v : inst.preorder()) {
      if (!inst.is_terminal(v)) {
        rank[static_cast<std::size_t>(v)] = static_cast<int>(order_.size());
        order_.push_back(v);
      }
    }
    const std::size_t s = order_.size();
    earlier_.resize(s);
    attached_.resize(s);
    lb_suffix_.assign(s + 1, 0);

    for (std::size_t i = 0; i < s; ++i) {
      const int v = order_[i];
      std::vector<HalfPoint> fixed_nbrs;
      for (int w : inst.neighbors(v)) {
        if (inst.is_terminal(w)) {
          earlier_[i].push_back(w);
          fixed_nbrs.push_back(inst.terminal_position(w));
        } else if (rank[static_cast<std::size_t>(w)] < static_cast<int>(i)) {
          earlier_[i].push_back(w);
        }
      }
      lb_suffix_[i] = median_cost(std::move(fixed_nbrs));
      // Terminals hanging below v through terminal-only chains, parents first.
      std::vector<int> stack;
      for (auto it = inst.children(v).rbegin(); it != inst.children(v).rend(); ++it) {
        if (inst.is_terminal(*it)) stack.push_back(*it);
      }
      while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        attached_[i].push_back(t);
        for (auto it = inst.children(t).rbegin(); it != inst.children(t).rend(); ++it) {
          if (inst.is_terminal(*it)) stack.push_back(*it);
        }
      }
    }
    for (std::size_t i = s; i-- > 0;) lb_suffix_[i] += lb_suffix_[i + 1];

    pos_ = trivial_embedding(inst);
    dist_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [u, w] : inst.edges()) {
      if (inst.is_terminal(u) && inst.is_terminal(w)) fixed_cost_ += l1_distance(pos_[u], pos_[w]);
    }
    // Terminals whose whole root path consists of terminals.
    for (int v : inst.preorder()) {
      const int p = inst.parent(v);
      if (p < 0) continue;
      if (!inst.is_terminal(v) || rank[static_cast<std::size_t>(p)] >= 0) continue;
      bool fixed_path = true;
      for (int a = p; a >= 0; a = inst.parent(a)) fixed_path = fixed_path && inst.is_terminal(a);
      if (!fixed_path) continue;
      dist_[static_cast<std::size_t>(v)] = dist_[static_cast<std::size_t>(p)] + l1_distance(pos_[v], pos_[p]);
      if (dist_[static_cast<std::size_t>(v)] > inst.limit(v)) prefix_feasible_ = false;
    }
  }

  std::size_t steiner_count() const { return order_.size(); }

  void run(Length incumbent) {
    best_ = incumbent;
    descend(0, fixed_cost_, prefix_feasible_);
  }

  bool found() const { return found_; }
  Length best() const { return best_; }
  const Embedding& best_embedding() const { return best_embedding_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  void descend(std::size_t i, Length partial, bool feasible) {
    if (i == order_.size()) {
      ++leaves_;
      if (!feasible) return;
      if (!found_ || partial < best_ || (partial == best_ && lex_less())) {
        found_ = true;
        best_ = partial;
        best_embedding_ = pos_;
      }
      return;
    }
    const int v = order_[i];
    const int p = inst_.parent(v);
    for (const HalfPoint q : grid_) {
      pos_[v] = q;
      Length c = partial;
      for (int w : earlier_[i]) c += l1_distance(q, pos_[w]);
      if (cuts_ && c + lb_suffix_[i + 1] > best_) continue;

      const Length dv = dist_[static_cast<std::size_t>(p)] + l1_distance(q, pos_[p]);
      dist_[static_cast<std::size_t>(v)] = dv;
      bool ok = feasible && dv <= inst_.subtree_min_limit(v);
      for (int t : attached_[i]) {
        const int tp = inst_.parent(t);
        const Length dt = dist_[static_cast<std::size_t>(tp)] + l1_distance(pos_[t], pos_[tp]);
        dist_[static_cast<std::size_t>(t)] = dt;
        ok = ok && dt <= inst_.limit(t);
      }
      if (cuts_ && !ok) continue;
      descend(i + 1, c, ok);
    }
    pos_[v] = inst_.root_position();
  }

  // Current placement vs incumbent, Steiner points in vertex-id order.
  bool lex_less() const {
    for (int s : inst_.steiner_points()) {
      if (pos_[s] != best_embedding_[s]) return pos_[s] < best_embedding_[s];
    }
    return false;
  }

  const Instance& inst_;
  bool cuts_;
  std::vector<HalfPoint> grid_;
  std::vector<int> order_;
  std::vector<std::vector<int>> earlier_;
  std::vector<std::vector<int>> attached_;
  std::vector<Length> lb_suffix_;
  Embedding pos_;
  std::vector<Length> dist_;
  Length fixed_cost_ = 0;
  bool prefix_feasible_ = true;

  bool found_ = false;
  Length best_ = kInfinity;
  Embedding best_embedding_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

OracleResult brute_force_optimum(const Instance& inst, const OracleOptions& options) {
  if (!inst.is_feasible()) throw InfeasibleInstance("oracle needs a feasible instance");
  std::vector<HalfPoint> grid = enumerate_grid(inst, options.unit);
  const std::uint64_t g = grid.size();
  const std::size_t steiner = inst.steiner_points().size();

  std::uint64_t placements = 1;
  for (std::size_t i = 0; i < steiner; ++i) {
    if (placements > options.budget.max_placements / g) {
      throw OracleBudgetExceeded(std::to_string(g) + "^" + std::to_string(steiner) +
                                 " placements exceed the budget of " +
                                 std::to_string(options.budget.max_placements));
    }
    placements *= g;
  }
  if (placements > options.budget.max_placements) {
    throw OracleBudgetExceeded("placements exceed the budget of " + std::to_string(options.budget.max_placements));
  }

  Enumerator en(inst, options, std::move(grid));
  // The trivial embedding is feasible; when it lies on the grid its cost is
  // a valid starting bound.
  Length incumbent = kInfinity;
  const HalfPoint r = inst.root_position();
  if (r.x2 % options.unit == 0 && r.y2 % options.unit == 0) {
    incumbent = cost(inst, trivial_embedding(inst));
  }
  en.run(incumbent);
  if (!en.found()) throw InfeasibleInstance("no feasible embedding on the grid");
  return OracleResult{en.best(), en.best_embedding(), en.leaves()};
}

}  // namespace lrst
