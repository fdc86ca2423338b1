#include "lrst/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lrst {

std::string_view axis_name(Axis axis) { return axis == Axis::X ? "x" : "y"; }

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmpty: return "empty";
    case ViolationKind::kDuplicateVertex: return "duplicate_vertex";
    case ViolationKind::kUnknownVertex: return "unknown_vertex";
    case ViolationKind::kSelfLoop: return "self_loop";
    case ViolationKind::kDuplicateEdge: return "duplicate_edge";
    case ViolationKind::kEdgeCount: return "edge_count";
    case ViolationKind::kDisconnected: return "disconnected";
    case ViolationKind::kRootNotTerminal: return "root_not_terminal";
    case ViolationKind::kOddCoordinate: return "odd_coordinate";
    case ViolationKind::kOddLimit: return "odd_limit";
    case ViolationKind::kNegativeLimit: return "negative_limit";
    case ViolationKind::kCoordinateRange: return "coordinate_range";
  }
  return "unknown";
}

namespace {

std::string edge_label(const VertexId& a, const VertexId& b) { return a + "-" + b; }

std::string summarize(const ValidationReport& report) {
  std::string msg = "invalid instance";
  for (const auto& v : report.violations) {
    msg += "; ";
    msg += violation_kind_name(v.kind);
    msg += " at ";
    msg += v.where;
    msg += ": ";
    msg += v.message;
  }
  return msg;
}

bool coordinate_in_range(Length v) { return v > -kCoordinateLimit && v < kCoordinateLimit; }

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

ValidationReport validate_instance(const InstanceData& data) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string where, std::string message) {
    report.violations.push_back({kind, std::move(where), std::move(message)});
  };

  if (data.vertices.empty()) add(ViolationKind::kEmpty, "", "instance has no vertices");

  std::unordered_map<std::string, int> index;
  for (const auto& id : data.vertices) {
    if (!index.emplace(id, static_cast<int>(index.size())).second) {
      add(ViolationKind::kDuplicateVertex, id, "vertex listed more than once");
    }
  }

  if (!data.vertices.empty()) {
    if (!index.contains(data.root)) {
      add(ViolationKind::kUnknownVertex, data.root, "root is not a vertex");
    } else if (!data.terminals.contains(data.root)) {
      add(ViolationKind::kRootNotTerminal, data.root, "root must be a terminal");
    }
  }

  for (const auto& [id, term] : data.terminals) {
    if (!index.contains(id)) add(ViolationKind::kUnknownVertex, id, "terminal is not a vertex");
    if (!coordinate_in_range(term.position.x2) || !coordinate_in_range(term.position.y2)) {
      add(ViolationKind::kCoordinateRange, id, "coordinate outside the 62-bit range");
    } else if (term.position.x2 % 2 != 0 || term.position.y2 % 2 != 0) {
      add(ViolationKind::kOddCoordinate, id, "terminal position is not integral");
    }
    if (!is_infinite(term.limit)) {
      if (term.limit < 0) {
        add(ViolationKind::kNegativeLimit, id, "length restriction is negative");
      } else if (term.limit % 2 != 0) {
        add(ViolationKind::kOddLimit, id, "length restriction is not integral");
      }
    }
  }

  // Union-find over the edges that reference known vertices.
  std::vector<int> uf(index.size());
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int a) {
    while (uf[static_cast<std::size_t>(a)] != a) {
      uf[static_cast<std::size_t>(a)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(a)])];
      a = uf[static_cast<std::size_t>(a)];
    }
    return a;
  };
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : data.edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      add(ViolationKind::kUnknownVertex, edge_label(a, b), "edge references an unknown vertex");
      continue;
    }
    if (ia->second == ib->second) {
      add(ViolationKind::kSelfLoop, edge_label(a, b), "edge is a self-loop");
      continue;
    }
    auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second) {
      add(ViolationKind::kDuplicateEdge, edge_label(a, b), "edge listed more than once");
      continue;
    }
    int ra = find(ia->second);
    int rb = find(ib->second);
    if (ra == rb) {
      add(ViolationKind::kDisconnected, edge_label(a, b), "edge closes a cycle");
    } else {
      uf[static_cast<std::size_t>(ra)] = rb;
    }
  }
  if (!index.empty() && data.edges.size() + 1 != index.size()) {
    add(ViolationKind::kEdgeCount, "",
        "a tree on " + std::to_string(index.size()) + " vertices needs " +
            std::to_string(index.size() - 1) + " edges, found " + std::to_string(data.edges.size()));
  }
  if (!index.empty()) {
    std::set<int> roots;
    for (int v = 0; v < static_cast<int>(index.size()); ++v) roots.insert(find(v));
    if (roots.size() > 1) {
      add(ViolationKind::kDisconnected, "", "edges leave " + std::to_string(roots.size()) + " components");
    }
  }

  report.ok = report.violations.empty();
  if (report.ok) {
    // Shortest achievable root distance: the path must visit every terminal
    // on it, so it is the sum of distances between consecutive terminals.
    std::vector<std::vector<int>> adj(index.size());
    for (const auto& [a, b] : data.edges) {
      adj[static_cast<std::size_t>(index.at(a))].push_back(index.at(b));
      adj[static_cast<std::size_t>(index.at(b))].push_back(index.at(a));
    }
    std::vector<const TerminalData*> term(index.size(), nullptr);
    for (const auto& [id, t] : data.terminals) term[static_cast<std::size_t>(index.at(id))] = &t;
    struct Visit {
      int v;
      int parent;
      HalfPoint anchor;
      Length shortest;
    };
    const int r = index.at(data.root);
    std::vector<Visit> stack{{r, -1, term[static_cast<std::size_t>(r)]->position, 0}};
    report.feasible = true;
    while (!stack.empty()) {
      Visit cur = stack.back();
      stack.pop_back();
      if (const TerminalData* t = term[static_cast<std::size_t>(cur.v)]) {
        cur.shortest += l1_distance(cur.anchor, t->position);
        cur.anchor = t->position;
        if (!is_infinite(t->limit) && cur.shortest > t->limit) report.feasible = false;
      }
      for (int w : adj[static_cast<std::size_t>(cur.v)]) {
        if (w != cur.parent) stack.push_back({w, cur.v, cur.anchor, cur.shortest});
      }
    }
  }
  return report;
}

Instance Instance::build(InstanceData data) {
  ValidationReport report = validate_instance(data);
  if (!report.ok) throw ValidationError(std::move(report));

  Instance inst;
  inst.ids_ = data.vertices;
  std::sort(inst.ids_.begin(), inst.ids_.end());
  const auto n = inst.ids_.size();
  for (std::size_t i = 0; i < n; ++i) inst.index_.emplace(inst.ids_[i], static_cast<int>(i));

  inst.root_ = inst.index_.at(data.root);
  inst.terminal_.assign(n, false);
  inst.limit_.assign(n, kInfinity);
  const HalfPoint root_pos = data.terminals.at(data.root).position;
  inst.position_.assign(n, root_pos);
  for (const auto& [id, term] : data.terminals) {
    const auto v = static_cast<std::size_t>(inst.index_.at(id));
    inst.terminal_[v] = true;
    inst.position_[v] = term.position;
    inst.limit_[v] = is_infinite(term.limit) ? kInfinity : term.limit;
  }

  inst.adjacency_.assign(n, {});
  for (const auto& [a, b] : data.edges) {
    int u = inst.index_.at(a);
    int w = inst.index_.at(b);
    inst.adjacency_[static_cast<std::size_t>(u)].push_back(w);
    inst.adjacency_[static_cast<std::size_t>(w)].push_back(u);
    inst.edges_.emplace_back(std::min(u, w), std::max(u, w));
  }
  std::sort(inst.edges_.begin(), inst.edges_.end());
  for (auto& adj : inst.adjacency_) std::sort(adj.begin(), adj.end());

  // Orient away from the root with an explicit stack (preorder, sorted children).
  inst.parent_.assign(n, -1);
  inst.children_.assign(n, {});
  inst.preorder_.reserve(n);
  std::vector<int> stack{inst.root_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    inst.preorder_.push_back(v);
    const auto& adj = inst.adjacency_[static_cast<std::size_t>(v)];
    for (int w : adj) {
      if (w == inst.parent_[static_cast<std::size_t>(v)]) continue;
      inst.parent_[static_cast<std::size_t>(w)] = v;
      inst.children_[static_cast<std::size_t>(v)].push_back(w);
    }
    for (auto it = adj.rbegin(); it != adj.rend(); ++it) {
      if (*it != inst.parent_[static_cast<std::size_t>(v)]) stack.push_back(*it);
    }
  }

  for (int v = 0; v < static_cast<int>(n); ++v) {
    (inst.terminal_[static_cast<std::size_t>(v)] ? inst.terminals_ : inst.steiner_).push_back(v);
  }

  inst.anchor_.assign(n, root_pos);
  inst.shortest_.assign(n, 0);
  for (int v : inst.preorder_) {
    const auto i = static_cast<std::size_t>(v);
    const int p = inst.parent_[i];
    if (p < 0) continue;
    const auto pi = static_cast<std::size_t>(p);
    if (inst.terminal_[i]) {
      inst.anchor_[i] = inst.position_[i];
      inst.shortest_[i] = inst.shortest_[pi] + l1_distance(inst.anchor_[pi], inst.position_[i]);
    } else {
      inst.anchor_[i] = inst.anchor_[pi];
      inst.shortest_[i] = inst.shortest_[pi];
    }
  }

  inst.subtree_min_limit_ = inst.limit_;
  for (auto it = inst.preorder_.rbegin(); it != inst.preorder_.rend(); ++it) {
    int p = inst.parent_[static_cast<std::size_t>(*it)];
    if (p >= 0) {
      auto& slot = inst.subtree_min_limit_[static_cast<std::size_t>(p)];
      slot = std::min(slot, inst.subtree_min_limit_[static_cast<std::size_t>(*it)]);
    }
  }

  inst.data_ = std::move(data);
  return inst;
}

int Instance::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw std::out_of_range("unknown vertex id '" + std::string(id) + "'");
  return it->second;
}

bool Instance::contains(std::string_view id) const { return index_.contains(std::string(id)); }

bool Instance::is_feasible() const {
  return std::all_of(terminals_.begin(), terminals_.end(),
                     [&](int t) { return is_infinite(limit(t)) || shortest_root_distance(t) <= limit(t); });
}

Embedding trivial_embedding(const Instance& inst) {
  Embedding emb;
  emb.positions.resize(static_cast<std::size_t>(inst.size()));
  for (int v = 0; v < inst.size(); ++v) emb[v] = inst.anchor_position(v);
  return emb;
}

void check_embedding(const Instance& inst, const Embedding& emb) {
  if (emb.positions.size() != static_cast<std::size_t>(inst.size())) {
    throw std::invalid_argument("embedding has " + std::to_string(emb.positions.size()) +
                                " positions, instance has " + std::to_string(inst.size()) + " vertices");
  }
  for (int v = 0; v < inst.size(); ++v) {
    if (!coordinate_in_range(emb[v].x2) || !coordinate_in_range(emb[v].y2)) {
      throw std::invalid_argument("position of '" + inst.id(v) + "' is out of range");
    }
  }
  for (int t : inst.terminals()) {
    if (emb[t] != inst.terminal_position(t)) {
      throw std::invalid_argument("terminal '" + inst.id(t) + "' is not at its given position");
    }
  }
}

Length cost(const Instance& inst, const Embedding& emb) {
  Length total = 0;
  for (const auto& [u, w] : inst.edges()) total += l1_distance(emb[u], emb[w]);
  return total;
}

std::vector<Length> root_distances(const Instance& inst, const Embedding& emb) {
  std::vector<Length> d(static_cast<std::size_t>(inst.size()), 0);
  for (int v : inst.preorder()) {
    int p = inst.parent(v);
    if (p >= 0) d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(p)] + l1_distance(emb[v], emb[p]);
  }
  return d;
}

PathLengths path_lengths(const Instance& inst, const Embedding& emb) {
  PathLengths out;
  auto d = root_distances(inst, emb);
  for (int t : inst.terminals()) {
    Length dt = d[static_cast<std::size_t>(t)];
    out.by_terminal.emplace(inst.id(t), dt);
    if (dt > inst.limit(t)) out.is_feasible = false;
  }
  return out;
}

bool is_feasible(const Instance& inst, const Embedding& emb) {
  auto d = root_distances(inst, emb);
  return std::all_of(inst.terminals().begin(), inst.terminals().end(),
                     [&](int t) { return d[static_cast<std::size_t>(t)] <= inst.limit(t); });
}

Length limit_excess(const Instance& inst, const Embedding& emb) {
  auto d = root_distances(inst, emb);
  Length excess = 0;
  for (int t : inst.terminals()) {
    if (!is_infinite(inst.limit(t))) excess += std::max<Length>(0, d[static_cast<std::size_t>(t)] - inst.limit(t));
  }
  return excess;
}

std::vector<Length> extended_restrictions(const Instance& inst, const Embedding& emb) {
  std::vector<Length> ext(static_cast<std::size_t>(inst.size()), kInfinity);
  const auto pre = inst.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    int v = *it;
    Length best = inst.is_terminal(v) ? inst.limit(v) : kInfinity;
    for (int w : inst.children(v)) {
      best = std::min(best, saturating_sub(ext[static_cast<std::size_t>(w)], l1_distance(emb[v], emb[w])));
    }
    ext[static_cast<std::size_t>(v)] = best;
  }
  return ext;
}

BoundingBox terminal_bounding_box(const Instance& inst) {
  BoundingBox box{inst.root_position(), inst.root_position()};
  for (int t : inst.terminals()) {
    HalfPoint p = inst.terminal_position(t);
    box.lo = {std::min(box.lo.x2, p.x2), std::min(box.lo.y2, p.y2)};
    box.hi = {std::max(box.hi.x2, p.x2), std::max(box.hi.y2, p.y2)};
  }
  return box;
}

Embedding clamp_to_bbox(const Instance& inst, const Embedding& emb) {
  const BoundingBox box = terminal_bounding_box(inst);
  Embedding out = emb;
  for (int s : inst.steiner_points()) {
    out[s] = {std::clamp(emb[s].x2, box.lo.x2, box.hi.x2), std::clamp(emb[s].y2, box.lo.y2, box.hi.y2)};
  }
  return out;
}

}  // namespace lrst
