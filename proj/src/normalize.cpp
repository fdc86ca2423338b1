#include <set>

#include "lrst/model.hpp"

namespace lrst {

namespace {

using Adjacency = std::map<VertexId, std::set<VertexId>>;

VertexId fresh_id(const VertexId& base, const Adjacency& adj) {
  for (int k = 0;; ++k) {
    VertexId candidate = base + "~" + std::to_string(k);
    if (!adj.contains(candidate)) return candidate;
  }
}

void link(Adjacency& adj, const VertexId& a, const VertexId& b) {
  adj[a].insert(b);
  adj[b].insert(a);
}

void unlink(Adjacency& adj, const VertexId& a, const VertexId& b) {
  adj[a].erase(b);
  adj[b].erase(a);
}

}  // namespace

NormalizedTopology normalize_topology(const Instance& inst) {
  const InstanceData& data = inst.data();
  Adjacency adj;
  for (const auto& v : data.vertices) adj[v];
  for (const auto& [a, b] : data.edges) link(adj, a, b);
  auto is_terminal = [&](const VertexId& v) { return data.terminals.contains(v); };

  std::map<VertexId, VertexId> origin;
  std::map<VertexId, VertexId> contracted;

  // Steiner leaves carry no length; drop them (cascading).
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end();) {
      if (!is_terminal(it->first) && it->second.size() <= 1) {
        if (it->second.size() == 1) {
          VertexId anchor = *it->second.begin();
          adj[anchor].erase(it->first);
          contracted.emplace(it->first, anchor);
        }
        it = adj.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }

  // Degree-2 Steiner points are contracted into their smaller-id neighbor.
  for (auto it = adj.begin(); it != adj.end();) {
    if (!is_terminal(it->first) && it->second.size() == 2) {
      VertexId a = *it->second.begin();
      VertexId b = *std::next(it->second.begin());
      adj[a].erase(it->first);
      adj[b].erase(it->first);
      link(adj, a, b);
      contracted.emplace(it->first, a);
      it = adj.erase(it);
    } else {
      ++it;
    }
  }

  for (const auto& [v, nbrs] : adj) origin.emplace(v, v);

  // Internal terminals hand their edges to a new Steiner copy and become leaves.
  std::vector<VertexId> internal;
  for (const auto& [v, nbrs] : adj) {
    if (is_terminal(v) && nbrs.size() >= 2) internal.push_back(v);
  }
  for (const auto& t : internal) {
    VertexId copy = fresh_id(t, adj);
    adj[copy];
    origin.emplace(copy, t);
    const std::set<VertexId> nbrs = adj[t];
    for (const auto& w : nbrs) {
      unlink(adj, t, w);
      link(adj, copy, w);
    }
    link(adj, t, copy);
  }

  // Split Steiner points of degree > 3 into chains of degree-3 points.
  std::vector<VertexId> pending;
  for (const auto& [v, nbrs] : adj) {
    if (!is_terminal(v) && nbrs.size() > 3) pending.push_back(v);
  }
  while (!pending.empty()) {
    VertexId v = pending.back();
    pending.pop_back();
    std::vector<VertexId> nbrs(adj[v].begin(), adj[v].end());
    if (nbrs.size() <= 3) continue;
    VertexId split = fresh_id(v, adj);
    adj[split];
    origin.emplace(split, origin.at(v));
    for (std::size_t i = 2; i < nbrs.size(); ++i) {
      unlink(adj, v, nbrs[i]);
      link(adj, split, nbrs[i]);
    }
    link(adj, v, split);
    if (adj[split].size() > 3) pending.push_back(split);
  }

  InstanceData out;
  out.name = data.name;
  out.root = data.root;
  out.terminals = data.terminals;
  for (const auto& [v, nbrs] : adj) {
    out.vertices.push_back(v);
    for (const auto& w : nbrs) {
      if (v < w) out.edges.emplace_back(v, w);
    }
  }
  return NormalizedTopology{Instance::build(std::move(out)), std::move(origin), std::move(contracted)};
}

Embedding NormalizedTopology::lift(const Instance& original, const Embedding& emb) const {
  check_embedding(original, emb);
  Embedding out;
  out.positions.resize(static_cast<std::size_t>(instance.size()));
  for (int v = 0; v < instance.size(); ++v) out[v] = emb[original.index_of(origin.at(instance.id(v)))];
  return out;
}

Embedding NormalizedTopology::collapse(const Instance& original, const Embedding& emb) const {
  check_embedding(instance, emb);
  Embedding out;
  out.positions.resize(static_cast<std::size_t>(original.size()));
  for (int v = 0; v < original.size(); ++v) {
    VertexId id = original.id(v);
    while (!instance.contains(id)) id = contracted.at(id);
    out[v] = emb[instance.index_of(id)];
  }
  return out;
}

}  // namespace lrst
