#pragma once

// Shared fixtures and reference computations for the test binaries.
//
// The reference functions work on InstanceData with string ids and their own
// adjacency walk, so they do not share code with the library evaluators.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lrst/model.hpp"

namespace fixtures {

using lrst::HalfPoint;
using lrst::Instance;
using lrst::InstanceData;
using lrst::Length;

// Real integral coordinates to half-units.
inline HalfPoint pt(Length x, Length y) { return {2 * x, 2 * y}; }

struct TerminalSpec {
  const char* id;
  Length x;
  Length y;
  std::optional<Length> limit;  // real units
};

inline InstanceData make_data(const std::string& name, const std::string& root,
                              std::initializer_list<TerminalSpec> terminals,
                              std::initializer_list<const char*> steiner,
                              std::initializer_list<std::pair<const char*, const char*>> edges) {
  InstanceData d;
  d.name = name;
  d.root = root;
  for (const auto& t : terminals) {
    d.vertices.emplace_back(t.id);
    d.terminals.emplace(t.id, lrst::TerminalData{pt(t.x, t.y), t.limit ? 2 * *t.limit : lrst::kInfinity});
  }
  for (const char* s : steiner) d.vertices.emplace_back(s);
  for (const auto& [a, b] : edges) d.edges.emplace_back(a, b);
  return d;
}

// Fixture F1: root r, restricted terminals t1 and t2, four further terminals.
inline InstanceData fig1_data(bool restricted) {
  std::optional<Length> l1, l2;
  if (restricted) {
    l1 = 5;
    l2 = 6;
  }
  return make_data(restricted ? "fig1-restricted" : "fig1-unrestricted", "r",
                   {{"r", 0, 3, {}},
                    {"t1", 1, 0, l1},
                    {"t2", 3, 3, l2},
                    {"u1", 0, 0, {}},
                    {"u2", 2, 0, {}},
                    {"u3", 2, 1, {}},
                    {"u4", 3, 0, {}}},
                   {"b1", "b2", "b3", "b4", "b5"},
                   {{"r", "b1"},
                    {"b1", "u1"},
                    {"b1", "b4"},
                    {"b4", "b3"},
                    {"b3", "b2"},
                    {"b2", "u2"},
                    {"b2", "t1"},
                    {"b3", "u3"},
                    {"b4", "b5"},
                    {"b5", "t2"},
                    {"b5", "u4"}});
}

// Steiner positions of the drawn restricted optimum, half-units.
inline std::map<std::string, HalfPoint> fig1_optimum() {
  return {{"b1", {0, 3}}, {"b2", {3, 0}}, {"b3", {3, 2}}, {"b4", {3, 3}}, {"b5", {6, 3}}};
}

// Fixture F2: 14 terminals a0..a13 (a5 = a, a6 = b, a11 = c), Steiner a14..a25.
inline InstanceData fig4_data(bool restricted) {
  std::optional<Length> la, lb, lc;
  if (restricted) {
    la = 10;
    lb = 11;
    lc = 20;
  }
  return make_data(restricted ? "fig4-restricted" : "fig4-unrestricted", "a0",
                   {{"a0", 0, 0, {}},
                    {"a1", 0, 4, {}},
                    {"a2", 1, 5, {}},
                    {"a3", 2, 6, {}},
                    {"a4", 6, 7, {}},
                    {"a5", 3, 7, la},
                    {"a6", 3, 1, lb},
                    {"a7", 4, -1, {}},
                    {"a8", 7, -1, {}},
                    {"a9", 9, -1, {}},
                    {"a10", 9, 2, {}},
                    {"a11", 7, 2, lc},
                    {"a12", 6, 2, {}},
                    {"a13", 10, 1, {}}},
                   {"a14", "a15", "a16", "a17", "a18", "a19", "a20", "a21", "a22", "a23", "a24", "a25"},
                   {{"a0", "a22"},  {"a1", "a22"},  {"a22", "a24"}, {"a2", "a24"},  {"a24", "a14"},
                    {"a3", "a14"},  {"a14", "a21"}, {"a21", "a15"}, {"a15", "a4"},  {"a15", "a5"},
                    {"a21", "a23"}, {"a23", "a16"}, {"a23", "a12"}, {"a6", "a16"},  {"a16", "a17"},
                    {"a17", "a7"},  {"a17", "a18"}, {"a18", "a8"},  {"a18", "a19"}, {"a19", "a9"},
                    {"a19", "a25"}, {"a20", "a25"}, {"a25", "a13"}, {"a20", "a10"}, {"a20", "a11"}});
}

// Steiner positions of the drawn restricted optimum, half-units.
inline std::map<std::string, HalfPoint> fig4_optimum() {
  return {{"a14", {4, 9}},  {"a15", {6, 14}}, {"a16", {6, 2}},  {"a17", {8, -2}},
          {"a18", {14, -2}}, {"a19", {14, -2}}, {"a20", {14, 4}}, {"a21", {6, 9}},
          {"a22", {0, 8}},  {"a23", {6, 4}},  {"a24", {2, 9}},  {"a25", {14, 2}}};
}

// Fixture F3: the component example.
inline InstanceData fig2_data() {
  return make_data("fig2-components", "r",
                   {{"r", 2, 1, {}},
                    {"t1", 0, 2, {}},
                    {"t2", 1, 5, {}},
                    {"t3", 4, 0, {}},
                    {"t4", 5, 4, {}},
                    {"t5", 7, 5, {}},
                    {"t6", 8, 1, {}}},
                   {"s1", "s2", "s3", "s4", "s5"},
                   {{"r", "s2"},
                    {"s2", "t3"},
                    {"s2", "s3"},
                    {"s3", "s1"},
                    {"s1", "t1"},
                    {"s1", "t2"},
                    {"s3", "s4"},
                    {"s4", "t6"},
                    {"s4", "s5"},
                    {"s5", "t4"},
                    {"s5", "t5"}});
}

inline std::map<std::string, HalfPoint> fig2_embedding() {
  return {{"s1", pt(1, 3)}, {"s2", pt(4, 1)}, {"s3", pt(4, 3)}, {"s4", pt(6, 3)}, {"s5", pt(6, 4)}};
}

// Chain r - s - t with p(r) = (0,0) and p(t) = (2,0).
inline InstanceData chain_data(std::optional<Length> limit) {
  return make_data("chain", "r", {{"r", 0, 0, {}}, {"t", 2, 0, limit}}, {"s"}, {{"r", "s"}, {"s", "t"}});
}

inline lrst::Embedding embed(const Instance& inst, const std::map<std::string, HalfPoint>& steiner) {
  lrst::Embedding emb = lrst::trivial_embedding(inst);
  for (const auto& [id, p] : steiner) emb[inst.index_of(id)] = p;
  return emb;
}

// ---- reference evaluation on string ids ----

using Positions = std::map<std::string, HalfPoint>;

inline Positions positions_of(const Instance& inst, const lrst::Embedding& emb) {
  Positions out;
  for (int v = 0; v < inst.size(); ++v) out[inst.id(v)] = emb[v];
  return out;
}

inline Length ref_cost(const InstanceData& d, const Positions& pos) {
  Length total = 0;
  for (const auto& [a, b] : d.edges) {
    const HalfPoint p = pos.at(a);
    const HalfPoint q = pos.at(b);
    total += (p.x2 > q.x2 ? p.x2 - q.x2 : q.x2 - p.x2) + (p.y2 > q.y2 ? p.y2 - q.y2 : q.y2 - p.y2);
  }
  return total;
}

// Root distance of every vertex by a breadth-first walk over the edge list.
inline std::map<std::string, Length> ref_distances(const InstanceData& d, const Positions& pos) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [a, b] : d.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<std::string, Length> dist{{d.root, 0}};
  std::vector<std::string> queue{d.root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::string u = queue[i];
    for (const auto& w : adj[u]) {
      if (dist.count(w)) continue;
      const HalfPoint p = pos.at(u);
      const HalfPoint q = pos.at(w);
      dist[w] = dist[u] + std::abs(p.x2 - q.x2) + std::abs(p.y2 - q.y2);
      queue.push_back(w);
    }
  }
  return dist;
}

inline bool ref_feasible(const InstanceData& d, const Positions& pos) {
  const auto dist = ref_distances(d, pos);
  for (const auto& [id, term] : d.terminals) {
    if (!lrst::is_infinite(term.limit) && dist.at(id) > term.limit) return false;
  }
  return true;
}

// Shortest achievable root distance of every terminal: the sum of hops
// between consecutive terminals on its root path.
inline std::map<std::string, Length> ref_shortest(const InstanceData& d) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [a, b] : d.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  struct Item {
    std::string v;
    std::string from;
    HalfPoint anchor;
    Length length;
  };
  std::map<std::string, Length> out;
  std::vector<Item> stack{{d.root, "", d.terminals.at(d.root).position, 0}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (auto t = d.terminals.find(it.v); t != d.terminals.end()) {
      const HalfPoint p = t->second.position;
      it.length += std::abs(p.x2 - it.anchor.x2) + std::abs(p.y2 - it.anchor.y2);
      it.anchor = p;
      out[it.v] = it.length;
    }
    for (const auto& w : adj[it.v]) {
      if (w != it.from) stack.push_back({w, it.v, it.anchor, it.length});
    }
  }
  return out;
}

// ---- random instances ----

// Random tree over `n_terminals` terminals (root "r") and `n_steiner` Steiner
// points with arbitrary degrees; internal terminals are allowed. Every
// restricted terminal gets its root distance plus up to `slack` real units.
inline InstanceData random_tree(std::mt19937_64& rng, int n_terminals, int n_steiner, Length range,
                                double restricted_fraction, Length slack) {
  std::uniform_int_distribution<Length> coord(-range, range);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<Length> extra(0, slack);
  InstanceData d;
  d.name = "random";
  d.root = "r";
  std::vector<std::string> ids{"r"};
  for (int i = 1; i < n_terminals; ++i) ids.push_back("t" + std::to_string(i));
  const std::size_t n_term = ids.size();
  for (int i = 1; i <= n_steiner; ++i) ids.push_back("s" + std::to_string(i));
  std::shuffle(ids.begin() + 1, ids.end(), rng);
  d.vertices = ids;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    d.edges.emplace_back(ids[pick(rng)], ids[i]);
  }
  std::vector<std::string> terms{"r"};
  for (std::size_t i = 1; i < n_term; ++i) terms.push_back("t" + std::to_string(i));
  for (const auto& id : terms) d.terminals.emplace(id, lrst::TerminalData{pt(coord(rng), coord(rng)), lrst::kInfinity});
  const auto shortest = ref_shortest(d);
  for (auto& [id, term] : d.terminals) {
    if (id == "r") continue;
    if (unit(rng) < restricted_fraction) term.limit = shortest.at(id) + 2 * extra(rng);
  }
  return d;
}

// Random Steiner positions on the half-unit grid in [-range, range]^2 (real units).
inline lrst::Embedding random_embedding(const Instance& inst, std::mt19937_64& rng, Length range) {
  std::uniform_int_distribution<Length> coord(-2 * range, 2 * range);
  lrst::Embedding emb = lrst::trivial_embedding(inst);
  for (int s : inst.steiner_points()) emb[s] = {coord(rng), coord(rng)};
  return emb;
}

// Random Steiner positions on a coarse grid, so coordinates collide often
// and components have several members.
inline lrst::Embedding clustered_embedding(const Instance& inst, std::mt19937_64& rng, Length range) {
  std::uniform_int_distribution<Length> coord(-range, range);
  lrst::Embedding emb = lrst::trivial_embedding(inst);
  for (int s : inst.steiner_points()) emb[s] = pt(coord(rng), coord(rng));
  return emb;
}

// Exhaustive minimum over all 9^S simultaneous displacements of the Steiner
// points by {-step, 0, +step}^2, ignoring infeasible vectors. Ties keep the
// first vector in odometer order. kInfinity when nothing is feasible.
struct DisplacementOptimum {
  Length cost = lrst::kInfinity;
  Positions positions;
};

inline DisplacementOptimum ref_best_displacement(const Instance& inst, const lrst::Embedding& base, Length step) {
  const InstanceData& d = inst.data();
  std::vector<std::string> steiner;
  for (int s : inst.steiner_points()) steiner.push_back(inst.id(s));
  Positions pos = positions_of(inst, base);
  DisplacementOptimum best;
  std::vector<int> digit(steiner.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < steiner.size(); ++i) {
      const HalfPoint b = base[inst.index_of(steiner[i])];
      pos[steiner[i]] = {b.x2 + (digit[i] % 3 - 1) * step, b.y2 + (digit[i] / 3 - 1) * step};
    }
    if (ref_feasible(d, pos)) {
      const Length c = ref_cost(d, pos);
      if (c < best.cost) {
        best.cost = c;
        best.positions = pos;
      }
    }
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == 9) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return best;
}

}  // namespace fixtures
