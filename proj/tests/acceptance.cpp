// Acceptance checks: one PASS/FAIL line per criterion, exit code 1 if any fails.
//
// Ground truth comes from the reference evaluators in fixtures.hpp and from
// the exhaustive oracle; the solver never checks itself.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lrst/components.hpp"
#include "lrst/dp.hpp"
#include "lrst/generator.hpp"
#include "lrst/io.hpp"
#include "lrst/oracle.hpp"
#include "lrst/scaling.hpp"

using namespace lrst;

namespace {

// Pinned thresholds.
constexpr double kFig1Seconds = 0.1;
constexpr double kFig4Seconds = 1.0;
constexpr double kOracleSuiteSeconds = 60.0;
constexpr int kOracleInstances = 200;
constexpr int kMovementSamples = 500;
constexpr int kLaminarInstances = 200;
constexpr int kParitySamples = 500;
constexpr int kDpInstances = 100;
constexpr int kDeterminismRuns = 3;
constexpr std::uint64_t kOracleBudget = 2'000'000'000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::printf("%s %s %s\n", name, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Timed {
  SolveReport report;
  double seconds;
};

Timed timed_solve(const Instance& inst, Mode mode) {
  SolveConfig config;
  config.mode = mode;
  const auto start = Clock::now();
  SolveReport r = solve(inst, config);
  return {std::move(r), seconds_since(start)};
}

// Edge-wise coordinate order (-1, 0, +1) on both axes, straight from positions.
bool same_local_order(const InstanceData& d, const fixtures::Positions& a, const fixtures::Positions& b) {
  auto order = [](Length p, Length q) { return (p > q) - (p < q); };
  for (const auto& [u, w] : d.edges) {
    if (order(a.at(u).x2, a.at(w).x2) != order(b.at(u).x2, b.at(w).x2)) return false;
    if (order(a.at(u).y2, a.at(w).y2) != order(b.at(u).y2, b.at(w).y2)) return false;
  }
  return true;
}

bool pairwise_laminar(const std::vector<std::vector<int>>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::set<int> a(family[i].begin(), family[i].end());
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const std::set<int> b(family[j].begin(), family[j].end());
      std::size_t common = 0;
      for (int x : b) common += a.count(x);
      if (common != 0 && common != a.size() && common != b.size()) return false;
    }
  }
  return true;
}

InstanceData small_random(std::mt19937_64& rng, int max_terminals) {
  const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_terminals - 1));
  // Mix generator topologies with arbitrary ones (internal terminals,
  // Steiner leaves, high degrees).
  if (rng() % 2 == 0) {
    GenSpec spec;
    spec.n_terminals = n;
    spec.coord_range = 3;
    spec.restricted_fraction = 0.0;
    spec.seed = rng();
    return gen_random(spec);
  }
  return fixtures::random_tree(rng, n, static_cast<int>(rng() % 5), 3, 0.0, 0);
}

void ac1() {
  bool ok = true;
  std::ostringstream out;
  for (bool restricted : {true, false}) {
    const Instance inst = Instance::build(fixtures::fig1_data(restricted));
    const Length expect = restricted ? 24 : 22;
    for (Mode mode : {Mode::kStrict, Mode::kPractical}) {
      const Timed t = timed_solve(inst, mode);
      ok = ok && t.report.cost == expect && t.report.feasible && t.seconds < kFig1Seconds &&
           fixtures::ref_cost(inst.data(), fixtures::positions_of(inst, t.report.final_embedding)) == expect;
      out << (restricted ? "restricted" : "unrestricted") << "/" << mode_name(mode) << ": cost2=" << t.report.cost
          << " (want " << expect << ") " << t.seconds << "s; ";
    }
  }
  report("AC1", ok, out.str());
}

void ac2() {
  bool ok = true;
  std::ostringstream out;
  for (bool restricted : {true, false}) {
    const Instance inst = Instance::build(fixtures::fig4_data(restricted));
    const Length expect = restricted ? 75 : 70;
    for (Mode mode : {Mode::kStrict, Mode::kPractical}) {
      const Timed t = timed_solve(inst, mode);
      const auto pos = fixtures::positions_of(inst, t.report.final_embedding);
      const auto dist = fixtures::ref_distances(inst.data(), pos);
      ok = ok && t.report.cost == expect && fixtures::ref_cost(inst.data(), pos) == expect &&
           t.seconds < kFig4Seconds && fixtures::ref_feasible(inst.data(), pos);
      if (restricted) ok = ok && dist.at("a5") <= 20 && dist.at("a6") <= 22 && dist.at("a11") <= 40;
      out << (restricted ? "restricted" : "unrestricted") << "/" << mode_name(mode) << ": cost2=" << t.report.cost
          << " (want " << expect << ") " << t.seconds << "s";
      if (restricted) out << " d2(a,b,c)=" << dist.at("a5") << "," << dist.at("a6") << "," << dist.at("a11");
      out << "; ";
    }
  }
  report("AC2", ok, out.str());
}

void ac3() {
  const auto start = Clock::now();
  int agree = 0;
  int first_bad = -1;
  int improved = 0;
  int finite = 0;
  int infinite = 0;
  for (int i = 1; i <= kOracleInstances; ++i) {
    GenSpec spec;
    spec.n_terminals = 2 + (i * 7919) % 5;  // 2..6 terminals, so at most 4 Steiner points
    spec.coord_range = 3;
    spec.restricted_fraction = 0.5;
    spec.slack = i % 3;
    spec.seed = static_cast<std::uint64_t>(i);
    const Instance inst = Instance::build(gen_random(spec));
    OracleOptions options;
    options.budget.max_placements = kOracleBudget;
    const Length oracle = brute_force_optimum(inst, options).cost;
    improved += oracle < cost(inst, trivial_embedding(inst));
    for (int t : inst.terminals()) {
      if (t == inst.root()) continue;
      ++(is_infinite(inst.limit(t)) ? infinite : finite);
    }
    bool ok = true;
    for (Mode mode : {Mode::kStrict, Mode::kPractical}) {
      SolveConfig config;
      config.mode = mode;
      const SolveReport r = solve(inst, config);
      ok = ok && r.cost == oracle &&
           fixtures::ref_feasible(inst.data(), fixtures::positions_of(inst, r.final_embedding));
    }
    if (ok) {
      ++agree;
    } else if (first_bad < 0) {
      first_bad = i;
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream out;
  out << agree << "/" << kOracleInstances << " instances match the oracle in both modes, " << secs << "s (" << improved
      << " beat the trivial embedding; limits " << finite << " finite, " << infinite << " unbounded)";
  if (first_bad >= 0) out << ", first mismatch seed " << first_bad;
  report("AC3", agree == kOracleInstances && secs < kOracleSuiteSeconds, out.str());
}

void ac4() {
  std::mt19937_64 rng(404);
  int samples = 0;
  int wrong = 0;
  int multi = 0;
  for (int attempt = 0; attempt < 200000 && samples < kMovementSamples; ++attempt) {
    const Instance inst = Instance::build(small_random(rng, 7));
    const Embedding emb = fixtures::clustered_embedding(inst, rng, 3);
    const Axis axis = rng() % 2 ? Axis::X : Axis::Y;
    const auto cs = maximal_components(inst, emb, axis);
    std::vector<const Component*> free;
    for (const auto& c : cs) {
      if (c.terminal_free) free.push_back(&c);
    }
    if (free.empty()) continue;
    std::shuffle(free.begin(), free.end(), rng);
    const std::size_t count = std::min<std::size_t>(free.size(), 1 + rng() % 2);
    std::vector<ComponentMove> moves;
    fixtures::Positions before = fixtures::positions_of(inst, emb);
    fixtures::Positions after = before;
    for (std::size_t j = 0; j < count; ++j) {
      Length delta = static_cast<Length>(rng() % 9) - 4;
      if (delta == 0) delta = 1;
      moves.push_back({free[j], delta});
      for (int v : free[j]->members) {
        HalfPoint& p = after[inst.id(v)];
        (axis == Axis::X ? p.x2 : p.y2) += delta;
      }
    }
    if (!same_local_order(inst.data(), before, after)) continue;
    const auto pred = predict_deltas(inst, emb, moves);
    if (!pred) {
      ++wrong;
      ++samples;
      continue;
    }
    const auto d0 = fixtures::ref_distances(inst.data(), before);
    const auto d1 = fixtures::ref_distances(inst.data(), after);
    bool ok = pred->cost_delta == fixtures::ref_cost(inst.data(), after) - fixtures::ref_cost(inst.data(), before);
    for (int t : inst.terminals()) {
      ok = ok && pred->path_delta[static_cast<std::size_t>(t)] == d1.at(inst.id(t)) - d0.at(inst.id(t));
    }
    if (!ok) ++wrong;
    if (count > 1) ++multi;
    ++samples;
  }
  std::ostringstream out;
  out << samples << " samples (" << multi << " with two simultaneous moves), " << wrong << " mismatches";
  report("AC4", samples >= kMovementSamples && wrong == 0, out.str());
}

void ac5() {
  std::mt19937_64 rng(505);
  int laminar = 0;
  int nontrivial = 0;
  for (int i = 0; i < kLaminarInstances; ++i) {
    const Instance inst = Instance::build(small_random(rng, 8));
    const Embedding emb = fixtures::clustered_embedding(inst, rng, 3);
    bool ok = true;
    for (Axis axis : {Axis::X, Axis::Y}) {
      std::vector<std::vector<int>> family;
      for (const auto& c : maximal_components(inst, emb, axis)) {
        if (c.terminal_free) family.push_back(affected_terminals(inst, c));
      }
      if (family.size() > 1) ++nontrivial;
      ok = ok && check_laminar(family) && pairwise_laminar(family);
    }
    laminar += ok;
  }
  std::ostringstream out;
  out << laminar << "/" << kLaminarInstances << " instances laminar on both axes (" << nontrivial
      << " families with two or more sets)";
  report("AC5", laminar == kLaminarInstances, out.str());
}

void ac6() {
  std::mt19937_64 rng(606);
  int good = 0;
  for (int i = 0; i < kParitySamples; ++i) {
    const Instance inst = Instance::build(small_random(rng, 8));
    const Embedding emb = fixtures::random_embedding(inst, rng, 4);
    const auto pos = fixtures::positions_of(inst, emb);
    const auto dist = fixtures::ref_distances(inst.data(), pos);
    const auto lib = root_distances(inst, emb);
    bool ok = cost(inst, emb) == fixtures::ref_cost(inst.data(), pos);
    for (int t : inst.terminals()) {
      const Length d = lib[static_cast<std::size_t>(t)];
      ok = ok && d == dist.at(inst.id(t)) && d % 2 == 0;
    }
    good += ok;
  }
  std::ostringstream out;
  out << good << "/" << kParitySamples << " embeddings with even path lengths and exact half-unit costs";
  report("AC6", good == kParitySamples, out.str());
}

void ac7() {
  std::mt19937_64 rng(707);
  int equal = 0;
  int restricted = 0;
  for (int i = 0; i < kDpInstances; ++i) {
    InstanceData data = small_random(rng, 6);
    while (Instance::build(data).steiner_points().size() > 4) data = small_random(rng, 6);
    const Instance loose = Instance::build(data);
    const Embedding start = fixtures::random_embedding(loose, rng, 3);
    // Limits at or just above the start's path lengths keep the start feasible.
    const auto d = root_distances(loose, start);
    for (auto& [id, t] : data.terminals) {
      if (id == data.root || rng() % 2 == 0) continue;
      t.limit = d[static_cast<std::size_t>(loose.index_of(id))] + 2 * static_cast<Length>(rng() % 2);
      ++restricted;
    }
    const Instance inst = Instance::build(data);
    const Length step = Length{1} << (rng() % 2);
    const RoundResult r = improve_round(EvalContext{inst, step}, start);
    const auto brute = fixtures::ref_best_displacement(inst, start, step);
    equal += r.cost == brute.cost;
  }
  std::ostringstream out;
  out << equal << "/" << kDpInstances << " instances match 9^S enumeration (" << restricted << " finite limits)";
  report("AC7", equal == kDpInstances, out.str());
}

void ac8() {
  bool ok = true;
  std::ostringstream out;
  struct Case {
    const char* name;
    InstanceData data;
  };
  const Case cases[] = {{"F1r", fixtures::fig1_data(true)},
                        {"F1u", fixtures::fig1_data(false)},
                        {"F2r", fixtures::fig4_data(true)},
                        {"F2u", fixtures::fig4_data(false)}};
  for (const auto& c : cases) {
    const Instance inst = Instance::build(c.data);
    const Timed t = timed_solve(inst, Mode::kStrict);
    const Length n = inst.size();
    const auto& levels = t.report.levels;
    int max_rounds = 0;
    Length slack = kInfinity;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      max_rounds = std::max(max_rounds, levels[i].dp_rounds);
      ok = ok && levels[i].dp_rounds <= 14 * n;
      if (i > 0) {
        const Length bound = levels[i].cost_after + 12 * n * levels[i].step;
        ok = ok && levels[i - 1].cost_after <= bound;
        slack = std::min(slack, bound - levels[i - 1].cost_after);
      }
    }
    ok = ok && !levels.empty();
    out << c.name << ": levels=" << levels.size() << " max_rounds=" << max_rounds << " (<= " << 14 * n << ")"
        << " min_level_bound_slack2=" << slack << " " << t.seconds << "s; ";
  }
  report("AC8", ok, out.str());
}

void ac9() {
  bool ok = true;
  std::ostringstream out;
  for (const auto& data : {fixtures::fig1_data(true), fixtures::fig4_data(true)}) {
    std::set<std::string> solutions;
    std::set<std::string> reports;
    for (int run = 0; run < kDeterminismRuns; ++run) {
      const Instance inst = Instance::build(data);
      const SolveReport r = solve(inst);
      solutions.insert(write_solution(inst, r));
      reports.insert(write_report(inst, r));
    }
    ok = ok && solutions.size() == 1 && reports.size() == 1;
    out << data.name << ": " << solutions.size() << " distinct solution, " << reports.size() << " distinct report; ";
  }
  report("AC9", ok, out.str());
}

void run(const char* name, void (*check)()) {
  try {
    check();
  } catch (const std::exception& e) {
    report(name, false, std::string("threw: ") + e.what());
  }
}

}  // namespace

int main() {
  run("AC1", ac1);
  run("AC2", ac2);
  run("AC3", ac3);
  run("AC4", ac4);
  run("AC5", ac5);
  run("AC6", ac6);
  run("AC7", ac7);
  run("AC8", ac8);
  run("AC9", ac9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
