#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lrst/oracle.hpp"

using namespace lrst;
using fixtures::pt;

TEST_CASE("enumerate_grid") {
  const Instance unit_box = Instance::build(
      fixtures::make_data("box", "r", {{"r", 0, 0, {}}, {"t", 1, 1, {}}}, {}, {{"r", "t"}}));
  CHECK(enumerate_grid(unit_box, 1).size() == 9);
  CHECK(enumerate_grid(unit_box, 2).size() == 4);

  const Instance point = Instance::build(
      fixtures::make_data("pt", "r", {{"r", 2, 2, {}}, {"t", 2, 2, {}}}, {}, {{"r", "t"}}));
  CHECK(enumerate_grid(point, 1).size() == 1);

  const auto grid = enumerate_grid(Instance::build(fixtures::fig1_data(true)), 1);
  CHECK(grid.size() == 49);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK_THROWS_AS(enumerate_grid(point, 0), std::invalid_argument);
}

TEST_CASE("oracle: fig1") {
  OracleOptions options;
  options.budget.max_placements = 300'000'000;
  const Instance restricted = Instance::build(fixtures::fig1_data(true));
  const OracleResult r = brute_force_optimum(restricted, options);
  CHECK(r.cost == 24);
  CHECK(is_feasible(restricted, r.embedding));
  CHECK(cost(restricted, r.embedding) == 24);
  CHECK(brute_force_optimum(Instance::build(fixtures::fig1_data(false)), options).cost == 22);
}

TEST_CASE("oracle: chain") {
  for (Length limit : {2, 3, 7}) {
    const Instance inst = Instance::build(fixtures::chain_data(limit));
    CHECK(brute_force_optimum(inst).cost == 4);
  }
}

TEST_CASE("oracle: budget and infeasibility") {
  const Instance inst = Instance::build(fixtures::fig1_data(true));
  CHECK_THROWS_AS(brute_force_optimum(inst), OracleBudgetExceeded);
  OracleOptions tiny;
  tiny.budget.max_placements = 4;
  CHECK_THROWS_AS(brute_force_optimum(Instance::build(fixtures::chain_data({})), tiny), OracleBudgetExceeded);

  auto data = fixtures::chain_data(1);
  CHECK_THROWS_AS(brute_force_optimum(Instance::build(data)), InfeasibleInstance);
}

TEST_CASE("oracle: cuts do not change the answer") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 60; ++i) {
    const Instance inst = Instance::build(fixtures::random_tree(rng, 2 + static_cast<int>(rng() % 4),
                                                                static_cast<int>(rng() % 3), 2, 0.6, 1));
    OracleOptions plain;
    plain.exact_cuts = false;
    const OracleResult literal = brute_force_optimum(inst, plain);
    const OracleResult cut = brute_force_optimum(inst);
    CHECK(literal.cost == cut.cost);
    CHECK(literal.embedding == cut.embedding);
    CHECK(cut.leaves_visited <= literal.leaves_visited);
  }
}

TEST_CASE("oracle: the optimum beats every sampled feasible embedding") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 40; ++i) {
    const Instance inst = Instance::build(fixtures::random_tree(rng, 2 + static_cast<int>(rng() % 4),
                                                                1 + static_cast<int>(rng() % 3), 3, 0.6, 1));
    const OracleResult r = brute_force_optimum(inst);
    CHECK(is_feasible(inst, r.embedding));
    for (int k = 0; k < 200; ++k) {
      const Embedding emb = fixtures::random_embedding(inst, rng, 5);
      if (is_feasible(inst, emb)) CHECK(r.cost <= cost(inst, emb));
    }
  }
}

TEST_CASE("oracle: integral positions never beat half-integral ones") {
  std::mt19937_64 rng(53);
  int gaps = 0;
  for (int i = 0; i < 40; ++i) {
    const Instance inst = Instance::build(fixtures::random_tree(rng, 3 + static_cast<int>(rng() % 3),
                                                                1 + static_cast<int>(rng() % 3), 3, 0.8, 0));
    OracleOptions whole;
    whole.unit = 2;
    const Length half = brute_force_optimum(inst).cost;
    const Length integral = brute_force_optimum(inst, whole).cost;
    CHECK(integral >= half);
    if (integral > half) ++gaps;
  }
  MESSAGE("instances where integral placement is strictly worse: " << gaps);
}
