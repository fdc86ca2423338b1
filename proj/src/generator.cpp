#include "lrst/generator.hpp"

#include <random>
#include <stdexcept>

namespace lrst {

namespace {

// Portable draws: std::uniform_int_distribution differs between standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

InstanceData gen_random(const GenSpec& spec) {
  if (spec.n_terminals < 2) throw std::invalid_argument("need at least two terminals");
  if (spec.coord_range < 0 || spec.coord_range >= kCoordinateLimit / 4) {
    throw std::invalid_argument("coordinate range out of bounds");
  }
  if (!(spec.restricted_fraction >= 0.0 && spec.restricted_fraction <= 1.0)) {
    throw std::invalid_argument("restricted fraction must lie in [0, 1]");
  }
  if (spec.slack < 0) throw std::invalid_argument("slack must be nonnegative");

  Draw draw(spec.seed);
  InstanceData data;
  data.name = "random-" + std::to_string(spec.seed);
  data.root = "r";

  std::vector<VertexId> terminals{"r"};
  for (int i = 1; i < spec.n_terminals; ++i) terminals.push_back("t" + std::to_string(i));
  for (const auto& id : terminals) {
    HalfPoint p{2 * draw.uniform(-spec.coord_range, spec.coord_range),
                2 * draw.uniform(-spec.coord_range, spec.coord_range)};
    data.terminals.emplace(id, TerminalData{p, kInfinity});
  }
  const HalfPoint root = data.terminals.at("r").position;
  for (const auto& id : terminals) {
    if (id == "r") continue;
    auto& term = data.terminals.at(id);
    if (draw.unit() < spec.restricted_fraction) {
      term.limit = l1_distance(term.position, root) + 2 * draw.uniform(0, spec.slack);
    }
  }

  // Grow the topology by subdividing a random edge and hanging the next
  // terminal off the new Steiner point.
  data.vertices = terminals;
  data.edges.emplace_back("r", "t1");
  for (int i = 2; i < spec.n_terminals; ++i) {
    const auto e = static_cast<std::size_t>(draw.uniform(0, static_cast<std::int64_t>(data.edges.size()) - 1));
    const VertexId s = "s" + std::to_string(i - 1);
    const auto [a, b] = data.edges[e];
    data.edges[e] = {a, s};
    data.edges.emplace_back(s, b);
    data.edges.emplace_back(s, terminals[static_cast<std::size_t>(i)]);
    data.vertices.push_back(s);
  }
  return data;
}

}  // namespace lrst
