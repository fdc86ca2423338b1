#pragma once

#include <cstdint>

#include "lrst/model.hpp"

namespace lrst {

struct GenSpec {
  int n_terminals = 8;            // root included; >= 2
  std::int64_t coord_range = 10;  // terminals uniform on [-R, R]^2
  double restricted_fraction = 0.5;
  std::int64_t slack = 0;         // limit = |p(t) - p(r)|_1 + uniform{0..slack}
  std::uint64_t seed = 1;
};

/// Seeded random instance: terminals are leaves, Steiner points have degree 3,
/// and every limit is reachable, so the result is always feasible.
/// Throws std::invalid_argument for an invalid spec.
InstanceData gen_random(const GenSpec& spec);

}  // namespace lrst
