#pragma once

#include <string>

#include "lrst/model.hpp"

namespace lrst {

/// Terminals as filled squares, Steiner points as hollow circles, edges as
/// L-shaped polylines over a dotted unit grid. With `emb == nullptr` only
/// the terminals are drawn.
std::string render_svg(const Instance& inst, const Embedding* emb);

}  // namespace lrst
