#include "lrst/dp.hpp"

#include <stdexcept>

namespace lrst {

std::array<HalfPoint, 9> displacements(Length step) {
  std::array<HalfPoint, 9> out{};
  out[0] = {0, 0};
  std::size_t i = 1;
  for (Length dx : {-step, Length{0}, step}) {
    for (Length dy : {-step, Length{0}, step}) {
      if (dx == 0 && dy == 0) continue;
      out[i++] = {dx, dy};
    }
  }
  return out;
}

DpContext::DpContext(const EvalContext& eval, Embedding base)
    : eval_(eval), base_(std::move(base)), moves_(displacements(eval.step)) {
  if (eval.step <= 0) throw std::invalid_argument("step must be positive");
  check_embedding(eval.view, base_);
  memo_.resize(static_cast<std::size_t>(eval.view.size()));
}

int DpContext::displacement_index(HalfPoint delta) const {
  for (int d = 0; d < 9; ++d) {
    if (moves_[static_cast<std::size_t>(d)] == delta) return d;
  }
  throw std::invalid_argument("displacement is not in {-s,0,+s}^2");
}

Length DpContext::gamma(int v, HalfPoint delta, Length lambda) {
  return gamma_at(v, displacement_index(delta), lambda);
}

Length DpContext::gamma_at(int v, int d, Length lambda) {
  const Instance& inst = eval_.view;
  const Length budget = inst.subtree_min_limit(v);
  if (lambda > budget) return kInfinity;
  if (inst.is_terminal(v) && d != 0) return kInfinity;
  // Without a restricted terminal below v the consumed length is irrelevant.
  if (is_infinite(budget)) lambda = 0;

  auto& memo = memo_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)];
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;

  const HalfPoint pos = base_[v] + moves_[static_cast<std::size_t>(d)];
  Length total = 0;
  for (int w : inst.children(v)) {
    Length best = kInfinity;
    for (int dw = 0; dw < 9; ++dw) {
      if (inst.is_terminal(w) && dw != 0) break;
      const Length e = l1_distance(pos, base_[w] + moves_[static_cast<std::size_t>(dw)]);
      const Length sub = gamma_at(w, dw, lambda + e);
      if (is_infinite(sub)) continue;
      best = std::min(best, e + sub);
    }
    if (is_infinite(best)) {
      total = kInfinity;
      break;
    }
    total += best;
  }
  memo.emplace(lambda, total);
  return total;
}

std::optional<Embedding> DpContext::reconstruct() {
  const Instance& inst = eval_.view;
  if (is_infinite(gamma_at(inst.root(), 0, 0))) return std::nullopt;

  struct Frame {
    int v;
    int d;
    Length lambda;
  };
  Embedding out = base_;
  std::vector<Frame> stack{{inst.root(), 0, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const HalfPoint pos = base_[f.v] + moves_[static_cast<std::size_t>(f.d)];
    out[f.v] = pos;
    for (int w : inst.children(f.v)) {
      Length best = kInfinity;
      int best_d = -1;
      Length best_e = 0;
      for (int dw = 0; dw < 9; ++dw) {
        if (inst.is_terminal(w) && dw != 0) break;
        const Length e = l1_distance(pos, base_[w] + moves_[static_cast<std::size_t>(dw)]);
        const Length sub = gamma_at(w, dw, f.lambda + e);
        if (is_infinite(sub)) continue;
        if (e + sub < best) {
          best = e + sub;
          best_d = dw;
          best_e = e;
        }
      }
      stack.push_back({w, best_d, f.lambda + best_e});
    }
  }
  return out;
}

std::size_t DpContext::lambda_count(int v, HalfPoint delta) const {
  return memo_[static_cast<std::size_t>(v)][static_cast<std::size_t>(displacement_index(delta))].size();
}

std::size_t DpContext::memo_size() const {
  std::size_t total = 0;
  for (const auto& per_vertex : memo_) {
    for (const auto& m : per_vertex) total += m.size();
  }
  return total;
}

RoundResult improve_round(const EvalContext& eval, const Embedding& emb) {
  check_embedding(eval.view, emb);
  if (!is_feasible(eval.view, emb)) {
    throw std::invalid_argument("improve_round needs a feasible start embedding");
  }
  DpContext ctx(eval, emb);
  const Length value = ctx.gamma(eval.view.root(), {0, 0}, 0);
  // emb itself is a candidate, so value is finite.
  auto best = ctx.reconstruct();
  return RoundResult{std::move(*best), value};
}

SearchResult local_search(const EvalContext& eval, Embedding emb, std::optional<int> max_rounds) {
  SearchResult out;
  out.cost = cost(eval.view, emb);
  out.embedding = std::move(emb);
  while (!max_rounds || out.rounds < *max_rounds) {
    RoundResult r = improve_round(eval, out.embedding);
    ++out.rounds;
    if (r.cost >= out.cost) break;
    out.embedding = std::move(r.embedding);
    out.cost = r.cost;
  }
  return out;
}

}  // namespace lrst
