#include "lrst/svg.hpp"

#include <algorithm>
#include <sstream>

namespace lrst {

namespace {

constexpr Length kPixelsPerHalfUnit = 20;
constexpr Length kMarginHalfUnits = 2;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Instance& inst, const Embedding* emb) {
  if (emb != nullptr) check_embedding(inst, *emb);
  BoundingBox box = terminal_bounding_box(inst);
  if (emb != nullptr) {
    for (const HalfPoint p : emb->positions) {
      box.lo = {std::min(box.lo.x2, p.x2), std::min(box.lo.y2, p.y2)};
      box.hi = {std::max(box.hi.x2, p.x2), std::max(box.hi.y2, p.y2)};
    }
  }
  // Snap the frame to whole units so grid lines sit on integral coordinates.
  auto floor_even = [](Length v) { return v % 2 == 0 ? v : v - 1; };
  auto ceil_even = [](Length v) { return v % 2 == 0 ? v : v + 1; };
  const Length x0 = floor_even(box.lo.x2) - kMarginHalfUnits;
  const Length x1 = ceil_even(box.hi.x2) + kMarginHalfUnits;
  const Length y0 = floor_even(box.lo.y2) - kMarginHalfUnits;
  const Length y1 = ceil_even(box.hi.y2) + kMarginHalfUnits;
  auto px = [&](Length x2) { return (x2 - x0) * kPixelsPerHalfUnit; };
  auto py = [&](Length y2) { return (y1 - y2) * kPixelsPerHalfUnit; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(x1) << "\" height=\"" << py(y0)
      << "\" viewBox=\"0 0 " << px(x1) << " " << py(y0) << "\">\n";
  out << "  <title>" << escape(inst.name()) << "</title>\n";
  out << "  <g class=\"grid\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"2,4\">\n";
  for (Length x = x0; x <= x1; x += 2) {
    out << "    <line x1=\"" << px(x) << "\" y1=\"0\" x2=\"" << px(x) << "\" y2=\"" << py(y0) << "\"/>\n";
  }
  for (Length y = y0; y <= y1; y += 2) {
    out << "    <line x1=\"0\" y1=\"" << py(y) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(y) << "\"/>\n";
  }
  out << "  </g>\n";

  if (emb != nullptr) {
    out << "  <g class=\"edges\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\">\n";
    for (const auto& [u, w] : inst.edges()) {
      const HalfPoint a = (*emb)[u];
      const HalfPoint b = (*emb)[w];
      out << "    <polyline points=\"" << px(a.x2) << "," << py(a.y2) << " " << px(b.x2) << "," << py(a.y2) << " "
          << px(b.x2) << "," << py(b.y2) << "\"><title>" << escape(inst.id(u)) << " - " << escape(inst.id(w))
          << "</title></polyline>\n";
    }
    out << "  </g>\n";
    out << "  <g class=\"steiner\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"2\">\n";
    for (int s : inst.steiner_points()) {
      const HalfPoint p = (*emb)[s];
      out << "    <circle cx=\"" << px(p.x2) << "\" cy=\"" << py(p.y2) << "\" r=\"6\"><title>" << escape(inst.id(s))
          << "</title></circle>\n";
    }
    out << "  </g>\n";
  }

  out << "  <g class=\"terminals\" fill=\"#000000\">\n";
  for (int t : inst.terminals()) {
    const HalfPoint p = inst.terminal_position(t);
    out << "    <rect x=\"" << px(p.x2) - 7 << "\" y=\"" << py(p.y2) - 7 << "\" width=\"14\" height=\"14\"><title>"
        << escape(inst.id(t)) << "</title></rect>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace lrst
