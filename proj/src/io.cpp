#include "lrst/io.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

namespace lrst {

using json = nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                        message
                                  : message),
      line_(line),
      column_(column) {}

namespace {

// Real-unit integers must double into the half-unit range.
constexpr std::int64_t kMaxRealCoordinate = kCoordinateLimit / 2;

json parse_json(std::string_view document) {
  try {
    return json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, document.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (document[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // Drop the library prefix "[json.exception.parse_error.101] ".
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    // and its own "parse error at line L, column C: " since ours replaces it.
    if (what.starts_with("parse error")) {
      if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    }
    throw ParseError(what, line, column);
  }
}

const json& field(const json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError(where + ": unknown field '" + key + "'");
  }
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

std::int64_t as_integer(const json& v, const std::string& where, std::int64_t bound) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  std::int64_t out = 0;
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u >= static_cast<std::uint64_t>(bound)) throw ParseError(where + ": integer out of range");
    out = static_cast<std::int64_t>(u);
  } else {
    out = v.get<std::int64_t>();
  }
  if (out <= -bound || out >= bound) throw ParseError(where + ": integer out of range");
  return out;
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  return v;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string limit_text(Length limit_half) {
  return is_infinite(limit_half) ? "null" : std::to_string(limit_half / 2);
}

std::string half_limit_text(Length limit_half) {
  return is_infinite(limit_half) ? "null" : std::to_string(limit_half);
}

template <typename Item, typename Fn>
void write_list(std::ostringstream& out, const char* key, const std::vector<Item>& items, Fn&& render, bool last) {
  out << "  \"" << key << "\": [";
  if (items.empty()) {
    out << "]";
  } else {
    out << "\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
      out << "    " << render(items[i]) << (i + 1 < items.size() ? ",\n" : "\n");
    }
    out << "  ]";
  }
  out << (last ? "\n" : ",\n");
}

std::string solver_label(Mode mode) { return "scaling-" + std::string(mode_name(mode)); }

std::string solution_document(const Instance& inst, const Embedding& emb, const std::string& solver,
                              std::span<const LevelTrace> levels) {
  const PathLengths lengths = path_lengths(inst, emb);
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << quoted(inst.name()) << ",\n";
  out << "  \"solver\": " << quoted(solver) << ",\n";
  out << "  \"cost2\": " << cost(inst, emb) << ",\n";
  out << "  \"feasible\": " << (lengths.is_feasible ? "true" : "false") << ",\n";

  std::vector<int> all(static_cast<std::size_t>(inst.size()));
  for (int v = 0; v < inst.size(); ++v) all[static_cast<std::size_t>(v)] = v;
  write_list(out, "vertices", all, [&](int v) {
    return "{\"id\": " + quoted(inst.id(v)) + ", \"x2\": " + std::to_string(emb[v].x2) +
           ", \"y2\": " + std::to_string(emb[v].y2) + "}";
  }, false);

  std::vector<int> terms(inst.terminals().begin(), inst.terminals().end());
  write_list(out, "path_lengths", terms, [&](int t) {
    return "{\"id\": " + quoted(inst.id(t)) + ", \"d2\": " + std::to_string(lengths.by_terminal.at(inst.id(t))) +
           ", \"limit2\": " + half_limit_text(inst.limit(t)) + "}";
  }, false);

  std::vector<LevelTrace> lv(levels.begin(), levels.end());
  write_list(out, "levels", lv, [](const LevelTrace& l) {
    return "{\"k\": " + std::to_string(l.k) + ", \"step2\": " + std::to_string(l.step) +
           ", \"dp_rounds\": " + std::to_string(l.dp_rounds) +
           ", \"repair_iterations\": " + std::to_string(l.repair_iterations) +
           ", \"start_cost2\": " + std::to_string(l.start_cost) + ", \"cost2\": " + std::to_string(l.cost_after) + "}";
  }, true);
  out << "}\n";
  return out.str();
}

}  // namespace

InstanceData parse_instance_data(std::string_view document) {
  const json j = parse_json(document);
  if (!j.is_object()) throw ParseError("instance: expected an object");
  reject_unknown_fields(j, {"name", "root", "vertices", "edges", "terminals"}, "instance");

  InstanceData data;
  data.name = as_string(field(j, "name", "instance"), "name");
  data.root = as_string(field(j, "root", "instance"), "root");

  const json& vertices = as_array(field(j, "vertices", "instance"), "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    data.vertices.push_back(as_string(vertices[i], "vertices[" + std::to_string(i) + "]"));
  }

  const json& edges = as_array(field(j, "edges", "instance"), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = as_array(edges[i], where);
    if (e.size() != 2) throw ParseError(where + ": expected a pair of vertex ids");
    data.edges.emplace_back(as_string(e[0], where + "[0]"), as_string(e[1], where + "[1]"));
  }

  const json& terminals = as_array(field(j, "terminals", "instance"), "terminals");
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    const std::string where = "terminals[" + std::to_string(i) + "]";
    const json& t = terminals[i];
    if (!t.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown_fields(t, {"id", "x", "y", "limit"}, where);
    const std::string id = as_string(field(t, "id", where), where + ".id");
    TerminalData term;
    term.position.x2 = 2 * as_integer(field(t, "x", where), where + ".x", kMaxRealCoordinate);
    term.position.y2 = 2 * as_integer(field(t, "y", where), where + ".y", kMaxRealCoordinate);
    const json& limit = field(t, "limit", where);
    term.limit = limit.is_null() ? kInfinity : 2 * as_integer(limit, where + ".limit", kInfinity / 2);
    if (!data.terminals.emplace(id, term).second) throw ParseError(where + ": duplicate terminal '" + id + "'");
  }
  return data;
}

Instance parse_instance(std::string_view document) { return Instance::build(parse_instance_data(document)); }

std::string serialize_instance(const InstanceData& data) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << quoted(data.name) << ",\n";
  out << "  \"root\": " << quoted(data.root) << ",\n";
  out << "  \"vertices\": [";
  for (std::size_t i = 0; i < data.vertices.size(); ++i) out << (i ? ", " : "") << quoted(data.vertices[i]);
  out << "],\n";
  write_list(out, "edges", data.edges, [](const std::pair<VertexId, VertexId>& e) {
    return "[" + quoted(e.first) + ", " + quoted(e.second) + "]";
  }, false);
  std::vector<std::pair<VertexId, TerminalData>> terms(data.terminals.begin(), data.terminals.end());
  write_list(out, "terminals", terms, [](const std::pair<VertexId, TerminalData>& t) {
    return "{\"id\": " + quoted(t.first) + ", \"x\": " + std::to_string(t.second.position.x2 / 2) +
           ", \"y\": " + std::to_string(t.second.position.y2 / 2) + ", \"limit\": " + limit_text(t.second.limit) + "}";
  }, true);
  out << "}\n";
  return out.str();
}

std::string write_solution(const Instance& inst, const SolveReport& report) {
  return solution_document(inst, report.final_embedding, solver_label(report.mode), report.levels);
}

std::string write_embedding(const Instance& inst, const Embedding& emb, std::string_view solver) {
  return solution_document(inst, emb, std::string(solver), {});
}

std::string write_report(const Instance& inst, const SolveReport& report) {
  const Length n = inst.size();
  const Length round_bound = 14 * n;
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << quoted(inst.name()) << ",\n";
  out << "  \"mode\": " << quoted(std::string(mode_name(report.mode))) << ",\n";
  out << "  \"vertices\": " << n << ",\n";
  out << "  \"m\": " << report.m << ",\n";
  out << "  \"start_cost2\": " << report.start_cost << ",\n";
  out << "  \"cost2\": " << report.cost << ",\n";
  out << "  \"feasible\": " << (report.feasible ? "true" : "false") << ",\n";
  out << "  \"round_bound\": " << round_bound << ",\n";

  std::vector<std::size_t> idx(report.levels.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  write_list(out, "levels", idx, [&](std::size_t i) {
    const LevelTrace& l = report.levels[i];
    std::string line = "{\"k\": " + std::to_string(l.k) + ", \"step2\": " + std::to_string(l.step) +
                       ", \"dp_rounds\": " + std::to_string(l.dp_rounds) +
                       ", \"rounds_within_bound\": " + (l.dp_rounds <= round_bound ? "true" : "false") +
                       ", \"repair_iterations\": " + std::to_string(l.repair_iterations) +
                       ", \"repair_fallback\": " + (l.repair_fallback ? "true" : "false") +
                       ", \"start_cost2\": " + std::to_string(l.start_cost) +
                       ", \"cost2\": " + std::to_string(l.cost_after);
    // Coarser optimum vs this level's optimum: c_{k+1} <= c_k + 6 n 2^k (real units).
    if (report.mode == Mode::kStrict && i > 0) {
      const Length coarser = report.levels[i - 1].cost_after;
      const Length bound = l.cost_after + 12 * n * l.step;
      line += ", \"coarser_cost2\": " + std::to_string(coarser) + ", \"coarser_bound2\": " + std::to_string(bound) +
              ", \"coarser_within_bound\": " + (coarser <= bound ? "true" : "false");
    }
    return line + "}";
  }, true);
  out << "}\n";
  return out.str();
}

SolutionDocument parse_solution(std::string_view document) {
  const json j = parse_json(document);
  if (!j.is_object()) throw ParseError("solution: expected an object");
  SolutionDocument doc;
  doc.name = as_string(field(j, "name", "solution"), "name");
  doc.cost2 = as_integer(field(j, "cost2", "solution"), "cost2", kInfinity);
  const json& feasible = field(j, "feasible", "solution");
  if (!feasible.is_boolean()) throw ParseError("feasible: expected a boolean");
  doc.feasible = feasible.get<bool>();
  const json& vertices = as_array(field(j, "vertices", "solution"), "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    if (!v.is_object()) throw ParseError(where + ": expected an object");
    const std::string id = as_string(field(v, "id", where), where + ".id");
    HalfPoint p{as_integer(field(v, "x2", where), where + ".x2", kCoordinateLimit),
                as_integer(field(v, "y2", where), where + ".y2", kCoordinateLimit)};
    if (!doc.positions.emplace(id, p).second) throw ParseError(where + ": duplicate vertex '" + id + "'");
  }
  return doc;
}

Embedding embedding_from_solution(const Instance& inst, const SolutionDocument& doc) {
  Embedding emb;
  emb.positions.resize(static_cast<std::size_t>(inst.size()));
  std::set<VertexId> placed;
  for (const auto& [id, p] : doc.positions) {
    if (!inst.contains(id)) throw std::invalid_argument("solution places unknown vertex '" + id + "'");
    emb[inst.index_of(id)] = p;
    placed.insert(id);
  }
  if (placed.size() != static_cast<std::size_t>(inst.size())) {
    throw std::invalid_argument("solution places " + std::to_string(placed.size()) + " of " +
                                std::to_string(inst.size()) + " vertices");
  }
  check_embedding(inst, emb);
  return emb;
}

CheckResult check_solution(const Instance& inst, const SolutionDocument& doc) {
  const Embedding emb = embedding_from_solution(inst, doc);
  // Independent of the solver: plain edge sums along explicit root paths.
  CheckResult out;
  for (const auto& [u, w] : inst.edges()) out.cost2 += l1_distance(emb[u], emb[w]);
  out.feasible = true;
  for (int t : inst.terminals()) {
    Length d = 0;
    for (int v = t; inst.parent(v) >= 0; v = inst.parent(v)) d += l1_distance(emb[v], emb[inst.parent(v)]);
    if (d > inst.limit(t)) out.feasible = false;
  }
  out.cost_matches = out.cost2 == doc.cost2;
  out.feasible_matches = out.feasible == doc.feasible;
  return out;
}

}  // namespace lrst
