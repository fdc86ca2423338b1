#pragma once

// Instance and solution documents.
//
// Instance files use integral real coordinates and limits (null = no limit):
//   {"name": str, "root": id, "vertices": [id...], "edges": [[id,id]...],
//    "terminals": [{"id": id, "x": int, "y": int, "limit": int|null}...]}
// Solution files carry exact half-unit integers (x2, y2, cost2, d2).

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lrst/model.hpp"
#include "lrst/scaling.hpp"

namespace lrst {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Syntax and field-level checks only; throws ParseError.
InstanceData parse_instance_data(std::string_view document);

/// parse_instance_data followed by structural validation (ValidationError).
Instance parse_instance(std::string_view document);

/// Canonical form: two-space indentation, terminals sorted by id, trailing newline.
std::string serialize_instance(const InstanceData& data);

std::string write_solution(const Instance& inst, const SolveReport& report);

/// Solution document for an embedding that did not come from solve().
std::string write_embedding(const Instance& inst, const Embedding& emb, std::string_view solver);

/// Diagnostics of a solve: level trace with the per-level bounds.
std::string write_report(const Instance& inst, const SolveReport& report);

struct SolutionDocument {
  std::string name;
  Length cost2 = 0;
  bool feasible = false;
  std::map<VertexId, HalfPoint> positions;
};

SolutionDocument parse_solution(std::string_view document);

/// Throws std::invalid_argument if the document does not place exactly the
/// instance's vertices with terminals at their positions.
Embedding embedding_from_solution(const Instance& inst, const SolutionDocument& doc);

struct CheckResult {
  Length cost2 = 0;
  bool feasible = false;
  bool cost_matches = false;
  bool feasible_matches = false;
  bool agrees() const { return cost_matches && feasible_matches; }
};

/// Recomputes cost and feasibility from the positions alone.
CheckResult check_solution(const Instance& inst, const SolutionDocument& doc);

}  // namespace lrst
