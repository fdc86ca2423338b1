#pragma once

// Instance and embedding model for the rectilinear Steiner tree problem with
// a fixed topology and root-terminal length restrictions.
//
// All coordinates and lengths are stored as integers in half-units (one
// half-unit is 0.5 in real coordinates). Integral instances always admit a
// half-integral optimum, so every computation in this library is exact.

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lrst {

/// A length or coordinate in half-units.
using Length = std::int64_t;

/// Sentinel for an unbounded length restriction. Arithmetic saturates at it.
inline constexpr Length kInfinity = std::numeric_limits<Length>::max() / 4;

/// Coordinates must satisfy |x2|, |y2| < kCoordinateLimit so that summed
/// costs over any realistic tree cannot overflow.
inline constexpr Length kCoordinateLimit = Length{1} << 61;

constexpr bool is_infinite(Length v) { return v >= kInfinity; }

constexpr Length saturating_add(Length a, Length b) {
  if (is_infinite(a) || is_infinite(b)) return kInfinity;
  return a + b;
}

/// a - b where only `a` may be infinite.
constexpr Length saturating_sub(Length a, Length b) {
  if (is_infinite(a)) return kInfinity;
  return a - b;
}

struct HalfPoint {
  Length x2 = 0;
  Length y2 = 0;

  friend constexpr auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
  friend constexpr HalfPoint operator+(HalfPoint a, HalfPoint b) { return {a.x2 + b.x2, a.y2 + b.y2}; }
  friend constexpr HalfPoint operator-(HalfPoint a, HalfPoint b) { return {a.x2 - b.x2, a.y2 - b.y2}; }
};

constexpr Length abs_length(Length v) { return v < 0 ? -v : v; }

constexpr Length l1_distance(HalfPoint a, HalfPoint b) {
  return abs_length(a.x2 - b.x2) + abs_length(a.y2 - b.y2);
}

enum class Axis { X, Y };

constexpr Length coordinate(HalfPoint p, Axis axis) { return axis == Axis::X ? p.x2 : p.y2; }

constexpr HalfPoint shifted(HalfPoint p, Axis axis, Length delta) {
  return axis == Axis::X ? HalfPoint{p.x2 + delta, p.y2} : HalfPoint{p.x2, p.y2 + delta};
}

std::string_view axis_name(Axis axis);

using VertexId = std::string;

struct TerminalData {
  HalfPoint position;
  Length limit = kInfinity;
};

/// An instance exactly as it was read or generated; it may violate any of
/// the structural invariants. Lengths are in half-units.
struct InstanceData {
  std::string name;
  VertexId root;
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<VertexId, TerminalData> terminals;
};

enum class ViolationKind {
  kEmpty,
  kDuplicateVertex,
  kUnknownVertex,
  kSelfLoop,
  kDuplicateEdge,
  kEdgeCount,
  kDisconnected,
  kRootNotTerminal,
  kOddCoordinate,
  kOddLimit,
  kNegativeLimit,
  kCoordinateRange,
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string where;  // vertex id or "a-b" edge
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  // Only meaningful when ok: the trivial embedding satisfies every limit.
  // With leaf terminals this reads |p(t) - p(r)|_1 <= l_t.
  bool feasible = false;
};

ValidationReport validate_instance(const InstanceData& data);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Raised by operations that require a feasible instance.
class InfeasibleInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structurally valid instance compiled for the algorithms.
///
/// Vertices are indexed 0..size()-1 in ascending id order, so every
/// iteration over indices is deterministic and sorted by id. The tree is
/// oriented away from the root (the arborescence).
class Instance {
 public:
  /// Throws ValidationError when `data` is structurally invalid. An
  /// infeasible instance (a limit below the terminal's root distance) is
  /// accepted here; see is_feasible().
  static Instance build(InstanceData data);

  const InstanceData& data() const { return data_; }
  const std::string& name() const { return data_.name; }

  int size() const { return static_cast<int>(ids_.size()); }
  const VertexId& id(int v) const { return ids_[static_cast<std::size_t>(v)]; }
  /// Throws std::out_of_range for unknown ids.
  int index_of(std::string_view id) const;
  bool contains(std::string_view id) const;

  int root() const { return root_; }
  bool is_terminal(int v) const { return terminal_[static_cast<std::size_t>(v)]; }
  /// Position of a terminal; the root position for Steiner points.
  HalfPoint terminal_position(int v) const { return position_[static_cast<std::size_t>(v)]; }
  HalfPoint root_position() const { return position_[static_cast<std::size_t>(root_)]; }
  /// kInfinity for Steiner points and unrestricted terminals.
  Length limit(int v) const { return limit_[static_cast<std::size_t>(v)]; }

  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  std::span<const int> children(int v) const { return children_[static_cast<std::size_t>(v)]; }
  /// Root first; every parent precedes its children.
  std::span<const int> preorder() const { return preorder_; }
  std::span<const int> terminals() const { return terminals_; }
  std::span<const int> steiner_points() const { return steiner_; }
  /// Edges as (u, w) with u < w, sorted.
  std::span<const std::pair<int, int>> edges() const { return edges_; }

  /// Smallest finite limit among terminals in the subtree of v (kInfinity if none).
  Length subtree_min_limit(int v) const { return subtree_min_limit_[static_cast<std::size_t>(v)]; }

  /// Position of the nearest terminal on the path from v up to the root
  /// (v itself for terminals).
  HalfPoint anchor_position(int v) const { return anchor_[static_cast<std::size_t>(v)]; }
  /// Smallest root distance of v over all embeddings: the sum of distances
  /// between consecutive terminals on its root path. Equals |p(v) - p(r)|_1
  /// for a terminal whose path carries no other terminal.
  Length shortest_root_distance(int v) const { return shortest_[static_cast<std::size_t>(v)]; }

  /// True iff every terminal satisfies shortest_root_distance(t) <= l_t, i.e.
  /// the trivial embedding is feasible.
  bool is_feasible() const;

 private:
  InstanceData data_;
  std::vector<VertexId> ids_;
  std::unordered_map<std::string, int> index_;
  int root_ = 0;
  std::vector<bool> terminal_;
  std::vector<HalfPoint> position_;
  std::vector<Length> limit_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> preorder_;
  std::vector<int> terminals_;
  std::vector<int> steiner_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Length> subtree_min_limit_;
  std::vector<HalfPoint> anchor_;
  std::vector<Length> shortest_;
};

/// Vertex positions indexed like Instance vertices.
struct Embedding {
  std::vector<HalfPoint> positions;

  HalfPoint operator[](int v) const { return positions[static_cast<std::size_t>(v)]; }
  HalfPoint& operator[](int v) { return positions[static_cast<std::size_t>(v)]; }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Every Steiner point at its anchor position: the root's position unless a
/// terminal lies between it and the root. Feasible iff the instance is.
Embedding trivial_embedding(const Instance& inst);

/// Throws std::invalid_argument if the embedding has the wrong size, a
/// terminal is not pinned, or a coordinate leaves the representable range.
void check_embedding(const Instance& inst, const Embedding& emb);

/// Total L1 length in half-units.
Length cost(const Instance& inst, const Embedding& emb);

/// d(v) for every vertex: the length of the root-v path.
std::vector<Length> root_distances(const Instance& inst, const Embedding& emb);

struct PathLengths {
  std::map<VertexId, Length> by_terminal;
  bool is_feasible = true;
};

PathLengths path_lengths(const Instance& inst, const Embedding& emb);

/// True iff every finite-limit terminal satisfies d(t) <= l_t.
bool is_feasible(const Instance& inst, const Embedding& emb);

/// Sum over terminals of max(0, d(t) - l_t).
Length limit_excess(const Instance& inst, const Embedding& emb);

/// Restrictions pushed up the arborescence: l_v = min over children w of
/// (l_w - |pi(v) - pi(w)|_1), a terminal's own limit included. kInfinity when
/// no restricted terminal lies below v.
std::vector<Length> extended_restrictions(const Instance& inst, const Embedding& emb);

struct BoundingBox {
  HalfPoint lo;
  HalfPoint hi;
};

BoundingBox terminal_bounding_box(const Instance& inst);

/// Clamps every Steiner coordinate into the terminal bounding box.
Embedding clamp_to_bbox(const Instance& inst, const Embedding& emb);

/// Result of binarizing a topology.
///
/// `origin` maps every vertex of the normalized instance to the original
/// vertex it stands for; `contracted` maps each removed original Steiner
/// point (a leaf or a degree-2 point) to the original neighbor whose
/// position it takes when collapsing.
struct NormalizedTopology {
  Instance instance;
  std::map<VertexId, VertexId> origin;
  std::map<VertexId, VertexId> contracted;

  /// Places every normalized vertex at its origin's position.
  Embedding lift(const Instance& original, const Embedding& emb) const;
  /// Maps a normalized embedding back. Cost and path lengths are preserved
  /// when all copies of each original vertex share one position (lifted
  /// embeddings in particular); otherwise the result may be longer.
  Embedding collapse(const Instance& original, const Embedding& emb) const;
};

/// Returns an equivalent instance where every terminal is a leaf and every
/// Steiner point has degree 3.
NormalizedTopology normalize_topology(const Instance& inst);

}  // namespace lrst
