#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "psg/error.hpp"

namespace psg {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using FaceId = std::size_t;
/// Half-edge 2e runs from the first endpoint of edge e to the second, 2e+1 the reverse.
using HalfEdgeId = std::size_t;

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<std::int8_t>(a) == static_cast<std::int8_t>(b) ? Sign::Plus : Sign::Minus;
}
constexpr Sign& operator*=(Sign& a, Sign b) { return a = a * b; }
constexpr Sign operator-(Sign a) { return a * Sign::Minus; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr char symbol(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct SignedEdge {
  VertexId u = 0;
  VertexId v = 0;
  Sign sign = Sign::Plus;
};

/// Outer face designation: a half-edge u->v lying on the outer face walk.
struct OuterHalfEdge {
  VertexId from = 0;
  VertexId to = 0;
};
/// Outer face designation: the closed vertex walk v0 v1 ... v0 of the outer
/// face, in traced order.
struct OuterWalk {
  std::vector<VertexId> vertices;
};
using OuterHint = std::variant<std::monostate, OuterHalfEdge, OuterWalk>;

/// Input to PlaneSignedGraph::build. `rotations[v]` lists the neighbours of v
/// in counterclockwise order. Edges named in `edges` take ids in listed order
/// and carry the given sign; the remaining edges get ids in rotation-scan order
/// and sign +.
struct GraphSpec {
  std::vector<std::vector<VertexId>> rotations;
  std::vector<SignedEdge> edges;
  OuterHint outer;
};

struct FaceWalk {
  FaceId face = kNone;
  std::vector<HalfEdgeId> half_edges;

  std::size_t length() const { return half_edges.size(); }
};

class PlaneSignedGraph;

/// A simple cycle identified by its edge set. Vertices are kept in a
/// canonical order: smallest vertex first, then towards its smaller neighbour.
class Circle {
 public:
  static Circle from_edges(const PlaneSignedGraph& graph, std::span<const EdgeId> edges);
  static Circle from_vertices(const PlaneSignedGraph& graph, std::span<const VertexId> walk);

  const std::vector<EdgeId>& edges() const { return edges_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(EdgeId e) const;

  friend bool operator==(const Circle& a, const Circle& b) { return a.edges_ == b.edges_; }
  friend bool operator<(const Circle& a, const Circle& b) { return a.edges_ < b.edges_; }

 private:
  std::vector<EdgeId> edges_;
  std::vector<VertexId> vertices_;
};

struct DeletionResult;

enum class DeleteMode {
  Incremental,  ///< retrace only the two faces that merge
  Verified,     ///< additionally retrace everything and compare
};

/// Simple connected plane graph given by a rotation system, with edge signs
/// and a designated outer face. Immutable; edits return new values.
///
/// Face tracing: next(h) is the half-edge following twin(h) in the
/// counterclockwise rotation at head(h). With counterclockwise rotations this
/// walks every bounded face clockwise and the outer face counterclockwise.
class PlaneSignedGraph {
 public:
  static PlaneSignedGraph build(const GraphSpec& spec);

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return live_edges_; }
  /// One past the largest edge id ever issued, live or deleted.
  std::size_t edge_capacity() const { return endpoints_.size(); }
  std::size_t face_count() const { return live_faces_; }
  std::size_t bounded_face_count() const { return live_faces_ - 1; }

  bool has_edge(EdgeId e) const { return e < alive_.size() && alive_[e]; }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  EdgeId edge_between(VertexId u, VertexId v) const;  ///< throws UnknownEdge
  Sign sign(EdgeId e) const;
  std::vector<EdgeId> edges() const;

  std::size_t degree(VertexId v) const { return rotation_.at(v).size(); }
  const std::vector<HalfEdgeId>& rotation(VertexId v) const { return rotation_.at(v); }
  std::vector<VertexId> neighbors(VertexId v) const;

  static HalfEdgeId twin(HalfEdgeId h) { return h ^ 1U; }
  static EdgeId edge_of(HalfEdgeId h) { return h >> 1U; }
  VertexId origin(HalfEdgeId h) const;
  VertexId head(HalfEdgeId h) const { return origin(twin(h)); }
  HalfEdgeId next_in_face(HalfEdgeId h) const;

  FaceId outer_face() const { return outer_; }
  FaceId face_of(HalfEdgeId h) const { return face_of_.at(h); }
  bool has_face(FaceId f) const { return f < walks_.size() && !walks_[f].half_edges.empty(); }
  const FaceWalk& walk(FaceId f) const;
  std::vector<FaceId> faces() const;
  std::vector<FaceId> bounded_faces() const;
  std::vector<VertexId> face_vertices(FaceId f) const;
  std::vector<EdgeId> face_edges(FaceId f) const;
  bool on_outer_boundary(EdgeId e) const;

  DeletionResult delete_edge(EdgeId e, DeleteMode mode = DeleteMode::Incremental) const;
  PlaneSignedGraph with_outer(FaceId f) const;
  PlaneSignedGraph with_sign(EdgeId e, Sign s) const;
  /// `signs` is indexed by EdgeId and must cover edge_capacity().
  PlaneSignedGraph with_signs(std::span<const Sign> signs) const;

  /// Rebuild input equivalent to this graph, with edges listed in id order.
  /// Deleted edge ids are compacted away.
  GraphSpec to_spec() const;

 private:
  PlaneSignedGraph() = default;
  void retrace_all();
  void check_faces_against_full_retrace() const;

  std::vector<std::vector<HalfEdgeId>> rotation_;
  std::vector<std::size_t> rot_pos_;  // per half-edge, index inside its origin's rotation
  std::vector<std::pair<VertexId, VertexId>> endpoints_;
  std::vector<Sign> signs_;
  std::vector<bool> alive_;
  std::size_t live_edges_ = 0;
  std::vector<FaceId> face_of_;
  std::vector<FaceWalk> walks_;  // indexed by FaceId; empty walk = retired id
  std::size_t live_faces_ = 0;
  FaceId outer_ = kNone;
};

struct DeletionResult {
  PlaneSignedGraph graph;
  FaceId survivor = kNone;  ///< face that keeps its id (the outer face when involved)
  FaceId absorbed = kNone;  ///< face id retired by the merge
  bool merged_with_outer = false;
};

struct VertexPartition {
  std::vector<VertexId> exterior;
  std::vector<VertexId> interior;
};

std::vector<FaceWalk> trace_faces(const PlaneSignedGraph& graph);
bool is_two_connected(const PlaneSignedGraph& graph);
Sign circle_sign(const PlaneSignedGraph& graph, const Circle& circle);
VertexPartition classify_vertices(const PlaneSignedGraph& graph);

/// The outer face walk as a Circle; throws NotACircle when the walk repeats a vertex.
Circle outer_boundary_circle(const PlaneSignedGraph& graph);
bool is_outer_boundary(const PlaneSignedGraph& graph, const Circle& circle);
bool is_hamiltonian(const PlaneSignedGraph& graph, const Circle& circle);

/// Bounded faces separated from the outer face by the circle.
std::vector<FaceId> faces_inside(const PlaneSignedGraph& graph, const Circle& circle);
/// Vertices off the circle whose incident faces all lie inside it.
std::vector<VertexId> vertices_inside(const PlaneSignedGraph& graph, const Circle& circle);

/// Straight-line drawing input, used by the generators and fixtures. Rotations
/// are read off the angles; the outer face is the walk of positive area.
struct Point {
  double x = 0;
  double y = 0;
};
PlaneSignedGraph build_from_drawing(std::span<const Point> points, std::span<const SignedEdge> edges);

}  // namespace psg
