#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "psg/plane_graph.hpp"

namespace psg {

/// Weak dual: one node per bounded face, adjacent when the faces share an
/// edge. Each node carries the label (phi, degree).
class FaceGraph {
 public:
  struct Label {
    long phi = 0;
    std::size_t degree = 0;
  };

  FaceGraph() = default;

  const std::vector<FaceId>& nodes() const { return nodes_; }
  bool contains(FaceId f) const { return adjacency_.contains(f); }
  const std::set<FaceId>& neighbors(FaceId f) const { return adjacency_.at(f); }
  const Label& label(FaceId f) const { return labels_.at(f); }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const;
  /// Node pairs (a < b), sorted.
  std::vector<std::pair<FaceId, FaceId>> edges() const;

  bool is_tree() const;
  void remove(FaceId f);
  /// True when every stored degree label matches the adjacency.
  bool labels_consistent() const;

 private:
  friend FaceGraph weak_dual(const PlaneSignedGraph& graph);

  std::vector<FaceId> nodes_;
  std::map<FaceId, std::set<FaceId>> adjacency_;
  std::map<FaceId, Label> labels_;
};

using FaceSignTable = std::map<FaceId, Sign>;

/// Builds the weak dual. Node labels use face_map when every bounded face is a
/// simple polygon; otherwise phi is left 0.
FaceGraph weak_dual(const PlaneSignedGraph& graph);
FaceSignTable face_signs(const PlaneSignedGraph& graph);
Sign face_sign(const PlaneSignedGraph& graph, FaceId f);

/// Outer boundary sign against the product of all bounded face signs.
bool verify_outer_product(const PlaneSignedGraph& graph);
bool is_outerplane(const PlaneSignedGraph& graph);
Circle outerplane_unique_hamiltonian(const PlaneSignedGraph& graph);
bool dual_is_tree(const PlaneSignedGraph& graph);

/// phi(f) = sign(f) * (|boundary(f)| - 2), for faces bounded by simple polygons.
std::map<FaceId, long> face_map(const PlaneSignedGraph& graph);

std::set<FaceId> removable_vertices(const FaceGraph& face_graph);

enum class OrderPolicy { FirstFound, MaxDegree, MinPhi };

struct EliminationStep {
  FaceId face = kNone;
  long phi = 0;
  std::size_t degree = 0;
};

struct EliminationTrace {
  enum class Status { Tree, Stuck };
  std::vector<EliminationStep> steps;
  Status status = Status::Stuck;
  /// Surviving faces: a candidate Hamiltonian set, to be validated by peeling
  /// or the oracle.
  std::vector<FaceId> remaining;
};

EliminationTrace eliminate(FaceGraph face_graph, OrderPolicy policy);

std::string to_dot(const FaceGraph& face_graph);

}  // namespace psg
