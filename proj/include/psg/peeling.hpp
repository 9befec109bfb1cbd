#pragma once

#include <span>
#include <vector>

#include "psg/plane_graph.hpp"

namespace psg {

/// Ordered outer-boundary edge deletions, the bounded face each deletion
/// merges into the outer face, and the bounded faces that survive.
struct CoHamSequence {
  std::vector<EdgeId> edges;
  std::vector<FaceId> faces;
  std::vector<FaceId> final_bounded;
};

/// Bounded faces whose union is a disk bounded by `circle`.
struct HamiltonianSet {
  std::vector<FaceId> faces;
  Circle circle;
};

struct CoHamOutcome {
  CoHamSequence sequence;
  HamiltonianSet hamiltonian_set;
  PlaneSignedGraph final_graph;
};

struct ApplyOptions {
  /// Count the final graph's Hamiltonian circles with the oracle even when
  /// outerplanarity already implies uniqueness.
  bool oracle_uniqueness = true;
};

/// Smallest-id outer boundary edge off `protected_circle` whose deletion keeps
/// the graph 2-connected.
EdgeId peel_step(const PlaneSignedGraph& graph, const Circle& protected_circle);

CoHamSequence coham_from_circle(const PlaneSignedGraph& graph, const Circle& circle);

/// Validates an edge sequence step by step and checks the final graph.
CoHamOutcome apply_coham(const PlaneSignedGraph& graph, std::span<const EdgeId> edges,
                         const ApplyOptions& options = {});

/// Realizes a face sequence by deleting, at each step, the smallest-id edge
/// that separates the face from the outer face, then validates as apply_coham.
CoHamOutcome apply_face_sequence(const PlaneSignedGraph& graph, std::span<const FaceId> faces,
                                 const ApplyOptions& options = {});

Sign hamiltonian_set_sign(const PlaneSignedGraph& graph, const HamiltonianSet& set);

/// Product of face signs over `faces`, evaluated in `graph`.
Sign face_product(const PlaneSignedGraph& graph, std::span<const FaceId> faces);

/// Canonical sequence for an m x n grid with n even: in rows
/// 1..m-2, boxes [i,2], [i,4], ..., [i,n-2], each removed through its bottom
/// edge. Ids refer to build_grid(GridSpec{m, n}).
CoHamSequence canonical_coham_grid(int m, int n);

}  // namespace psg
