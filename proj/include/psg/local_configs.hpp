#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "psg/plane_graph.hpp"

namespace psg {

struct ToggleResult {
  Circle circle;
  Sign sign_relation = Sign::Plus;  ///< sign(new) = sign(old) * sign_relation
};

/// Replaces the circle's edge set by its symmetric difference with every
/// given cycle and checks the result is again a Hamiltonian circle.
ToggleResult toggle(const PlaneSignedGraph& graph, const Circle& circle, std::span<const Circle> cycles);

/// Ladder around the empty circle C = v_1 ... v_s. With 1-based positions,
/// C_1 = v_1 v_2 v_3 v_s and C_2 = v_{i-1} v_i v_{i+1} v_{i+2}; the chain p
/// runs from p_1 (next to v_1) to p_k (next to v_{i+1}) and q from q_1 (next
/// to v_2) to q_r (next to v_i).
struct LadderConfig {
  std::vector<VertexId> cycle;
  std::size_t i = 0;
  std::vector<VertexId> p;
  std::vector<VertexId> q;
  std::vector<EdgeId> release_left;
  std::vector<EdgeId> release_right;
};

/// Hexagon v_1 v_2 r_t v_3 v_4 r_1 around the path r = r_1 ... r_t (r_1 may
/// equal r_t). The chain p runs from p_1 (next to v_1) to p_k (next to v_4),
/// q from q_1 (next to v_2) to q_l (next to v_3).
struct HexConfig {
  VertexId v1 = 0;
  VertexId v2 = 0;
  VertexId v3 = 0;
  VertexId v4 = 0;
  std::vector<VertexId> r;
  std::vector<VertexId> p;
  std::vector<VertexId> q;
  std::vector<EdgeId> release_left;
  std::vector<EdgeId> release_right;
};

struct CertifiedPair {
  Circle first;
  Circle second;
  Circle c1;
  Circle c2;
};

/// Checks every setup clause (throwing InvalidConfig naming the first one
/// that fails); returns the two opposite-sign Hamiltonian circles when
/// sign(C_1) != sign(C_2), nullopt otherwise.
std::optional<CertifiedPair> certify_ladder(const PlaneSignedGraph& graph, const LadderConfig& config);
std::optional<CertifiedPair> certify_hexagon(const PlaneSignedGraph& graph, const HexConfig& config);

/// Greedy release search: repeatedly deletes the smallest-id outer edge that
/// is not protected and keeps the graph 2-connected, until every target
/// vertex is exterior. nullopt means the greedy pass got stuck, which proves
/// nothing about existence.
std::optional<std::vector<EdgeId>> find_release_set(const PlaneSignedGraph& graph,
                                                    std::span<const EdgeId> protected_edges,
                                                    std::span<const VertexId> targets);

}  // namespace psg
