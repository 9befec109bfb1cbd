#include "psg/peeling.hpp"

#include <algorithm>

#include "psg/face_dual.hpp"
#include "psg/grids.hpp"
#include "psg/ham_search.hpp"

namespace psg {

namespace {

void require_two_connected(const PlaneSignedGraph& graph) {
  if (!is_two_connected(graph)) throw Error(ErrorCode::NotTwoConnected, "graph has a cut vertex");
}

std::vector<FaceId> sorted(std::vector<FaceId> faces) {
  std::sort(faces.begin(), faces.end());
  return faces;
}

}  // namespace

EdgeId peel_step(const PlaneSignedGraph& graph, const Circle& protected_circle) {
  require_two_connected(graph);
  if (!is_hamiltonian(graph, protected_circle))
    throw Error(ErrorCode::NoHamiltonianCircle, "protected circle is not a Hamiltonian circle of the graph");
  if (is_outer_boundary(graph, protected_circle))
    throw Error(ErrorCode::AlreadyOuterBoundary, "circle already bounds the outer face");

  auto candidates = graph.face_edges(graph.outer_face());
  std::sort(candidates.begin(), candidates.end());
  for (EdgeId e : candidates) {
    if (protected_circle.contains(e)) continue;
    if (is_two_connected(graph.delete_edge(e).graph)) return e;
  }
  throw std::logic_error("no peelable outer edge although the circle is Hamiltonian");
}

CoHamSequence coham_from_circle(const PlaneSignedGraph& graph, const Circle& circle) {
  if (!is_hamiltonian(graph, circle))
    throw Error(ErrorCode::NotHamiltonian, "circle does not visit every vertex of the graph");
  require_two_connected(graph);

  CoHamSequence seq;
  PlaneSignedGraph current = graph;
  while (!is_outer_boundary(current, circle)) {
    const EdgeId e = peel_step(current, circle);
    auto step = current.delete_edge(e);
    seq.edges.push_back(e);
    seq.faces.push_back(step.absorbed);
    current = std::move(step.graph);
  }
  seq.final_bounded = current.bounded_faces();
  if (seq.final_bounded != sorted(faces_inside(graph, circle)))
    throw std::logic_error("peeling left faces outside the circle");
  return seq;
}

CoHamOutcome apply_coham(const PlaneSignedGraph& graph, std::span<const EdgeId> edges,
                         const ApplyOptions& options) {
  require_two_connected(graph);
  CoHamSequence seq;
  PlaneSignedGraph current = graph;
  for (std::size_t t = 1; t <= edges.size(); ++t) {
    const EdgeId e = edges[t - 1];
    if (!current.has_edge(e))
      throw Error(ErrorCode::UnknownEdge, "step " + std::to_string(t) + ": edge id " + std::to_string(e), t);
    if (!current.on_outer_boundary(e))
      throw Error(ErrorCode::NotOnOuterBoundary, "step " + std::to_string(t) + ": edge id " +
                                                     std::to_string(e) + " is not on the outer boundary",
                  t);
    auto step = current.delete_edge(e);
    if (!is_two_connected(step.graph))
      throw Error(ErrorCode::NotTwoConnectedAfter,
                  "step " + std::to_string(t) + ": deleting edge id " + std::to_string(e) +
                      " leaves a cut vertex",
                  t);
    seq.edges.push_back(e);
    seq.faces.push_back(step.absorbed);
    current = std::move(step.graph);
  }
  seq.final_bounded = current.bounded_faces();

  // Both closing clauses are checked on their own.
  const auto interior = classify_vertices(current).interior;
  std::size_t circles = 0;
  if (interior.empty() && !options.oracle_uniqueness) {
    outerplane_unique_hamiltonian(current);
    circles = 1;
  } else {
    const auto found = enumerate_hamiltonian(current, 1);
    circles = found.circles.size() + (found.truncated ? 1 : 0);
  }
  const std::string count = circles > 1 ? "at least 2" : std::to_string(circles);
  if (!interior.empty())
    throw Error(ErrorCode::FinalHasInteriorVertex,
                std::to_string(interior.size()) + " interior vertices remain (vertex " +
                    std::to_string(interior.front()) + "); Hamiltonian circles in final graph: " + count);
  if (circles != 1)
    throw Error(ErrorCode::FinalNotUniquelyHamiltonian, "final graph has " + count + " Hamiltonian circles");

  Circle circle = outer_boundary_circle(current);
  return CoHamOutcome{seq, HamiltonianSet{seq.final_bounded, std::move(circle)}, std::move(current)};
}

CoHamOutcome apply_face_sequence(const PlaneSignedGraph& graph, std::span<const FaceId> faces,
                                 const ApplyOptions& options) {
  require_two_connected(graph);
  std::vector<EdgeId> edges;
  PlaneSignedGraph current = graph;
  for (std::size_t t = 1; t <= faces.size(); ++t) {
    const FaceId f = faces[t - 1];
    if (!current.has_face(f) || f == current.outer_face())
      throw Error(ErrorCode::InvalidSet, "step " + std::to_string(t) + ": face " + std::to_string(f) +
                                             " is not a bounded face", t);
    std::optional<EdgeId> pick;
    for (HalfEdgeId h : current.walk(f).half_edges) {
      const EdgeId e = PlaneSignedGraph::edge_of(h);
      if (current.face_of(PlaneSignedGraph::twin(h)) == current.outer_face() && (!pick || e < *pick))
        pick = e;
    }
    if (!pick)
      throw Error(ErrorCode::NotOnOuterBoundary, "step " + std::to_string(t) + ": face " + std::to_string(f) +
                                                     " does not touch the outer face", t);
    edges.push_back(*pick);
    current = current.delete_edge(*pick).graph;
  }
  return apply_coham(graph, edges, options);
}

Sign face_product(const PlaneSignedGraph& graph, std::span<const FaceId> faces) {
  Sign s = Sign::Plus;
  for (FaceId f : faces) s *= face_sign(graph, f);
  return s;
}

Sign hamiltonian_set_sign(const PlaneSignedGraph& graph, const HamiltonianSet& set) {
  const auto bounded = graph.bounded_faces();
  for (FaceId f : set.faces)
    if (!std::binary_search(bounded.begin(), bounded.end(), f))
      throw Error(ErrorCode::InvalidSet, "face " + std::to_string(f) + " is not a bounded face");
  if (!is_hamiltonian(graph, set.circle))
    throw Error(ErrorCode::InvalidSet, "determined circle is not Hamiltonian");
  if (sorted(set.faces) != sorted(faces_inside(graph, set.circle)))
    throw Error(ErrorCode::InvalidSet, "faces do not match the region bounded by the circle");
  const Sign s = face_product(graph, set.faces);
  if (s != circle_sign(graph, set.circle))
    throw std::logic_error("face product disagrees with the circle sign");
  return s;
}

CoHamSequence canonical_coham_grid(int m, int n) {
  if (m < 2 || n < 2) throw Error(ErrorCode::BadDimensions, std::to_string(m) + "x" + std::to_string(n));
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "n = " + std::to_string(n) + " is odd");
  const GridGraph grid = build_grid(GridSpec{m, n, {}});
  std::vector<EdgeId> edges;
  for (int i = 1; i <= m - 2; ++i)
    for (int j = 2; j <= n - 2; j += 2) edges.push_back(grid.edge({EdgeLabel::Kind::Horizontal, i, j}));
  return apply_coham(grid.graph(), edges).sequence;
}

}  // namespace psg
