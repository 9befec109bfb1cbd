#include "psg/face_dual.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace psg {

std::size_t FaceGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [f, adj] : adjacency_) twice += adj.size();
  return twice / 2;
}

std::vector<std::pair<FaceId, FaceId>> FaceGraph::edges() const {
  std::vector<std::pair<FaceId, FaceId>> out;
  for (const auto& [f, adj] : adjacency_)
    for (FaceId g : adj)
      if (f < g) out.emplace_back(f, g);
  return out;
}

bool FaceGraph::is_tree() const {
  if (nodes_.empty()) return false;
  if (edge_count() != nodes_.size() - 1) return false;
  std::set<FaceId> seen{nodes_.front()};
  std::vector<FaceId> stack{nodes_.front()};
  while (!stack.empty()) {
    const FaceId f = stack.back();
    stack.pop_back();
    for (FaceId g : adjacency_.at(f))
      if (seen.insert(g).second) stack.push_back(g);
  }
  return seen.size() == nodes_.size();
}

void FaceGraph::remove(FaceId f) {
  for (FaceId g : adjacency_.at(f)) {
    adjacency_.at(g).erase(f);
    labels_.at(g).degree = adjacency_.at(g).size();
  }
  adjacency_.erase(f);
  labels_.erase(f);
  std::erase(nodes_, f);
}

bool FaceGraph::labels_consistent() const {
  return std::all_of(nodes_.begin(), nodes_.end(),
                     [&](FaceId f) { return labels_.at(f).degree == adjacency_.at(f).size(); });
}

Sign face_sign(const PlaneSignedGraph& graph, FaceId f) {
  Sign s = Sign::Plus;
  for (EdgeId e : graph.face_edges(f)) s *= graph.sign(e);
  return s;
}

FaceSignTable face_signs(const PlaneSignedGraph& graph) {
  FaceSignTable table;
  for (FaceId f : graph.bounded_faces()) table.emplace(f, face_sign(graph, f));
  return table;
}

namespace {

bool is_polygon(const PlaneSignedGraph& graph, FaceId f) {
  auto verts = graph.face_vertices(f);
  std::sort(verts.begin(), verts.end());
  return std::adjacent_find(verts.begin(), verts.end()) == verts.end();
}

}  // namespace

FaceGraph weak_dual(const PlaneSignedGraph& graph) {
  FaceGraph d;
  const FaceId outer = graph.outer_face();
  d.nodes_ = graph.bounded_faces();
  for (FaceId f : d.nodes_) d.adjacency_[f];
  for (EdgeId e : graph.edges()) {
    const FaceId a = graph.face_of(2 * e);
    const FaceId b = graph.face_of(2 * e + 1);
    if (a == b || a == outer || b == outer) continue;
    d.adjacency_[a].insert(b);
    d.adjacency_[b].insert(a);
  }
  const bool polygonal = std::all_of(d.nodes_.begin(), d.nodes_.end(),
                                     [&](FaceId f) { return is_polygon(graph, f); });
  const auto phi = polygonal ? face_map(graph) : std::map<FaceId, long>{};
  for (FaceId f : d.nodes_)
    d.labels_[f] = {polygonal ? phi.at(f) : 0, d.adjacency_[f].size()};
  return d;
}

bool verify_outer_product(const PlaneSignedGraph& graph) {
  Sign outer = Sign::Plus;
  for (EdgeId e : graph.face_edges(graph.outer_face())) outer *= graph.sign(e);
  Sign product = Sign::Plus;
  for (const auto& [f, s] : face_signs(graph)) product *= s;
  return outer == product;
}

bool is_outerplane(const PlaneSignedGraph& graph) { return classify_vertices(graph).interior.empty(); }

Circle outerplane_unique_hamiltonian(const PlaneSignedGraph& graph) {
  if (!is_two_connected(graph)) throw Error(ErrorCode::NotTwoConnected, "graph has a cut vertex");
  if (!is_outerplane(graph)) throw Error(ErrorCode::NotOuterplane, "graph has interior vertices");
  return outer_boundary_circle(graph);
}

bool dual_is_tree(const PlaneSignedGraph& graph) {
  if (!is_two_connected(graph)) throw Error(ErrorCode::NotTwoConnected, "graph has a cut vertex");
  return weak_dual(graph).is_tree();
}

std::map<FaceId, long> face_map(const PlaneSignedGraph& graph) {
  std::map<FaceId, long> phi;
  for (FaceId f : graph.bounded_faces()) {
    if (!is_polygon(graph, f))
      throw Error(ErrorCode::NonPolygonalFace, "face " + std::to_string(f) + " repeats a vertex");
    const long triangles = static_cast<long>(graph.walk(f).length()) - 2;
    phi.emplace(f, to_int(face_sign(graph, f)) * triangles);
  }
  return phi;
}

std::set<FaceId> removable_vertices(const FaceGraph& face_graph) {
  std::set<FaceId> out;
  for (FaceId f : face_graph.nodes()) {
    const auto& label = face_graph.label(f);
    if (label.degree == static_cast<std::size_t>(std::labs(label.phi)) + 1) out.insert(f);
  }
  return out;
}

EliminationTrace eliminate(FaceGraph face_graph, OrderPolicy policy) {
  EliminationTrace trace;
  while (!face_graph.is_tree()) {
    const auto candidates = removable_vertices(face_graph);
    if (candidates.empty()) break;
    FaceId pick = *candidates.begin();
    for (FaceId f : candidates) {
      const auto& a = face_graph.label(f);
      const auto& b = face_graph.label(pick);
      if (policy == OrderPolicy::MaxDegree && a.degree > b.degree) pick = f;
      if (policy == OrderPolicy::MinPhi && a.phi < b.phi) pick = f;
    }
    const auto label = face_graph.label(pick);
    trace.steps.push_back({pick, label.phi, label.degree});
    face_graph.remove(pick);
    if (!face_graph.labels_consistent())
      throw std::logic_error("degree labels out of date after elimination");
  }
  trace.status = face_graph.is_tree() ? EliminationTrace::Status::Tree
                                      : EliminationTrace::Status::Stuck;
  trace.remaining = face_graph.nodes();
  return trace;
}

std::string to_dot(const FaceGraph& face_graph) {
  std::ostringstream out;
  out << "graph dual {\n";
  for (FaceId f : face_graph.nodes()) {
    const auto& l = face_graph.label(f);
    out << "  f" << f << " [label=\"(" << l.phi << "," << l.degree << ")\"];\n";
  }
  for (const auto& [a, b] : face_graph.edges()) out << "  f" << a << " -- f" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace psg
