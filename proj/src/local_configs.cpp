#include "psg/local_configs.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace psg {

ToggleResult toggle(const PlaneSignedGraph& graph, const Circle& circle, std::span<const Circle> cycles) {
  if (!is_hamiltonian(graph, circle))
    throw Error(ErrorCode::NotHamiltonian, "toggled circle is not a Hamiltonian circle of the graph");
  std::set<EdgeId> edges(circle.edges().begin(), circle.edges().end());
  Sign relation = Sign::Plus;
  for (const Circle& c : cycles) {
    for (EdgeId e : c.edges()) {
      if (!graph.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
      if (!edges.erase(e)) edges.insert(e);
    }
    relation *= circle_sign(graph, c);
  }
  const std::vector<EdgeId> result(edges.begin(), edges.end());
  try {
    Circle toggled = Circle::from_edges(graph, result);
    if (!is_hamiltonian(graph, toggled))
      throw Error(ErrorCode::NotHamiltonianAfterToggle, "toggled circle misses vertices");
    return {std::move(toggled), relation};
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotHamiltonianAfterToggle) throw;
    throw Error(ErrorCode::NotHamiltonianAfterToggle, err.what());
  }
}

namespace {

[[noreturn]] void invalid(const std::string& clause) { throw Error(ErrorCode::InvalidConfig, clause); }

Circle circle_or_invalid(const PlaneSignedGraph& graph, const std::vector<VertexId>& walk,
                         const std::string& name) {
  try {
    return Circle::from_vertices(graph, walk);
  } catch (const Error& err) {
    invalid(name + " is not a circle (" + err.what() + ")");
  }
}

EdgeId edge_or_invalid(const PlaneSignedGraph& graph, VertexId a, VertexId b, const std::string& name) {
  const auto e = graph.find_edge(a, b);
  if (!e) invalid(name + ": missing edge " + std::to_string(a) + "-" + std::to_string(b));
  return *e;
}

std::vector<EdgeId> path_edges(const PlaneSignedGraph& graph, const std::vector<VertexId>& path,
                               const std::string& name) {
  std::vector<EdgeId> out;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) out.push_back(edge_or_invalid(graph, path[k], path[k + 1], name));
  return out;
}

void check_partition(const PlaneSignedGraph& graph, const std::vector<VertexId>& all) {
  std::set<VertexId> seen;
  for (VertexId v : all) {
    if (v >= graph.vertex_count()) invalid("role vertex " + std::to_string(v) + " does not exist");
    if (!seen.insert(v).second) invalid("vertex " + std::to_string(v) + " plays two roles");
  }
  if (seen.size() != graph.vertex_count())
    invalid("role vertices cover " + std::to_string(seen.size()) + " of " +
            std::to_string(graph.vertex_count()) + " vertices");
}

void check_release_edges(const PlaneSignedGraph& graph, const std::vector<EdgeId>& release,
                         const std::vector<EdgeId>& fixed, const std::string& side) {
  for (EdgeId e : release) {
    if (!graph.has_edge(e)) invalid("E_" + side + " names unknown edge id " + std::to_string(e));
    if (std::find(fixed.begin(), fixed.end(), e) != fixed.end())
      invalid("E_" + side + " contains fixed edge id " + std::to_string(e));
  }
}

PlaneSignedGraph released_graph(const PlaneSignedGraph& graph, const std::vector<EdgeId>& left,
                                const std::vector<EdgeId>& right, const std::vector<VertexId>& released) {
  std::set<EdgeId> all(left.begin(), left.end());
  all.insert(right.begin(), right.end());
  PlaneSignedGraph g = graph;
  for (EdgeId e : all) {
    try {
      g = g.delete_edge(e).graph;
    } catch (const Error& err) {
      invalid("release deletion of edge id " + std::to_string(e) + " failed (" + err.what() + ")");
    }
  }
  if (!is_two_connected(g)) invalid("graph after release is not 2-connected");
  const auto exterior = classify_vertices(g).exterior;
  for (VertexId v : released)
    if (!std::binary_search(exterior.begin(), exterior.end(), v))
      invalid("released vertex " + std::to_string(v) + " is not exterior after release");
  return g;
}

Circle hamiltonian_or_invalid(const PlaneSignedGraph& released, const PlaneSignedGraph& graph,
                              const std::vector<VertexId>& walk, const std::string& name) {
  const Circle in_released = circle_or_invalid(released, walk, name + " after release");
  if (!is_hamiltonian(released, in_released)) invalid(name + " is not Hamiltonian");
  return Circle::from_vertices(graph, walk);
}

}  // namespace

std::optional<CertifiedPair> certify_ladder(const PlaneSignedGraph& graph, const LadderConfig& config) {
  const auto& c = config.cycle;
  const std::size_t s = c.size();
  if (s < 6) invalid("circle C needs at least 6 vertices");
  if (config.i < 4 || config.i + 2 > s) invalid("index i must satisfy 4 <= i <= s-2");
  if (config.p.empty() || config.q.empty()) invalid("chains p and q must be non-empty");
  auto v = [&](std::size_t k) { return c[k - 1]; };  // 1-based
  const std::size_t i = config.i;

  std::vector<VertexId> all = c;
  all.insert(all.end(), config.p.begin(), config.p.end());
  all.insert(all.end(), config.q.begin(), config.q.end());
  check_partition(graph, all);

  const Circle big = circle_or_invalid(graph, c, "C");
  if (!vertices_inside(graph, big).empty()) invalid("disk bounded by C has interior vertices");
  edge_or_invalid(graph, v(3), v(s), "chord v_3 v_s");
  edge_or_invalid(graph, v(i + 2), v(i - 1), "chord v_{i+2} v_{i-1}");
  const Circle c1 = circle_or_invalid(graph, {v(1), v(2), v(3), v(s)}, "C_1");
  const Circle c2 = circle_or_invalid(graph, {v(i - 1), v(i), v(i + 1), v(i + 2)}, "C_2");

  // P_L = p_1 v_1 v_s ... v_{i+2} v_{i+1} p_k, P_R = q_1 v_2 v_3 ... v_i q_r.
  std::vector<VertexId> left_path{config.p.front(), v(1)};
  for (std::size_t k = s; k >= i + 1; --k) left_path.push_back(v(k));
  left_path.push_back(config.p.back());
  std::vector<VertexId> right_path{config.q.front()};
  for (std::size_t k = 2; k <= i; ++k) right_path.push_back(v(k));
  right_path.push_back(config.q.back());
  const auto fixed_left = path_edges(graph, left_path, "P_L");
  const auto fixed_right = path_edges(graph, right_path, "P_R");
  check_release_edges(graph, config.release_left, fixed_left, "L");
  check_release_edges(graph, config.release_right, fixed_right, "R");

  std::vector<EdgeId> ladder(big.edges());
  ladder.insert(ladder.end(), c1.edges().begin(), c1.edges().end());
  ladder.insert(ladder.end(), c2.edges().begin(), c2.edges().end());
  for (EdgeId e : ladder) {
    const bool released = std::find(config.release_left.begin(), config.release_left.end(), e) !=
                              config.release_left.end() ||
                          std::find(config.release_right.begin(), config.release_right.end(), e) !=
                              config.release_right.end();
    if (released) invalid("release sets delete ladder edge id " + std::to_string(e));
  }

  std::vector<VertexId> released_vertices = config.p;
  released_vertices.insert(released_vertices.end(), config.q.begin(), config.q.end());
  const PlaneSignedGraph released =
      released_graph(graph, config.release_left, config.release_right, released_vertices);

  // H_1 = v_1 v_s ... v_{i+2} v_{i-1} ... v_2 q_1 ... q_r v_i v_{i+1} p_k ... p_1.
  std::vector<VertexId> h1;
  h1.push_back(v(1));
  for (std::size_t k = s; k >= i + 2; --k) h1.push_back(v(k));
  for (std::size_t k = i - 1; k >= 2; --k) h1.push_back(v(k));
  h1.insert(h1.end(), config.q.begin(), config.q.end());
  h1.push_back(v(i));
  h1.push_back(v(i + 1));
  h1.insert(h1.end(), config.p.rbegin(), config.p.rend());
  const Circle first = hamiltonian_or_invalid(released, graph, h1, "H_1");

  if (circle_sign(graph, c1) == circle_sign(graph, c2)) return std::nullopt;
  const std::vector<Circle> cycles{c1, c2};
  ToggleResult second = toggle(graph, first, cycles);
  if (circle_sign(graph, second.circle) == circle_sign(graph, first))
    throw std::logic_error("ladder toggle kept the sign");
  return CertifiedPair{first, std::move(second.circle), c1, c2};
}

std::optional<CertifiedPair> certify_hexagon(const PlaneSignedGraph& graph, const HexConfig& config) {
  const auto& r = config.r;
  if (r.empty()) invalid("path r must be non-empty");
  if (config.p.empty() || config.q.empty()) invalid("chains p and q must be non-empty");
  const VertexId r1 = r.front();
  const VertexId rt = r.back();

  std::vector<VertexId> all{config.v1, config.v2, config.v3, config.v4};
  all.insert(all.end(), r.begin(), r.end());
  all.insert(all.end(), config.p.begin(), config.p.end());
  all.insert(all.end(), config.q.begin(), config.q.end());
  check_partition(graph, all);

  path_edges(graph, r, "R");
  path_edges(graph, {config.v1, config.v2, rt, config.v3, config.v4, r1, config.v1}, "hexagon H");

  // C_1 = v_1 v_2 r_t ... r_1, C_2 = v_3 v_4 r_1 ... r_t.
  std::vector<VertexId> c1_walk{config.v1, config.v2};
  c1_walk.insert(c1_walk.end(), r.rbegin(), r.rend());
  std::vector<VertexId> c2_walk{config.v3, config.v4};
  c2_walk.insert(c2_walk.end(), r.begin(), r.end());
  const Circle c1 = circle_or_invalid(graph, c1_walk, "C_1");
  const Circle c2 = circle_or_invalid(graph, c2_walk, "C_2");

  std::set<VertexId> allowed_inside(r.begin() + (r.size() > 1 ? 1 : 0), r.end() - (r.size() > 1 ? 1 : 0));
  if (r.size() == 1) allowed_inside.clear();
  std::set<VertexId> inside;
  if (r.size() >= 2) {
    const Circle hex = circle_or_invalid(graph, {config.v1, config.v2, rt, config.v3, config.v4, r1}, "hexagon H");
    for (VertexId x : vertices_inside(graph, hex)) inside.insert(x);
  } else {
    for (const Circle* tri : {&c1, &c2})
      for (VertexId x : vertices_inside(graph, *tri)) inside.insert(x);
  }
  if (inside != allowed_inside) invalid("interior of H is not exactly the inner vertices of path R");

  const std::vector<EdgeId> fixed_left{edge_or_invalid(graph, config.p.front(), config.v1, "fixed p_1 v_1"),
                                       edge_or_invalid(graph, config.v1, r1, "fixed v_1 r_1"),
                                       edge_or_invalid(graph, r1, config.v4, "fixed r_1 v_4"),
                                       edge_or_invalid(graph, config.v4, config.p.back(), "fixed v_4 p_k")};
  const std::vector<EdgeId> fixed_right{edge_or_invalid(graph, config.q.front(), config.v2, "fixed q_1 v_2"),
                                        edge_or_invalid(graph, config.v2, rt, "fixed v_2 r_t"),
                                        edge_or_invalid(graph, rt, config.v3, "fixed r_t v_3"),
                                        edge_or_invalid(graph, config.v3, config.q.back(), "fixed v_3 q_l")};
  check_release_edges(graph, config.release_left, fixed_left, "L");
  check_release_edges(graph, config.release_right, fixed_right, "R");

  std::vector<VertexId> released_vertices = config.p;
  released_vertices.insert(released_vertices.end(), config.q.begin(), config.q.end());
  const PlaneSignedGraph released =
      released_graph(graph, config.release_left, config.release_right, released_vertices);

  // H_1 = v_1 v_2 q_1..q_l v_3 r_t..r_1 v_4 p_k..p_1,
  // H_2 = v_1 r_1..r_t v_2 q_1..q_l v_3 v_4 p_k..p_1.
  std::vector<VertexId> h1{config.v1, config.v2};
  h1.insert(h1.end(), config.q.begin(), config.q.end());
  h1.push_back(config.v3);
  h1.insert(h1.end(), r.rbegin(), r.rend());
  h1.push_back(config.v4);
  h1.insert(h1.end(), config.p.rbegin(), config.p.rend());
  std::vector<VertexId> h2{config.v1};
  h2.insert(h2.end(), r.begin(), r.end());
  h2.push_back(config.v2);
  h2.insert(h2.end(), config.q.begin(), config.q.end());
  h2.push_back(config.v3);
  h2.push_back(config.v4);
  h2.insert(h2.end(), config.p.rbegin(), config.p.rend());
  const Circle first = hamiltonian_or_invalid(released, graph, h1, "H_1");
  const Circle second = hamiltonian_or_invalid(released, graph, h2, "H_2");

  const Sign s1 = circle_sign(graph, c1);
  const Sign s2 = circle_sign(graph, c2);
  if (circle_sign(graph, first) * circle_sign(graph, second) != s1 * s2)
    throw std::logic_error("hexagon sign ratio identity failed");
  if (s1 == s2) return std::nullopt;
  return CertifiedPair{first, second, c1, c2};
}

std::optional<std::vector<EdgeId>> find_release_set(const PlaneSignedGraph& graph,
                                                    std::span<const EdgeId> protected_edges,
                                                    std::span<const VertexId> targets) {
  std::vector<EdgeId> deleted;
  PlaneSignedGraph current = graph;
  for (;;) {
    const auto exterior = classify_vertices(current).exterior;
    if (std::all_of(targets.begin(), targets.end(),
                    [&](VertexId t) { return std::binary_search(exterior.begin(), exterior.end(), t); }))
      return deleted;
    auto outer = current.face_edges(current.outer_face());
    std::sort(outer.begin(), outer.end());
    bool progressed = false;
    for (EdgeId e : outer) {
      if (std::find(protected_edges.begin(), protected_edges.end(), e) != protected_edges.end()) continue;
      if (current.face_of(2 * e) == current.face_of(2 * e + 1)) continue;
      auto next = current.delete_edge(e).graph;
      if (!is_two_connected(next)) continue;
      deleted.push_back(e);
      current = std::move(next);
      progressed = true;
      break;
    }
    if (!progressed) return std::nullopt;
  }
}

}  // namespace psg
