#include "psg/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace psg {

namespace {

std::string vertex_pair(VertexId u, VertexId v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

}  // namespace

PlaneSignedGraph PlaneSignedGraph::build(const GraphSpec& spec) {
  PlaneSignedGraph g;
  const std::size_t n = spec.rotations.size();
  if (n == 0) throw Error(ErrorCode::NonPlanarEmbedding, "empty graph");

  for (VertexId v = 0; v < n; ++v) {
    const auto& rot = spec.rotations[v];
    for (VertexId w : rot) {
      if (w >= n) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(w));
      if (w == v) throw Error(ErrorCode::NonSimple, "loop at vertex " + std::to_string(v));
    }
    auto sorted = rot;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::NonSimple, "parallel edges at vertex " + std::to_string(v));
  }

  auto listed_at = [&](VertexId a, VertexId b) {
    const auto& rot = spec.rotations[a];
    return std::find(rot.begin(), rot.end(), b) != rot.end();
  };

  std::map<std::pair<VertexId, VertexId>, EdgeId> ids;
  auto key = [](VertexId a, VertexId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
  auto add_edge = [&](VertexId a, VertexId b, Sign s) {
    if (!listed_at(a, b) || !listed_at(b, a))
      throw Error(ErrorCode::InconsistentRotation, "edge " + vertex_pair(a, b) +
                                                       " missing from a rotation");
    const EdgeId id = g.endpoints_.size();
    ids.emplace(key(a, b), id);
    g.endpoints_.emplace_back(a, b);
    g.signs_.push_back(s);
  };

  for (const auto& e : spec.edges) {
    if (e.u >= n || e.v >= n)
      throw Error(ErrorCode::UnknownVertex, "edge " + vertex_pair(e.u, e.v));
    if (e.u == e.v) throw Error(ErrorCode::NonSimple, "loop at vertex " + std::to_string(e.u));
    if (ids.contains(key(e.u, e.v)))
      throw Error(ErrorCode::NonSimple, "edge " + vertex_pair(e.u, e.v) + " listed twice");
    add_edge(e.u, e.v, e.sign);
  }
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : spec.rotations[v])
      if (!ids.contains(key(v, w))) add_edge(v, w, Sign::Plus);

  const std::size_t m = g.endpoints_.size();
  g.alive_.assign(m, true);
  g.live_edges_ = m;
  g.rotation_.resize(n);
  g.rot_pos_.assign(2 * m, kNone);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : spec.rotations[v]) {
      const EdgeId e = ids.at(key(v, w));
      const HalfEdgeId h = g.endpoints_[e].first == v ? 2 * e : 2 * e + 1;
      g.rot_pos_[h] = g.rotation_[v].size();
      g.rotation_[v].push_back(h);
    }
  }

  g.retrace_all();
  const long long euler = static_cast<long long>(n) - static_cast<long long>(m) +
                          static_cast<long long>(g.live_faces_);
  if (euler != 2)
    throw Error(ErrorCode::NonPlanarEmbedding,
                "V - E + F = " + std::to_string(euler) + " (connected plane graph needs 2)");

  if (std::holds_alternative<OuterHalfEdge>(spec.outer)) {
    const auto& hint = std::get<OuterHalfEdge>(spec.outer);
    if (hint.from >= n || hint.to >= n)
      throw Error(ErrorCode::BadOuterHint, "outer half-edge names an unknown vertex");
    const auto e = g.find_edge(hint.from, hint.to);
    if (!e) throw Error(ErrorCode::BadOuterHint, "outer half-edge " + vertex_pair(hint.from, hint.to));
    const HalfEdgeId h = g.endpoints_[*e].first == hint.from ? 2 * *e : 2 * *e + 1;
    g.outer_ = g.face_of_[h];
  } else if (std::holds_alternative<OuterWalk>(spec.outer)) {
    auto walk = std::get<OuterWalk>(spec.outer).vertices;
    if (walk.size() >= 2 && walk.front() == walk.back()) walk.pop_back();
    for (FaceId f = 0; f < g.walks_.size() && g.outer_ == kNone; ++f) {
      const auto verts = g.face_vertices(f);
      if (verts.size() != walk.size() || walk.empty()) continue;
      for (std::size_t shift = 0; shift < verts.size() && g.outer_ == kNone; ++shift) {
        bool same = true;
        for (std::size_t k = 0; k < walk.size() && same; ++k)
          same = walk[k] == verts[(k + shift) % verts.size()];
        if (same) g.outer_ = f;
      }
    }
    if (g.outer_ == kNone)
      throw Error(ErrorCode::BadOuterHint, "outer walk does not match any traced face");
  } else {
    // Longest walk, then smallest contained vertex, then smallest face id.
    std::size_t best_len = 0;
    VertexId best_min = kNone;
    for (FaceId f = 0; f < g.walks_.size(); ++f) {
      const auto verts = g.face_vertices(f);
      const std::size_t len = verts.size();
      const VertexId lo = *std::min_element(verts.begin(), verts.end());
      if (len > best_len || (len == best_len && lo < best_min)) {
        best_len = len;
        best_min = lo;
        g.outer_ = f;
      }
    }
  }
  return g;
}

void PlaneSignedGraph::retrace_all() {
  face_of_.assign(2 * endpoints_.size(), kNone);
  walks_.clear();
  live_faces_ = 0;
  for (HalfEdgeId start = 0; start < face_of_.size(); ++start) {
    if (!alive_[edge_of(start)] || face_of_[start] != kNone) continue;
    FaceWalk walk;
    walk.face = walks_.size();
    HalfEdgeId h = start;
    do {
      face_of_[h] = walk.face;
      walk.half_edges.push_back(h);
      h = next_in_face(h);
    } while (h != start);
    walks_.push_back(std::move(walk));
    ++live_faces_;
  }
}

std::pair<VertexId, VertexId> PlaneSignedGraph::endpoints(EdgeId e) const {
  if (!has_edge(e)) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
  return endpoints_[e];
}

std::optional<EdgeId> PlaneSignedGraph::find_edge(VertexId u, VertexId v) const {
  if (u >= rotation_.size() || v >= rotation_.size()) return std::nullopt;
  for (HalfEdgeId h : rotation_[u])
    if (head(h) == v) return edge_of(h);
  return std::nullopt;
}

EdgeId PlaneSignedGraph::edge_between(VertexId u, VertexId v) const {
  const auto e = find_edge(u, v);
  if (!e) throw Error(ErrorCode::UnknownEdge, "no edge " + vertex_pair(u, v));
  return *e;
}

Sign PlaneSignedGraph::sign(EdgeId e) const {
  if (!has_edge(e)) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
  return signs_[e];
}

std::vector<EdgeId> PlaneSignedGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (EdgeId e = 0; e < alive_.size(); ++e)
    if (alive_[e]) out.push_back(e);
  return out;
}

std::vector<VertexId> PlaneSignedGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (HalfEdgeId h : rotation_.at(v)) out.push_back(head(h));
  return out;
}

VertexId PlaneSignedGraph::origin(HalfEdgeId h) const {
  const auto& [a, b] = endpoints_.at(edge_of(h));
  return (h & 1U) == 0 ? a : b;
}

HalfEdgeId PlaneSignedGraph::next_in_face(HalfEdgeId h) const {
  const HalfEdgeId t = twin(h);
  const auto& rot = rotation_[origin(t)];
  return rot[(rot_pos_[t] + 1) % rot.size()];
}

const FaceWalk& PlaneSignedGraph::walk(FaceId f) const {
  if (!has_face(f)) throw std::out_of_range("face id " + std::to_string(f));
  return walks_[f];
}

std::vector<FaceId> PlaneSignedGraph::faces() const {
  std::vector<FaceId> out;
  for (FaceId f = 0; f < walks_.size(); ++f)
    if (has_face(f)) out.push_back(f);
  return out;
}

std::vector<FaceId> PlaneSignedGraph::bounded_faces() const {
  auto out = faces();
  std::erase(out, outer_);
  return out;
}

std::vector<VertexId> PlaneSignedGraph::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  for (HalfEdgeId h : walk(f).half_edges) out.push_back(origin(h));
  return out;
}

std::vector<EdgeId> PlaneSignedGraph::face_edges(FaceId f) const {
  std::vector<EdgeId> out;
  for (HalfEdgeId h : walk(f).half_edges) out.push_back(edge_of(h));
  return out;
}

bool PlaneSignedGraph::on_outer_boundary(EdgeId e) const {
  if (!has_edge(e)) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
  return face_of_[2 * e] == outer_ || face_of_[2 * e + 1] == outer_;
}

DeletionResult PlaneSignedGraph::delete_edge(EdgeId e, DeleteMode mode) const {
  if (!has_edge(e)) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
  const FaceId fa = face_of_[2 * e];
  const FaceId fb = face_of_[2 * e + 1];
  if (fa == fb) {
    const auto [u, v] = endpoints_[e];
    throw Error(ErrorCode::BridgeDeletion, "edge " + vertex_pair(u, v) + " is a bridge");
  }

  DeletionResult result{*this, kNone, kNone, fa == outer_ || fb == outer_};
  PlaneSignedGraph& g = result.graph;
  for (HalfEdgeId h : {2 * e, 2 * e + 1}) {
    auto& rot = g.rotation_[origin(h)];
    rot.erase(rot.begin() + static_cast<std::ptrdiff_t>(g.rot_pos_[h]));
    for (std::size_t i = 0; i < rot.size(); ++i) g.rot_pos_[rot[i]] = i;
    g.rot_pos_[h] = kNone;
    g.face_of_[h] = kNone;
  }
  g.alive_[e] = false;
  --g.live_edges_;

  const FaceId survivor = result.merged_with_outer ? outer_ : std::min(fa, fb);
  const FaceId absorbed = survivor == fa ? fb : fa;
  std::vector<HalfEdgeId> remaining;
  for (FaceId f : {fa, fb})
    for (HalfEdgeId h : walks_[f].half_edges)
      if (edge_of(h) != e) remaining.push_back(h);
  const HalfEdgeId start = *std::min_element(remaining.begin(), remaining.end());

  FaceWalk merged;
  merged.face = survivor;
  HalfEdgeId h = start;
  do {
    g.face_of_[h] = survivor;
    merged.half_edges.push_back(h);
    h = g.next_in_face(h);
  } while (h != start);
  if (merged.half_edges.size() != remaining.size())
    throw std::logic_error("face merge did not absorb both walks");

  g.walks_[survivor] = std::move(merged);
  g.walks_[absorbed] = FaceWalk{};
  --g.live_faces_;
  result.survivor = survivor;
  result.absorbed = absorbed;

  if (mode == DeleteMode::Verified) g.check_faces_against_full_retrace();
  return result;
}

void PlaneSignedGraph::check_faces_against_full_retrace() const {
  PlaneSignedGraph copy = *this;
  copy.retrace_all();
  if (copy.live_faces_ != live_faces_)
    throw std::logic_error("incremental face count differs from full retrace");
  // Same partition of half-edges into walks: compare walks as sets of
  // half-edges keyed by their smallest member.
  auto canonical = [](const PlaneSignedGraph& g) {
    std::map<HalfEdgeId, std::vector<HalfEdgeId>> out;
    for (const auto& w : g.walks_) {
      if (w.half_edges.empty()) continue;
      auto hs = w.half_edges;
      std::sort(hs.begin(), hs.end());
      out.emplace(hs.front(), std::move(hs));
    }
    return out;
  };
  if (canonical(copy) != canonical(*this))
    throw std::logic_error("incremental face walks differ from full retrace");
}

PlaneSignedGraph PlaneSignedGraph::with_outer(FaceId f) const {
  if (!has_face(f)) throw Error(ErrorCode::BadOuterHint, "face id " + std::to_string(f));
  PlaneSignedGraph g = *this;
  g.outer_ = f;
  return g;
}

PlaneSignedGraph PlaneSignedGraph::with_sign(EdgeId e, Sign s) const {
  if (!has_edge(e)) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
  PlaneSignedGraph g = *this;
  g.signs_[e] = s;
  return g;
}

PlaneSignedGraph PlaneSignedGraph::with_signs(std::span<const Sign> signs) const {
  if (signs.size() != signs_.size())
    throw std::invalid_argument("signing must cover every edge id");
  PlaneSignedGraph g = *this;
  std::copy(signs.begin(), signs.end(), g.signs_.begin());
  return g;
}

GraphSpec PlaneSignedGraph::to_spec() const {
  GraphSpec spec;
  spec.rotations.resize(vertex_count());
  for (VertexId v = 0; v < vertex_count(); ++v)
    for (HalfEdgeId h : rotation_[v]) spec.rotations[v].push_back(head(h));
  for (EdgeId e : edges()) spec.edges.push_back({endpoints_[e].first, endpoints_[e].second, signs_[e]});
  const HalfEdgeId h = walks_[outer_].half_edges.front();
  spec.outer = OuterHalfEdge{origin(h), head(h)};
  return spec;
}

// ---------------------------------------------------------------------------

bool Circle::contains(EdgeId e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Circle Circle::from_edges(const PlaneSignedGraph& graph, std::span<const EdgeId> edges) {
  Circle c;
  c.edges_.assign(edges.begin(), edges.end());
  std::sort(c.edges_.begin(), c.edges_.end());
  if (std::adjacent_find(c.edges_.begin(), c.edges_.end()) != c.edges_.end())
    throw Error(ErrorCode::NotACircle, "edge listed twice");
  if (c.edges_.size() < 3) throw Error(ErrorCode::NotACircle, "fewer than three edges");

  std::map<VertexId, std::vector<EdgeId>> incident;
  for (EdgeId e : c.edges_) {
    const auto [u, v] = graph.endpoints(e);
    incident[u].push_back(e);
    incident[v].push_back(e);
  }
  for (const auto& [v, es] : incident)
    if (es.size() != 2)
      throw Error(ErrorCode::NotACircle, "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(es.size()) + " in the edge set");

  const VertexId first = incident.begin()->first;
  auto other_end = [&](EdgeId e, VertexId v) {
    const auto [a, b] = graph.endpoints(e);
    return a == v ? b : a;
  };
  const auto& start_edges = incident.at(first);
  const VertexId n0 = other_end(start_edges[0], first);
  const VertexId n1 = other_end(start_edges[1], first);
  EdgeId via = n0 < n1 ? start_edges[0] : start_edges[1];
  VertexId cur = first;
  do {
    c.vertices_.push_back(cur);
    const VertexId nxt = other_end(via, cur);
    const auto& es = incident.at(nxt);
    via = es[0] == via ? es[1] : es[0];
    cur = nxt;
  } while (cur != first);
  if (c.vertices_.size() != c.edges_.size())
    throw Error(ErrorCode::NotACircle, "edge set is not connected");
  return c;
}

Circle Circle::from_vertices(const PlaneSignedGraph& graph, std::span<const VertexId> walk) {
  std::vector<VertexId> seq(walk.begin(), walk.end());
  if (seq.size() >= 2 && seq.front() == seq.back()) seq.pop_back();
  if (seq.size() < 3) throw Error(ErrorCode::NotACircle, "fewer than three vertices");
  std::vector<EdgeId> es;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const VertexId a = seq[i];
    const VertexId b = seq[(i + 1) % seq.size()];
    const auto e = graph.find_edge(a, b);
    if (!e) throw Error(ErrorCode::NotACircle, "no edge " + vertex_pair(a, b));
    es.push_back(*e);
  }
  return from_edges(graph, es);
}

// ---------------------------------------------------------------------------

std::vector<FaceWalk> trace_faces(const PlaneSignedGraph& graph) {
  std::vector<FaceWalk> out;
  for (FaceId f : graph.faces()) out.push_back(graph.walk(f));
  return out;
}

bool is_two_connected(const PlaneSignedGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n < 3) throw Error(ErrorCode::TooSmall, "2-connectivity needs at least 3 vertices");

  // Iterative DFS computing low-links; a cut vertex or an unreached vertex fails.
  std::vector<std::size_t> disc(n, kNone), low(n, 0);
  struct Frame {
    VertexId v;
    HalfEdgeId via;  // half-edge used to enter v, kNone at the root
    std::size_t next = 0;
  };
  std::vector<Frame> stack{{0, kNone, 0}};
  std::size_t timer = 0;
  std::size_t root_children = 0;
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const auto& rot = graph.rotation(fr.v);
    if (fr.next < rot.size()) {
      const HalfEdgeId h = rot[fr.next++];
      if (fr.via != kNone && h == PlaneSignedGraph::twin(fr.via)) continue;
      const VertexId w = graph.head(h);
      if (disc[w] == kNone) {
        disc[w] = low[w] = timer++;
        if (fr.v == 0) ++root_children;
        stack.push_back({w, h, 0});
      } else {
        low[fr.v] = std::min(low[fr.v], disc[w]);
      }
      continue;
    }
    const VertexId v = fr.v;
    stack.pop_back();
    if (stack.empty()) break;
    const VertexId parent = stack.back().v;
    low[parent] = std::min(low[parent], low[v]);
    if (parent != 0 && low[v] >= disc[parent]) return false;
  }
  if (root_children > 1) return false;
  return std::none_of(disc.begin(), disc.end(), [](std::size_t d) { return d == kNone; });
}

Sign circle_sign(const PlaneSignedGraph& graph, const Circle& circle) {
  Sign s = Sign::Plus;
  for (EdgeId e : circle.edges()) s *= graph.sign(e);
  return s;
}

VertexPartition classify_vertices(const PlaneSignedGraph& graph) {
  std::vector<bool> exterior(graph.vertex_count(), false);
  for (VertexId v : graph.face_vertices(graph.outer_face())) exterior[v] = true;
  VertexPartition out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    (exterior[v] ? out.exterior : out.interior).push_back(v);
  return out;
}

Circle outer_boundary_circle(const PlaneSignedGraph& graph) {
  const auto verts = graph.face_vertices(graph.outer_face());
  return Circle::from_vertices(graph, verts);
}

bool is_outer_boundary(const PlaneSignedGraph& graph, const Circle& circle) {
  auto es = graph.face_edges(graph.outer_face());
  std::sort(es.begin(), es.end());
  return es == circle.edges();
}

bool is_hamiltonian(const PlaneSignedGraph& graph, const Circle& circle) {
  for (EdgeId e : circle.edges())
    if (!graph.has_edge(e)) return false;
  return circle.vertices().size() == graph.vertex_count();
}

std::vector<FaceId> faces_inside(const PlaneSignedGraph& graph, const Circle& circle) {
  std::map<FaceId, std::vector<FaceId>> adjacency;
  for (EdgeId e : graph.edges()) {
    if (circle.contains(e)) continue;
    const FaceId a = graph.face_of(2 * e);
    const FaceId b = graph.face_of(2 * e + 1);
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  std::vector<bool> outside(graph.edge_capacity() * 2 + 1, false);
  std::vector<FaceId> queue{graph.outer_face()};
  outside[graph.outer_face()] = true;
  while (!queue.empty()) {
    const FaceId f = queue.back();
    queue.pop_back();
    for (FaceId g : adjacency[f])
      if (!outside[g]) {
        outside[g] = true;
        queue.push_back(g);
      }
  }
  std::vector<FaceId> inside;
  for (FaceId f : graph.bounded_faces())
    if (!outside[f]) inside.push_back(f);
  return inside;
}

std::vector<VertexId> vertices_inside(const PlaneSignedGraph& graph, const Circle& circle) {
  const auto inside_faces = faces_inside(graph, circle);
  std::vector<bool> inside(graph.edge_capacity() * 2 + 1, false);
  for (FaceId f : inside_faces) inside[f] = true;
  std::vector<bool> on_circle(graph.vertex_count(), false);
  for (VertexId v : circle.vertices()) on_circle[v] = true;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (on_circle[v] || graph.degree(v) == 0) continue;
    const auto& rot = graph.rotation(v);
    if (std::all_of(rot.begin(), rot.end(), [&](HalfEdgeId h) { return inside[graph.face_of(h)]; }))
      out.push_back(v);
  }
  return out;
}

PlaneSignedGraph build_from_drawing(std::span<const Point> points, std::span<const SignedEdge> edges) {
  GraphSpec spec;
  spec.rotations.resize(points.size());
  for (const auto& e : edges) {
    if (e.u >= points.size() || e.v >= points.size())
      throw Error(ErrorCode::UnknownVertex, "edge " + vertex_pair(e.u, e.v));
    spec.rotations[e.u].push_back(e.v);
    spec.rotations[e.v].push_back(e.u);
  }
  for (VertexId v = 0; v < points.size(); ++v) {
    auto angle = [&](VertexId w) {
      return std::atan2(points[w].y - points[v].y, points[w].x - points[v].x);
    };
    std::sort(spec.rotations[v].begin(), spec.rotations[v].end(),
              [&](VertexId a, VertexId b) { return angle(a) < angle(b); });
  }
  spec.edges.assign(edges.begin(), edges.end());
  const PlaneSignedGraph g = PlaneSignedGraph::build(spec);

  FaceId outer = kNone;
  double best = 0;
  for (FaceId f : g.faces()) {
    const auto verts = g.face_vertices(f);
    double area = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const Point& a = points[verts[i]];
      const Point& b = points[verts[(i + 1) % verts.size()]];
      area += a.x * b.y - b.x * a.y;
    }
    if (area > best) {
      best = area;
      outer = f;
    }
  }
  if (outer == kNone) throw Error(ErrorCode::BadOuterHint, "drawing has no positively oriented face");
  return g.with_outer(outer);
}

}  // namespace psg
