#include "psg/grids.hpp"

#include <vector>

namespace psg {

std::string EdgeLabel::str() const {
  const char k = kind == Kind::Horizontal ? 'h' : kind == Kind::Vertical ? 'v' : 'd';
  return std::string(1, k) + " " + std::to_string(i) + " " + std::to_string(j);
}

Sign GridSpec::sign_of(const EdgeLabel& label) const {
  const auto it = signing.find(label);
  return it == signing.end() ? Sign::Plus : it->second;
}

Diagonal DiagonalPolicy::at(const Box& box) const {
  const auto it = overrides.find(box);
  return it == overrides.end() ? fallback : it->second;
}

VertexId GridGraph::vertex(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_)
    throw Error(ErrorCode::OutOfRange, "vertex (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return static_cast<VertexId>((i - 1) * n_ + (j - 1));
}

std::pair<int, int> GridGraph::coords(VertexId v) const {
  const int k = static_cast<int>(v);
  return {k / n_ + 1, k % n_ + 1};
}

EdgeId GridGraph::edge(const EdgeLabel& label) const {
  const auto it = edge_ids_.find(label);
  if (it == edge_ids_.end()) throw Error(ErrorCode::OutOfRange, "edge label " + label.str());
  return it->second;
}

EdgeLabel GridGraph::label(EdgeId e) const {
  const auto it = labels_.find(e);
  if (it == labels_.end()) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
  return it->second;
}

FaceId GridGraph::box_face(const Box& box) const {
  const auto it = box_faces_.find(box);
  if (it == box_faces_.end())
    throw Error(ErrorCode::OutOfRange, "box [" + std::to_string(box.i) + "," + std::to_string(box.j) + "]");
  return it->second;
}

std::optional<Box> GridGraph::face_box(FaceId f) const {
  for (const auto& [box, face] : box_faces_)
    if (face == f) return box;
  return std::nullopt;
}

namespace {

void check_dimensions(int m, int n) {
  if (m < 2 || n < 2)
    throw Error(ErrorCode::BadDimensions, std::to_string(m) + "x" + std::to_string(n) + " grid");
}

struct Layout {
  std::vector<Point> points;
  std::vector<SignedEdge> edges;
  std::vector<EdgeLabel> labels;
};

Layout grid_layout(const GridSpec& spec) {
  const int m = spec.m;
  const int n = spec.n;
  Layout out;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) out.points.push_back({static_cast<double>(j - 1), static_cast<double>(i - 1)});
  auto id = [n](int i, int j) { return static_cast<VertexId>((i - 1) * n + (j - 1)); };
  auto add = [&](EdgeLabel label, VertexId u, VertexId v) {
    out.edges.push_back({u, v, spec.sign_of(label)});
    out.labels.push_back(label);
  };
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < n; ++j) add({EdgeLabel::Kind::Horizontal, i, j}, id(i, j), id(i, j + 1));
  for (int i = 1; i < m; ++i)
    for (int j = 1; j <= n; ++j) add({EdgeLabel::Kind::Vertical, i, j}, id(i, j), id(i + 1, j));
  for (const auto& [label, s] : spec.signing) {
    const bool ok = label.kind == EdgeLabel::Kind::Horizontal
                        ? label.i >= 1 && label.i <= m && label.j >= 1 && label.j < n
                    : label.kind == EdgeLabel::Kind::Vertical
                        ? label.i >= 1 && label.i < m && label.j >= 1 && label.j <= n
                        : label.i >= 1 && label.i < m && label.j >= 1 && label.j < n;
    if (!ok) throw Error(ErrorCode::OutOfRange, "edge label " + label.str());
  }
  return out;
}

}  // namespace

GridGraph build_grid(const GridSpec& spec) {
  check_dimensions(spec.m, spec.n);
  const Layout layout = grid_layout(spec);
  for (const auto& [label, s] : spec.signing)
    if (label.kind == EdgeLabel::Kind::Diagonal)
      throw Error(ErrorCode::OutOfRange, "diagonal label " + label.str() + " on a plain grid");

  GridGraph grid(spec.m, spec.n, build_from_drawing(layout.points, layout.edges));
  for (EdgeId e = 0; e < layout.labels.size(); ++e) {
    grid.edge_ids_.emplace(layout.labels[e], e);
    grid.labels_.emplace(e, layout.labels[e]);
  }
  // The eastward top edge of box [i,j] has the box on its right.
  for (int i = 1; i < spec.m; ++i)
    for (int j = 1; j < spec.n; ++j) {
      const EdgeId top = grid.edge({EdgeLabel::Kind::Horizontal, i + 1, j});
      grid.box_faces_.emplace(Box{i, j}, grid.graph_.face_of(2 * top));
    }
  return grid;
}

GridGraph build_triangulated_grid(const GridSpec& spec, const DiagonalPolicy& policy) {
  check_dimensions(spec.m, spec.n);
  Layout layout = grid_layout(spec);
  const int n = spec.n;
  auto id = [n](int i, int j) { return static_cast<VertexId>((i - 1) * n + (j - 1)); };
  for (int i = 1; i < spec.m; ++i)
    for (int j = 1; j < spec.n; ++j) {
      const EdgeLabel label{EdgeLabel::Kind::Diagonal, i, j};
      const bool rising = policy.at(Box{i, j}) == Diagonal::Rising;
      const VertexId u = rising ? id(i, j) : id(i + 1, j);
      const VertexId v = rising ? id(i + 1, j + 1) : id(i, j + 1);
      layout.edges.push_back({u, v, spec.sign_of(label)});
      layout.labels.push_back(label);
    }
  GridGraph grid(spec.m, spec.n, build_from_drawing(layout.points, layout.edges));
  for (EdgeId e = 0; e < layout.labels.size(); ++e) {
    grid.edge_ids_.emplace(layout.labels[e], e);
    grid.labels_.emplace(e, layout.labels[e]);
  }
  return grid;
}

bool parity_obstruction(int m, int n) {
  check_dimensions(m, n);
  return ((m - 2) * (n - 2)) % 2 == 1;
}

Sign box_sign(const GridSpec& spec, const Box& box) {
  if (box.i < 1 || box.i >= spec.m || box.j < 1 || box.j >= spec.n)
    throw Error(ErrorCode::OutOfRange,
                "box [" + std::to_string(box.i) + "," + std::to_string(box.j) + "]");
  using K = EdgeLabel::Kind;
  return spec.sign_of({K::Horizontal, box.i, box.j}) * spec.sign_of({K::Horizontal, box.i + 1, box.j}) *
         spec.sign_of({K::Vertical, box.i, box.j}) * spec.sign_of({K::Vertical, box.i, box.j + 1});
}

bool all_same_sign_decision(const GridSpec& spec, SameSignForm form) {
  const int even_side = form == SameSignForm::Stated ? spec.m : spec.n;
  if (even_side % 2 != 0 || spec.m <= 3 || spec.n <= 3)
    throw Error(ErrorCode::BadPreconditions,
                std::to_string(spec.m) + "x" + std::to_string(spec.n) +
                    (form == SameSignForm::Stated ? " needs m even" : " needs n even") + " and m,n > 3");
  std::optional<Sign> seen;
  for (int i = 1; i < spec.m; ++i)
    for (int j = 1; j < spec.n; ++j) {
      const Box box{i, j};
      if (box.is_corner(spec.m, spec.n)) continue;
      const Sign s = box_sign(spec, box);
      if (seen && *seen != s) return false;
      seen = s;
    }
  return true;
}

GridSpec signing_for_box_pattern(int m, int n, const std::map<Box, Sign>& pattern) {
  check_dimensions(m, n);
  GridSpec spec{m, n, {}};
  for (int j = 1; j < n; ++j) {
    bool odd = false;
    for (int r = 2; r <= m; ++r) {
      const auto it = pattern.find(Box{r - 1, j});
      if (it != pattern.end() && it->second == Sign::Minus) odd = !odd;
      if (odd) spec.signing[{EdgeLabel::Kind::Horizontal, r, j}] = Sign::Minus;
    }
  }
  return spec;
}

}  // namespace psg
