#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "psg/plane_graph.hpp"

namespace psg {

/// Grid edge names: h(i,j) joins (i,j)-(i,j+1), v(i,j) joins (i,j)-(i+1,j),
/// d(i,j) is the diagonal added to box [i,j] of a triangulated grid. Rows i
/// count from the bottom, columns j from the left, both from 1.
struct EdgeLabel {
  enum class Kind { Horizontal, Vertical, Diagonal };
  Kind kind = Kind::Horizontal;
  int i = 1;
  int j = 1;

  auto operator<=>(const EdgeLabel&) const = default;
  std::string str() const;
};

struct Box {
  int i = 1;
  int j = 1;

  auto operator<=>(const Box&) const = default;
  bool is_corner(int m, int n) const { return (i == 1 || i == m - 1) && (j == 1 || j == n - 1); }
};

/// Dimensions plus a signing; labels missing from `signing` are positive.
struct GridSpec {
  int m = 2;
  int n = 2;
  std::map<EdgeLabel, Sign> signing;

  Sign sign_of(const EdgeLabel& label) const;
};

enum class Diagonal {
  Rising,   ///< (i,j)-(i+1,j+1)
  Falling,  ///< (i+1,j)-(i,j+1)
};

struct DiagonalPolicy {
  Diagonal fallback = Diagonal::Rising;
  std::map<Box, Diagonal> overrides;

  Diagonal at(const Box& box) const;
  static DiagonalPolicy all_rising() { return {}; }
  /// Rising everywhere except box [1,1].
  static DiagonalPolicy falling_corner() { return {Diagonal::Rising, {{Box{1, 1}, Diagonal::Falling}}}; }
};

/// A grid embedding with the vertex, edge and box naming attached.
class GridGraph {
 public:
  int rows() const { return m_; }
  int cols() const { return n_; }
  const PlaneSignedGraph& graph() const { return graph_; }

  VertexId vertex(int i, int j) const;
  std::pair<int, int> coords(VertexId v) const;
  EdgeId edge(const EdgeLabel& label) const;
  EdgeLabel label(EdgeId e) const;
  bool has_label(const EdgeLabel& label) const { return edge_ids_.contains(label); }
  /// Only for untriangulated grids.
  FaceId box_face(const Box& box) const;
  std::optional<Box> face_box(FaceId f) const;
  const std::map<Box, FaceId>& boxes() const { return box_faces_; }

 private:
  friend GridGraph build_grid(const GridSpec& spec);
  friend GridGraph build_triangulated_grid(const GridSpec& spec, const DiagonalPolicy& policy);

  GridGraph(int m, int n, PlaneSignedGraph graph) : m_(m), n_(n), graph_(std::move(graph)) {}

  int m_;
  int n_;
  PlaneSignedGraph graph_;
  std::map<EdgeLabel, EdgeId> edge_ids_;
  std::map<EdgeId, EdgeLabel> labels_;
  std::map<Box, FaceId> box_faces_;
};

GridGraph build_grid(const GridSpec& spec);
GridGraph build_triangulated_grid(const GridSpec& spec, const DiagonalPolicy& policy);

/// True iff the grid has an odd number (m-2)(n-2) of interior vertices.
bool parity_obstruction(int m, int n);

Sign box_sign(const GridSpec& spec, const Box& box);

enum class SameSignForm {
  Stated,   ///< m even, m,n > 3
  Swapped,  ///< n even, m,n > 3 (experimental, not a proven statement)
};

/// True iff all non-corner boxes carry the same sign.
bool all_same_sign_decision(const GridSpec& spec, SameSignForm form = SameSignForm::Stated);

/// Edge signing of an m x n grid whose box signs equal `pattern` (missing
/// boxes positive). Horizontal edge h(r,j) is negative iff an odd number of
/// boxes [1..r-1, j] are negative, so each box sees exactly its own flip.
GridSpec signing_for_box_pattern(int m, int n, const std::map<Box, Sign>& pattern);

}  // namespace psg
