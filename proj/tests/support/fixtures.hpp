#pragma once

#include <string>
#include <vector>

#include "psg/local_configs.hpp"
#include "psg/plane_graph.hpp"

namespace psg::testing {

/// Nine-vertex graph with an outer hexagon; vertex v_k has id k-1.
PlaneSignedGraph nine_vertex_graph(const std::vector<std::pair<std::pair<int, int>, Sign>>& negative = {});

struct LadderFixture {
  PlaneSignedGraph graph;
  LadderConfig config;
};

struct HexFixture {
  PlaneSignedGraph graph;
  HexConfig config;
};

/// Two-square ladder (s = 6, i = 4) between chains p1 p2 and q1 q2; 10 vertices.
/// `opposite` makes sign(C_1) != sign(C_2).
LadderFixture ladder_small(bool opposite);
/// Three-square ladder (s = 8, i = 5) with hidden middle chain vertices p2, q2
/// that need releasing; 14 vertices.
LadderFixture ladder_large(bool opposite);
/// Hexagon with t = 1 (two triangles), 2 or 3.
HexFixture hexagon(std::size_t t, bool opposite);

/// Named small graphs for oracle and golden checks, all at most 12 vertices.
struct NamedGraph {
  std::string name;
  PlaneSignedGraph graph;
};
std::vector<NamedGraph> fixture_set();

}  // namespace psg::testing
