#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "psg/face_dual.hpp"
#include "psg/grids.hpp"
#include "psg/local_configs.hpp"
#include "psg/plane_graph.hpp"

namespace psg {

/// `psg 1` text format:
///
///     psg 1
///     vertex <id> : <neighbour> <neighbour> ...   # counterclockwise
///     edge <u> <v> [+|-]                          # default +
///     outer : <v0> <v1> ... <v0>                  # outer face walk, traced order
///
/// `#` starts a comment. Vertex ids must be 0..n-1. Errors carry the line
/// number in Error::step().
GraphSpec parse_graph_spec(std::string_view text);
PlaneSignedGraph parse_graph(std::string_view text);
std::string serialize(const PlaneSignedGraph& graph);

/// One edge per line as "u v".
std::vector<EdgeId> parse_edge_sequence(std::string_view text, const PlaneSignedGraph& graph);
/// One box per line as "[i,j]".
std::vector<Box> parse_box_sequence(std::string_view text);
/// Lines "h i j +|-", "v i j +|-", "d i j +|-".
std::map<EdgeLabel, Sign> parse_signing(std::string_view text);

/// Flat "key=value" lines. Vertex lists are comma separated; edge lists take
/// "e<id>" or "u-v" items. Ladder keys: C, i, p, q, EL, ER. Hexagon keys:
/// v1, v2, v3, v4, r, p, q, EL, ER.
std::map<std::string, std::string> parse_key_values(std::string_view text);
LadderConfig parse_ladder_config(std::string_view text, const PlaneSignedGraph& graph);
HexConfig parse_hex_config(std::string_view text, const PlaneSignedGraph& graph);

/// DOT with sign labels; negative edges dashed.
std::string to_dot(const PlaneSignedGraph& graph, const std::map<VertexId, std::string>& names = {});

std::string join_vertices(const std::vector<VertexId>& vertices);

}  // namespace psg
