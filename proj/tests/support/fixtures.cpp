#include "fixtures.hpp"

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "psg/grids.hpp"

namespace psg::testing {

PlaneSignedGraph nine_vertex_graph(const std::vector<std::pair<std::pair<int, int>, Sign>>& negative) {
  const std::vector<Point> points{{3.5, 3.9}, {6, 2}, {5, 0}, {0, 0}, {-1, 2},
                                  {1, 3},     {3, 2.3}, {4, 1.5}, {1.5, 1.5}};
  const std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1},
                                               {5, 9}, {9, 4}, {9, 7}, {7, 6}, {7, 8}, {8, 2},
                                               {8, 3}, {9, 8}, {1, 7}};
  std::vector<SignedEdge> edges;
  for (const auto& [a, b] : pairs) {
    Sign s = Sign::Plus;
    for (const auto& [pair, sign] : negative)
      if ((pair.first == a && pair.second == b) || (pair.first == b && pair.second == a)) s = sign;
    edges.push_back({static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1), s});
  }
  return build_from_drawing(points, edges);
}

LadderFixture ladder_small(bool opposite) {
  // v1..v6 = 0..5, p1 p2 = 6 7, q1 q2 = 8 9.
  const std::vector<Point> points{{0, 2}, {1, 2}, {1, 1}, {1, 0}, {0, 0},
                                  {0, 1}, {-1, 2}, {-1, 0}, {2, 2}, {2, 0}};
  const Sign top = opposite ? Sign::Minus : Sign::Plus;
  const std::vector<SignedEdge> edges{
      {0, 1, top}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 5},
      {6, 0},      {6, 7}, {7, 4}, {8, 1}, {8, 9}, {9, 3}, {6, 5}, {9, 2}};
  LadderFixture fx{build_from_drawing(points, edges), {}};
  fx.config.cycle = {0, 1, 2, 3, 4, 5};
  fx.config.i = 4;
  fx.config.p = {6, 7};
  fx.config.q = {8, 9};
  fx.config.release_left = {fx.graph.edge_between(6, 5)};
  fx.config.release_right = {fx.graph.edge_between(9, 2)};
  return fx;
}

LadderFixture ladder_large(bool opposite) {
  // v1..v8 = 0..7, p1 p2 p3 = 8 9 10, q1 q2 q3 = 11 12 13.
  const std::vector<Point> points{{0, 3},  {1, 3},      {1, 2},  {1, 1},  {1, 0},     {0, 0},  {0, 1},
                                  {0, 2},  {-1, 3},     {-0.5, 1.5}, {-1, 0}, {2, 3}, {1.5, 1.5}, {2, 0}};
  const Sign top = opposite ? Sign::Minus : Sign::Plus;
  const std::vector<SignedEdge> edges{
      {0, 1, top}, {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 6},  {6, 7},  {7, 0},  {2, 7},
      {3, 6},      {8, 0},  {8, 9},  {9, 10}, {10, 5}, {8, 10}, {9, 7},  {9, 6},  {11, 1},
      {11, 12},    {12, 13}, {13, 4}, {11, 13}, {12, 2}, {12, 3}};
  LadderFixture fx{build_from_drawing(points, edges), {}};
  fx.config.cycle = {0, 1, 2, 3, 4, 5, 6, 7};
  fx.config.i = 5;
  fx.config.p = {8, 9, 10};
  fx.config.q = {11, 12, 13};
  fx.config.release_left = {fx.graph.edge_between(8, 10)};
  fx.config.release_right = {fx.graph.edge_between(11, 13)};
  return fx;
}

HexFixture hexagon(std::size_t t, bool opposite) {
  // v1..v4 = 0..3, then r_1..r_t, then p1 p2, then q1 q2.
  std::vector<Point> points{{0, 2}, {2, 2}, {2, 0}, {0, 0}};
  std::vector<VertexId> r;
  for (std::size_t k = 0; k < t; ++k) {
    r.push_back(points.size());
    const double x = t == 1 ? 1.0 : -0.5 + 3.0 * static_cast<double>(k) / static_cast<double>(t - 1);
    points.push_back({x, 1});
  }
  const VertexId p1 = points.size();
  points.push_back({-1.5, 2});
  points.push_back({-1.5, 0});
  const VertexId q1 = points.size();
  points.push_back({3.5, 2});
  points.push_back({3.5, 0});
  const VertexId r1 = r.front();
  const VertexId rt = r.back();

  const Sign top = opposite ? Sign::Minus : Sign::Plus;
  std::vector<SignedEdge> edges{{0, 1, top}, {1, rt}, {rt, 2}, {2, 3}, {3, r1}, {r1, 0}};
  for (std::size_t k = 0; k + 1 < r.size(); ++k) edges.push_back({r[k], r[k + 1]});
  edges.push_back({p1, 0});
  edges.push_back({p1, p1 + 1});
  edges.push_back({p1 + 1, 3});
  edges.push_back({q1, 1});
  edges.push_back({q1, q1 + 1});
  edges.push_back({q1 + 1, 2});
  const VertexId left_target = t == 1 ? 3 : r1;
  const VertexId right_target = t == 1 ? 2 : rt;
  edges.push_back({p1, left_target});
  edges.push_back({q1, right_target});

  HexFixture fx{build_from_drawing(points, edges), {}};
  fx.config = {0, 1, 2, 3, r, {p1, p1 + 1}, {q1, q1 + 1},
               {fx.graph.edge_between(p1, left_target)}, {fx.graph.edge_between(q1, right_target)}};
  return fx;
}

std::vector<NamedGraph> fixture_set() {
  std::vector<NamedGraph> out;
  out.push_back({"grid_3x3", build_grid({3, 3, {}}).graph()});
  out.push_back({"grid_3x4", build_grid({3, 4, {}}).graph()});
  GridSpec mixed{4, 3, {}};
  mixed.signing[{EdgeLabel::Kind::Horizontal, 2, 1}] = Sign::Minus;
  mixed.signing[{EdgeLabel::Kind::Vertical, 1, 2}] = Sign::Minus;
  out.push_back({"grid_4x3_mixed", build_grid(mixed).graph()});
  out.push_back({"trigrid_3x3", build_triangulated_grid({3, 3, {}}, DiagonalPolicy::all_rising()).graph()});
  out.push_back({"trigrid_3x4_falling", build_triangulated_grid({3, 4, {}}, DiagonalPolicy::falling_corner()).graph()});
  out.push_back({"nine_vertex", nine_vertex_graph({{{1, 7}, Sign::Minus}, {{9, 8}, Sign::Minus}})});
  out.push_back({"ladder_10", ladder_small(true).graph});
  out.push_back({"hexagon_t1", hexagon(1, true).graph});
  out.push_back({"hexagon_t3", hexagon(3, true).graph});
  std::mt19937 rng(20261018);
  out.push_back({"outerplane_11", random_outerplane(rng, 11)});
  out.push_back({"two_connected_12", random_two_connected(rng, 6, 12, 3)});
  return out;
}

}  // namespace psg::testing
