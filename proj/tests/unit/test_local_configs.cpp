#include <doctest.h>

#include <algorithm>
#include <functional>

#include "fixtures.hpp"
#include "psg/face_dual.hpp"
#include "psg/grids.hpp"
#include "psg/ham_search.hpp"
#include "psg/local_configs.hpp"

using namespace psg;

namespace {

bool oracle_knows(const PlaneSignedGraph& g, const Circle& c) {
  const auto all = enumerate_hamiltonian(g).circles;
  return std::find(all.begin(), all.end(), c) != all.end();
}

std::string invalid_clause(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidConfig);
    return e.what();
  }
  FAIL("no error raised");
  return {};
}

Circle box_circle(const PlaneSignedGraph& g, FaceId f) {
  return Circle::from_vertices(g, g.face_vertices(f));
}

}  // namespace

TEST_CASE("toggle basics") {
  const auto grid = build_grid({2, 4, {}});
  const auto& g = grid.graph();
  const auto outer = outer_boundary_circle(g);
  const auto same = toggle(g, outer, {});
  CHECK(same.circle == outer);
  CHECK(same.sign_relation == Sign::Plus);

  // Cutting the middle box out splits the boundary into two circles.
  const std::vector<Circle> middle{box_circle(g, grid.box_face({1, 2}))};
  try {
    (void)toggle(g, outer, middle);
    FAIL("expected NotHamiltonianAfterToggle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHamiltonianAfterToggle);
  }
  const std::vector<Circle> corner{box_circle(g, grid.box_face({1, 1}))};
  CHECK_THROWS_AS(toggle(g, outer, corner), Error);
}

TEST_CASE("toggle sign law on grid circles") {
  GridSpec spec{4, 5, {}};
  spec.signing[{EdgeLabel::Kind::Horizontal, 2, 2}] = Sign::Minus;
  spec.signing[{EdgeLabel::Kind::Vertical, 1, 4}] = Sign::Minus;
  const auto grid = build_grid(spec);
  const auto& g = grid.graph();
  std::size_t valid = 0;
  for (const auto& c : enumerate_hamiltonian(g).circles)
    for (const auto& [b1, f1] : grid.boxes())
      for (const auto& [b2, f2] : grid.boxes()) {
        if (!(b1 < b2)) continue;
        const std::vector<Circle> cycles{box_circle(g, f1), box_circle(g, f2)};
        try {
          const auto r = toggle(g, c, cycles);
          ++valid;
          CHECK(r.sign_relation == circle_sign(g, cycles[0]) * circle_sign(g, cycles[1]));
          CHECK(circle_sign(g, r.circle) == circle_sign(g, c) * r.sign_relation);
          CHECK(oracle_knows(g, r.circle));
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::NotHamiltonianAfterToggle);
        }
      }
  CHECK(valid > 0);
}

TEST_CASE("ladder certification") {
  for (auto make : {testing::ladder_small, testing::ladder_large}) {
    const auto fx = make(true);
    const auto pair = certify_ladder(fx.graph, fx.config);
    REQUIRE(pair);
    CHECK(circle_sign(fx.graph, pair->c1) != circle_sign(fx.graph, pair->c2));
    CHECK(circle_sign(fx.graph, pair->first) == -circle_sign(fx.graph, pair->second));
    CHECK(oracle_knows(fx.graph, pair->first));
    CHECK(oracle_knows(fx.graph, pair->second));
    const std::vector<Circle> cycles{pair->c1, pair->c2};
    CHECK(toggle(fx.graph, pair->first, cycles).circle == pair->second);

    const auto same = make(false);
    CHECK_FALSE(certify_ladder(same.graph, same.config));
  }
  CHECK(testing::ladder_small(true).graph.vertex_count() == 10);
  CHECK(testing::ladder_large(true).graph.vertex_count() == 14);
}

TEST_CASE("ladder setup clauses") {
  const auto fx = testing::ladder_large(true);
  const auto& g = fx.graph;

  auto cfg = fx.config;
  cfg.release_left.push_back(g.edge_between(8, 0));
  CHECK(invalid_clause([&] { (void)certify_ladder(g, cfg); }).find("fixed edge") != std::string::npos);

  cfg = fx.config;
  cfg.release_left.clear();
  CHECK(invalid_clause([&] { (void)certify_ladder(g, cfg); }).find("not exterior") != std::string::npos);

  cfg = fx.config;
  cfg.q.pop_back();
  CHECK(invalid_clause([&] { (void)certify_ladder(g, cfg); }).find("cover") != std::string::npos);

  cfg = fx.config;
  cfg.i = 3;
  CHECK(invalid_clause([&] { (void)certify_ladder(g, cfg); }).find("index i") != std::string::npos);

  cfg = fx.config;
  cfg.release_right.push_back(g.edge_between(2, 7));
  CHECK(invalid_clause([&] { (void)certify_ladder(g, cfg); }).find("ladder edge") != std::string::npos);

  cfg = fx.config;
  cfg.release_left.push_back(g.edge_between(9, 10));
  CHECK(invalid_clause([&] { (void)certify_ladder(g, cfg); }).find("2-connected") != std::string::npos);
}

TEST_CASE("hexagon certification") {
  for (std::size_t t : {1, 2, 3}) {
    CAPTURE(t);
    const auto fx = testing::hexagon(t, true);
    const auto pair = certify_hexagon(fx.graph, fx.config);
    REQUIRE(pair);
    const Sign s1 = circle_sign(fx.graph, pair->first);
    const Sign s2 = circle_sign(fx.graph, pair->second);
    CHECK(s1 == -s2);
    CHECK(s1 * s2 == circle_sign(fx.graph, pair->c1) * circle_sign(fx.graph, pair->c2));
    CHECK(oracle_knows(fx.graph, pair->first));
    CHECK(oracle_knows(fx.graph, pair->second));

    const auto plus = testing::hexagon(t, false);
    CHECK_FALSE(certify_hexagon(plus.graph, plus.config));
  }
  CHECK(testing::hexagon(1, true).graph.vertex_count() == 9);
}

TEST_CASE("hexagon setup clauses") {
  const auto fx = testing::hexagon(3, true);
  const auto& g = fx.graph;
  auto cfg = fx.config;
  cfg.release_left.push_back(g.edge_between(cfg.v1, cfg.r.front()));
  CHECK(invalid_clause([&] { (void)certify_hexagon(g, cfg); }).find("fixed edge") != std::string::npos);

  cfg = fx.config;
  std::swap(cfg.v3, cfg.v4);
  CHECK_FALSE(invalid_clause([&] { (void)certify_hexagon(g, cfg); }).empty());

  cfg = fx.config;
  cfg.r = {cfg.r.front(), cfg.r.back()};
  CHECK_FALSE(invalid_clause([&] { (void)certify_hexagon(g, cfg); }).empty());
}

TEST_CASE("greedy release search") {
  const auto fx = testing::ladder_large(true);
  const auto& g = fx.graph;
  std::vector<EdgeId> protect;
  for (auto [a, b] : std::vector<std::pair<VertexId, VertexId>>{
           {8, 0}, {0, 7}, {7, 6}, {6, 5}, {5, 10}, {11, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 13},
           {0, 1}, {4, 5}, {2, 7}, {3, 6}})
    protect.push_back(g.edge_between(a, b));
  const std::vector<VertexId> targets{8, 9, 10, 11, 12, 13};
  const auto found = find_release_set(g, protect, targets);
  REQUIRE(found);
  auto cfg = fx.config;
  cfg.release_left = *found;
  cfg.release_right.clear();
  CHECK(certify_ladder(g, cfg));
}
