#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "generators.hpp"
#include "psg/face_dual.hpp"
#include "psg/grids.hpp"
#include "psg/peeling.hpp"

using namespace psg;

namespace {

GridGraph two_negative_grid() {
  return build_grid(signing_for_box_pattern(4, 3, {{Box{3, 1}, Sign::Minus}, {Box{2, 2}, Sign::Minus}}));
}

PlaneSignedGraph polygon(std::size_t n, Sign first = Sign::Plus, std::vector<std::pair<VertexId, VertexId>> chords = {}) {
  std::vector<Point> pts;
  std::vector<SignedEdge> edges;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    pts.push_back({std::cos(a), std::sin(a)});
    edges.push_back({k, (k + 1) % n, k == 0 ? first : Sign::Plus});
  }
  for (const auto& [u, v] : chords) edges.push_back({u, v});
  return build_from_drawing(pts, edges);
}

}  // namespace

TEST_CASE("weak dual of small grids") {
  const auto single = build_grid({2, 2, {}});
  const auto d1 = weak_dual(single.graph());
  CHECK(d1.node_count() == 1);
  CHECK(d1.edge_count() == 0);
  CHECK(d1.is_tree());

  // 3x4 grid: boxes adjacent exactly when they share a side.
  const auto grid = build_grid({3, 4, {}});
  const auto dual = weak_dual(grid.graph());
  CHECK(dual.node_count() == 6);
  for (const auto& [a, fa] : grid.boxes())
    for (const auto& [b, fb] : grid.boxes()) {
      if (!(a < b)) continue;
      const bool side = std::abs(a.i - b.i) + std::abs(a.j - b.j) == 1;
      CHECK(dual.neighbors(fa).contains(fb) == side);
    }
  CHECK(dual.edge_count() == 7);
}

TEST_CASE("face signs of the two-negative-box 4x3 grid") {
  const auto grid = two_negative_grid();
  const auto signs = face_signs(grid.graph());
  int negatives = 0;
  for (const auto& [box, f] : grid.boxes()) {
    const bool marked = box == Box{3, 1} || box == Box{2, 2};
    CHECK((signs.at(f) == Sign::Minus) == marked);
    negatives += signs.at(f) == Sign::Minus;
  }
  CHECK(negatives == 2);
}

TEST_CASE("a shared negative edge flips both faces") {
  GridSpec spec{3, 3, {}};
  spec.signing[{EdgeLabel::Kind::Vertical, 1, 2}] = Sign::Minus;
  const auto grid = build_grid(spec);
  for (const auto& [box, f] : grid.boxes()) {
    const bool touches = box == Box{1, 1} || box == Box{1, 2};
    CHECK((face_sign(grid.graph(), f) == Sign::Minus) == touches);
  }
}

TEST_CASE("outer boundary sign equals the product of bounded face signs") {
  std::mt19937 rng(5);
  const auto base = build_grid({4, 5, {}}).graph();
  for (int k = 0; k < 50; ++k) CHECK(verify_outer_product(testing::random_signing(rng, base)));
  const auto minus_square = polygon(4, Sign::Minus);
  CHECK(verify_outer_product(minus_square));
  CHECK(face_sign(minus_square, minus_square.bounded_faces().front()) == Sign::Minus);
}

TEST_CASE("outerplanarity") {
  CHECK(is_outerplane(polygon(7)));
  CHECK_FALSE(is_outerplane(build_grid({3, 3, {}}).graph()));
  // Fan: path 1..5 with apex 0, all on the outer face.
  CHECK(is_outerplane(polygon(6, Sign::Plus, {{0, 2}, {0, 3}, {0, 4}})));
}

TEST_CASE("unique Hamiltonian circle of outerplane graphs") {
  const auto hex = polygon(6, Sign::Plus, {{0, 3}});
  CHECK(outerplane_unique_hamiltonian(hex) == outer_boundary_circle(hex));
  CHECK(outerplane_unique_hamiltonian(hex).size() == 6);

  const auto grid = build_grid({4, 6, {}});
  const auto residual = apply_coham(grid.graph(), canonical_coham_grid(4, 6).edges).final_graph;
  CHECK(outerplane_unique_hamiltonian(residual) == outer_boundary_circle(residual));

  try {
    (void)outerplane_unique_hamiltonian(build_grid({3, 3, {}}).graph());
    FAIL("expected NotOuterplane");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOuterplane);
  }
}

TEST_CASE("dual tree test") {
  std::mt19937 rng(9);
  for (int k = 0; k < 40; ++k) CHECK(dual_is_tree(testing::random_outerplane(rng, 4 + k % 9)));
  CHECK_FALSE(dual_is_tree(build_grid({3, 3, {}}).graph()));
  CHECK(dual_is_tree(polygon(5)));
}

TEST_CASE("face map values") {
  const auto quad = polygon(4);
  CHECK(face_map(quad).begin()->second == 2);
  const auto tri = polygon(3, Sign::Minus);
  CHECK(face_map(tri).begin()->second == -1);
  const auto hex = polygon(6, Sign::Minus);
  CHECK(face_map(hex).begin()->second == -4);
}

TEST_CASE("removable nodes") {
  const auto grid = two_negative_grid();
  const auto dual = weak_dual(grid.graph());
  const auto removable = removable_vertices(dual);
  const FaceId b21 = grid.box_face({2, 1});
  const FaceId b22 = grid.box_face({2, 2});
  CHECK(dual.label(b22).phi == -2);
  CHECK(dual.label(b22).degree == 3);
  CHECK(dual.label(b21).phi == 2);
  CHECK(dual.label(b21).degree == 3);
  CHECK(removable == std::set<FaceId>{b21, b22});
  // Corner boxes have degree 2 < |phi| + 1.
  CHECK_FALSE(removable.contains(grid.box_face({1, 1})));

  // Triangle with dual degree 2 is removable.
  const auto fan = polygon(5, Sign::Plus, {{0, 2}, {0, 3}});
  const auto fan_dual = weak_dual(fan);
  std::size_t middle_triangles = 0;
  for (FaceId f : fan_dual.nodes())
    if (fan_dual.label(f).degree == 2) {
      ++middle_triangles;
      CHECK(removable_vertices(fan_dual).contains(f));
    }
  CHECK(middle_triangles == 1);
}

TEST_CASE("elimination on the two-negative-box 4x3 grid") {
  const auto grid = two_negative_grid();
  const auto dual = weak_dual(grid.graph());
  const auto trace = eliminate(dual, OrderPolicy::MinPhi);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].face == grid.box_face({2, 2}));
  CHECK(trace.steps[0].phi == -2);
  CHECK(trace.status == EliminationTrace::Status::Tree);
  CHECK(trace.remaining.size() == 5);

  // The candidate set is real: removing box [2,2] is a valid face sequence.
  const std::vector<FaceId> seq{grid.box_face({2, 2})};
  const auto outcome = apply_face_sequence(grid.graph(), seq);
  CHECK(outcome.sequence.final_bounded == trace.remaining);
  CHECK(outcome.sequence.edges.front() == grid.edge({EdgeLabel::Kind::Vertical, 2, 3}));
}

TEST_CASE("elimination on a tree is empty") {
  const auto trace = eliminate(weak_dual(polygon(6, Sign::Plus, {{0, 2}, {0, 4}})), OrderPolicy::FirstFound);
  CHECK(trace.steps.empty());
  CHECK(trace.status == EliminationTrace::Status::Tree);
}

TEST_CASE("elimination policies can disagree") {
  std::mt19937 rng(17);
  bool differed = false;
  for (int k = 0; k < 300 && !differed; ++k) {
    std::map<Box, Sign> pattern;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (std::bernoulli_distribution(0.4)(rng)) pattern[{i, j}] = Sign::Minus;
    const auto dual = weak_dual(build_grid(signing_for_box_pattern(4, 4, pattern)).graph());
    const auto a = eliminate(dual, OrderPolicy::FirstFound);
    const auto b = eliminate(dual, OrderPolicy::MinPhi);
    const auto c = eliminate(dual, OrderPolicy::MaxDegree);
    for (const auto* t : {&a, &b, &c})
      for (std::size_t s = 0; s < t->steps.size(); ++s) CHECK(t->steps[s].degree == static_cast<std::size_t>(std::labs(t->steps[s].phi)) + 1);
    differed = a.remaining != b.remaining || a.remaining != c.remaining;
  }
  CHECK(differed);
}

TEST_CASE("dual DOT") {
  CHECK(to_dot(FaceGraph{}) == "graph dual {\n}\n");
  const auto dot = to_dot(weak_dual(two_negative_grid().graph()));
  CHECK(std::count(dot.begin(), dot.end(), '[') == 6);
  CHECK(dot.find("(-2,3)") != std::string::npos);
  CHECK(dot.find("(2,2)") != std::string::npos);
  CHECK(dot.find("(-2,2)") != std::string::npos);
}
