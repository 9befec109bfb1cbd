#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "psg/face_dual.hpp"
#include "psg/grids.hpp"
#include "psg/ham_search.hpp"

using namespace psg;

namespace {

using K = EdgeLabel::Kind;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("grid sizes") {
  const auto g34 = build_grid({3, 4, {}});
  CHECK(g34.graph().vertex_count() == 12);
  CHECK(g34.graph().edge_count() == 17);
  CHECK(g34.boxes().size() == 6);

  const auto g22 = build_grid({2, 2, {}});
  CHECK(g22.graph().vertex_count() == 4);
  CHECK(g22.graph().edge_count() == 4);
  CHECK(g22.boxes().size() == 1);

  const auto g46 = build_grid({4, 6, {}});
  CHECK(g46.graph().vertex_count() == 24);
  CHECK(g46.boxes().begin()->first == Box{1, 1});
  CHECK(g46.boxes().rbegin()->first == Box{3, 5});
  CHECK(g46.boxes().size() == 15);

  CHECK(code_of([] { (void)build_grid({1, 4, {}}); }) == ErrorCode::BadDimensions);
}

TEST_CASE("grid naming") {
  const auto grid = build_grid({3, 4, {}});
  CHECK(grid.vertex(1, 1) == 0);
  CHECK(grid.vertex(2, 3) == 6);
  CHECK(grid.coords(6) == std::pair{2, 3});
  CHECK(grid.edge({K::Horizontal, 1, 1}) == 0);
  CHECK(grid.edge({K::Horizontal, 3, 3}) == 8);
  CHECK(grid.edge({K::Vertical, 1, 1}) == 9);
  for (EdgeId e : grid.graph().edges()) CHECK(grid.edge(grid.label(e)) == e);
  const auto [u, v] = grid.graph().endpoints(grid.edge({K::Vertical, 2, 4}));
  CHECK(u == grid.vertex(2, 4));
  CHECK(v == grid.vertex(3, 4));
  CHECK(code_of([&] { (void)grid.edge({K::Horizontal, 1, 4}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { (void)grid.vertex(0, 1); }) == ErrorCode::OutOfRange);

  for (const auto& [box, f] : grid.boxes()) {
    auto corners = grid.graph().face_vertices(f);
    std::sort(corners.begin(), corners.end());
    std::vector<VertexId> expected{grid.vertex(box.i, box.j), grid.vertex(box.i, box.j + 1),
                                   grid.vertex(box.i + 1, box.j), grid.vertex(box.i + 1, box.j + 1)};
    std::sort(expected.begin(), expected.end());
    CHECK(corners == expected);
    CHECK(grid.face_box(f) == box);
  }
  CHECK_FALSE(grid.face_box(grid.graph().outer_face()));
}

TEST_CASE("signing labels are range checked") {
  GridSpec spec{3, 3, {}};
  spec.signing[{K::Vertical, 3, 1}] = Sign::Minus;
  CHECK(code_of([&] { (void)build_grid(spec); }) == ErrorCode::OutOfRange);
  GridSpec diag{3, 3, {}};
  diag.signing[{K::Diagonal, 1, 1}] = Sign::Minus;
  CHECK(code_of([&] { (void)build_grid(diag); }) == ErrorCode::OutOfRange);
  CHECK(build_triangulated_grid(diag, DiagonalPolicy::all_rising())
            .graph()
            .sign(build_triangulated_grid(diag, DiagonalPolicy::all_rising()).edge({K::Diagonal, 1, 1})) ==
        Sign::Minus);
}

TEST_CASE("triangulated grids") {
  const auto small = build_triangulated_grid({2, 2, {}}, DiagonalPolicy::all_rising());
  CHECK(small.graph().bounded_face_count() == 2);

  const auto falling = build_triangulated_grid({3, 3, {}}, DiagonalPolicy::falling_corner());
  const auto& g = falling.graph();
  CHECK(g.bounded_face_count() == 8);
  for (FaceId f : g.bounded_faces()) CHECK(g.walk(f).length() == 3);
  const auto [a, b] = g.endpoints(falling.edge({K::Diagonal, 1, 1}));
  CHECK(std::minmax(a, b) == std::minmax(falling.vertex(2, 1), falling.vertex(1, 2)));
  const auto [c, d] = g.endpoints(falling.edge({K::Diagonal, 2, 2}));
  CHECK(std::minmax(c, d) == std::minmax(falling.vertex(2, 2), falling.vertex(3, 3)));

  const auto cut = g.delete_edge(falling.edge({K::Horizontal, 3, 2})).graph;
  CHECK(enumerate_hamiltonian(cut).circles.size() == 1);
}

TEST_CASE("parity obstruction") {
  CHECK(parity_obstruction(3, 3));
  CHECK(enumerate_hamiltonian(build_grid({3, 3, {}}).graph()).circles.empty());
  CHECK(parity_obstruction(5, 5));
  CHECK(enumerate_hamiltonian(build_grid({5, 5, {}}).graph()).circles.empty());
  for (int n = 2; n <= 7; ++n) CHECK_FALSE(parity_obstruction(4, n));
  CHECK(parity_obstruction(3, 5));
  CHECK_FALSE(parity_obstruction(3, 4));
}

TEST_CASE("box signs") {
  GridSpec spec{3, 3, {}};
  CHECK(box_sign(spec, {1, 1}) == Sign::Plus);
  spec.signing[{K::Horizontal, 1, 1}] = Sign::Minus;
  CHECK(box_sign(spec, {1, 1}) == Sign::Minus);
  spec.signing[{K::Vertical, 1, 2}] = Sign::Minus;
  CHECK(box_sign(spec, {1, 1}) == Sign::Plus);
  CHECK(box_sign(spec, {1, 2}) == Sign::Minus);
  CHECK(code_of([&] { (void)box_sign(spec, {3, 1}); }) == ErrorCode::OutOfRange);

  const auto grid = build_grid(spec);
  for (const auto& [box, f] : grid.boxes()) CHECK(box_sign(spec, box) == face_sign(grid.graph(), f));
}

TEST_CASE("box patterns are realized exactly") {
  std::mt19937 rng(31);
  for (int k = 0; k < 100; ++k) {
    const int m = 2 + k % 4;
    const int n = 2 + (k / 4) % 5;
    std::map<Box, Sign> pattern;
    for (int i = 1; i < m; ++i)
      for (int j = 1; j < n; ++j)
        if (std::bernoulli_distribution(0.5)(rng)) pattern[{i, j}] = Sign::Minus;
    const auto spec = signing_for_box_pattern(m, n, pattern);
    for (int i = 1; i < m; ++i)
      for (int j = 1; j < n; ++j) {
        const auto it = pattern.find({i, j});
        CHECK(box_sign(spec, {i, j}) == (it == pattern.end() ? Sign::Plus : Sign::Minus));
      }
  }
}

TEST_CASE("all-same-sign decision against the census") {
  const auto check = [](const std::map<Box, Sign>& pattern, bool expected) {
    const auto spec = signing_for_box_pattern(4, 4, pattern);
    CHECK(all_same_sign_decision(spec) == expected);
    const auto census = sign_census(build_grid(spec).graph());
    CHECK(census.both_signs() == !expected);
  };
  check({}, true);
  check({{Box{2, 1}, Sign::Minus}}, false);
  check({{Box{1, 1}, Sign::Minus}}, true);
  check({{Box{3, 3}, Sign::Minus}, {Box{1, 3}, Sign::Minus}}, true);

  CHECK(code_of([] { (void)all_same_sign_decision(GridSpec{5, 4, {}}); }) == ErrorCode::BadPreconditions);
  CHECK(code_of([] { (void)all_same_sign_decision(GridSpec{4, 3, {}}); }) == ErrorCode::BadPreconditions);
  CHECK(all_same_sign_decision(GridSpec{5, 4, {}}, SameSignForm::Swapped));
}

TEST_CASE("corner boxes") {
  CHECK(Box{1, 1}.is_corner(4, 5));
  CHECK(Box{3, 4}.is_corner(4, 5));
  CHECK_FALSE(Box{2, 1}.is_corner(4, 5));
  CHECK_FALSE(Box{1, 2}.is_corner(4, 5));
}
