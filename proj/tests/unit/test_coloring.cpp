#include <doctest.h>

#include "symcap/coloring.hpp"

using namespace symcap;

TEST_CASE("distance to half integers") {
  CHECK(RotationParam(Rational(1, 4)).distance_to_half_integers == Rational(1, 4));
  CHECK(RotationParam(Rational(3, 5)).distance_to_half_integers == Rational(1, 10));
  CHECK(RotationParam(Rational(-1, 3)).distance_to_half_integers == Rational(1, 6));
}

TEST_CASE("annulus metric wraps in y") {
  CHECK(annulus_distance_squared({0, Rational(1, 10)}, {0, Rational(9, 10)}) == Rational(1, 25));
  CHECK(rotate(Rational(1, 4), {0, Rational(1, 8)}) == Point2{0, Rational(7, 8)});
}

TEST_CASE("graph at k = 9, alpha = 1/4") {
  auto g = interference_graph(9, RotationParam(Rational(1, 4)));
  CHECK(g.vertex_count() == 90);
  CHECK(g.edge_count() == 1089);
  CHECK(g.max_degree == 26);
  CHECK(g.adjacency[0].size() >= 8);
  auto c = color_lattice(g);
  CHECK(is_proper(g, c));
  CHECK(c.color_count == 18);
}

TEST_CASE("fast graph equals exact pair scan") {
  for (std::uint32_t k : {9u, 12u, 17u}) {
    for (auto a : {Rational(1, 4), Rational(2, 7)}) {
      RotationParam rp(a);
      if (rp.distance_to_half_integers <= Rational(2) / Rational(static_cast<long>(k))) continue;
      auto g = interference_graph(k, rp);
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t w = v + 1; w < g.vertex_count(); ++w) {
          bool fast = std::binary_search(g.adjacency[v].begin(), g.adjacency[v].end(), static_cast<std::uint32_t>(w));
          REQUIRE(fast == interference_edge_exact(k, a, g.lattice.point(v), g.lattice.point(w)));
        }
    }
  }
}

TEST_CASE("hypothesis violation") {
  CHECK_THROWS_AS(interference_graph(4, RotationParam(Rational(1, 4))), HypothesisViolation);
  try {
    interference_graph(8, RotationParam(Rational(1, 4)));
    FAIL("expected violation");
  } catch (const HypothesisViolation& e) {
    CHECK(e.margin == Rational(0));
  }
}
