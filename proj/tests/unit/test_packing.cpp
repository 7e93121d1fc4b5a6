#include <doctest.h>

#include "symcap/capacities.hpp"
#include "symcap/packing.hpp"

using namespace symcap;

TEST_CASE("weight sequences") {
  auto w = weight_sequence(Rational(5), Rational(3));
  CHECK(w.weights == std::vector<Rational>{3, 2, 1, 1});
  auto v = weight_sequence(Rational(13, 4), Rational(1));
  CHECK(v.weights == std::vector<Rational>{1, 1, 1, Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)});
  Rational s = 0;
  for (const auto& x : v.weights) s += x * x;
  CHECK(s == Rational(13, 4));
}

TEST_CASE("triangle decomposition of Delta(5,3)") {
  auto t = triangle_decompose(Rational(5), Rational(3));
  REQUIRE(t.size() == 4);
  Rational area = 0;
  for (const auto& tr : t) {
    CHECK(abs(Rational(tr.det(), 1)) == Rational(1));
    area += tr.area();
  }
  CHECK(area == Rational(15, 2));
  std::array<Point2, 3> big{{{0, 0}, {5, 0}, {0, 3}}};
  for (const auto& tr : t)
    for (const auto& p : tr.vertices()) CHECK(triangle_contains(big, p, false));
  CHECK(t[1].anchor == Point2{3, 0});
}

TEST_CASE("ellipsoid embedding function") {
  auto r = embedding_function_lower(Rational(2), 100);
  CHECK(r.ratio == Rational(2));
  CHECK(r.argmax_k == 2);
  auto one = embedding_function_lower(Rational(1), 100);
  CHECK(one.ratio == Rational(1));
  CHECK_THROWS(embedding_function_lower(Rational(1, 2), 10));
}

TEST_CASE("packing estimate") {
  CHECK(packing_number_ball_lower(1, 10).lower_bound == 1.0);
  auto r = packing_number_ball_lower(6, 200);
  CHECK(r.c_hat == Rational(5, 2));
  CHECK(r.lower_bound == doctest::Approx(0.96));
  auto two = packing_number_ball_lower(2, 200);
  CHECK(two.lower_bound == doctest::Approx(0.5));
}
