#include <doctest.h>

#include <numbers>

#include "symcap/billiard.hpp"

using namespace symcap;

TEST_CASE("polygons") {
  auto T = triangle_T();
  CHECK(T.size() == 3);
  CHECK(T.label(2) == "t_l");
  CHECK(T.normal(2)[0] == doctest::Approx(-1.0));
  CHECK_THROWS(ConvexPolygon({{0, 0}, {0, 1}, {1, 0}}));
  CHECK_THROWS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}}));
}

TEST_CASE("lagrangian 2-faces of TxQ") {
  LagrangianProduct P{triangle_T(), square_Q()};
  std::vector<std::string> lag;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (is_lagrangian(P, {i, j})) lag.push_back(two_face_name(P, {i, j}));
  CHECK(lag == std::vector<std::string>{"t_bxq_r", "t_bxq_l", "t_lxq_b", "t_lxq_t"});
}

TEST_CASE("itinerary on TxQ") {
  LagrangianProduct P{triangle_T(), square_Q()};
  auto s = enter_from_two_face(P, {2, 3}, {0, 0.7}, {0, 0.4});
  auto it = face_itinerary(P, s);
  CHECK(it.states.size() == 9);
  CHECK(it.two_faces.size() == 8);
  CHECK(it.states.back().position[1] == doctest::Approx(0.7));
  CHECK(it.states[3].position[2] == doctest::Approx(0.6));
  CHECK(return_map_check(P, s) < 1e-12);
}

TEST_CASE("corner hits are errors") {
  LagrangianProduct P{triangle_T(), square_Q()};
  auto s = enter_from_two_face(P, {2, 3}, {0, 0.5}, {0, 1});
  CHECK_THROWS_WITH_AS(face_itinerary(P, s), "trajectory hits a corner", FlowError);
  auto z = enter_from_two_face(P, {2, 3}, {0, 0}, {0, 0.5});
  CHECK_THROWS_AS(face_itinerary(P, z), FlowError);
}

TEST_CASE("ribbon rotation") {
  auto r = ribbon_rotation_number(Rational(2), Rational(3), 0.1, 2.0);
  CHECK(r.predicted == doctest::Approx(2.0 * 1.9 / 3.0));
  CHECK(circle_distance(r.measured, r.predicted) < 1e-12);
  CHECK(circle_distance(0.1, 2 * std::numbers::pi - 0.1) == doctest::Approx(0.2));
}
