#include <doctest.h>

#include <cmath>

#include "symcap/weyl.hpp"

using namespace symcap;

TEST_CASE("ball error terms") {
  auto s = error_terms(DomainSpec::parse("B(1)"), 1, 100);
  CHECK(s.entries[0].error == doctest::Approx(-0.41421356237309515).epsilon(1e-12));
  CHECK(s.entries[1].error == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s.entries[9].error == doctest::Approx(-0.4721359549995796).epsilon(1e-12));
  CHECK(s.entries[99].error == doctest::Approx(-1.142135623730951).epsilon(1e-12));
  CHECK(s.volume == Rational(1, 2));
}

TEST_CASE("ball window extremes") {
  auto w = ball_error_extremes(Rational(1), 1, 1000);
  CHECK(w.inf == doctest::Approx(-1.4747119158741713).epsilon(1e-12));
  CHECK(w.argmin == 989);
  CHECK(w.sup == doctest::Approx(-0.41421356237309503).epsilon(1e-12));
  CHECK_THROWS(ball_error_extremes(Rational(1), 0, 10));
  CHECK_THROWS(ball_error_extremes(Rational(1), 10, 5));
}

TEST_CASE("greedy partition") {
  auto r = partition_sqrt_max({{Rational(1), Rational(2), Rational(3)}, 10});
  CHECK(r.allocation == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(r.value == doctest::Approx(7.7366866513636907).epsilon(1e-12));
  CHECK(r.upper_bound == doctest::Approx(std::sqrt(60.0)));
  auto sweep = partition_sqrt_max_sweep({Rational(1), Rational(2), Rational(3)}, 10);
  CHECK(sweep[10] == doctest::Approx(r.value).epsilon(1e-14));
  auto tie = partition_sqrt_max({{Rational(1), Rational(1)}, 1});
  CHECK(tie.allocation == std::vector<std::uint64_t>{1, 0});
}

TEST_CASE("step 4 inner infimum") {
  auto in = step4_inner_inf(Rational(1), Rational(1), 0);
  CHECK(in.value == 0.0);
  auto r = step4_inf_bound(Rational(2), Rational(5), 1, 100000);
  CHECK(r.sup == doctest::Approx(0.0043057135486692464).epsilon(1e-10));
  CHECK(r.last_decade_variation < 1e-3);
  auto r11 = step4_inf_bound(Rational(1), Rational(1), 1, 10000);
  CHECK(std::abs(r11.sup) < 1e-12);
}

TEST_CASE("pfh bookkeeping") {
  auto r = pfh_bookkeeping({10, 2, 1, 1, 0});
  CHECK(r.n == 18);
  CHECK(r.k == 198);
  CHECK(r.r1 == doctest::Approx(-0.20050251573520181).epsilon(1e-12));
  CHECK(r.r2 == doctest::Approx(-2.0));
  CHECK_THROWS(pfh_bookkeeping({1, 2, 1, 1, 5}));
  CHECK_THROWS(pfh_bookkeeping({10, 0, 1, 1, 0}));
  CHECK_THROWS(pfh_bookkeeping({10, 2, 1, 0, 0}));
}
