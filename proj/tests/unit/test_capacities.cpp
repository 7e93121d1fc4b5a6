#include <doctest.h>

#include "symcap/capacities.hpp"

using namespace symcap;

namespace {

std::vector<std::string> strs(const CapacitySequence& s) {
  std::vector<std::string> v;
  for (const auto& x : s.values) v.push_back(x.str());
  return v;
}

using S = std::vector<std::string>;

}  // namespace

TEST_CASE("ellipsoid sequences") {
  CHECK(strs(capacities(DomainSpec::parse("E(1,2)"), 12)) == S{"0", "1", "2", "2", "3", "3", "4", "4", "4", "5", "5", "5", "6"});
  CHECK(strs(capacities(DomainSpec::parse("E(3/2,1)"), 10)) ==
        S{"0", "1", "3/2", "2", "5/2", "3", "3", "7/2", "4", "4", "9/2"});
  CHECK_THROWS_AS(capacities_ellipsoid(Rational(1), Rational(2), 0), std::invalid_argument);
}

TEST_CASE("polydisk sequences") {
  CHECK(strs(capacities(DomainSpec::parse("P(1,1)"), 12)) == S{"0", "1", "2", "2", "3", "3", "4", "4", "4", "5", "5", "5", "6"});
  CHECK(strs(capacities(DomainSpec::parse("P(3/2,1)"), 10)) ==
        S{"0", "1", "2", "5/2", "7/2", "7/2", "9/2", "9/2", "5", "11/2", "6"});
}

TEST_CASE("union sequences") {
  CHECK(strs(capacities(DomainSpec::parse("U[B(1),E(1,2)]"), 10)) == S{"0", "1", "2", "3", "3", "4", "4", "5", "5", "6", "6"});
  CHECK(strs(capacities(DomainSpec::parse("U[P(1,1),B(2)]"), 10)) == S{"0", "2", "3", "4", "5", "6", "6", "7", "8", "8", "9"});
  CHECK(strs(capacities(DomainSpec::parse("U[B(1),B(1)]"), 12)) == S{"0", "1", "2", "2", "3", "3", "4", "4", "4", "5", "5", "5", "6"});
  std::vector<CapacitySequence> none;
  CHECK_THROWS_AS(capacities_union(none, 3), ValidationError);
  std::vector<CapacitySequence> mism{capacities(DomainSpec::parse("B(1)"), 3), capacities(DomainSpec::parse("B(1)"), 5)};
  CHECK_THROWS_WITH(capacities_union(mism, 5), doctest::Contains("mismatched lengths"));
}

TEST_CASE("ball closed form") {
  CHECK(capacities(DomainSpec::parse("B(1)"), 6).values.back() == Rational(3));
  CHECK(ball_capacity_level(0) == 0);
  CHECK(ball_capacity_level(2) == 1);
  CHECK(ball_capacity_level(3) == 2);
  CHECK(ball_capacity_level(100) == 13);
  CHECK(capacities_ball_closed_form(Rational(3, 2), 5) == Rational(3));
}

TEST_CASE("large index with big rationals") {
  auto s = capacities_ellipsoid(Rational(mpz_class("1000000000000000000000"), 7), Rational(3, 5), 2000);
  for (std::size_t k = 1; k < s.values.size(); ++k) CHECK(s[k - 1] <= s[k]);
  CHECK(s[2000] == Rational(1200));
}

TEST_CASE("embedding obstruction") {
  auto v = embedding_obstruction(DomainSpec::parse("B(2)"), DomainSpec::parse("P(1,1)"), 20);
  REQUIRE(std::holds_alternative<Obstructed>(v));
  auto o = std::get<Obstructed>(v);
  CHECK(o.k == 1);
  CHECK(o.source_value == Rational(2));
  auto ok = embedding_obstruction(DomainSpec::parse("B(1)"), DomainSpec::parse("E(1,2)"), 50);
  CHECK(std::holds_alternative<NoObstructionUpTo>(ok));
}
