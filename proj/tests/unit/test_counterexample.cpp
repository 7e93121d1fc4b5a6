#include <doctest.h>

#include <cmath>
#include <numbers>

#include "symcap/counterexample.hpp"

using namespace symcap;
using namespace symcap::cex;

TEST_CASE("profile") {
  auto p = make_profile(1.0);
  CHECK(p.integral_f == doctest::Approx(0.012681121611276).epsilon(1e-12));
  CHECK(chi(0) == doctest::Approx(1.0));
  CHECK(chi(1) == 0.0);
  CHECK(p.f(0.1) == 0.0);
}

TEST_CASE("radii and layout") {
  CHECK(disk_radius(10) == doctest::Approx(0.018861169701161386));
  CHECK(inner_radius(10) == doctest::Approx(0.86858896380650352));
  CHECK(outer_radius(10) == doctest::Approx(0.91023922662683732));
  auto L = layout(10, 30);
  CHECK(L.rings.size() == 21);
  auto c = L.rings[0].center(3);
  CHECK(std::hypot(c[0], c[1]) == doctest::Approx(L.rings[0].mid_radius));
}

TEST_CASE("feasibility rows") {
  auto r = feasibility_row(10);
  CHECK(static_cast<double>(r.width_margin) == doctest::Approx(0.0039279234180109521).epsilon(1e-10));
  CHECK(r.pass);
  CHECK(feasibility_report(10, 1000).all_pass);
  CHECK_THROWS(feasibility_report(5, 100));
}

TEST_CASE("cutoff and link plan") {
  CHECK(cutoff_N(10000) == 14);
  CHECK(cutoff_N(1000) == 9);
  auto plan = build_link_plan(1000000);
  CHECK(plan.N == cutoff_N(1000000));
  auto p = make_profile(1.0);
  CHECK(std::abs(link_spectral_value(plan, p) - link_spectral_value_geometric(plan, p)) <= 1e-12);
}

TEST_CASE("volume") {
  auto p = make_profile(1.0);
  CHECK(xh_volume(p, 1e-10) == doctest::Approx(4.9348060489758367).epsilon(1e-10));
  CHECK(xh_volume(make_profile(0.0), 1e-10) == doctest::Approx(std::numbers::pi * std::numbers::pi / 2));
  CHECK(hamiltonian_integral(make_profile(2.0), 1e-10) == doctest::Approx(2 * hamiltonian_integral(p, 1e-10)));
}

TEST_CASE("divergence and residuals") {
  auto p = make_profile(1.0);
  auto pts = divergence_series({10000, 100000, 1000000}, p);
  CHECK(pts[0].s_d == doctest::Approx(-0.012249936836774878).epsilon(1e-9));
  CHECK(pts[2].s_d == doctest::Approx(-0.8143154113591573).epsilon(1e-9));
  auto c = error_chain_residuals(100, p);
  CHECK(c.i_d + c.j_d == c.k_d);
  CHECK(c.residual == doctest::Approx(3.110175143826039).epsilon(1e-9));
}

TEST_CASE("line fit") {
  auto f = fit_line({0, 1, 2, 3}, {1, 3, 5, 7});
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.r2 == doctest::Approx(1.0));
}
