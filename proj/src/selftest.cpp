#include "symcap/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "symcap/billiard.hpp"
#include "symcap/capacities.hpp"
#include "symcap/coloring.hpp"
#include "symcap/commutator.hpp"
#include "symcap/counterexample.hpp"
#include "symcap/packing.hpp"
#include "symcap/weyl.hpp"

namespace symcap {

namespace {

Rational random_rational(std::mt19937_64& rng, long max_num = 20, long max_den = 9) {
  std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

template <class F>
CheckResult check(std::string name, F&& body) {
  try {
    std::string detail;
    bool ok = body(detail);
    return {std::move(name), ok, detail};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::vector<CheckResult> core_suite(std::mt19937_64& rng) {
  std::vector<CheckResult> out;
  out.push_back(check("union volume is additive", [&](std::string&) {
    for (int t = 0; t < 200; ++t) {
      std::vector<DomainSpec> ms;
      Rational sum;
      for (int i = 0; i < 1 + t % 4; ++i) {
        auto d = (i % 3 == 0)   ? DomainSpec::ball(random_rational(rng))
                 : (i % 3 == 1) ? DomainSpec::ellipsoid(random_rational(rng), random_rational(rng))
                                : DomainSpec::polydisk(random_rational(rng), random_rational(rng));
        sum += volume(d);
        ms.push_back(d);
      }
      if (volume(DomainSpec::disjoint_union(ms)) != sum) return false;
    }
    return true;
  }));
  out.push_back(check("ball volume equals round ellipsoid volume", [&](std::string&) {
    for (int t = 0; t < 200; ++t) {
      Rational a = random_rational(rng);
      if (volume(DomainSpec::ball(a)) != volume(DomainSpec::ellipsoid(a, a))) return false;
    }
    return true;
  }));
  out.push_back(check("text form round trips", [&](std::string& d) {
    auto s = DomainSpec::parse("U[P(3/2,1),U[B(1),E(1,2)]]");
    d = s.str();
    return DomainSpec::parse(s.str()) == s && s.str() == "U[E(1,2),P(3/2,1),B(1)]";
  }));
  return out;
}

std::vector<CheckResult> capacities_suite(std::mt19937_64& rng) {
  std::vector<CheckResult> out;
  out.push_back(check("ball closed form matches enumeration", [&](std::string&) {
    for (int t = 0; t < 5; ++t) {
      Rational a = random_rational(rng);
      auto e = capacities_ellipsoid(a, a, 2000);
      for (std::uint64_t k = 0; k <= 2000; ++k)
        if (capacities_ball_closed_form(a, k) != e.values[k]) return false;
    }
    return true;
  }));
  out.push_back(check("sequences nondecreasing from zero", [&](std::string&) {
    for (int t = 0; t < 10; ++t) {
      for (const auto& s : {capacities_ellipsoid(random_rational(rng), random_rational(rng), 300),
                            capacities_polydisk(random_rational(rng), random_rational(rng), 300)}) {
        if (s.values[0] != Rational(0)) return false;
        for (std::size_t k = 1; k < s.values.size(); ++k)
          if (s.values[k] < s.values[k - 1]) return false;
      }
    }
    return true;
  }));
  out.push_back(check("ellipsoid capacities scale linearly", [&](std::string&) {
    for (int t = 0; t < 10; ++t) {
      Rational a = random_rational(rng), b = random_rational(rng), l = random_rational(rng);
      auto s = capacities_ellipsoid(a, b, 300), u = capacities_ellipsoid(l * a, l * b, 300);
      for (std::size_t k = 0; k <= 300; ++k)
        if (u.values[k] != l * s.values[k]) return false;
    }
    return true;
  }));
  out.push_back(check("union symmetric and superadditive", [&](std::string&) {
    auto x = capacities_ellipsoid(Rational(1), Rational(3), 200), y = capacities_polydisk(Rational(2), Rational(1), 200);
    std::vector<CapacitySequence> xy{x, y}, yx{y, x};
    auto u = capacities_union(xy, 200), v = capacities_union(yx, 200);
    if (u.values != v.values) return false;
    for (std::size_t k = 0; k <= 100; ++k)
      for (std::size_t l = 0; l <= 100; ++l)
        if (u.values[k + l] < x.values[k] + y.values[l]) return false;
    return true;
  }));
  return out;
}

std::vector<CheckResult> weyl_suite(std::mt19937_64& rng) {
  std::vector<CheckResult> out;
  out.push_back(check("ball windows near -3/2 and -1/2", [&](std::string& d) {
    for (int j = 10; j <= 14; ++j) {
      std::uint64_t lo = 10 * (std::uint64_t{1} << j), hi = 2 * lo;
      auto w = ball_error_extremes(Rational(1), lo, hi);
      if (std::abs(w.inf + 1.5) > 0.02 || std::abs(w.sup + 0.5) > 0.02) {
        d = "window " + std::to_string(lo);
        return false;
      }
    }
    return true;
  }));
  out.push_back(check("greedy partition below sqrt(Vk)", [&](std::string&) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> v;
      for (int i = 0; i < 1 + t % 4; ++i) v.push_back(random_rational(rng));
      auto sweep = partition_sqrt_max_sweep(v, 500);
      Rational V;
      for (auto& x : v) V += x;
      for (std::uint64_t k = 0; k <= 500; ++k)
        if (sweep[k] > std::sqrt(V.to_double() * static_cast<double>(k)) + 1e-9) return false;
    }
    return true;
  }));
  out.push_back(check("pfh residuals bounded", [&](std::string&) {
    for (std::uint64_t d = 1; d <= 10000; ++d) {
      auto r = pfh_bookkeeping({d, 2.0, 1.0, 1, 0});
      if (std::abs(r.r1) > 10 || std::abs(r.r2) > 10) return false;
    }
    return true;
  }));
  return out;
}

std::vector<CheckResult> packing_suite(std::mt19937_64& rng) {
  std::vector<CheckResult> out;
  out.push_back(check("sum of squared weights is ab", [&](std::string&) {
    for (int t = 0; t < 200; ++t) {
      Rational a = random_rational(rng), b = random_rational(rng), s;
      for (const auto& w : weight_sequence(a, b).weights) s += w * w;
      if (s != a * b) return false;
    }
    return true;
  }));
  out.push_back(check("triangle pieces unimodular with exact area", [&](std::string&) {
    for (int t = 0; t < 50; ++t) {
      Rational a = random_rational(rng), b = random_rational(rng), s;
      for (const auto& tr : triangle_decompose(a, b)) {
        if (abs(tr.det()) != 1) return false;
        s += tr.area();
      }
      if (s != a * b / Rational(2)) return false;
    }
    return true;
  }));
  out.push_back(check("embedding ratio below sqrt(a)", [&](std::string&) {
    for (long a : {4, 9}) {
      auto r = embedding_function_lower(Rational(a), 20000);
      if (r.value > std::sqrt(static_cast<double>(a)) * (1 + 1e-9)) return false;
    }
    return true;
  }));
  return out;
}

std::vector<CheckResult> coloring_suite(std::mt19937_64&) {
  std::vector<CheckResult> out;
  out.push_back(check("greedy coloring proper and within degree bound", [&](std::string& d) {
    for (std::uint32_t k = 9; k <= 25; ++k) {
      auto g = interference_graph(k, RotationParam(Rational(1, 4)));
      auto c = color_lattice(g);
      if (!is_proper(g, c) || c.color_count > g.max_degree + 1) {
        d = "k=" + std::to_string(k);
        return false;
      }
    }
    return true;
  }));
  out.push_back(check("wraparound distance", [&](std::string&) {
    Point2 p{Rational(0), Rational(19, 20)}, q{Rational(0), Rational(1, 20)};
    return annulus_distance_squared(p, q) == Rational(1, 100);
  }));
  out.push_back(check("rotations compose additively", [&](std::string&) {
    Point2 p{Rational(1, 3), Rational(2, 7)};
    Rational a(1, 5), b(3, 11);
    return rotate(a, rotate(b, p)) == rotate(a + b, p);
  }));
  return out;
}

BumpTwist default_u() { return {0.5, 1.0 / 6, 0.15, 0.05}; }
BumpTwist default_v() { return {0.575, 1.0 / 6, 0.15, 0.04}; }
SupportRect default_U() { return {Rational(0), Rational(1), Rational(0), Rational(1, 3)}; }

std::vector<CheckResult> rotcheck_suite(std::mt19937_64&) {
  std::vector<CheckResult> out;
  out.push_back(check("identity twists give zero error", [&](std::string&) {
    BumpTwist id;
    auto r = rotation_commutator_check(id, id, default_U(), RotationParam(Rational(1, 3)), {8, 1e-8, 0});
    return r.sup_error <= 1e-12;
  }));
  out.push_back(check("commutator identity holds on a grid", [&](std::string& d) {
    auto r = rotation_commutator_check(default_u(), default_v(), default_U(), RotationParam(Rational(1, 3)), {12, 1e-8, 0});
    d = "sup_error=" + std::to_string(r.sup_error);
    return r.sup_error <= 1e-6 && r.sup_displacement > 1e-4;
  }));
  return out;
}

std::vector<CheckResult> billiard_suite(std::mt19937_64& rng) {
  std::vector<CheckResult> out;
  LagrangianProduct TQ{triangle_T(), square_Q()};
  out.push_back(check("return map is the identity on TxQ", [&](std::string&) {
    for (int t = 0; t < 20; ++t) {
      auto s = sample_generic_start(TQ, {2, 3}, rng);
      if (return_map_check(TQ, s) > 1e-9) return false;
    }
    return true;
  }));
  out.push_back(check("time reversal returns to the start", [&](std::string&) {
    auto s = sample_generic_start(TQ, {2, 3}, rng);
    FlowState x = s;
    for (int i = 0; i < 5; ++i) x = flow_step(TQ, x);
    FlowState y = enter_from_two_face(TQ, x.entered_through, {x.position[0], x.position[1]}, {x.position[2], x.position[3]}, true);
    for (int i = 0; i < 5; ++i) y = flow_step(TQ, y);
    double e = 0;
    for (int i = 0; i < 4; ++i) e = std::max(e, std::abs(y.position[i] - s.position[i]));
    return e < 1e-9;
  }));
  out.push_back(check("ribbon rotation matches a(t1-t0)/b", [&](std::string&) {
    std::uniform_real_distribution<double> th(0, 2 * std::numbers::pi);
    for (int t = 0; t < 20; ++t) {
      double t0 = th(rng), t1 = th(rng);
      if (t0 > t1) std::swap(t0, t1);
      if (t1 - t0 < 1e-3) continue;
      auto r = ribbon_rotation_number(random_rational(rng, 5, 3), random_rational(rng, 5, 3), t0, t1);
      if (circle_distance(r.measured, r.predicted) > 1e-9) return false;
    }
    return true;
  }));
  return out;
}

std::vector<CheckResult> cex_suite(std::mt19937_64&) {
  std::vector<CheckResult> out;
  auto prof = cex::make_profile(1.0);
  out.push_back(check("layout inequalities on [10, 1e5]", [&](std::string&) {
    return cex::feasibility_report(10, 100000).all_pass;
  }));
  out.push_back(check("dual path link value", [&](std::string& d) {
    auto plan = cex::build_link_plan(10000);
    double a = cex::link_spectral_value(plan, prof), b = cex::link_spectral_value_geometric(plan, prof);
    d = std::to_string(a - b);
    return std::abs(a - b) <= 1e-12;
  }));
  out.push_back(check("s_d below proof-chain bound", [&](std::string&) {
    for (const auto& p : cex::divergence_series({10000, 100000, 1000000, 10000000}, prof))
      if (!p.below_bound) return false;
    return true;
  }));
  out.push_back(check("nested bound", [&](std::string&) {
    for (std::uint64_t d : {10000ull, 1000000ull, 100000000ull})
      for (std::uint64_t n = 10; n <= cex::cutoff_N(d); ++n)
        if (!cex::nested_bound_check(n, d, prof).pass) return false;
    return true;
  }));
  return out;
}

}  // namespace

std::vector<CheckResult> selftest(std::string_view module, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (module == "core") return core_suite(rng);
  if (module == "capacities") return capacities_suite(rng);
  if (module == "weyl") return weyl_suite(rng);
  if (module == "packing") return packing_suite(rng);
  if (module == "coloring") return coloring_suite(rng);
  if (module == "rotcheck") return rotcheck_suite(rng);
  if (module == "billiard") return billiard_suite(rng);
  if (module == "cex") return cex_suite(rng);
  throw std::invalid_argument("unknown module " + std::string(module));
}

}  // namespace symcap
