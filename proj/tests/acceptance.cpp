#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "symcap/billiard.hpp"
#include "symcap/capacities.hpp"
#include "symcap/coloring.hpp"
#include "symcap/commutator.hpp"
#include "symcap/counterexample.hpp"
#include "symcap/packing.hpp"
#include "symcap/weyl.hpp"

using namespace symcap;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... xs) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, xs...);
  return buf;
}

Rational random_positive(std::mt19937_64& rng, long num_max, long den_max) {
  std::uniform_int_distribution<long> n(1, num_max), d(1, den_max);
  return Rational(mpz_class(n(rng)), mpz_class(d(rng)));
}

void criterion1(std::mt19937_64& rng) {
  auto t0 = Clock::now();
  const std::size_t K = 10000;
  bool ok = true;
  std::size_t checked = 0;
  for (int t = 0; t < 20 && ok; ++t) {
    Rational a = random_positive(rng, 50, 17);
    auto s = capacities_ellipsoid(a, a, K);
    for (std::size_t k = 0; k <= K; ++k, ++checked)
      if (capacities_ball_closed_form(a, k) != s[k]) {
        ok = false;
        break;
      }
  }
  double dt = seconds_since(t0);
  report(1, "ball closed form equals ellipsoid enumeration", ok && dt < 30,
         fmt("%zu indices compared, %.2f s", checked, dt));
}

void criterion2() {
  auto t0 = Clock::now();
  auto w = ball_error_extremes(Rational(1), 10000, 1000000);
  double dt = seconds_since(t0);
  bool inf_ok = w.inf >= -1.5 && w.inf <= -1.49;
  bool sup_ok = w.sup >= -0.51 && w.sup <= -0.50;
  report(2, "ball Weyl extremes on [1e4, 1e6]", inf_ok && sup_ok && dt < 10,
         fmt("min %.9f at k=%llu (want [-1.5,-1.49]), max %.9f at k=%llu (want [-0.51,-0.50]), %.2f s", w.inf,
             static_cast<unsigned long long>(w.argmin), w.sup, static_cast<unsigned long long>(w.argmax), dt));
}

void criterion3() {
  auto t0 = Clock::now();
  const std::size_t K = 50000;
  bool ok = true;
  std::string detail;
  for (int copies : {2, 3}) {
    std::vector<DomainSpec> m(copies, DomainSpec::ball(Rational(1)));
    auto spec = DomainSpec::disjoint_union(m);
    auto s = error_terms(spec, 1, K);
    double lower = 0, upper = 0;
    bool finite = true;
    for (const auto& e : s.entries) {
      finite = finite && std::isfinite(e.error);
      (e.k <= K / 2 ? lower : upper) = std::max(e.k <= K / 2 ? lower : upper, std::abs(e.error));
    }
    ok = ok && finite && upper - lower < 0.1;
    detail += fmt("%d balls: sup|e| lower half %.6f, upper half %.6f; ", copies, lower, upper);
  }
  double dt = seconds_since(t0);
  report(3, "union error terms bounded", ok && dt < 120, detail + fmt("%.2f s", dt));
}

// exhaustive optimum by dynamic programming over members
double exhaustive_partition(const std::vector<Rational>& vols, std::uint64_t k) {
  std::vector<double> best(k + 1, 0.0);
  for (std::uint64_t j = 0; j <= k; ++j) best[j] = std::sqrt(vols[0].to_double() * static_cast<double>(j));
  for (std::size_t i = 1; i < vols.size(); ++i) {
    std::vector<double> next(k + 1, -std::numeric_limits<double>::infinity());
    double v = vols[i].to_double();
    for (std::uint64_t j = 0; j <= k; ++j)
      for (std::uint64_t l = 0; l <= j; ++l) next[j] = std::max(next[j], best[j - l] + std::sqrt(v * static_cast<double>(l)));
    best = next;
  }
  return best[k];
}

void criterion4(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> members(1, 4);
  bool exact_ok = true, gap_ok = true;
  double worst_diff = 0, worst_excess = -1e300;
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> vols;
    int n = members(rng);
    for (int i = 0; i < n; ++i) vols.push_back(random_positive(rng, 40, 7));
    auto sweep = partition_sqrt_max_sweep(vols, 200);
    for (std::uint64_t k = 0; k <= 200; ++k) {
      double d = std::abs(sweep[k] - exhaustive_partition(vols, k));
      worst_diff = std::max(worst_diff, d);
      if (d > 1e-9) exact_ok = false;
    }
    if (t % 5) continue;
    double gap100 = 0;
    for (std::uint64_t k = 1; k <= 100; ++k) gap100 = std::max(gap100, floor_allocation_gap({vols, k}));
    Rational V = 0;
    for (const auto& v : vols) V += v;
    auto big = partition_sqrt_max_sweep(vols, 10000);
    for (std::uint64_t k = 0; k <= 10000; ++k) {
      double deficit = std::sqrt(V.to_double() * static_cast<double>(k)) - big[k];
      worst_excess = std::max(worst_excess, deficit - gap100 - 0.5);
      if (deficit < -1e-9 || deficit > gap100 + 0.5) gap_ok = false;
    }
  }
  report(4, "partition greedy optimum and deficit bound", exact_ok && gap_ok,
         fmt("max |greedy - exhaustive| %.3g; max deficit - (gap(100)+0.5) %.4f", worst_diff, worst_excess));
}

void criterion5() {
  bool ok = true;
  std::string detail;
  for (auto [a, b] : {std::pair{1L, 1L}, {1L, 3L}, {2L, 5L}}) {
    auto r = step4_inf_bound(Rational(a), Rational(b), 1, 10000);
    bool finite = std::isfinite(r.sup);
    for (auto [k, s] : r.running_sup) finite = finite && std::isfinite(s);
    ok = ok && finite && r.last_decade_variation < 1e-3;
    detail += fmt("(%ld,%ld) sup %.6g variation %.3g; ", a, b, r.sup, r.last_decade_variation);
  }
  report(5, "step-4 bound stabilizes", ok, detail);
}

void criterion6() {
  bool ok = true;
  std::string detail;
  for (auto [V, A, m, g] : {std::tuple{2.0, 1.0, 1ULL, 0LL}, {std::numbers::pi, std::numbers::pi, 1ULL, 2LL}}) {
    double bound = 5 * std::max(V / A, A), worst = 0;
    for (std::uint64_t d = static_cast<std::uint64_t>(std::max<long long>(g, 1)); d <= 100000; ++d) {
      auto r = pfh_bookkeeping({d, V, A, m, g});
      worst = std::max({worst, std::abs(r.r1), std::abs(r.r2)});
    }
    ok = ok && worst <= bound;
    detail += fmt("(V=%.4g,A=%.4g,g=%lld) max residual %.4f <= %.4f; ", V, A, g, worst, bound);
  }
  report(6, "PFH bookkeeping residuals", ok, detail);
}

void criterion7(std::mt19937_64& rng) {
  bool sums = true;
  for (int t = 0; t < 1000; ++t) {
    Rational a = random_positive(rng, 1000, 97), b = random_positive(rng, 1000, 97);
    Rational s = 0;
    for (const auto& w : weight_sequence(a, b).weights) s += w * w;
    sums = sums && s == a * b;
  }
  auto t0 = Clock::now();
  auto e = embedding_function_lower(Rational(9), 100000);
  double dt = seconds_since(t0);
  bool cfun = e.value >= 2.98 && e.value <= 3 && e.ratio == Rational(3);
  auto p = packing_number_ball_lower(4, 10000);
  bool pk = std::abs(p.lower_bound - 1) <= 1e-6;
  report(7, "weights, embedding function, packing", sums && cfun && pk,
         fmt("sum w^2 = ab on 1000 pairs: %s; c(9) >= %s at k=%llu (%.2f s); p_4 estimate %.9f", sums ? "yes" : "no",
             e.ratio.str().c_str(), static_cast<unsigned long long>(e.argmax_k), dt, p.lower_bound));
}

// independent integer pair scan at alpha = 1/4, coordinates in units of 1/(4k)
bool brute_force_edge(long k, long i1, long j1, long i2, long j2) {
  long M = 4 * k;
  for (int s = -1; s <= 1; ++s)
    for (int t = -1; t <= 1; ++t) {
      long dx = 4 * (i1 - i2);
      long dy = (((4 * j1 - s * k) - (4 * j2 - t * k)) % M + M) % M;
      dy = std::min(dy, M - dy);
      if (dx * dx + dy * dy < 64) return true;
    }
  return false;
}

void criterion8() {
  bool proper = true, brooks = true, edges_match = true;
  std::uint32_t lo_max = 0, hi_max = 0;
  for (std::uint32_t k = 9; k <= 40; ++k) {
    auto g = interference_graph(k, RotationParam(Rational(1, 4)));
    auto c = color_lattice(g);
    std::size_t n = g.vertex_count(), edges = 0;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = v + 1; w < n; ++w)
        if (brute_force_edge(k, v / k, v % k, w / k, w % k)) {
          ++edges;
          if (c.colors[v] == c.colors[w]) proper = false;
        }
    edges_match = edges_match && edges == g.edge_count();
    brooks = brooks && c.color_count <= g.max_degree + 1;
    (k <= 24 ? lo_max : hi_max) = std::max(k <= 24 ? lo_max : hi_max, c.color_count);
  }
  report(8, "lattice coloring at alpha = 1/4, k = 9..40", proper && brooks && edges_match && hi_max <= lo_max,
         fmt("proper %s, edge sets agree %s, colors <= degree+1 %s, max colors k<=24: %u, k>24: %u", proper ? "yes" : "no",
             edges_match ? "yes" : "no", brooks ? "yes" : "no", lo_max, hi_max));
}

void criterion9() {
  BumpTwist u{0.5, 1.0 / 6, 0.15, 0.05}, v{0.575, 1.0 / 6, 0.15, 0.04};
  SupportRect U{Rational(0), Rational(1), Rational(0), Rational(1, 3)};
  RotationParam a(Rational(1, 3));
  auto adaptive = rotation_commutator_check(u, v, U, a, {12, 1e-8, 0});
  std::vector<double> errs;
  for (std::size_t n : {25000, 50000, 100000, 200000}) errs.push_back(rotation_commutator_check(u, v, U, a, {12, 1e-8, n}).sup_error);
  bool halving = true;
  std::string ratios;
  for (std::size_t i = 1; i < errs.size(); ++i) {
    double r = errs[i - 1] / errs[i];
    halving = halving && r >= 1.6 && r <= 2.4;
    ratios += fmt("%.4f ", r);
  }
  report(9, "commutator identity", adaptive.sup_error <= 1e-6 && halving,
         fmt("sup error %.3g at tol 1e-8 (|[u,v]z - z| up to %.3g); error ratios under step halving %s", adaptive.sup_error,
             adaptive.sup_displacement, ratios.c_str()));
}

void criterion10(std::mt19937_64& rng) {
  LagrangianProduct P{triangle_T(), square_Q()};
  std::vector<TwoFace> symplectic;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!is_lagrangian(P, {i, j})) symplectic.push_back({i, j});
  std::uniform_int_distribution<std::size_t> pick(0, symplectic.size() - 1);
  double worst = 0;
  bool eight = true;
  for (int t = 0; t < 100; ++t) {
    auto s = sample_generic_start(P, symplectic[pick(rng)], rng);
    worst = std::max(worst, return_map_check(P, s));
    eight = eight && face_itinerary(P, s).two_faces.size() == 8;
  }
  std::uniform_real_distribution<double> th(0, 2 * std::numbers::pi);
  double ribbon = 0;
  for (int t = 0; t < 50; ++t) {
    double t0 = th(rng), t1 = th(rng);
    if (t0 > t1) std::swap(t0, t1);
    auto r = ribbon_rotation_number(random_positive(rng, 9, 4), random_positive(rng, 9, 4), t0, t1);
    ribbon = std::max(ribbon, circle_distance(r.measured, r.predicted));
  }
  report(10, "Minkowski billiard on TxQ and ribbon rotation", worst < 1e-9 && eight && ribbon <= 1e-9,
         fmt("max return displacement %.3g, 8 two-faces per orbit %s, max ribbon deviation %.3g", worst, eight ? "yes" : "no",
             ribbon));
}

void criterion11() {
  auto rep = cex::feasibility_report(10, 1000000);
  auto N = cex::cutoff_N(10000);
  double worst = 0;
  for (std::uint64_t n : {50, 200})
    for (double al : {0.3, 0.7}) {
      auto h = cex::holder_ratio(n, al);
      worst = std::max(worst, std::abs(h.sampled / h.closed_form - 1));
    }
  report(11, "counterexample layout", rep.all_pass && N == 14 && worst <= 0.02,
         fmt("inequalities on [10,1e6] %s (min width margin %.3Lg), N(1e4) = %llu, max Hoelder ratio deviation %.3g",
             rep.all_pass ? "hold" : "fail", rep.min_width_margin, static_cast<unsigned long long>(N), worst));
}

void criterion12() {
  auto t0 = Clock::now();
  std::vector<std::uint64_t> ds;
  for (std::uint64_t d = 10000; d <= 1000000000000ULL; d *= 10) ds.push_back(d);
  auto pts = cex::divergence_series(ds, cex::make_profile(1.0));
  double dt = seconds_since(t0);
  bool dec = true, tail_inc = true;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) {
      dec = dec && pts[i].s_d < pts[i - 1].s_d;
      tail_inc = tail_inc && pts[i].d_tail > pts[i - 1].d_tail;
    }
    x.push_back(pts[i].ln_N);
    y.push_back(pts[i].s_d);
  }
  auto fit = cex::fit_line(x, y);
  report(12, "divergence trend of s_d", dec && tail_inc && fit.slope < 0 && fit.r2 > 0.9 && dt < 5,
         fmt("s_d decreasing %s, d T(N(d)) increasing %s, slope %.4f, R^2 %.4f, s_d(1e12) %.4f, %.3f s", dec ? "yes" : "no",
             tail_inc ? "yes" : "no", fit.slope, fit.r2, pts.back().s_d, dt));
}

void criterion13() {
  auto p = cex::make_profile(1.0);
  double bottom = std::abs(cex::error_chain_residuals(100, p).residual);
  double top = std::abs(cex::error_chain_residuals(1000000, p).residual);
  double worst = 0;
  for (std::uint64_t d = 100; d <= 1000000; d *= 10) worst = std::max(worst, std::abs(cex::error_chain_residuals(d, p).residual));
  report(13, "error-chain residual bounded", top <= bottom + 1,
         fmt("|residual| at d=1e2 %.6f, at d=1e6 %.6f, max %.6f", bottom, top, worst));
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);
  criterion1(rng);
  criterion2();
  criterion3();
  criterion4(rng);
  criterion5();
  criterion6();
  criterion7(rng);
  criterion8();
  criterion9();
  criterion10(rng);
  criterion11();
  criterion12();
  criterion13();
  std::printf("%d of 13 criteria failed\n", failures);
  return failures ? 1 : 0;
}
