#include "symcap/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symcap/domain.hpp"
#include "symcap/quadrature.hpp"

namespace symcap::cex {

namespace {

constexpr double kPi = std::numbers::pi;

double lnd(std::uint64_t n) { return std::log(static_cast<double>(n)); }

// 1/(x^3 ln^3 x)
long double series_term(long double x) {
  long double l = std::log(x);
  return 1.0L / (x * x * x * l * l * l);
}

// sum_{n > M} 1/(n^3 ln^3 n) by Euler-Maclaurin: int_M^inf - f(M)/2 - f'(M)/12
long double em_tail(std::uint64_t M) {
  const double Md = static_cast<double>(M), L = std::log(Md);
  // x = M e^s
  auto integrand = [&](double s) {
    double l = L + s;
    return std::exp(-2.0 * s) / (Md * Md * l * l * l);
  };
  double scale = 1.0 / (2.0 * Md * Md * L * L * L);
  long double integral = adaptive_simpson(integrand, 0.0, 40.0, 1e-15 * scale, 64);
  long double x = Md, l = L;
  long double f = series_term(x);
  long double fp = -f * (3.0L / x + 3.0L / (x * l));
  return integral - f / 2 - fp / 12;
}

}  // namespace

double chi(double r) {
  if (r >= 1.0 || r <= -1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - r * r));
}

double BumpProfile::g(double t) const {
  if (t <= -0.5 || t >= 0.5) return 0.0;
  return g_norm * std::exp(-1.0 / (1.0 - 4.0 * t * t));
}

BumpProfile make_profile(double lambda) {
  if (!(lambda >= 0)) throw ValidationError("lambda must be nonnegative");
  BumpProfile p;
  p.lambda = lambda;
  p.integral_f = 2 * kPi * adaptive_simpson([&](double r) { return p.f(r) * r; }, 0.0, 0.1, 1e-14, 32);
  double gi = adaptive_simpson([](double t) { return std::exp(-1.0 / (1.0 - 4.0 * t * t)); }, -0.5 + 1e-12, 0.5 - 1e-12, 1e-14, 32);
  p.g_norm = 1.0 / gi;
  return p;
}

double disk_radius(std::uint64_t n) {
  double l = lnd(n);
  return 1.0 / (static_cast<double>(n) * l * l);
}
double inner_radius(std::uint64_t n) { return 2.0 / lnd(n); }
double outer_radius(std::uint64_t n) { return 2.0 / lnd(n - 1); }

Vec2 AnnulusRing::center(std::uint64_t i) const {
  double t = 2 * kPi * static_cast<double>(i) / static_cast<double>(n);
  return {mid_radius * std::cos(t), mid_radius * std::sin(t)};
}

AnnulusRing ring(std::uint64_t n) {
  if (n < 10) throw ValidationError("n must be >= 10");
  AnnulusRing r{n, inner_radius(n), outer_radius(n), disk_radius(n), 0};
  r.mid_radius = 0.5 * (r.inner + r.outer);
  return r;
}

FeasibilityRow feasibility_row(std::uint64_t n) {
  if (n < 10) throw ValidationError("n must be >= 10");
  long double N = static_cast<long double>(n);
  long double a = std::log(N), b = std::log(N - 1);
  long double nd1 = -N * std::log1p(-1.0L / N) - 1.0L;  // n (ln n - ln(n-1)) - 1
  long double delta = (1.0L + nd1) / N;
  // R+ - R- - 2 r_n = 2 (a nd1 + delta) / (n a^2 b)
  long double width = 2.0L * (a * nd1 + delta) / (N * a * a * b);
  long double circ = 4.0L * std::numbers::pi_v<long double> / a - 2.0L / (a * a);
  return {n, width, circ, width > 0 && circ > 0};
}

FeasibilityReport feasibility_report(std::uint64_t n_lo, std::uint64_t n_hi, bool keep_rows) {
  if (n_lo < 10 || n_hi > 10'000'000 || n_lo > n_hi) throw ValidationError("range must lie within [10, 1e7]");
  FeasibilityReport rep;
  int prev_sign = 0;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    auto row = feasibility_row(n);
    int sgn = row.pass ? 1 : -1;
    if (prev_sign != 0 && sgn != prev_sign) ++rep.sign_changes;
    prev_sign = sgn;
    rep.all_pass = rep.all_pass && row.pass;
    if (n == n_lo || row.width_margin < rep.min_width_margin) rep.min_width_margin = row.width_margin;
    if (n == n_lo || row.circumference_margin < rep.min_circumference_margin)
      rep.min_circumference_margin = row.circumference_margin;
    if (keep_rows) rep.rows.push_back(row);
  }
  return rep;
}

AnnulusLayout layout(std::uint64_t n_lo, std::uint64_t n_hi) {
  if (n_lo < 10 || n_hi < n_lo) throw ValidationError("need 10 <= n_lo <= n_hi");
  AnnulusLayout L;
  L.rings.reserve(n_hi - n_lo + 1);
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    AnnulusRing r = ring(n);
    auto f = feasibility_row(n);
    // disks inside the annulus: half the width margin on each side of the mid circle
    if (!(f.width_margin > 0)) throw std::logic_error("disk does not fit in annulus " + std::to_string(n));
    double chord = 2 * r.mid_radius * std::sin(kPi / static_cast<double>(n));
    if (!(chord > 2 * r.disk_radius)) throw std::logic_error("neighbouring disks overlap at n=" + std::to_string(n));
    if (!L.rings.empty() && !(L.rings.back().inner >= r.outer)) throw std::logic_error("annuli overlap");
    L.rings.push_back(r);
  }
  return L;
}

HolderRatio holder_ratio(std::uint64_t n, double alpha) {
  if (n < 10) throw ValidationError("n must be >= 10");
  if (!(alpha > 0 && alpha <= 1)) throw ValidationError("alpha must lie in (0, 1]");
  const double l = lnd(n), nn = static_cast<double>(n);
  HolderRatio h;
  h.closed_form = std::pow(nn, alpha - 1) * std::pow(l, 3 + 2 * alpha);

  auto seminorm = [alpha](auto&& F, double R, int M) {
    std::vector<double> xs(static_cast<std::size_t>(M)), ds(static_cast<std::size_t>(M));
    double step = 1e-5 * R;
    for (int i = 0; i < M; ++i) {
      double x = -R + 2 * R * i / (M - 1);
      xs[static_cast<std::size_t>(i)] = x;
      ds[static_cast<std::size_t>(i)] = (F(x + step) - F(x - step)) / (2 * step);
    }
    double best = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        best = std::max(best, std::abs(ds[i] - ds[j]) / std::pow(xs[j] - xs[i], alpha));
    return best;
  };
  const double rn = disk_radius(n);
  auto fn = [&](double x) { return l / (nn * nn) * chi(10.0 * std::abs(x) / rn); };
  auto f1 = [&](double x) { return chi(10.0 * std::abs(x)); };
  h.sampled = seminorm(fn, rn / 10, 1201) / seminorm(f1, 0.1, 1601);
  return h;
}

double tail_series(std::uint64_t N) {
  if (N < 2) throw ValidationError("N must be >= 2");
  std::uint64_t M = std::max<std::uint64_t>(100 * N, 1000);
  long double s = 0;
  for (std::uint64_t n = M; n > N; --n) s += series_term(static_cast<long double>(n));  // small terms first
  return static_cast<double>(s + em_tail(M));
}

double hamiltonian_integral(const BumpProfile& p, double tail_tol) {
  if (!(tail_tol > 0)) throw ValidationError("tail_tol must be positive");
  if (p.lambda == 0) return 0.0;
  const double scale = p.lambda * p.integral_f;
  std::uint64_t N = 10;
  auto bound = [](std::uint64_t n) {
    double l = lnd(n);
    return 1.0 / (2.0 * static_cast<double>(n) * static_cast<double>(n) * l * l * l);
  };
  while (scale * bound(N) > tail_tol) N = N + N / 2 + 1;
  long double s = 0;
  for (std::uint64_t n = N; n >= 10; --n) s += series_term(static_cast<long double>(n));
  s += em_tail(N);
  return static_cast<double>(scale * s);
}

double xh_volume(const BumpProfile& p, double tail_tol) { return kPi * kPi / 2 + hamiltonian_integral(p, tail_tol); }

std::uint64_t cutoff_N(std::uint64_t d) {
  if (d < 1) throw ValidationError("d must be >= 1");
  auto ok = [d](std::uint64_t n) {
    long double x = static_cast<long double>(n), l = std::log(x);
    return x * x * l * l * l * l <= static_cast<long double>(d) + 1.0L;
  };
  if (!ok(10)) return 9;
  std::uint64_t lo = 10, hi = 20;
  while (ok(hi)) lo = hi, hi *= 2;
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

double LinkPlan::radius(std::uint64_t j) const {
  return static_cast<double>(std::sqrt(static_cast<long double>(j) / (static_cast<long double>(d) + 1.0L)));
}

LinkPlan build_link_plan(std::uint64_t d) {
  LinkPlan plan;
  plan.d = d;
  plan.N = cutoff_N(d);
  for (std::uint64_t n = 10; n <= plan.N; ++n) {
    long double r = disk_radius(n);
    auto m = static_cast<std::uint64_t>(std::floor(r * r * (static_cast<long double>(d) + 1.0L)));
    plan.circles.push_back(m);
    plan.in_disk_components += n * m;
  }
  if (plan.in_disk_components > d) throw std::logic_error("link plan exceeds d components");
  plan.remainder = d - plan.in_disk_components;
  return plan;
}

long double circle_value_sum(const LinkPlan& plan, std::uint64_t n, const BumpProfile& p) {
  const std::uint64_t m = plan.m(n);
  const long double rn = disk_radius(n), dp1 = static_cast<long double>(plan.d) + 1.0L;
  // f vanishes once rho_j >= r_n / 10
  auto jmax = static_cast<std::uint64_t>(std::ceil(rn * rn * dp1 / 100.0L));
  jmax = std::min(m, jmax + 1);
  long double s = 0;
  for (std::uint64_t j = jmax; j >= 1; --j) {
    auto rho = static_cast<double>(std::sqrt(static_cast<long double>(j) / dp1));
    s += p.f(rho / static_cast<double>(rn));
  }
  return s;
}

double link_spectral_value(const LinkPlan& plan, const BumpProfile& p) {
  if (plan.d == 0) return 0.0;
  long double total = 0;
  for (std::uint64_t n = 10; n <= plan.N; ++n) {
    long double weight = static_cast<long double>(n) * p.lambda * std::log(static_cast<long double>(n)) /
                         (static_cast<long double>(n) * static_cast<long double>(n));
    total += weight * circle_value_sum(plan, n, p);
  }
  return static_cast<double>(total / static_cast<long double>(plan.d));
}

double hamiltonian_value(const BumpProfile& p, const Vec2& z) {
  double rho = std::hypot(z[0], z[1]);
  if (rho <= 0 || rho >= inner_radius(9)) return 0.0;
  double e = 2.0 / rho;
  if (e > 40) return 0.0;  // n beyond 2e17, no disks are ever placed there
  auto n0 = static_cast<std::uint64_t>(std::ceil(std::exp(e)));
  double ang = std::atan2(z[1], z[0]);
  double value = 0;
  for (std::uint64_t n = std::max<std::uint64_t>(10, n0 > 0 ? n0 - 1 : 0); n <= n0 + 1; ++n) {
    AnnulusRing r = ring(n);
    auto nn = static_cast<double>(n);
    auto k = static_cast<std::int64_t>(std::llround(ang * nn / (2 * kPi)));
    for (std::int64_t di = -1; di <= 1; ++di) {
      std::int64_t i = ((k + di) % static_cast<std::int64_t>(n) + static_cast<std::int64_t>(n)) % static_cast<std::int64_t>(n);
      Vec2 c = r.center(static_cast<std::uint64_t>(i));
      double dist = std::hypot(z[0] - c[0], z[1] - c[1]);
      if (dist < r.disk_radius) value += p.lambda * lnd(n) / (nn * nn) * p.f(dist / r.disk_radius);
    }
  }
  return value;
}

double link_spectral_value_geometric(const LinkPlan& plan, const BumpProfile& p) {
  if (plan.d == 0) return 0.0;
  long double total = 0;
  for (std::uint64_t n = 10; n <= plan.N; ++n) {
    AnnulusRing r = ring(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      Vec2 c = r.center(i);
      for (std::uint64_t j = 1; j <= plan.m(n); ++j) {
        double phi = 0.25 + 0.5 * static_cast<double>(j);
        double rho = plan.radius(j);
        total += hamiltonian_value(p, {c[0] + rho * std::cos(phi), c[1] + rho * std::sin(phi)});
      }
    }
  }
  return static_cast<double>(total / static_cast<long double>(plan.d));
}

std::vector<DivergencePoint> divergence_series(const std::vector<std::uint64_t>& d_list, const BumpProfile& p) {
  for (std::size_t i = 1; i < d_list.size(); ++i)
    if (d_list[i] <= d_list[i - 1]) throw ValidationError("d_list must be increasing");
  const long double I = p.integral_f, lam = p.lambda, pi = std::numbers::pi_v<long double>;
  const long double integral = lam * I * tail_series(9);
  std::vector<DivergencePoint> out;
  for (auto d : d_list) {
    LinkPlan plan = build_link_plan(d);
    const long double dd = static_cast<long double>(d);
    long double in_disks = 0, c_sum = 0;
    for (std::uint64_t n = 10; n <= plan.N; ++n) {
      long double nn = static_cast<long double>(n), l = std::log(nn), r = disk_radius(n);
      long double w = nn * lam * l / (nn * nn);
      long double S = circle_value_sum(plan, n, p);
      c_sum += w * S;
      in_disks += w * (S - dd / pi * r * r * I);
    }
    long double T = tail_series(plan.N);
    DivergencePoint pt;
    pt.d = d;
    pt.N = plan.N;
    pt.c_link = static_cast<double>(c_sum / dd);
    pt.s_d = static_cast<double>(in_disks - dd / pi * lam * I * T);
    pt.bound = static_cast<double>(integral / pi - dd / pi * lam * I * T);
    pt.ln_N = std::log(static_cast<double>(plan.N));
    pt.d_tail = static_cast<double>(dd * T);
    pt.below_bound = pt.s_d <= pt.bound + 1e-9 * std::max(1.0, std::abs(pt.bound));
    out.push_back(pt);
  }
  return out;
}

NestedBound nested_bound_check(std::uint64_t n, std::uint64_t d, const BumpProfile& p) {
  LinkPlan plan = build_link_plan(d);
  if (n < 10 || n > plan.N) throw ValidationError("requires 10 <= n <= N(d)");
  const double l = lnd(n), nn = static_cast<double>(n), r = disk_radius(n);
  double w = p.lambda * l / (nn * nn);
  NestedBound b;
  b.lhs = static_cast<double>(kArea / (static_cast<long double>(d) + 1.0L) * w * circle_value_sum(plan, n, p));
  b.rhs = w * r * r * p.integral_f;
  b.pass = b.lhs <= b.rhs + 1e-12;
  return b;
}

double lipschitz_step_bound(double vol, std::uint64_t k, std::uint64_t l) {
  return 2 * std::sqrt(vol) * (std::sqrt(static_cast<double>(k)) - std::sqrt(static_cast<double>(l)));
}

ErrorChain error_chain_residuals(std::uint64_t d, const BumpProfile& p) {
  if (d < 1) throw ValidationError("d must be >= 1");
  const long double volX = xh_volume(p, 1e-12);
  const long double ball = kPi * kPi / 2.0L;
  const long double V = volX + ball, A = kArea;
  auto indices = [&](std::uint64_t dd, ErrorChain& c) {
    long double D = static_cast<long double>(dd);
    c.d = dd;
    c.n_d = static_cast<std::uint64_t>(std::floor(D * D * V / (A * A * (D + 1))));
    c.k_d = c.n_d * (dd + 1);
    c.i_d = static_cast<std::uint64_t>(std::floor(volX * static_cast<long double>(c.k_d) / V));
    c.j_d = c.k_d - c.i_d;
  };
  ErrorChain c{}, next{};
  indices(d, c);
  indices(d + 1, next);
  long double D = static_cast<long double>(d);
  long double res = 2 * std::sqrt(volX * static_cast<long double>(c.i_d)) + 2 * std::sqrt(ball * static_cast<long double>(c.j_d)) -
                    static_cast<long double>(c.n_d) * A - D * V / A;
  c.residual = static_cast<double>(res);
  c.step_bound = lipschitz_step_bound(static_cast<double>(volX), next.i_d, c.i_d);
  return c;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need at least two points");
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n, my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy == 0 ? 1.0 : sxy * sxy / (sxx * syy);
  return f;
}

}  // namespace symcap::cex
