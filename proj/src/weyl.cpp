#include "symcap/weyl.hpp"

#include <cmath>
#include <stdexcept>

namespace symcap {

namespace {

double sqrt_rat_times(const Rational& v, std::uint64_t k) {
  return static_cast<double>(std::sqrt(v.to_long_double() * static_cast<long double>(k)));
}

}  // namespace

double error_term(const Rational& capacity, const Rational& vol, std::uint64_t k) {
  return static_cast<double>(capacity.to_long_double() - 2 * std::sqrt(vol.to_long_double() * static_cast<long double>(k)));
}

ErrorTermSeries error_terms(const DomainSpec& spec, std::uint64_t k_lo, std::uint64_t k_hi) {
  require_valid(spec);
  if (k_lo > k_hi) throw std::invalid_argument("empty k range");
  auto caps = capacities(spec, std::max<std::uint64_t>(k_hi, 1));
  Rational vol = volume(spec);
  ErrorTermSeries s{spec, vol, {}};
  s.entries.reserve(k_hi - k_lo + 1);
  for (std::uint64_t k = k_lo; k <= k_hi; ++k) s.entries.push_back({k, caps.values[k], error_term(caps.values[k], vol, k)});
  return s;
}

WindowExtremes ball_error_extremes(const Rational& a, std::uint64_t k_lo, std::uint64_t k_hi) {
  if (k_lo < 1) throw std::invalid_argument("k_lo must be >= 1");
  if (k_lo > k_hi) throw std::invalid_argument("empty window");
  if (a.sign() <= 0) throw ValidationError("nonpositive width");
  long double av = a.to_long_double();
  WindowExtremes w{INFINITY, -INFINITY, 0, 0};
  for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
    auto d = static_cast<long double>(ball_capacity_level(k));
    auto e = static_cast<double>(av * (d - std::sqrt(2.0L * static_cast<long double>(k))));
    if (e < w.inf) w.inf = e, w.argmin = k;
    if (e > w.sup) w.sup = e, w.argmax = k;
  }
  return w;
}

namespace {

struct Greedy {
  std::vector<double> sv;  // sqrt(V_i)
  std::vector<std::uint64_t> alloc;
  double value = 0;

  explicit Greedy(const std::vector<Rational>& volumes) {
    if (volumes.empty()) throw std::invalid_argument("at least one volume required");
    for (const auto& v : volumes) {
      if (v.sign() <= 0) throw ValidationError("nonpositive volume");
      sv.push_back(std::sqrt(v.to_double()));
    }
    alloc.assign(volumes.size(), 0);
  }
  double gain(std::size_t i) const {
    double k = static_cast<double>(alloc[i]);
    return sv[i] / (std::sqrt(k + 1) + std::sqrt(k));
  }
  void step() {
    std::size_t best = 0;
    double g = gain(0);
    for (std::size_t i = 1; i < sv.size(); ++i) {
      double h = gain(i);
      if (h > g) g = h, best = i;
    }
    ++alloc[best];
    value = 0;
    for (std::size_t i = 0; i < sv.size(); ++i) value += sv[i] * std::sqrt(static_cast<double>(alloc[i]));
  }
};

Rational total(const std::vector<Rational>& vs) {
  Rational t;
  for (const auto& v : vs) t += v;
  return t;
}

}  // namespace

PartitionResult partition_sqrt_max(const PartitionProblem& p) {
  Greedy g(p.volumes);
  for (std::uint64_t i = 0; i < p.k; ++i) g.step();
  return {g.value, g.alloc, sqrt_rat_times(total(p.volumes), p.k)};
}

std::vector<double> partition_sqrt_max_sweep(const std::vector<Rational>& volumes, std::uint64_t k_max) {
  Greedy g(volumes);
  std::vector<double> out{0.0};
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    g.step();
    out.push_back(g.value);
  }
  return out;
}

double floor_allocation_gap(const PartitionProblem& p) {
  if (p.k < 1) throw std::invalid_argument("k must be >= 1");
  Rational V = total(p.volumes);
  long double s = 0;
  Rational kr(mpz_class(static_cast<unsigned long>(p.k)), mpz_class(1));
  for (const auto& vi : p.volumes) {
    mpz_class fl = (vi * kr / V).floor();
    s += std::sqrt(vi.to_long_double() * static_cast<long double>(fl.get_ui()));
  }
  return static_cast<double>(std::sqrt(V.to_long_double() * static_cast<long double>(p.k)) - s);
}

Step4Inner step4_inner_inf(const Rational& v1, const Rational& v2, std::uint64_t k) {
  if (v1.sign() <= 0 || v2.sign() <= 0) throw ValidationError("nonpositive volume");
  long double V1 = v1.to_long_double(), V2 = v2.to_long_double(), V = V1 + V2;
  auto kk = static_cast<long double>(k);
  auto f = [&](std::uint64_t l) {
    auto ll = static_cast<long double>(l);
    return std::sqrt(V * (kk + ll)) - std::sqrt(V1 * kk) - std::sqrt(V2 * ll);
  };
  // continuous minimiser of the objective in ell
  long double star = V2 * kk / V1;
  std::uint64_t width = 4;
  for (;;) {
    auto center = static_cast<std::uint64_t>(std::llround(star));
    std::uint64_t lo = center > width ? center - width : 0;
    std::uint64_t hi = center + width;
    Step4Inner best{static_cast<double>(f(lo)), lo};
    long double bv = f(lo);
    for (std::uint64_t l = lo + 1; l <= hi; ++l) {
      long double v = f(l);
      if (v < bv) bv = v, best = {static_cast<double>(v), l};
    }
    bool interior = (lo == 0 || best.ell != lo) && best.ell != hi;
    if (interior || width > (std::uint64_t{1} << 40)) return best;
    width *= 2;
  }
}

Step4Result step4_inf_bound(const Rational& v1, const Rational& v2, std::uint64_t k_lo, std::uint64_t k_hi) {
  if (k_lo > k_hi) throw std::invalid_argument("empty k range");
  Step4Result r{-INFINITY, k_lo, 0, {}};
  std::uint64_t next_mark = 1;
  while (next_mark < k_lo) next_mark *= 10;
  double at_decade_start = NAN;
  std::uint64_t decade_start = k_hi / 10;
  for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
    auto in = step4_inner_inf(v1, v2, k);
    if (in.value > r.sup) r.sup = in.value, r.argsup = k;
    if (k == std::max(decade_start, k_lo)) at_decade_start = r.sup;
    if (k == next_mark) {
      r.running_sup.emplace_back(k, r.sup);
      next_mark *= 10;
    }
  }
  if (r.running_sup.empty() || r.running_sup.back().first != k_hi) r.running_sup.emplace_back(k_hi, r.sup);
  r.last_decade_variation = std::abs(r.sup - at_decade_start);
  return r;
}

PfhResiduals pfh_bookkeeping(const PfhBookkeeping& b) {
  auto dd = static_cast<std::int64_t>(b.d);
  if (dd - b.g + 1 <= 0) throw ValidationError("requires d > g - 1");
  if (!(b.V > 0) || !(b.A > 0)) throw ValidationError("V and A must be positive");
  if (b.m < 1) throw ValidationError("m must be >= 1");
  auto c = static_cast<long double>(dd - b.g + 1);
  long double d = static_cast<long double>(b.d), V = b.V, A = b.A, m = static_cast<long double>(b.m);
  auto n = static_cast<std::uint64_t>(std::floor(d * d * V / (m * A * A * c)));
  std::uint64_t k = b.m * n * static_cast<std::uint64_t>(dd - b.g + 1);
  long double r1 = 2 * std::sqrt(V * static_cast<long double>(k)) - 2 * V * d / A;
  long double r2 = m * static_cast<long double>(n) * A - V * d / A;
  return {n, k, static_cast<double>(r1), static_cast<double>(r2)};
}

}  // namespace symcap
