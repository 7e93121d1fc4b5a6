#include "symcap/coloring.hpp"

#include <algorithm>

namespace symcap {

namespace {

Rational frac(const Rational& r) { return r - Rational(r.floor(), 1); }

}  // namespace

RotationParam::RotationParam(Rational a) : alpha(std::move(a)) {
  Rational twice = alpha * Rational(2);
  Rational lo = Rational(twice.floor(), 1) / Rational(2);
  distance_to_half_integers = min(alpha - lo, lo + Rational(1, 2) - alpha);
}

Point2 rotate(const Rational& alpha, const Point2& p) { return {p[0], frac(p[1] - alpha)}; }

Rational annulus_distance_squared(const Point2& p, const Point2& q) {
  Rational dx = p[0] - q[0];
  Rational dy = frac(p[1] - q[1]);
  dy = min(dy, Rational(1) - dy);
  return dx * dx + dy * dy;
}

Point2 Lattice::point(std::size_t v) const {
  auto i = static_cast<long>(v / k), j = static_cast<long>(v % k);
  return {Rational(mpz_class(i), k), Rational(mpz_class(j), k)};
}

std::size_t InterferenceGraph::edge_count() const {
  std::size_t s = 0;
  for (const auto& a : adjacency) s += a.size();
  return s / 2;
}

bool interference_edge_exact(std::uint32_t k, const Rational& alpha, const Point2& p, const Point2& q) {
  Rational r2 = Rational(4) / Rational(static_cast<long>(k) * static_cast<long>(k));
  for (int s = -1; s <= 1; ++s)
    for (int t = -1; t <= 1; ++t) {
      Point2 a = rotate(alpha * Rational(s), p), b = rotate(alpha * Rational(t), q);
      if (annulus_distance_squared(a, b) < r2) return true;
    }
  return false;
}

InterferenceGraph interference_graph(std::uint32_t k, const RotationParam& rp) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  Rational margin = rp.distance_to_half_integers - Rational(2) / Rational(static_cast<long>(k));
  if (margin.sign() <= 0)
    throw HypothesisViolation("hypothesis 2/k < dist(alpha, Z/2) fails, margin " + margin.str(), margin);
  // integer units of 1/(k q): y_j = j q, alpha = p/q shifts by p k
  mpz_class pz = rp.alpha.numerator(), qz = rp.alpha.denominator();
  mpz_class per = qz * k;
  std::int64_t Q = qz.get_si();
  std::int64_t M = per.get_si();
  std::int64_t P = mpz_class((pz * k) % per).get_si();
  if (P < 0) P += M;
  InterferenceGraph g{Lattice{k}, rp.alpha, {}, 0};
  std::size_t n = g.lattice.size();
  g.adjacency.resize(n);
  auto circ = [M](std::int64_t d) {
    d %= M;
    if (d < 0) d += M;
    return std::min(d, M - d);
  };
  const std::int64_t lim = 4 * Q * Q;
  std::vector<std::uint32_t> nb;
  for (std::size_t v = 0; v < n; ++v) {
    auto i = static_cast<std::int64_t>(v / k), j = static_cast<std::int64_t>(v % k);
    nb.clear();
    for (int delta = -2; delta <= 2; ++delta) {
      // q with dist(p, R_{delta alpha} q) < 2/k: y_q - delta alpha close to y_p
      std::int64_t target = j * Q + delta * P;  // in units, y_q ~ y_p + delta alpha
      std::int64_t base = target / Q;
      for (std::int64_t ii = i - 1; ii <= i + 1; ++ii) {
        if (ii < 0 || ii > static_cast<std::int64_t>(k)) continue;
        std::int64_t dx = (ii - i) * Q;
        for (std::int64_t jj = base - 2; jj <= base + 3; ++jj) {
          std::int64_t jm = ((jj % k) + k) % k;
          std::int64_t dy = circ(jm * Q - target);
          if (dx * dx + dy * dy < lim) {
            auto w = static_cast<std::uint32_t>(ii * k + jm);
            if (w != v) nb.push_back(w);
          }
        }
      }
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.adjacency[v] = nb;
    g.max_degree = std::max(g.max_degree, nb.size());
  }
  return g;
}

LatticeColoring color_lattice(const InterferenceGraph& g) {
  std::size_t n = g.vertex_count();
  LatticeColoring c;
  constexpr std::uint32_t unset = ~0u;
  c.colors.assign(n, unset);
  std::vector<char> used;
  for (std::size_t v = 0; v < n; ++v) {
    used.assign(g.adjacency[v].size() + 1, 0);
    for (auto w : g.adjacency[v])
      if (c.colors[w] != unset && c.colors[w] < used.size()) used[c.colors[w]] = 1;
    std::uint32_t col = 0;
    while (used[col]) ++col;
    c.colors[v] = col;
    c.color_count = std::max(c.color_count, col + 1);
  }
  return c;
}

bool is_proper(const InterferenceGraph& g, const LatticeColoring& c) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (auto w : g.adjacency[v])
      if (c.colors[v] == c.colors[w]) return false;
  return true;
}

}  // namespace symcap
