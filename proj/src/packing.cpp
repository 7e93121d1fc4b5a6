#include "symcap/packing.hpp"

#include <algorithm>
#include <stdexcept>

#include "symcap/capacities.hpp"

namespace symcap {

WeightSequence weight_sequence(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw ValidationError("nonpositive width");
  WeightSequence w{{}, a, b};
  Rational x = a, y = b;
  while (x != y) {
    if (y < x) std::swap(x, y);
    w.weights.push_back(x);
    y -= x;
  }
  w.weights.push_back(x);
  std::sort(w.weights.begin(), w.weights.end(), [](const Rational& p, const Rational& q) { return q < p; });
  return w;
}

std::array<Point2, 3> AffineTriangle::vertices() const {
  auto map = [&](const Rational& x, const Rational& y) -> Point2 {
    return {anchor[0] + Rational(basis[0][0], 1) * x + Rational(basis[0][1], 1) * y,
            anchor[1] + Rational(basis[1][0], 1) * x + Rational(basis[1][1], 1) * y};
  };
  return {map(0, 0), map(size, 0), map(0, size)};
}

std::vector<AffineTriangle> triangle_decompose(const Rational& a0, const Rational& b0) {
  if (a0.sign() <= 0 || b0.sign() <= 0) throw ValidationError("nonpositive width");
  std::vector<AffineTriangle> out;
  Rational a = a0, b = b0;
  Point2 g{Rational(0), Rational(0)};
  std::array<std::array<mpz_class, 2>, 2> M{{{1, 0}, {0, 1}}};
  auto apply = [&](const mpz_class& x, const mpz_class& y, const Rational& tx, const Rational& ty) {
    // g += M * (tx, ty); M = M * [[1, x], [y, 1]] restricted to shears
    g = {g[0] + Rational(M[0][0], 1) * tx + Rational(M[0][1], 1) * ty,
         g[1] + Rational(M[1][0], 1) * tx + Rational(M[1][1], 1) * ty};
    std::array<std::array<mpz_class, 2>, 2> N;
    for (int r = 0; r < 2; ++r) {
      N[r][0] = M[r][0] + M[r][1] * y;
      N[r][1] = M[r][0] * x + M[r][1];
    }
    M = N;
  };
  while (a != b) {
    if (a < b) {
      out.push_back({a, g, M});
      // remainder = (x, y - x) + (0, a) applied to Delta(a, b - a)
      apply(0, -1, Rational(0), a);
      b -= a;
    } else {
      out.push_back({b, g, M});
      // remainder = (x - y, y) + (b, 0) applied to Delta(a - b, b)
      apply(-1, 0, b, Rational(0));
      a -= b;
    }
  }
  out.push_back({a, g, M});
  return out;
}

namespace {

Rational orient(const Point2& p, const Point2& q, const Point2& r) {
  return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
}

}  // namespace

bool triangle_contains(const std::array<Point2, 3>& t, const Point2& p, bool strict) {
  int s0 = orient(t[0], t[1], p).sign(), s1 = orient(t[1], t[2], p).sign(), s2 = orient(t[2], t[0], p).sign();
  if (strict) return (s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0);
  bool has_pos = s0 > 0 || s1 > 0 || s2 > 0, has_neg = s0 < 0 || s1 < 0 || s2 < 0;
  return !(has_pos && has_neg);
}

EmbeddingRatio embedding_function_lower(const Rational& a, std::uint64_t K) {
  if (a < Rational(1)) throw ValidationError("aspect must be >= 1");
  if (K < 1) throw std::invalid_argument("K must be positive");
  auto e = capacities_ellipsoid(Rational(1), a, K);
  EmbeddingRatio best{0, Rational(0), 0};
  for (std::uint64_t k = 1; k <= K; ++k) {
    Rational r = e.values[k] / Rational(static_cast<long>(ball_capacity_level(k)));
    if (best.argmax_k == 0 || best.ratio < r) best.ratio = r, best.argmax_k = k;
  }
  best.value = best.ratio.to_double();
  return best;
}

PackingReport packing_number_ball_lower(std::uint64_t k, std::uint64_t K) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  PackingReport rep{k, 1.0, Rational(1), 0, "single ball fills itself"};
  if (k == 1) return rep;
  auto c = embedding_function_lower(Rational(static_cast<long>(k)), K);
  double v = static_cast<double>(k) / (c.value * c.value);
  rep.lower_bound = std::clamp(v, 0.0, 1.0);
  rep.c_hat = c.ratio;
  rep.attaining_index = c.argmax_k;
  rep.witness = "c_hat=" + c.ratio.str() + " at index " + std::to_string(c.argmax_k) + " (K=" + std::to_string(K) + ")";
  return rep;
}

}  // namespace symcap
