#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "symcap/rational.hpp"

namespace symcap {

struct WeightSequence {
  std::vector<Rational> weights;  // nonincreasing
  Rational a, b;
};

WeightSequence weight_sequence(const Rational& a, const Rational& b);

using Point2 = std::array<Rational, 2>;

// anchor + basis * Delta(size), Delta(s) = {x, y >= 0, x + y <= s}.
struct AffineTriangle {
  Rational size;
  Point2 anchor;
  std::array<std::array<mpz_class, 2>, 2> basis;  // basis[row][col]

  std::array<Point2, 3> vertices() const;
  Rational area() const { return size * size / Rational(2); }
  mpz_class det() const { return basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]; }
};

// Tiles Delta(a,b) with vertices (0,0), (a,0), (0,b) by unimodular images of Delta(w_i).
std::vector<AffineTriangle> triangle_decompose(const Rational& a, const Rational& b);

// Point-in-closed-triangle and strict-interior tests, exact.
bool triangle_contains(const std::array<Point2, 3>& t, const Point2& p, bool strict);

struct EmbeddingRatio {
  double value;
  Rational ratio;
  std::uint64_t argmax_k;
};

// max over 1 <= k <= K of c_k(E(1,a)) / c_k(B(1)).
EmbeddingRatio embedding_function_lower(const Rational& a, std::uint64_t K);

struct PackingReport {
  std::uint64_t k;
  double lower_bound;
  Rational c_hat;
  std::uint64_t attaining_index;
  std::string witness;
};

PackingReport packing_number_ball_lower(std::uint64_t k, std::uint64_t K);

}  // namespace symcap
