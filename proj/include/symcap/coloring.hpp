#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "symcap/packing.hpp"
#include "symcap/rational.hpp"

namespace symcap {

class HypothesisViolation : public std::runtime_error {
 public:
  HypothesisViolation(const std::string& what, Rational margin) : std::runtime_error(what), margin(std::move(margin)) {}
  Rational margin;  // dist(alpha, Z/2) - 2/k, nonpositive
};

struct RotationParam {
  Rational alpha;
  Rational distance_to_half_integers;

  explicit RotationParam(Rational a);
};

// R_alpha(x, y) = (x, y - alpha) with y taken mod 1.
Point2 rotate(const Rational& alpha, const Point2& p);
// Flat annulus metric dx^2 + dy^2, y on the circle of length 1.
Rational annulus_distance_squared(const Point2& p, const Point2& q);

struct Lattice {
  std::uint32_t k;
  // vertex v = i * k + j sits at (i/k, j/k), 0 <= i <= k, 0 <= j < k
  std::size_t size() const { return static_cast<std::size_t>(k + 1) * k; }
  Point2 point(std::size_t v) const;
};

struct InterferenceGraph {
  Lattice lattice;
  Rational alpha;
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::size_t max_degree = 0;

  std::size_t vertex_count() const { return adjacency.size(); }
  std::size_t edge_count() const;
};

// Edge iff the unions B(p) u R B(p) u R^-1 B(p) and the same for q meet, balls of radius 1/k.
InterferenceGraph interference_graph(std::uint32_t k, const RotationParam& alpha);
// Quadratic pair scan with exact rationals; test oracle for small k.
bool interference_edge_exact(std::uint32_t k, const Rational& alpha, const Point2& p, const Point2& q);

struct LatticeColoring {
  std::vector<std::uint32_t> colors;
  std::uint32_t color_count = 0;
};

LatticeColoring color_lattice(const InterferenceGraph& g);
bool is_proper(const InterferenceGraph& g, const LatticeColoring& c);

}  // namespace symcap
