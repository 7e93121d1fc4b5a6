#pragma once

#include <array>
#include <cstddef>

#include "symcap/coloring.hpp"

namespace symcap {

using Vec2 = std::array<double, 2>;  // (x, y), y mod 1

// Radial twist about a centre: z -> c + Rot(theta(|z - c|)) (z - c),
// theta(r) = 2 eps chi(r/rho) / (1 - (r/rho)^2)^2, chi(s) = exp(1 - 1/(1 - s^2)).
// It is the time-1 map of H = eps rho^2 chi(|z - c|/rho).
struct BumpTwist {
  double cx = 0.5, cy = 0.0625, radius = 0.05, amplitude = 0.0;

  double angle(double r) const;
  double angle_derivative_over_r(double r) const;
  Vec2 apply(const Vec2& z, bool inverse = false) const;
  // gradient of the x-coordinate of the inverse twist
  Vec2 grad_x_of_inverse(const Vec2& z) const;
};

// Open rectangle (x0,x1) x (y0,y1) in the annulus, 0 <= y0 < y1 <= 1.
struct SupportRect {
  Rational x0, x1, y0, y1;
};

// Exact check that U, R_alpha U and R_alpha^{-1} U are pairwise disjoint.
bool rotation_images_disjoint(const SupportRect& U, const Rational& alpha);

struct CommutatorCheckOptions {
  std::size_t grid = 16;
  double tol = 1e-8;
  std::size_t fixed_steps = 0;  // nonzero: plain Euler with this many steps per flow
};

struct CommutatorCheckResult {
  double sup_error = 0;
  double sup_displacement = 0;  // |[u,v](z) - z|, shows the commutator is nontrivial
  std::size_t max_steps = 0;
};

double annulus_distance(const Vec2& a, const Vec2& b);

// Time-1 flow of s * alpha * x(w^{-1}(z)) by explicit Euler with n steps.
Vec2 conjugated_rotation_flow(const BumpTwist& w, double s_alpha, const Vec2& z, std::size_t n);

CommutatorCheckResult rotation_commutator_check(const BumpTwist& u, const BumpTwist& v, const SupportRect& U,
                                                const RotationParam& alpha, const CommutatorCheckOptions& opt);

}  // namespace symcap
