#include "symcap/commutator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symcap/domain.hpp"

namespace symcap {

namespace {

double wrap01(double y) {
  y -= std::floor(y);
  return y >= 1.0 ? 0.0 : y;
}

double wrap_half(double d) {
  d -= std::floor(d + 0.5);
  return d;
}

Vec2 shift(const Vec2& z, double dy) { return {z[0], wrap01(z[1] + dy)}; }

}  // namespace

double annulus_distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a[0] - b[0], wrap_half(a[1] - b[1]));
}

double BumpTwist::angle(double r) const {
  double s = r / radius;
  if (amplitude == 0.0 || s >= 1.0) return 0.0;
  double q = 1.0 - s * s;
  return 2.0 * amplitude * std::exp(1.0 - 1.0 / q) / (q * q);
}

double BumpTwist::angle_derivative_over_r(double r) const {
  double s = r / radius;
  if (amplitude == 0.0 || s >= 1.0) return 0.0;
  double q = 1.0 - s * s;
  double chi = std::exp(1.0 - 1.0 / q);
  return 2.0 * amplitude / (radius * radius) * chi * (-2.0 / (q * q * q * q) + 4.0 / (q * q * q));
}

Vec2 BumpTwist::apply(const Vec2& z, bool inverse) const {
  double w1 = z[0] - cx, w2 = wrap_half(z[1] - cy);
  double th = angle(std::hypot(w1, w2));
  if (th == 0.0) return z;
  if (inverse) th = -th;
  double c = std::cos(th), s = std::sin(th);
  return {cx + c * w1 - s * w2, wrap01(cy + s * w1 + c * w2)};
}

Vec2 BumpTwist::grad_x_of_inverse(const Vec2& z) const {
  double w1 = z[0] - cx, w2 = wrap_half(z[1] - cy);
  double r = std::hypot(w1, w2);
  if (amplitude == 0.0 || r >= radius) return {1.0, 0.0};
  double th = angle(r), dr = angle_derivative_over_r(r);
  double c = std::cos(th), s = std::sin(th);
  double rot2 = -w1 * s + w2 * c;  // second coordinate of Rot(-theta) w
  return {c + rot2 * dr * w1, s + rot2 * dr * w2};
}

bool rotation_images_disjoint(const SupportRect& U, const Rational& alpha) {
  Rational len = U.y1 - U.y0;
  auto circ = [](const Rational& t) {
    Rational f = t - Rational(t.floor(), 1);
    return min(f, Rational(1) - f);
  };
  return !(circ(alpha) < len) && !(circ(alpha * Rational(2)) < len);
}

Vec2 conjugated_rotation_flow(const BumpTwist& w, double s_alpha, const Vec2& z0, std::size_t n) {
  const double h = 1.0 / static_cast<double>(n);
  Vec2 z = z0;
  std::size_t done = 0;
  const double vy = -s_alpha;
  while (done < n) {
    double dx = z[0] - w.cx;
    double r = std::hypot(dx, wrap_half(z[1] - w.cy));
    if (w.amplitude == 0.0 || r >= w.radius) {
      // outside the twist the field is the constant (0, -s alpha); Euler steps are exact there
      std::size_t skip = n - done;
      if (w.amplitude != 0.0 && std::abs(dx) < w.radius && vy != 0.0) {
        double hc = std::sqrt(w.radius * w.radius - dx * dx);
        double dist = vy < 0 ? wrap01(z[1] - (w.cy + hc)) : wrap01((w.cy - hc) - z[1]);
        double t = dist / std::abs(vy);
        skip = std::min(skip, std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(t / h))));
      }
      z = shift(z, vy * h * static_cast<double>(skip));
      done += skip;
      continue;
    }
    Vec2 g = w.grad_x_of_inverse(z);
    // X_F = (dF/dy, -dF/dx)
    z = {z[0] + h * s_alpha * g[1], wrap01(z[1] - h * s_alpha * g[0])};
    ++done;
  }
  return z;
}

namespace {

struct Flow {
  const BumpTwist* w;
  double s_alpha;
};

constexpr std::size_t kMaxSteps = std::size_t{1} << 26;

Vec2 extrapolate(const Vec2& coarse, const Vec2& fine) {
  return {2 * fine[0] - coarse[0], wrap01(fine[1] + wrap_half(fine[1] - coarse[1]))};
}

// Fixed-step Euler when requested; otherwise step doubling with local extrapolation,
// accepted once successive extrapolated values agree to tol.
Vec2 run_flow(const Flow& f, const Vec2& z, const CommutatorCheckOptions& opt, std::size_t& steps_used) {
  if (opt.fixed_steps) {
    steps_used = std::max(steps_used, opt.fixed_steps);
    return conjugated_rotation_flow(*f.w, f.s_alpha, z, opt.fixed_steps);
  }
  std::size_t n = 16;
  Vec2 a = conjugated_rotation_flow(*f.w, f.s_alpha, z, n);
  Vec2 b = conjugated_rotation_flow(*f.w, f.s_alpha, z, 2 * n);
  Vec2 prev = extrapolate(a, b);
  for (;;) {
    n *= 2;
    if (n > kMaxSteps) throw std::runtime_error("integrator failed to meet tolerance");
    Vec2 c = conjugated_rotation_flow(*f.w, f.s_alpha, z, 2 * n);
    Vec2 next = extrapolate(b, c);
    if (annulus_distance(prev, next) <= opt.tol) {
      steps_used = std::max(steps_used, 2 * n);
      return next;
    }
    b = c;
    prev = next;
  }
}

}  // namespace

CommutatorCheckResult rotation_commutator_check(const BumpTwist& u, const BumpTwist& v, const SupportRect& U,
                                                const RotationParam& alpha, const CommutatorCheckOptions& opt) {
  if (!rotation_images_disjoint(U, alpha.alpha)) throw ValidationError("support-disjointness violation");
  auto inside = [&](const BumpTwist& w) {
    if (w.amplitude == 0.0) return true;
    return w.cx - w.radius >= U.x0.to_double() && w.cx + w.radius <= U.x1.to_double() &&
           w.cy - w.radius >= U.y0.to_double() && w.cy + w.radius <= U.y1.to_double();
  };
  if (!inside(u) || !inside(v)) throw ValidationError("twist support not contained in U");
  if (opt.grid == 0) throw std::invalid_argument("grid must be positive");

  const double a = alpha.alpha.to_double();
  auto R = [&](const Vec2& z, double s) { return shift(z, -s * a); };
  CommutatorCheckResult res;
  const std::size_t N = opt.grid;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Vec2 z{(static_cast<double>(i) + 0.5) / static_cast<double>(N), (static_cast<double>(j) + 0.5) / static_cast<double>(N)};
      Vec2 lhs = u.apply(v.apply(u.apply(v.apply(z, true), true)));
      // rightmost factor first
      Vec2 w = run_flow({&v, a}, z, opt, res.max_steps);
      w = R(w, -1);
      w = run_flow({&u, -a}, w, opt, res.max_steps);
      w = R(w, 1);
      w = R(w, 1);
      w = run_flow({&v, -a}, w, opt, res.max_steps);
      w = R(w, -1);
      w = run_flow({&u, a}, w, opt, res.max_steps);
      res.sup_error = std::max(res.sup_error, annulus_distance(lhs, w));
      res.sup_displacement = std::max(res.sup_displacement, annulus_distance(lhs, z));
    }
  return res;
}

}  // namespace symcap
