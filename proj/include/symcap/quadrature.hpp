#pragma once

#include <cmath>
#include <stdexcept>

namespace symcap {

namespace detail {

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm), right = (b - m) / 6 * (fm + 4 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0) throw std::runtime_error("adaptive Simpson: recursion limit");
  if (std::abs(delta) <= 15 * tol) return left + right + delta / 15;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with absolute tolerance; the interval is pre-split to avoid early false convergence.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int pieces = 16, int depth = 50) {
  double h = (b - a) / pieces, total = 0;
  for (int i = 0; i < pieces; ++i) {
    double lo = a + i * h, hi = i + 1 == pieces ? b : lo + h;
    double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    double whole = (hi - lo) / 6 * (fa + 4 * fm + fb);
    total += detail::simpson_rec(f, lo, hi, fa, fm, fb, whole, tol / pieces, depth);
  }
  return total;
}

}  // namespace symcap
