#pragma once

#include <cstdint>
#include <vector>

#include "symcap/commutator.hpp"

namespace symcap::cex {

constexpr double kArea = 3.14159265358979323846;  // A = pi

// chi(r) = exp(1 - 1/(1 - r^2)) for r < 1, else 0
double chi(double r);

struct BumpProfile {
  double lambda = 1.0;
  double integral_f = 0;  // int over the disk of f omega
  double g_norm = 0;      // c_0 with int g = 1

  double f(double r) const { return chi(10.0 * r); }  // f(z) = chi(10|z|)
  double g(double t) const;
};

BumpProfile make_profile(double lambda = 1.0);

double disk_radius(std::uint64_t n);   // r_n = 1/(n ln^2 n)
double inner_radius(std::uint64_t n);  // 2/ln n
double outer_radius(std::uint64_t n);  // 2/ln(n-1)

struct AnnulusRing {
  std::uint64_t n;
  double inner, outer, disk_radius, mid_radius;
  Vec2 center(std::uint64_t i) const;  // i in [0, n)
};

struct AnnulusLayout {
  std::vector<AnnulusRing> rings;
};

AnnulusRing ring(std::uint64_t n);
AnnulusLayout layout(std::uint64_t n_lo, std::uint64_t n_hi);

struct FeasibilityRow {
  std::uint64_t n;
  long double width_margin;          // R+ - R- - 2 r_n
  long double circumference_margin;  // 2 pi R- - 2 r_n n
  bool pass;
};

struct FeasibilityReport {
  std::vector<FeasibilityRow> rows;  // filled when requested
  bool all_pass = true;
  std::uint64_t sign_changes = 0;
  long double min_width_margin = 0, min_circumference_margin = 0;
};

FeasibilityRow feasibility_row(std::uint64_t n);
FeasibilityReport feasibility_report(std::uint64_t n_lo, std::uint64_t n_hi, bool keep_rows = false);

struct HolderRatio {
  double closed_form, sampled;
};

HolderRatio holder_ratio(std::uint64_t n, double alpha);

// sum_{n > N} 1/(n^3 ln^3 n)
double tail_series(std::uint64_t N);
double hamiltonian_integral(const BumpProfile& p, double tail_tol);
double xh_volume(const BumpProfile& p, double tail_tol);

std::uint64_t cutoff_N(std::uint64_t d);

struct LinkPlan {
  std::uint64_t d = 0, N = 9;
  std::vector<std::uint64_t> circles;  // m_n for n = 10..N
  std::uint64_t in_disk_components = 0, remainder = 0;

  std::uint64_t m(std::uint64_t n) const { return n >= 10 && n <= N ? circles[n - 10] : 0; }
  double radius(std::uint64_t j) const;  // rho_j = sqrt(j/(d+1))
};

LinkPlan build_link_plan(std::uint64_t d);

// sum_{j=1}^{m_n} f(rho_j / r_n)
long double circle_value_sum(const LinkPlan& plan, std::uint64_t n, const BumpProfile& p);
double link_spectral_value(const LinkPlan& plan, const BumpProfile& p);
// Same quantity from explicitly placed circles and a pointwise evaluation of H~.
double link_spectral_value_geometric(const LinkPlan& plan, const BumpProfile& p);
double hamiltonian_value(const BumpProfile& p, const Vec2& z);

struct DivergencePoint {
  std::uint64_t d, N;
  double c_link, s_d, bound, ln_N, d_tail;
  bool below_bound;
};

std::vector<DivergencePoint> divergence_series(const std::vector<std::uint64_t>& d_list, const BumpProfile& p);

struct NestedBound {
  double lhs, rhs;
  bool pass;
};

NestedBound nested_bound_check(std::uint64_t n, std::uint64_t d, const BumpProfile& p);

struct ErrorChain {
  std::uint64_t d, n_d, k_d, i_d, j_d;
  double residual, step_bound;
};

double lipschitz_step_bound(double vol, std::uint64_t k, std::uint64_t l);
ErrorChain error_chain_residuals(std::uint64_t d, const BumpProfile& p);

struct LinearFit {
  double slope, intercept, r2;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace symcap::cex
