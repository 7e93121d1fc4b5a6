#pragma once

#include <cstdint>
#include <vector>

#include "symcap/capacities.hpp"

namespace symcap {

struct ErrorTerm {
  std::uint64_t k;
  Rational capacity;
  double error;  // c_k - 2 sqrt(vol k)
};

struct ErrorTermSeries {
  DomainSpec domain;
  Rational volume;
  std::vector<ErrorTerm> entries;
};

ErrorTermSeries error_terms(const DomainSpec& spec, std::uint64_t k_lo, std::uint64_t k_hi);
double error_term(const Rational& capacity, const Rational& vol, std::uint64_t k);

struct WindowExtremes {
  double inf, sup;
  std::uint64_t argmin, argmax;
};

WindowExtremes ball_error_extremes(const Rational& a, std::uint64_t k_lo, std::uint64_t k_hi);

struct PartitionProblem {
  std::vector<Rational> volumes;
  std::uint64_t k = 0;
};

struct PartitionResult {
  double value;
  std::vector<std::uint64_t> allocation;
  double upper_bound;  // sqrt(V k)
};

// Greedy marginal-gain allocation; ties go to the lowest member index.
PartitionResult partition_sqrt_max(const PartitionProblem& p);
// Greedy optimum for every k in 0..k_max, reusing the incremental allocation.
std::vector<double> partition_sqrt_max_sweep(const std::vector<Rational>& volumes, std::uint64_t k_max);

double floor_allocation_gap(const PartitionProblem& p);

struct Step4Inner {
  double value;
  std::uint64_t ell;
};

// inf over ell >= 0 of sqrt(V(k+ell)) - sqrt(V1 k) - sqrt(V2 ell), V = V1 + V2.
Step4Inner step4_inner_inf(const Rational& v1, const Rational& v2, std::uint64_t k);

struct Step4Result {
  double sup;
  std::uint64_t argsup;
  double last_decade_variation;  // running-sup change over [k_hi/10, k_hi]
  std::vector<std::pair<std::uint64_t, double>> running_sup;  // at powers of ten and k_hi
};

Step4Result step4_inf_bound(const Rational& v1, const Rational& v2, std::uint64_t k_lo, std::uint64_t k_hi);

struct PfhBookkeeping {
  std::uint64_t d;
  double V, A;
  std::uint64_t m;
  std::int64_t g;
};

struct PfhResiduals {
  std::uint64_t n, k;
  double r1, r2;
};

PfhResiduals pfh_bookkeeping(const PfhBookkeeping& b);

}  // namespace symcap
