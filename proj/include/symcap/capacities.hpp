#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "symcap/domain.hpp"

namespace symcap {

struct CapacitySequence {
  std::vector<Rational> values;  // c_0 .. c_K
  DomainSpec source;

  std::size_t max_index() const { return values.size() - 1; }
  const Rational& operator[](std::size_t k) const { return values[k]; }
};

// c_k(E(a,b)) is the (k+1)-st smallest element of {ma+nb : m,n >= 0}.
CapacitySequence capacities_ellipsoid(const Rational& a, const Rational& b, std::size_t K);

// c_k(B(a)) = d*a with d minimal such that (d+1)(d+2)/2 >= k+1.
Rational capacities_ball_closed_form(const Rational& a, std::uint64_t k);
std::uint64_t ball_capacity_level(std::uint64_t k);

// c_k(P(a,b)) = min{am+bn : (m+1)(n+1) >= k+1}.
CapacitySequence capacities_polydisk(const Rational& a, const Rational& b, std::size_t K);

// Max-plus convolution of the member sequences, truncated at K.
CapacitySequence capacities_union(std::span<const CapacitySequence> members, std::size_t K);

CapacitySequence capacities(const DomainSpec& spec, std::size_t K);

struct Obstructed {
  std::size_t k;
  Rational source_value;
  Rational target_value;
};
struct NoObstructionUpTo {
  std::size_t K;
};
// Finite truncation: a semi-decision only.
using EmbeddingVerdict = std::variant<Obstructed, NoObstructionUpTo>;

EmbeddingVerdict embedding_obstruction(const DomainSpec& source, const DomainSpec& target, std::size_t K);

}  // namespace symcap
