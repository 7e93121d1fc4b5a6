#include "symcap/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace symcap {

namespace {

constexpr std::int64_t kSafe = std::int64_t{1} << 61;

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

bool fits(const mpz_class& z) { return z.fits_slong_p() && abs(z) < kSafe; }

std::size_t as_count(std::int64_t v) { return static_cast<std::size_t>(v); }
std::size_t as_count(const mpz_class& v) { return v.get_ui(); }

// Smallest K+1 elements of {m*A + n*B}, A <= B positive.
template <class Int>
std::vector<Int> lattice_prefix(const Int& A, const Int& B, std::size_t K) {
  auto count_below = [&](const Int& T) {
    std::size_t c = 0;
    for (Int n = 0; n * B <= T; n += 1) {
      Int t = (T - n * B) / A + 1;
      if (t >= Int(static_cast<long>(K + 1))) return K + 1;
      c += as_count(t);
      if (c >= K + 1) return K + 1;
    }
    return c;
  };
  Int T = A < B ? A : B;
  while (count_below(T) < K + 1) T *= 2;
  std::vector<Int> out;
  for (Int n = 0; n * B <= T; n += 1)
    for (Int v = n * B; v <= T; v += A) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.resize(K + 1);
  return out;
}

template <class Int>
Int to_int(const mpz_class& z);
template <>
std::int64_t to_int<std::int64_t>(const mpz_class& z) { return z.get_si(); }
template <>
mpz_class to_int<mpz_class>(const mpz_class& z) { return z; }

template <class Int>
mpz_class to_mpz(const Int& v) {
  if constexpr (std::is_same_v<Int, mpz_class>)
    return v;
  else
    return mpz_class(static_cast<long>(v));
}

struct Scaled {
  mpz_class A, B, D;  // a = A/D, b = B/D
};

Scaled common_scale(const Rational& a, const Rational& b) {
  mpz_class D = lcm(a.denominator(), b.denominator());
  return {a.numerator() * (D / a.denominator()), b.numerator() * (D / b.denominator()), D};
}

template <class Int>
std::vector<Rational> ellipsoid_values(const Scaled& s, std::size_t K) {
  Int A = to_int<Int>(min(Rational(s.A, 1), Rational(s.B, 1)).numerator());
  Int B = to_int<Int>(max(Rational(s.A, 1), Rational(s.B, 1)).numerator());
  auto raw = lattice_prefix<Int>(A, B, K);
  std::vector<Rational> vals;
  vals.reserve(raw.size());
  for (const auto& v : raw) vals.emplace_back(to_mpz(v), s.D);
  return vals;
}

void check_positive(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw ValidationError("nonpositive width");
}

}  // namespace

CapacitySequence capacities_ellipsoid(const Rational& a, const Rational& b, std::size_t K) {
  check_positive(a, b);
  if (K == 0) throw std::invalid_argument("K must be positive");
  Scaled s = common_scale(a, b);
  mpz_class top = max(Rational(s.A, 1), Rational(s.B, 1)).numerator();
  // worst-case threshold is about 2*(K+1)*max(A,B)
  bool small = fits(top * mpz_class(static_cast<unsigned long>(4 * (K + 2))));
  auto vals = small ? ellipsoid_values<std::int64_t>(s, K) : ellipsoid_values<mpz_class>(s, K);
  return {std::move(vals), DomainSpec::ellipsoid(a, b)};
}

std::uint64_t ball_capacity_level(std::uint64_t k) {
  auto d = static_cast<std::uint64_t>(std::max(0.0, std::floor((std::sqrt(8.0 * (static_cast<double>(k) + 1) + 1) - 3) / 2)));
  auto tri = [](std::uint64_t x) { return (x + 1) * (x + 2) / 2; };
  while (d > 0 && tri(d - 1) >= k + 1) --d;
  while (tri(d) < k + 1) ++d;
  return d;
}

Rational capacities_ball_closed_form(const Rational& a, std::uint64_t k) {
  return a * Rational(mpz_class(static_cast<unsigned long>(ball_capacity_level(k))), mpz_class(1));
}

CapacitySequence capacities_polydisk(const Rational& a, const Rational& b, std::size_t K) {
  check_positive(a, b);
  if (K == 0) throw std::invalid_argument("K must be positive");
  Scaled s = common_scale(a, b);
  std::vector<Rational> vals(K + 1);
  mpz_class bound = (s.A + s.B) * mpz_class(static_cast<unsigned long>(K + 1));
  if (fits(bound)) {
    std::int64_t A = s.A.get_si(), B = s.B.get_si();
    for (std::size_t k = 0; k <= K; ++k) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      auto kk = static_cast<std::int64_t>(k);
      for (std::int64_t n = 0; n <= kk; ++n) {
        std::int64_t m = (kk + 1 + n) / (n + 1) - 1;  // ceil((k+1)/(n+1)) - 1
        best = std::min(best, A * m + B * n);
      }
      vals[k] = Rational(mpz_class(static_cast<long>(best)), s.D);
    }
  } else {
    for (std::size_t k = 0; k <= K; ++k) {
      Rational best;
      for (std::size_t n = 0; n <= k; ++n) {
        std::size_t m = (k + 1 + n) / (n + 1) - 1;
        Rational v = a * Rational(static_cast<long>(m)) + b * Rational(static_cast<long>(n));
        if (n == 0 || v < best) best = v;
      }
      vals[k] = best;
    }
  }
  return {std::move(vals), DomainSpec::polydisk(a, b)};
}

CapacitySequence capacities_union(std::span<const CapacitySequence> members, std::size_t K) {
  if (members.empty()) throw ValidationError("empty union");
  for (const auto& m : members)
    if (m.values.empty() || m.max_index() < K) throw std::invalid_argument("mismatched lengths: member shorter than K");
  std::vector<DomainSpec> srcs;
  for (const auto& m : members) srcs.push_back(m.source);
  DomainSpec src = members.size() == 1 ? members[0].source : DomainSpec::disjoint_union(srcs);

  mpz_class D = 1;
  mpz_class total = 0;
  for (const auto& m : members) {
    for (std::size_t k = 0; k <= K; ++k) D = lcm(D, m.values[k].denominator());
  }
  for (const auto& m : members) total += abs(m.values[K].numerator() * (D / m.values[K].denominator()));

  std::vector<Rational> out(K + 1);
  if (fits(total)) {
    auto scaled = [&](const CapacitySequence& m) {
      std::vector<std::int64_t> v(K + 1);
      for (std::size_t k = 0; k <= K; ++k)
        v[k] = mpz_class(m.values[k].numerator() * (D / m.values[k].denominator())).get_si();
      return v;
    };
    std::vector<std::int64_t> acc = scaled(members[0]);
    std::vector<std::int64_t> rev(K + 1), next(K + 1);
    for (std::size_t i = 1; i < members.size(); ++i) {
      auto b = scaled(members[i]);
      for (std::size_t j = 0; j <= K; ++j) rev[j] = b[K - j];
      for (std::size_t k = 0; k <= K; ++k) {
        // b[k - j] == rev[K - k + j]
        const std::int64_t* r = rev.data() + (K - k);
        std::int64_t best = acc[0] + r[0];
        for (std::size_t j = 1; j <= k; ++j) best = std::max(best, acc[j] + r[j]);
        next[k] = best;
      }
      acc.swap(next);
    }
    for (std::size_t k = 0; k <= K; ++k) out[k] = Rational(mpz_class(static_cast<long>(acc[k])), D);
  } else {
    std::vector<Rational> acc(members[0].values.begin(), members[0].values.begin() + static_cast<long>(K + 1));
    for (std::size_t i = 1; i < members.size(); ++i) {
      std::vector<Rational> next(K + 1);
      for (std::size_t k = 0; k <= K; ++k) {
        Rational best = acc[0] + members[i].values[k];
        for (std::size_t j = 1; j <= k; ++j) best = max(best, acc[j] + members[i].values[k - j]);
        next[k] = best;
      }
      acc.swap(next);
    }
    out = std::move(acc);
  }
  return {std::move(out), src};
}

CapacitySequence capacities(const DomainSpec& spec, std::size_t K) {
  require_valid(spec);
  if (K == 0) throw std::invalid_argument("K must be positive");
  return std::visit(overloaded{
                        [&](const Ellipsoid& e) { return capacities_ellipsoid(e.a, e.b, K); },
                        [&](const Polydisk& p) { return capacities_polydisk(p.a, p.b, K); },
                        [&](const Ball& b) {
                          std::vector<Rational> v(K + 1);
                          for (std::size_t k = 0; k <= K; ++k) v[k] = capacities_ball_closed_form(b.a, k);
                          return CapacitySequence{std::move(v), spec};
                        },
                        [&](const Union& u) {
                          std::vector<CapacitySequence> ms;
                          ms.reserve(u.members.size());
                          for (const auto& m : u.members) ms.push_back(capacities(m, K));
                          auto r = capacities_union(ms, K);
                          r.source = spec;
                          return r;
                        },
                    },
                    spec.node());
}

EmbeddingVerdict embedding_obstruction(const DomainSpec& source, const DomainSpec& target, std::size_t K) {
  auto s = capacities(source, K);
  auto t = capacities(target, K);
  for (std::size_t k = 1; k <= K; ++k)
    if (t.values[k] < s.values[k]) return Obstructed{k, s.values[k], t.values[k]};
  return NoObstructionUpTo{K};
}

}  // namespace symcap
