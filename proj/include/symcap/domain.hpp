#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symcap/rational.hpp"

namespace symcap {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainSpec;

struct Ellipsoid {
  Rational a, b;
};
struct Polydisk {
  Rational a, b;
};
struct Ball {
  Rational a;
};
struct Union {
  std::vector<DomainSpec> members;
};

class DomainSpec {
 public:
  using Node = std::variant<Ellipsoid, Polydisk, Ball, Union>;

  static DomainSpec ellipsoid(Rational a, Rational b);
  static DomainSpec polydisk(Rational a, Rational b);
  static DomainSpec ball(Rational a);
  // Nested unions are flattened and members sorted canonically.
  static DomainSpec disjoint_union(std::vector<DomainSpec> members);

  // Text form: E(1,2), P(3/2,1), B(1), U[B(1),E(1,2)].
  static DomainSpec parse(std::string_view text);
  std::string str() const;

  const Node& node() const { return node_; }
  bool is_union() const { return std::holds_alternative<Union>(node_); }

  friend bool operator==(const DomainSpec& a, const DomainSpec& b) { return compare(a, b) == 0; }
  friend bool operator<(const DomainSpec& a, const DomainSpec& b) { return compare(a, b) < 0; }
  static int compare(const DomainSpec& a, const DomainSpec& b);

 private:
  explicit DomainSpec(Node n) : node_(std::move(n)) {}
  Node node_;
};

// First violated constraint with its path, or nullopt when valid.
std::optional<std::string> validate(const DomainSpec& spec);
void require_valid(const DomainSpec& spec);

Rational volume(const DomainSpec& spec);

}  // namespace symcap
