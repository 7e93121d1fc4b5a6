#include "symcap/domain.hpp"

#include <algorithm>
#include <cctype>

namespace symcap {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

int cmp_r(const Rational& a, const Rational& b) { return a < b ? -1 : (b < a ? 1 : 0); }

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  DomainSpec run() {
    DomainSpec d = spec();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ValidationError("parse error at " + std::to_string(i_) + ": " + what + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  Rational number() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '/' || s_[j] == '.' ||
                             s_[j] == '-' || s_[j] == '+'))
      ++j;
    if (j == i_) fail("expected number");
    try {
      Rational r = Rational::parse(s_.substr(i_, j - i_));
      i_ = j;
      return r;
    } catch (const std::invalid_argument&) {
      fail("bad number");
    }
  }
  DomainSpec spec() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s_[i_++])));
    switch (c) {
      case 'E':
      case 'P': {
        expect('(');
        Rational a = number();
        expect(',');
        Rational b = number();
        expect(')');
        return c == 'E' ? DomainSpec::ellipsoid(a, b) : DomainSpec::polydisk(a, b);
      }
      case 'B': {
        expect('(');
        Rational a = number();
        expect(')');
        return DomainSpec::ball(a);
      }
      case 'U': {
        expect('[');
        std::vector<DomainSpec> ms;
        if (!peek(']')) {
          ms.push_back(spec());
          while (peek(',')) {
            ++i_;
            ms.push_back(spec());
          }
        }
        expect(']');
        return DomainSpec::disjoint_union(std::move(ms));
      }
      default:
        --i_;
        fail("unknown domain kind");
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

std::optional<std::string> validate_at(const DomainSpec& spec, const std::string& path) {
  auto width = [&](const Rational& r, const char* name) -> std::optional<std::string> {
    if (r.sign() <= 0) return path + "." + name + ": nonpositive width";
    return std::nullopt;
  };
  return std::visit(overloaded{
                        [&](const Ellipsoid& e) -> std::optional<std::string> {
                          if (auto w = width(e.a, "a")) return w;
                          return width(e.b, "b");
                        },
                        [&](const Polydisk& p) -> std::optional<std::string> {
                          if (auto w = width(p.a, "a")) return w;
                          return width(p.b, "b");
                        },
                        [&](const Ball& b) { return width(b.a, "a"); },
                        [&](const Union& u) -> std::optional<std::string> {
                          if (u.members.empty()) return path + ": empty union";
                          for (std::size_t i = 0; i < u.members.size(); ++i)
                            if (auto w = validate_at(u.members[i], path + "[" + std::to_string(i) + "]")) return w;
                          return std::nullopt;
                        },
                    },
                    spec.node());
}

}  // namespace

DomainSpec DomainSpec::ellipsoid(Rational a, Rational b) { return DomainSpec(Ellipsoid{std::move(a), std::move(b)}); }
DomainSpec DomainSpec::polydisk(Rational a, Rational b) { return DomainSpec(Polydisk{std::move(a), std::move(b)}); }
DomainSpec DomainSpec::ball(Rational a) { return DomainSpec(Ball{std::move(a)}); }

DomainSpec DomainSpec::disjoint_union(std::vector<DomainSpec> members) {
  std::vector<DomainSpec> flat;
  for (auto& m : members) {
    if (auto* u = std::get_if<Union>(&m.node_))
      flat.insert(flat.end(), u->members.begin(), u->members.end());
    else
      flat.push_back(std::move(m));
  }
  std::sort(flat.begin(), flat.end());
  return DomainSpec(Union{std::move(flat)});
}

DomainSpec DomainSpec::parse(std::string_view text) { return Parser(text).run(); }

std::string DomainSpec::str() const {
  return std::visit(overloaded{
                        [](const Ellipsoid& e) { return "E(" + e.a.str() + "," + e.b.str() + ")"; },
                        [](const Polydisk& p) { return "P(" + p.a.str() + "," + p.b.str() + ")"; },
                        [](const Ball& b) { return "B(" + b.a.str() + ")"; },
                        [](const Union& u) {
                          std::string s = "U[";
                          for (std::size_t i = 0; i < u.members.size(); ++i) {
                            if (i) s += ",";
                            s += u.members[i].str();
                          }
                          return s + "]";
                        },
                    },
                    node_);
}

int DomainSpec::compare(const DomainSpec& x, const DomainSpec& y) {
  if (x.node_.index() != y.node_.index()) return x.node_.index() < y.node_.index() ? -1 : 1;
  return std::visit(overloaded{
                        [&](const Ellipsoid& e) {
                          const auto& f = std::get<Ellipsoid>(y.node_);
                          int c = cmp_r(e.a, f.a);
                          return c ? c : cmp_r(e.b, f.b);
                        },
                        [&](const Polydisk& e) {
                          const auto& f = std::get<Polydisk>(y.node_);
                          int c = cmp_r(e.a, f.a);
                          return c ? c : cmp_r(e.b, f.b);
                        },
                        [&](const Ball& b) { return cmp_r(b.a, std::get<Ball>(y.node_).a); },
                        [&](const Union& u) {
                          const auto& v = std::get<Union>(y.node_);
                          for (std::size_t i = 0; i < std::min(u.members.size(), v.members.size()); ++i)
                            if (int c = compare(u.members[i], v.members[i])) return c;
                          return u.members.size() == v.members.size() ? 0 : (u.members.size() < v.members.size() ? -1 : 1);
                        },
                    },
                    x.node_);
}

std::optional<std::string> validate(const DomainSpec& spec) { return validate_at(spec, "$"); }

void require_valid(const DomainSpec& spec) {
  if (auto err = validate(spec)) throw ValidationError(*err);
}

Rational volume(const DomainSpec& spec) {
  return std::visit(overloaded{
                        [](const Ellipsoid& e) { return e.a * e.b / Rational(2); },
                        [](const Polydisk& p) { return p.a * p.b; },
                        [](const Ball& b) { return b.a * b.a / Rational(2); },
                        [](const Union& u) {
                          Rational v;
                          for (const auto& m : u.members) v += volume(m);
                          return v;
                        },
                    },
                    spec.node());
}

}  // namespace symcap
