#include "symcap/billiard.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "symcap/domain.hpp"

namespace symcap {

namespace {

constexpr double kFaceTol = 1e-12;

double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices, std::vector<std::string> labels)
    : verts_(std::move(vertices)), labels_(std::move(labels)) {
  const std::size_t n = verts_.size();
  if (n < 3) throw ValidationError("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(verts_[i], verts_[(i + 1) % n], verts_[(i + 2) % n]).sign() <= 0)
      throw ValidationError("polygon must be strictly convex and counterclockwise");
  }
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != n) throw ValidationError("label count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = vertex(i), b = vertex((i + 1) % n);
    double ex = b[0] - a[0], ey = b[1] - a[1], len = std::hypot(ex, ey);
    Vec2 nrm{ey / len, -ex / len};
    normals_.push_back(nrm);
    offsets_.push_back(dot(nrm, a));
  }
}

Vec2 ConvexPolygon::vertex(std::size_t i) const { return {verts_[i][0].to_double(), verts_[i][1].to_double()}; }

ConvexPolygon triangle_T() {
  return ConvexPolygon({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                       {"t_b", "t_d", "t_l"});
}

ConvexPolygon square_Q() {
  return ConvexPolygon({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)}},
                       {"q_b", "q_r", "q_t", "q_l"});
}

ConvexPolygon rectangle_S(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw ValidationError("nonpositive width");
  return ConvexPolygon({{Rational(0), Rational(0)}, {a, Rational(0)}, {a, b}, {Rational(0), b}}, {"s_b", "s_r", "s_t", "s_l"});
}

bool is_lagrangian(const LagrangianProduct& P, const TwoFace& f) {
  return std::abs(dot(P.base.normal(f.base_edge), P.fiber.normal(f.fiber_edge))) < kFaceTol;
}

std::string face_name(const LagrangianProduct& P, const Face& f) {
  return f.kind == FaceKind::BaseEdge ? P.base.label(f.index) + "xQ" : "Kx" + P.fiber.label(f.index);
}

std::string two_face_name(const LagrangianProduct& P, const TwoFace& f) {
  return P.base.label(f.base_edge) + "x" + P.fiber.label(f.fiber_edge);
}

FlowState enter_from_two_face(const LagrangianProduct& P, const TwoFace& f, const Vec2& q, const Vec2& p,
                              bool reversed) {
  if (f.base_edge >= P.base.size() || f.fiber_edge >= P.fiber.size()) throw ValidationError("no such 2-face");
  if (std::abs(dot(P.base.normal(f.base_edge), q) - P.base.offset(f.base_edge)) > 1e-9 ||
      std::abs(dot(P.fiber.normal(f.fiber_edge), p) - P.fiber.offset(f.fiber_edge)) > 1e-9)
    throw ValidationError("point does not lie on the 2-face " + two_face_name(P, f));
  double c = dot(P.base.normal(f.base_edge), P.fiber.normal(f.fiber_edge));
  if (std::abs(c) < kFaceTol) throw FlowError("start on Lagrangian 2-face " + two_face_name(P, f));
  // forward: p' = -n_t enters Q iff n_t . m_q > 0
  bool base = reversed ? c < 0 : c > 0;
  Face face = base ? Face{FaceKind::BaseEdge, f.base_edge} : Face{FaceKind::FiberEdge, f.fiber_edge};
  return {face, {q[0], q[1], p[0], p[1]}, f, reversed};
}

FlowState flow_step(const LagrangianProduct& P, const FlowState& s, double* dt) {
  const bool on_base = s.face.kind == FaceKind::BaseEdge;
  const ConvexPolygon& moving = on_base ? P.fiber : P.base;  // polygon whose coordinates change
  const double sign = s.reversed ? -1.0 : 1.0;
  Vec2 v = on_base ? Vec2{-sign * P.base.normal(s.face.index)[0], -sign * P.base.normal(s.face.index)[1]}
                   : Vec2{sign * P.fiber.normal(s.face.index)[0], sign * P.fiber.normal(s.face.index)[1]};
  Vec2 x = on_base ? Vec2{s.position[2], s.position[3]} : Vec2{s.position[0], s.position[1]};

  double best = INFINITY, second = INFINITY;
  std::size_t hit = moving.size();
  for (std::size_t e = 0; e < moving.size(); ++e) {
    double rate = dot(moving.normal(e), v);
    if (rate <= kFaceTol) continue;
    double t = (moving.offset(e) - dot(moving.normal(e), x)) / rate;
    if (t < best) {
      second = best;
      best = t, hit = e;
    } else if (t < second) {
      second = t;
    }
  }
  if (hit == moving.size()) throw FlowError("no exit face");
  if (best <= kFaceTol) throw FlowError("degenerate zero-length step");
  if (second - best <= kFaceTol) throw FlowError("trajectory hits a corner");
  Vec2 y{x[0] + best * v[0], x[1] + best * v[1]};
  double excess = dot(moving.normal(hit), y) - moving.offset(hit);
  y = {y[0] - excess * moving.normal(hit)[0], y[1] - excess * moving.normal(hit)[1]};

  TwoFace tf = on_base ? TwoFace{s.face.index, hit} : TwoFace{hit, s.face.index};
  if (is_lagrangian(P, tf)) throw FlowError("trajectory hits Lagrangian 2-face " + two_face_name(P, tf));
  FlowState out = s;
  if (on_base) {
    out.position[2] = y[0], out.position[3] = y[1];
    out.face = {FaceKind::FiberEdge, hit};
  } else {
    out.position[0] = y[0], out.position[1] = y[1];
    out.face = {FaceKind::BaseEdge, hit};
  }
  out.entered_through = tf;
  if (dt) *dt = best;
  return out;
}

Itinerary face_itinerary(const LagrangianProduct& P, const FlowState& start, std::size_t max_steps) {
  Itinerary it;
  it.states.push_back(start);
  it.two_faces.push_back(start.entered_through);
  FlowState s = start;
  for (std::size_t i = 0; i < max_steps; ++i) {
    double dt = 0;
    s = flow_step(P, s, &dt);
    it.total_time += dt;
    if (s.entered_through == start.entered_through) {
      it.states.push_back(s);
      return it;
    }
    it.states.push_back(s);
    it.two_faces.push_back(s.entered_through);
  }
  throw FlowError("no return to the starting 2-face within step budget");
}

double return_map_check(const LagrangianProduct& P, const FlowState& start) {
  auto it = face_itinerary(P, start);
  if (it.total_time <= kFaceTol) throw FlowError("degenerate zero-length itinerary");
  const auto& a = start.position;
  const auto& b = it.states.back().position;
  double s = 0;
  for (int i = 0; i < 4; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

FlowState sample_generic_start(const LagrangianProduct& P, const TwoFace& f, std::mt19937_64& rng, double margin) {
  std::uniform_real_distribution<double> U(margin, 1.0 - margin);
  auto on_edge = [](const ConvexPolygon& poly, std::size_t e, double t) {
    Vec2 a = poly.vertex(e), b = poly.vertex((e + 1) % poly.size());
    return Vec2{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec2 q = on_edge(P.base, f.base_edge, U(rng));
    Vec2 p = on_edge(P.fiber, f.fiber_edge, U(rng));
    try {
      FlowState s = enter_from_two_face(P, f, q, p);
      face_itinerary(P, s);
      return s;
    } catch (const FlowError&) {
    }
  }
  throw FlowError("no generic start found");
}

double circle_distance(double x, double y) {
  constexpr double tau = 2 * std::numbers::pi;
  double d = std::fmod(x - y, tau);
  if (d < 0) d += tau;
  return std::min(d, tau - d);
}

RibbonRotation ribbon_rotation_number(const Rational& ar, const Rational& br, double theta0, double theta1) {
  constexpr double tau = 2 * std::numbers::pi;
  if (ar.sign() <= 0 || br.sign() <= 0) throw ValidationError("nonpositive width");
  if (!(0 <= theta0 && theta0 < theta1 && theta1 < tau)) throw ValidationError("need 0 <= theta0 < theta1 < 2 pi");
  const double a = ar.to_double(), b = br.to_double();
  // sample point w of the fibre disk; z1 on the boundary of E(a,b) over it
  const std::complex<double> w = std::polar(0.37 * std::sqrt(b / std::numbers::pi), 0.7);
  double rho2 = a / std::numbers::pi * (1.0 - std::numbers::pi * std::norm(w) / b);
  if (rho2 <= 1e-24) throw FlowError("tangential first hit: z1 vanishes");
  const std::complex<double> z1 = std::polar(std::sqrt(rho2), theta0);
  auto phase = [&](double t) {
    double ang = std::arg(z1 * std::polar(1.0, tau * t / a));
    double d = std::remainder(ang - theta1, tau);
    return d;
  };
  // first t > 0 where arg z1(t) crosses theta1 upward
  double dt = a / tau * 1e-2, t = 0;
  double prev = phase(0);
  for (;;) {
    double cur = phase(t + dt);
    if (prev < 0 && cur >= 0 && cur - prev < 1.0) break;
    prev = cur;
    t += dt;
    if (t > 2 * a) throw FlowError("no first hit found");
  }
  double lo = t, hi = t + dt;
  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (phase(mid) < 0 ? lo : hi) = mid;
  }
  double th = 0.5 * (lo + hi);
  std::complex<double> z2 = w * std::polar(1.0, tau * th / b);
  double measured = std::fmod(std::arg(z2 / w) + tau, tau);
  double predicted = std::fmod(a * (theta1 - theta0) / b, tau);
  if (predicted < 0) predicted += tau;
  return {measured, predicted, th};
}

}  // namespace symcap
