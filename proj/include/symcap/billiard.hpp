#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcap/commutator.hpp"
#include "symcap/packing.hpp"

namespace symcap {

class FlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvexPolygon {
 public:
  // Counterclockwise, strictly convex, no repeated vertices.
  ConvexPolygon(std::vector<Point2> vertices, std::vector<std::string> labels = {});

  std::size_t size() const { return verts_.size(); }
  const std::vector<Point2>& vertices() const { return verts_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  // edge i joins vertex i to vertex i+1; polygon = {x : normal(i).x <= offset(i)}
  const Vec2& normal(std::size_t i) const { return normals_[i]; }
  double offset(std::size_t i) const { return offsets_[i]; }
  Vec2 vertex(std::size_t i) const;

 private:
  std::vector<Point2> verts_;
  std::vector<std::string> labels_;
  std::vector<Vec2> normals_;
  std::vector<double> offsets_;
};

ConvexPolygon triangle_T();
ConvexPolygon square_Q();
ConvexPolygon rectangle_S(const Rational& a, const Rational& b);

// Base K holds positions q, fiber Q holds momenta p; omega = sum dq_i ^ dp_i.
struct LagrangianProduct {
  ConvexPolygon base, fiber;
};

enum class FaceKind { BaseEdge, FiberEdge };

// BaseEdge i: the 3-face t_i x Q. FiberEdge j: the 3-face K x q_j.
struct Face {
  FaceKind kind;
  std::size_t index;
  friend bool operator==(const Face&, const Face&) = default;
};

struct TwoFace {
  std::size_t base_edge, fiber_edge;
  friend bool operator==(const TwoFace&, const TwoFace&) = default;
};

struct FlowState {
  Face face;
  std::array<double, 4> position;  // (q1, q2, p1, p2)
  TwoFace entered_through;
  bool reversed = false;
};

struct Itinerary {
  std::vector<FlowState> states;
  std::vector<TwoFace> two_faces;  // crossed, starting with the start face
  double total_time = 0;
};

bool is_lagrangian(const LagrangianProduct& P, const TwoFace& f);
std::string face_name(const LagrangianProduct& P, const Face& f);
std::string two_face_name(const LagrangianProduct& P, const TwoFace& f);

// State leaving the 2-face point (q, p) into the 3-face selected by the flow direction.
FlowState enter_from_two_face(const LagrangianProduct& P, const TwoFace& f, const Vec2& q, const Vec2& p,
                              bool reversed = false);

// Translate to the next symplectic 2-face and switch 3-faces; dt receives the elapsed time.
FlowState flow_step(const LagrangianProduct& P, const FlowState& s, double* dt = nullptr);

// Iterate until the first return to the starting 2-face.
Itinerary face_itinerary(const LagrangianProduct& P, const FlowState& start, std::size_t max_steps = 10000);
double return_map_check(const LagrangianProduct& P, const FlowState& start);

// Uniform point on the 2-face, at least `margin` away from its boundary, whose orbit returns regularly.
FlowState sample_generic_start(const LagrangianProduct& P, const TwoFace& f, std::mt19937_64& rng,
                               double margin = 1e-6);

struct RibbonRotation {
  double measured;   // mod 2 pi
  double predicted;  // a (theta1 - theta0) / b mod 2 pi
  double hit_time;
};

RibbonRotation ribbon_rotation_number(const Rational& a, const Rational& b, double theta0, double theta1);

double circle_distance(double x, double y);

}  // namespace symcap
