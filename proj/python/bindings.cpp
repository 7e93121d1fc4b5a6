#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symcap/billiard.hpp"
#include "symcap/capacities.hpp"
#include "symcap/coloring.hpp"
#include "symcap/commutator.hpp"
#include "symcap/counterexample.hpp"
#include "symcap/packing.hpp"
#include "symcap/selftest.hpp"
#include "symcap/weyl.hpp"

namespace py = pybind11;
using namespace symcap;

namespace {

std::vector<std::string> strs(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

DomainSpec checked(const std::string& text) {
  auto d = DomainSpec::parse(text);
  require_valid(d);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ECH capacities, Weyl-law error terms and related numerics";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<HypothesisViolation>(m, "HypothesisViolation", PyExc_ValueError);
  py::register_exception<FlowError>(m, "FlowError", PyExc_RuntimeError);

  m.def("canonical", [](const std::string& d) { return DomainSpec::parse(d).str(); });
  m.def("validate", [](const std::string& d) { return validate(DomainSpec::parse(d)); });
  m.def("volume", [](const std::string& d) { return volume(checked(d)).str(); });
  m.def("capacities", [](const std::string& d, std::size_t kmax) { return strs(capacities(checked(d), kmax).values); },
        py::arg("domain"), py::arg("kmax"));
  m.def(
      "error_terms",
      [](const std::string& d, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::tuple<std::uint64_t, std::string, double>> out;
        for (const auto& e : error_terms(checked(d), lo, hi).entries) out.emplace_back(e.k, e.capacity.str(), e.error);
        return out;
      },
      py::arg("domain"), py::arg("k_lo"), py::arg("k_hi"));
  m.def(
      "ball_error_extremes",
      [](const std::string& a, std::uint64_t lo, std::uint64_t hi) {
        auto w = ball_error_extremes(Rational::parse(a), lo, hi);
        return py::dict(py::arg("inf") = w.inf, py::arg("argmin") = w.argmin, py::arg("sup") = w.sup,
                        py::arg("argmax") = w.argmax);
      },
      py::arg("a"), py::arg("k_lo"), py::arg("k_hi"));
  m.def(
      "partition",
      [](const std::vector<std::string>& vols, std::uint64_t k) {
        PartitionProblem p{{}, k};
        for (const auto& v : vols) p.volumes.push_back(Rational::parse(v));
        auto r = partition_sqrt_max(p);
        return py::make_tuple(r.value, r.allocation, r.upper_bound);
      },
      py::arg("volumes"), py::arg("k"));
  m.def("weight_sequence", [](const std::string& a, const std::string& b) {
    return strs(weight_sequence(Rational::parse(a), Rational::parse(b)).weights);
  });
  m.def(
      "embedding_function_lower",
      [](const std::string& a, std::uint64_t K) {
        auto r = embedding_function_lower(Rational::parse(a), K);
        return py::make_tuple(r.ratio.str(), r.argmax_k);
      },
      py::arg("a"), py::arg("kmax"));
  m.def(
      "coloring",
      [](std::uint32_t k, const std::string& alpha) {
        auto g = interference_graph(k, RotationParam(Rational::parse(alpha)));
        auto c = color_lattice(g);
        return py::dict(py::arg("vertices") = g.vertex_count(), py::arg("edges") = g.edge_count(),
                        py::arg("max_degree") = g.max_degree, py::arg("color_count") = c.color_count,
                        py::arg("proper") = is_proper(g, c), py::arg("colors") = c.colors);
      },
      py::arg("k"), py::arg("alpha"));
  m.def(
      "rotcheck",
      [](const std::string& alpha, std::size_t grid, double tol, std::size_t steps) {
        BumpTwist u{0.5, 1.0 / 6, 0.15, 0.05}, v{0.575, 1.0 / 6, 0.15, 0.04};
        SupportRect U{Rational(0), Rational(1), Rational(0), Rational(1, 3)};
        auto r = rotation_commutator_check(u, v, U, RotationParam(Rational::parse(alpha)), {grid, tol, steps});
        return py::make_tuple(r.sup_error, r.sup_displacement);
      },
      py::arg("alpha") = "1/3", py::arg("grid") = 12, py::arg("tol") = 1e-8, py::arg("steps") = 0);
  m.def(
      "billiard_itinerary",
      [](double q2, double p2) {
        LagrangianProduct P{triangle_T(), square_Q()};
        auto s = enter_from_two_face(P, {2, 3}, {0, q2}, {0, p2});
        auto it = face_itinerary(P, s);
        std::vector<std::string> names;
        for (const auto& f : it.two_faces) names.push_back(two_face_name(P, f));
        return py::make_tuple(names, it.total_time, return_map_check(P, s));
      },
      py::arg("q2"), py::arg("p2"));
  m.def("ribbon_rotation", [](const std::string& a, const std::string& b, double t0, double t1) {
    auto r = ribbon_rotation_number(Rational::parse(a), Rational::parse(b), t0, t1);
    return py::make_tuple(r.measured, r.predicted);
  });
  m.def("cutoff_N", &cex::cutoff_N);
  m.def("xh_volume", [](double lambda, double tail_tol) { return cex::xh_volume(cex::make_profile(lambda), tail_tol); },
        py::arg("lambda_") = 1.0, py::arg("tail_tol") = 1e-10);
  m.def(
      "divergence",
      [](const std::vector<std::uint64_t>& ds, double lambda) {
        py::list out;
        for (const auto& p : cex::divergence_series(ds, cex::make_profile(lambda)))
          out.append(py::dict(py::arg("d") = p.d, py::arg("N") = p.N, py::arg("c_link") = p.c_link, py::arg("s_d") = p.s_d,
                              py::arg("bound") = p.bound, py::arg("ln_N") = p.ln_N));
        return out;
      },
      py::arg("d"), py::arg("lambda_") = 1.0);
  m.def(
      "selftest",
      [](const std::string& module, std::uint64_t seed) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : selftest(module, seed)) out.emplace_back(r.name, r.pass, r.detail);
        return out;
      },
      py::arg("module"), py::arg("seed") = 20240601);
}
