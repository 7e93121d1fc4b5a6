#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>
#include <variant>

#include "symcap/billiard.hpp"
#include "symcap/capacities.hpp"
#include "symcap/coloring.hpp"
#include "symcap/commutator.hpp"
#include "symcap/counterexample.hpp"
#include "symcap/packing.hpp"
#include "symcap/selftest.hpp"
#include "symcap/weyl.hpp"

namespace symcap {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<std::int64_t, std::uint64_t, double, bool, std::string, Rational>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  json meta = json::object();
  bool property_ok = true;

  void add(std::vector<Cell> r) { rows.push_back(std::move(r)); }
};

struct PropertyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>)
          return v.str();
        else if constexpr (std::is_same_v<T, double>)
          return std::isfinite(v) ? json(v) : json(nullptr);
        else
          return v;
      },
      c);
}

std::string cell_csv(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>)
          return v.str();
        else if constexpr (std::is_same_v<T, double>)
          return fmt_double(v);
        else if constexpr (std::is_same_v<T, bool>)
          return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string q = "\"";
          for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          return q + "\"";
        } else
          return std::to_string(v);
      },
      c);
}

void render(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << cell_csv(r[i]);
      out << "\n";
    }
    return;
  }
  json j;
  j["command"] = t.command;
  j["rows"] = json::array();
  for (const auto& r : t.rows) {
    json o = json::object();
    for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = cell_json(r[i]);
    j["rows"].push_back(o);
  }
  if (!t.meta.empty()) j["meta"] = t.meta;
  out << j.dump(2) << "\n";
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw ValidationError("empty list");
  return out;
}

Rational parse_positive(const std::string& s, const char* what) {
  Rational r;
  try {
    r = Rational::parse(s);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
  if (r.sign() <= 0) throw ValidationError(std::string(what) + ": nonpositive width");
  return r;
}

std::uint64_t as_count(double x, const char* what) {
  if (!(x >= 0) || x > 1e18 || x != std::floor(x)) throw ValidationError(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::uint64_t>(x);
}

std::vector<std::uint64_t> decades(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t d = lo; d <= hi; d *= 10) {
    v.push_back(d);
    if (d > hi / 10) break;
  }
  return v;
}

LagrangianProduct parse_table(const std::string& s) {
  if (s == "T") return {triangle_T(), square_Q()};
  if (s.size() > 3 && s.rfind("S(", 0) == 0 && s.back() == ')') {
    auto inner = s.substr(2, s.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string::npos) throw ValidationError("expected S(a,b)");
    return {rectangle_S(parse_positive(inner.substr(0, comma), "a"), parse_positive(inner.substr(comma + 1), "b")), square_Q()};
  }
  throw ValidationError("unknown table " + s + " (use T or S(a,b))");
}

struct Options {
  std::string format = "json";
  std::uint64_t seed = 20240601;
  double tol = 1e-8;
  bool selftest = false;
  double lambda = 1.0;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic capacity and Weyl-law toolkit"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--tol", o.tol, "Numerical tolerance");
  app.add_flag("--selftest", o.selftest, "Run the invariant suite of the subcommand's module");

  std::function<Table()> action;
  std::string selftest_module;
  auto bind = [&](CLI::App* sub, std::string module, std::function<Table()> fn) {
    sub->callback([&, module, fn] {
      if (action) return;
      selftest_module = module;
      action = fn;
    });
  };

  // capacities
  std::string domain = "B(1)";
  double kmax = 10, kmin = 0;
  auto* cap = app.add_subcommand("capacities", "ECH capacities c_0..c_K of a domain");
  cap->add_option("--domain", domain, "Domain, e.g. E(1,2), P(3/2,1), B(1), U[B(1),B(1)]");
  cap->add_option("--kmax", kmax, "Largest index K");
  bind(cap, "capacities", [&] {
    auto spec = DomainSpec::parse(domain);
    require_valid(spec);
    auto s = capacities(spec, as_count(kmax, "kmax"));
    Table t{"capacities", {"k", "c_k"}, {}};
    for (std::size_t k = 0; k < s.values.size(); ++k) t.add({static_cast<std::uint64_t>(k), s.values[k]});
    t.meta["domain"] = spec.str();
    t.meta["volume"] = volume(spec).str();
    return t;
  });

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Weyl-law error terms");
  weyl->require_subcommand(0, 1);
  weyl->add_option("--domain", domain, "Domain");
  weyl->add_option("--kmax", kmax, "Largest index");
  weyl->add_option("--kmin", kmin, "Smallest index");
  bind(weyl, "weyl", [&] {
    auto spec = DomainSpec::parse(domain);
    require_valid(spec);
    auto s = error_terms(spec, as_count(kmin, "kmin"), as_count(kmax, "kmax"));
    Table t{"weyl", {"k", "c_k", "e_k"}, {}};
    for (const auto& e : s.entries) t.add({e.k, e.capacity, e.error});
    t.meta["domain"] = spec.str();
    t.meta["volume"] = s.volume.str();
    return t;
  });
  std::string a_str = "1", b_str = "1";
  double klo = 1, khi = 1000;
  auto* bx = weyl->add_subcommand("ball-extremes", "Window extremes of e_k(B(a))");
  bx->add_option("--a", a_str, "Ball width");
  bx->add_option("--klo", klo);
  bx->add_option("--khi", khi);
  bind(bx, "weyl", [&] {
    auto w = ball_error_extremes(parse_positive(a_str, "a"), as_count(klo, "klo"), as_count(khi, "khi"));
    Table t{"weyl ball-extremes", {"a", "k_lo", "k_hi", "inf", "argmin", "sup", "argmax"}, {}};
    t.add({Rational::parse(a_str), as_count(klo, "klo"), as_count(khi, "khi"), w.inf, w.argmin, w.sup, w.argmax});
    return t;
  });
  std::string vols = "1,1";
  double kpart = 5;
  auto* part = weyl->add_subcommand("partition", "Maximise sum sqrt(V_i k_i) subject to sum k_i = k");
  part->add_option("--volumes", vols, "Comma separated volumes");
  part->add_option("--k", kpart);
  bind(part, "weyl", [&] {
    PartitionProblem p{parse_rational_list(vols), as_count(kpart, "k")};
    for (const auto& v : p.volumes)
      if (v.sign() <= 0) throw ValidationError("nonpositive volume");
    auto r = partition_sqrt_max(p);
    Table t{"weyl partition", {"k", "value", "upper_bound", "allocation", "floor_gap"}, {}};
    std::string alloc;
    for (std::size_t i = 0; i < r.allocation.size(); ++i) alloc += (i ? " " : "") + std::to_string(r.allocation[i]);
    t.add({p.k, r.value, r.upper_bound, alloc, p.k >= 1 ? floor_allocation_gap(p) : 0.0});
    return t;
  });
  std::string v1 = "1", v2 = "1";
  auto* st4 = weyl->add_subcommand("step4", "sup over k of inf over l of the step-4 expression");
  st4->add_option("--v1", v1);
  st4->add_option("--v2", v2);
  st4->add_option("--kmin", kmin);
  st4->add_option("--kmax", kmax);
  bind(st4, "weyl", [&] {
    auto r = step4_inf_bound(parse_positive(v1, "v1"), parse_positive(v2, "v2"), std::max<std::uint64_t>(as_count(kmin, "kmin"), 0),
                             as_count(kmax, "kmax"));
    Table t{"weyl step4", {"k", "running_sup"}, {}};
    for (auto [k, s] : r.running_sup) t.add({k, s});
    t.meta["sup"] = r.sup;
    t.meta["argsup"] = r.argsup;
    t.meta["last_decade_variation"] = r.last_decade_variation;
    return t;
  });
  double pV = 2, pA = 1, pm = 1, pg = 0, pd = 10, pdmax = 0;
  auto* pfh = weyl->add_subcommand("pfh", "Bookkeeping residuals n, k, r1, r2");
  pfh->add_option("--V", pV);
  pfh->add_option("--A", pA);
  pfh->add_option("--m", pm);
  pfh->add_option("--g", pg);
  pfh->add_option("--d", pd, "Single degree");
  pfh->add_option("--dmax", pdmax, "Sweep d = g..dmax instead");
  bind(pfh, "weyl", [&] {
    Table t{"weyl pfh", {"d", "n", "k", "r1", "r2"}, {}};
    auto g = static_cast<std::int64_t>(pg);
    auto row = [&](std::uint64_t d) {
      auto r = pfh_bookkeeping({d, pV, pA, as_count(pm, "m"), g});
      t.add({d, r.n, r.k, r.r1, r.r2});
    };
    if (pdmax > 0) {
      for (std::uint64_t d = static_cast<std::uint64_t>(std::max<std::int64_t>(g, 1)); d <= as_count(pdmax, "dmax"); ++d) row(d);
    } else {
      row(as_count(pd, "d"));
    }
    return t;
  });

  // packing
  auto* pk = app.add_subcommand("packing", "Weight sequences, triangle decompositions, capacity ratios");
  pk->require_subcommand(0, 1);
  bind(pk, "packing", [&]() -> Table { throw ValidationError("packing needs weights|triangles|cfun|pk"); });
  auto* pw = pk->add_subcommand("weights", "Weight sequence of E(a,b)");
  pw->add_option("--a", a_str);
  pw->add_option("--b", b_str);
  bind(pw, "packing", [&] {
    auto w = weight_sequence(parse_positive(a_str, "a"), parse_positive(b_str, "b"));
    Table t{"packing weights", {"i", "w_i"}, {}};
    for (std::size_t i = 0; i < w.weights.size(); ++i) t.add({static_cast<std::uint64_t>(i), w.weights[i]});
    return t;
  });
  auto* ptri = pk->add_subcommand("triangles", "Triangle decomposition of Delta(a,b)");
  ptri->add_option("--a", a_str);
  ptri->add_option("--b", b_str);
  bind(ptri, "packing", [&] {
    auto tris = triangle_decompose(parse_positive(a_str, "a"), parse_positive(b_str, "b"));
    Table t{"packing triangles", {"size", "anchor_x", "anchor_y", "m00", "m01", "m10", "m11"}, {}};
    for (const auto& tr : tris)
      t.add({tr.size, tr.anchor[0], tr.anchor[1], Rational(tr.basis[0][0], 1), Rational(tr.basis[0][1], 1),
             Rational(tr.basis[1][0], 1), Rational(tr.basis[1][1], 1)});
    return t;
  });
  auto* pc = pk->add_subcommand("cfun", "Lower bound for the ellipsoid embedding function of B(1)");
  pc->add_option("--a", a_str);
  pc->add_option("--kmax", kmax);
  bind(pc, "packing", [&] {
    auto r = embedding_function_lower(parse_positive(a_str, "a"), as_count(kmax, "kmax"));
    Table t{"packing cfun", {"a", "K", "value", "ratio", "argmax_k"}, {}};
    t.add({Rational::parse(a_str), as_count(kmax, "kmax"), r.value, r.ratio, r.argmax_k});
    return t;
  });
  double kballs = 4;
  auto* pp = pk->add_subcommand("pk", "Capacity-ratio estimate for the ball packing number p_k");
  pp->add_option("--k", kballs);
  pp->add_option("--kmax", kmax);
  bind(pp, "packing", [&] {
    auto r = packing_number_ball_lower(as_count(kballs, "k"), as_count(kmax, "kmax"));
    Table t{"packing pk", {"k", "value", "c_hat", "attaining_index", "witness"}, {}};
    t.add({r.k, r.lower_bound, r.c_hat, r.attaining_index, r.witness});
    return t;
  });

  // coloring
  double kres = 9;
  std::string alpha = "1/4";
  bool emit_graph = false;
  auto* col = app.add_subcommand("coloring", "Interference graph of the lattice and its greedy coloring");
  col->add_option("--k", kres);
  col->add_option("--alpha", alpha);
  col->add_flag("--emit-graph", emit_graph, "Emit the edge list");
  bind(col, "coloring", [&] {
    auto k = as_count(kres, "k");
    auto g = interference_graph(static_cast<std::uint32_t>(k), RotationParam(Rational::parse(alpha)));
    auto c = color_lattice(g);
    Table t;
    t.command = "coloring";
    t.property_ok = is_proper(g, c) && c.color_count <= g.max_degree + 1;
    if (emit_graph) {
      t.columns = {"u", "v"};
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (auto w : g.adjacency[v])
          if (v < w) t.add({static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(w)});
    } else {
      t.columns = {"vertex", "x", "y", "color", "degree"};
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto p = g.lattice.point(v);
        t.add({static_cast<std::uint64_t>(v), p[0], p[1], static_cast<std::uint64_t>(c.colors[v]),
               static_cast<std::uint64_t>(g.adjacency[v].size())});
      }
    }
    t.meta["vertices"] = g.vertex_count();
    t.meta["edges"] = g.edge_count();
    t.meta["max_degree"] = g.max_degree;
    t.meta["color_count"] = c.color_count;
    t.meta["proper"] = t.property_ok;
    t.meta["rotation_count"] = "8*m*" + std::to_string(c.color_count);
    return t;
  });

  // rotcheck
  std::string ralpha = "1/3";
  double grid = 12, steps = 0;
  auto* rc = app.add_subcommand("rotcheck", "Commutator-to-rotation identity on a grid");
  rc->add_option("--alpha", ralpha);
  rc->add_option("--grid", grid);
  rc->add_option("--steps", steps, "Fixed Euler step count (0: adaptive by --tol)");
  bind(rc, "rotcheck", [&] {
    BumpTwist u{0.5, 1.0 / 6, 0.15, 0.05}, v{0.575, 1.0 / 6, 0.15, 0.04};
    SupportRect U{Rational(0), Rational(1), Rational(0), Rational(1, 3)};
    auto r = rotation_commutator_check(u, v, U, RotationParam(Rational::parse(ralpha)),
                                       {as_count(grid, "grid"), o.tol, as_count(steps, "steps")});
    Table t{"rotcheck", {"alpha", "grid", "tol", "sup_error", "sup_displacement", "max_steps"}, {}};
    t.add({Rational::parse(ralpha), as_count(grid, "grid"), o.tol, r.sup_error, r.sup_displacement,
           static_cast<std::uint64_t>(r.max_steps)});
    t.property_ok = steps > 0 || r.sup_error <= 100 * o.tol;
    return t;
  });

  // billiard
  std::string table = "T", start = "0.3,0.6";
  double bsteps = 0;
  auto* bil = app.add_subcommand("billiard", "Characteristic flow on a Lagrangian product");
  bil->require_subcommand(0, 1);
  bil->add_option("--table", table, "T or S(a,b)");
  bil->add_option("--start", start, "s,t: edge parameters of the start point on the first 2-face");
  bil->add_option("--steps", bsteps, "Number of flow steps (0: until first return)");
  bind(bil, "billiard", [&] {
    auto P = parse_table(table);
    auto comma = start.find(',');
    if (comma == std::string::npos) throw ValidationError("--start expects s,t");
    double s = std::stod(start.substr(0, comma)), tt = std::stod(start.substr(comma + 1));
    // first 2-face: left edge of T (t_l x q_l) or bottom of S (s_b x q_b)
    TwoFace tf = table == "T" ? TwoFace{2, 3} : TwoFace{0, 0};
    auto on_edge = [](const ConvexPolygon& poly, std::size_t e, double x) {
      Vec2 a = poly.vertex(e), b = poly.vertex((e + 1) % poly.size());
      return Vec2{a[0] + x * (b[0] - a[0]), a[1] + x * (b[1] - a[1])};
    };
    if (!(s > 0 && s < 1 && tt > 0 && tt < 1)) throw ValidationError("--start parameters must lie in (0,1)");
    FlowState st = enter_from_two_face(P, tf, on_edge(P.base, tf.base_edge, s), on_edge(P.fiber, tf.fiber_edge, tt));
    Table t{"billiard", {"step", "two_face", "face", "q1", "q2", "p1", "p2"}, {}};
    auto row = [&](std::uint64_t i, const FlowState& x) {
      t.add({i, two_face_name(P, x.entered_through), face_name(P, x.face), x.position[0], x.position[1], x.position[2], x.position[3]});
    };
    if (bsteps > 0) {
      FlowState x = st;
      row(0, x);
      for (std::uint64_t i = 1; i <= as_count(bsteps, "steps"); ++i) row(i, x = flow_step(P, x));
    } else {
      auto it = face_itinerary(P, st);
      for (std::size_t i = 0; i < it.states.size(); ++i) row(i, it.states[i]);
      double disp = return_map_check(P, st);
      t.meta["total_time"] = it.total_time;
      t.meta["distinct_two_faces"] = it.two_faces.size();
      t.meta["return_displacement"] = disp;
      t.property_ok = disp < 1e-9;
    }
    return t;
  });
  double th0 = 0, th1 = std::numbers::pi;
  auto* rot = bil->add_subcommand("rotation", "Ribbon transition rotation on the boundary of E(a,b)");
  rot->add_option("--a", a_str);
  rot->add_option("--b", b_str);
  rot->add_option("--theta0", th0);
  rot->add_option("--theta1", th1);
  bind(rot, "billiard", [&] {
    auto r = ribbon_rotation_number(parse_positive(a_str, "a"), parse_positive(b_str, "b"), th0, th1);
    Table t{"billiard rotation", {"measured", "predicted", "hit_time", "difference"}, {}};
    double diff = circle_distance(r.measured, r.predicted);
    t.add({r.measured, r.predicted, r.hit_time, diff});
    t.property_ok = diff <= 1e-9;
    return t;
  });

  // cex
  auto* cx = app.add_subcommand("cex", "Counterexample domain X(H)");
  cx->require_subcommand(0, 1);
  cx->add_option("--lambda", o.lambda, "Global scale of the bump Hamiltonian");
  bind(cx, "cex", [&]() -> Table { throw ValidationError("cex needs layout|feasibility|holder|divergence|chain|volume"); });
  double nmax = 20, dmax = 1e6, dmin = 1e4, hn = 100, halpha = 0.5;
  auto* cl = cx->add_subcommand("layout", "Annulus and disk layout");
  cl->add_option("--nmax", nmax);
  bind(cl, "cex", [&] {
    auto L = cex::layout(10, as_count(nmax, "nmax"));
    Table t{"cex layout", {"n", "inner", "outer", "mid", "disk_radius"}, {}};
    for (const auto& r : L.rings) t.add({r.n, r.inner, r.outer, r.mid_radius, r.disk_radius});
    return t;
  });
  auto* cf = cx->add_subcommand("feasibility", "Width and circumference margins");
  cf->add_option("--nmax", nmax);
  bind(cf, "cex", [&] {
    auto rep = cex::feasibility_report(10, as_count(nmax, "nmax"), as_count(nmax, "nmax") <= 100000);
    Table t{"cex feasibility", {"n", "width_margin", "circumference_margin", "pass"}, {}};
    for (const auto& r : rep.rows)
      t.add({r.n, static_cast<double>(r.width_margin), static_cast<double>(r.circumference_margin), r.pass});
    t.meta["all_pass"] = rep.all_pass;
    t.meta["sign_changes"] = rep.sign_changes;
    t.meta["min_width_margin"] = static_cast<double>(rep.min_width_margin);
    t.property_ok = rep.all_pass;
    return t;
  });
  auto* ch = cx->add_subcommand("holder", "Hoelder seminorm ratio of df_n and df");
  ch->add_option("--n", hn);
  ch->add_option("--alpha", halpha);
  bind(ch, "cex", [&] {
    auto r = cex::holder_ratio(as_count(hn, "n"), halpha);
    Table t{"cex holder", {"n", "alpha", "closed_form", "sampled", "ratio"}, {}};
    t.add({as_count(hn, "n"), halpha, r.closed_form, r.sampled, r.sampled / r.closed_form});
    return t;
  });
  auto* cd = cx->add_subcommand("divergence", "s_d over decades of d");
  cd->add_option("--dmin", dmin);
  cd->add_option("--dmax", dmax);
  bind(cd, "cex", [&] {
    auto prof = cex::make_profile(o.lambda);
    auto pts = cex::divergence_series(decades(as_count(dmin, "dmin"), as_count(dmax, "dmax")), prof);
    Table t{"cex divergence", {"d", "N", "c_link", "s_d", "bound", "ln_N"}, {}};
    for (const auto& p : pts) {
      t.add({p.d, p.N, p.c_link, p.s_d, p.bound, p.ln_N});
      t.property_ok = t.property_ok && p.below_bound;
    }
    return t;
  });
  auto* cc = cx->add_subcommand("chain", "Error-chain residuals over decades of d");
  cc->add_option("--dmin", dmin);
  cc->add_option("--dmax", dmax);
  bind(cc, "cex", [&] {
    auto prof = cex::make_profile(o.lambda);
    Table t{"cex chain", {"d", "n_d", "k_d", "i_d", "j_d", "residual", "step_bound"}, {}};
    for (auto d : decades(as_count(dmin, "dmin"), as_count(dmax, "dmax"))) {
      auto c = cex::error_chain_residuals(d, prof);
      t.add({c.d, c.n_d, c.k_d, c.i_d, c.j_d, c.residual, c.step_bound});
    }
    return t;
  });
  double tail_tol = 1e-10;
  auto* cv = cx->add_subcommand("volume", "Integral of H~ and vol(X(H))");
  cv->add_option("--tail-tol", tail_tol);
  bind(cv, "cex", [&] {
    auto prof = cex::make_profile(o.lambda);
    Table t{"cex volume", {"lambda", "integral_f", "integral_H", "volume"}, {}};
    t.add({o.lambda, prof.integral_f, cex::hamiltonian_integral(prof, tail_tol), cex::xh_volume(prof, tail_tol)});
    return t;
  });

  auto error_record = [&](const char* kind, const std::string& msg) {
    json e;
    e["error"] = kind;
    e["message"] = msg;
    err << e.dump() << "\n";
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    error_record("usage", e.what());
    return 1;
  }

  try {
    if (o.selftest) {
      if (selftest_module.empty()) selftest_module = "core";
      auto results = selftest(selftest_module, o.seed);
      Table t{"selftest " + selftest_module, {"check", "pass", "detail"}, {}};
      for (const auto& r : results) {
        t.add({r.name, r.pass, r.detail});
        t.property_ok = t.property_ok && r.pass;
      }
      // the core suite rides along with every module
      if (selftest_module != "core")
        for (const auto& r : selftest("core", o.seed)) {
          t.add({r.name, r.pass, r.detail});
          t.property_ok = t.property_ok && r.pass;
        }
      render(t, o.format, out);
      return t.property_ok ? 0 : 2;
    }
    if (!action) throw ValidationError("a subcommand is required");
    Table t = action();
    render(t, o.format, out);
    if (!t.property_ok) {
      error_record("property", t.command + ": property check failed");
      return 2;
    }
    return 0;
  } catch (const ValidationError& e) {
    error_record("validation", e.what());
    return 1;
  } catch (const HypothesisViolation& e) {
    error_record("validation", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    error_record("validation", e.what());
    return 1;
  } catch (const FlowError& e) {
    error_record("flow", e.what());
    return 2;
  } catch (const std::exception& e) {
    error_record("failure", e.what());
    return 2;
  }
}

}  // namespace symcap
