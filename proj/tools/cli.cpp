#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "nullkit/coefficient.hpp"
#include "nullkit/interpolate.hpp"
#include "nullkit/json_io.hpp"
#include "nullkit/nullsatz.hpp"
#include "nullkit/numapps.hpp"
#include "nullkit/permanent.hpp"
#include "nullkit/solver.hpp"

namespace nullkit {

namespace {

struct Options {
  std::string in_path;
  ScanLimits limits;
  std::istream* in = nullptr;
  std::ostream* err = nullptr;

  Json read_input() const {
    std::stringstream buf;
    if (!in_path.empty()) {
      std::ifstream f(in_path);
      if (!f) throw InputError("cannot open " + in_path);
      buf << f.rdbuf();
    } else {
      buf << in->rdbuf();
    }
    try {
      return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("invalid JSON input: ") + e.what());
    }
  }
};

const Json& grid_part(const Json& input) { return input.contains("grid") ? input["grid"] : input; }

std::vector<MultiPoly> polys_from_json(const Json& j, const Ring* ring) {
  std::vector<MultiPoly> out;
  if (!j.is_array()) throw InputError("\"polys\" must be an array");
  for (const auto& p : j) out.push_back(poly_from_json(p, ring));
  return out;
}

std::vector<RingElement> vector_from_json(const Ring& ring, const Json& j) { return point_from_json(ring, j); }

std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw InputError("not a nonnegative integer: " + item);
    }
  }
  return out;
}

AxisFamily family_from_name(const std::string& name) {
  if (name == "roots-of-unity") return AxisFamily::RootsOfUnity;
  if (name == "subfield-minus-zero") return AxisFamily::SubfieldMinusZero;
  if (name == "roots-of-unity-with-zero") return AxisFamily::RootsOfUnityWithZero;
  if (name == "subfield") return AxisFamily::Subfield;
  if (name == "integer-range") return AxisFamily::IntegerRange;
  if (name == "shifted") return AxisFamily::Shifted;
  throw InputError("unknown axis family " + name);
}

Json values_to_json(const std::vector<RingElement>& v) { return point_to_json(v); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact grid interpolation, coefficient formulas and Nullstellensatz checks", "nullkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  opt.in = &in;
  opt.err = &err;
  app.add_option("--in", opt.in_path, "JSON input file (default: stdin)");
  app.add_option("--max-grid-points", opt.limits.max_grid_points, "Largest grid accepted")->capture_default_str();
  app.add_flag("--force", opt.limits.force, "Allow exhaustive scans beyond 2^24 points");
  app.add_option("--jobs", opt.limits.jobs, "Worker threads for grid scans")->check(CLI::PositiveNumber);

  std::function<Json()> action;
  int theorem_exit = kExitOk;

  // grid-info
  auto* grid_info = app.add_subcommand("grid-info", "Grid constants N, Psi and classification");
  std::string family;
  std::size_t family_axis = 0;
  bool full_psi = false;
  grid_info->add_option("--family", family, "Check an axis against a closed form for N_j");
  grid_info->add_option("--axis", family_axis, "Axis for --family (0-based)");
  grid_info->add_flag("--psi", full_psi, "Include the full psi table");
  grid_info->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      const Grid grid = grid_from_json(grid_part(input), opt.limits);
      Json j;
      j["dim"] = grid.dim();
      j["d"] = multiindex_to_json(grid.d());
      j["degreeSum"] = grid.degree_sum();
      j["size"] = grid.size();
      j["classification"] = to_string(grid.classification());
      j["N"] = gridmap_to_json(compute_n(grid));
      Json axis_psi = Json::array();
      for (std::size_t a = 0; a < grid.dim(); ++a) {
        Json rows = Json::array();
        for (const auto& row : grid.axis_psi(a)) rows.push_back(values_to_json(row));
        axis_psi.push_back(std::move(rows));
      }
      j["axisPsi"] = std::move(axis_psi);
      if (full_psi) {
        const auto c = compute_psi(grid, opt.limits);
        Json rows = Json::array();
        for (const auto& row : c.psi) rows.push_back(values_to_json(row));
        j["psi"] = std::move(rows);
      }
      if (!family.empty()) {
        if (family_axis >= grid.dim()) throw InputError("--axis out of range");
        std::optional<RingElement> shift;
        if (input.contains("shift")) shift = element_from_json(grid.ring(), input["shift"]);
        const auto closed = n_specialization(grid.ring(), grid.axis(family_axis), family_from_name(family), shift);
        if (closed != grid.axis_n(family_axis)) throw TheoremViolated("closed form for N_j disagrees with the product");
        j["family"] = Json{{"name", family}, {"axis", family_axis}, {"N", values_to_json(closed)}};
      }
      return j;
    };
  });

  // interpolate
  auto* interp = app.add_subcommand("interpolate", "Interpolate a grid map");
  bool use_psi = false, lagrange = false, incl_excl = false;
  interp->add_flag("--psi", use_psi, "Return (Psi y)(X) instead of the interpolant");
  interp->add_flag("--lagrange", lagrange, "Return the Lagrange polynomial of input point \"x\"");
  interp->add_flag("--inclusion-exclusion", incl_excl, "Coefficient \"delta\" on {0,1}^n by inclusion-exclusion");
  interp->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      const Grid grid = grid_from_json(require_key(input, "grid"), opt.limits);
      if (lagrange) return Json{{"poly", poly_to_json(lagrange_polynomial(grid, point_from_json(grid.ring(), require_key(input, "x"))))}};
      const GridMap y = gridmap_from_json(grid, require_key(input, "values"));
      if (incl_excl)
        return Json{{"coefficient", element_to_json(inclusion_exclusion_coeff(y, multiindex_from_json(require_key(input, "delta"))))}};
      return Json{{"poly", poly_to_json(use_psi ? psi_transform(y) : interpolate_division(y))}};
    };
  });

  auto* invert = app.add_subcommand("invert", "Recover P from its values on an integral grid");
  invert->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      const Grid grid = grid_from_json(require_key(input, "grid"), opt.limits);
      const Ring ring = grid.ring();
      return Json{{"poly", poly_to_json(invert_integral(grid, poly_from_json(require_key(input, "poly"), &ring)))}};
    };
  });

  // coeff
  auto* coeff = app.add_subcommand("coeff", "Coefficient formulas");
  bool c_main = false, c_general = false, c_leading = false, c_nonzero = false, c_second = false, c_integer = false;
  auto* mode = coeff->add_option_group("mode");
  mode->add_flag("--main", c_main, "P_d as a normalized grid sum");
  mode->add_flag("--general", c_general, "P_e for d-leading e");
  mode->add_flag("--leading", c_leading, "Whether e is d-leading");
  mode->add_flag("--nonzero", c_nonzero, "A grid point with P(x) != 0 when P_d != 0");
  mode->add_flag("--second", c_second, "A second nonzero besides x0 when P_d = 0");
  mode->add_flag("--integer", c_integer, "Integer coefficient formula on [d]");
  mode->require_option(1);
  coeff->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      if (c_integer) {
        const Ring z = Ring::integers();
        const auto r = integer_coeff_formula(poly_from_json(require_key(input, "poly"), &z),
                                             multiindex_from_json(require_key(input, "d")), opt.limits);
        return Json{{"lhs", bigint_to_json(r.lhs)}, {"rhs", bigint_to_json(r.rhs)}, {"equal", r.lhs == r.rhs}};
      }
      if (c_leading && !input.contains("grid")) {
        const MultiPoly p = poly_from_json(require_key(input, "poly"));
        const auto r = is_d_leading(p, multiindex_from_json(require_key(input, "e")), multiindex_from_json(require_key(input, "d")));
        Json j{{"dLeading", r.is_leading}};
        j["witness"] = r.witness ? multiindex_to_json(*r.witness) : Json();
        return j;
      }
      const Grid grid = grid_from_json(require_key(input, "grid"), opt.limits);
      const Ring ring = grid.ring();
      const MultiPoly p = poly_from_json(require_key(input, "poly"), &ring);
      if (c_main) return Json{{"coefficient_d", element_to_json(coeff_formula_main(grid, p))}};
      if (c_general) {
        const MultiIndex e = multiindex_from_json(require_key(input, "e"));
        return Json{{"e", multiindex_to_json(e)}, {"coefficient_e", element_to_json(coeff_formula_general(grid, p, e))}};
      }
      if (c_leading) {
        const auto r = is_d_leading(p, multiindex_from_json(require_key(input, "e")), grid.d());
        Json j{{"dLeading", r.is_leading}};
        j["witness"] = r.witness ? multiindex_to_json(*r.witness) : Json();
        return j;
      }
      if (c_nonzero) return Json{{"point", point_to_json(nonzero_exists(grid, p, opt.limits))}};
      return Json{{"point", point_to_json(second_nonzero(grid, p, point_from_json(ring, require_key(input, "x0")), opt.limits))}};
    };
  });

  // trim / certify
  auto* trim_cmd = app.add_subcommand("trim", "Trim P modulo the axis polynomials");
  trim_cmd->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      const Grid grid = grid_from_json(require_key(input, "grid"), opt.limits);
      const Ring ring = grid.ring();
      const MultiPoly p = poly_from_json(require_key(input, "poly"), &ring);
      Json j = certificate_to_json(trim(grid, p));
      if (input.contains("e")) j["dLeadingPreserved"] = check_dleading_preserved(grid, p, multiindex_from_json(input["e"]));
      return j;
    };
  });
  auto* certify = app.add_subcommand("certify", "Certificate that P vanishes on the grid, or a witness");
  certify->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      const Grid grid = grid_from_json(require_key(input, "grid"), opt.limits);
      const Ring ring = grid.ring();
      const auto r = certify_vanishing(grid, poly_from_json(require_key(input, "poly"), &ring));
      if (const auto* c = std::get_if<Certificate>(&r)) return Json{{"vanishes", true}, {"certificate", certificate_to_json(*c)}};
      return Json{{"vanishes", false}, {"witness", point_to_json(std::get<NotVanishing>(r).witness)}};
    };
  });

  // permanent
  auto* perm = app.add_subcommand("permanent", "delta-permanents and the permanent formula");
  bool with_poly = false;
  perm->add_flag("--poly", with_poly, "Include the matrix polynomial");
  perm->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      const RingMatrix a = matrix_from_json(require_key(input, "matrix"));
      std::vector<RingElement> b(a.rows(), a.ring().zero());
      if (input.contains("b")) b = vector_from_json(a.ring(), input["b"]);
      std::optional<Grid> grid;
      if (input.contains("grid")) grid = grid_from_json(input["grid"], opt.limits);
      MultiIndex delta;
      if (input.contains("delta")) {
        delta = multiindex_from_json(input["delta"]);
      } else if (grid) {
        delta = grid->d();
      } else {
        throw InputError("need \"delta\" or \"grid\"");
      }
      Json j;
      j["delta"] = multiindex_to_json(delta);
      j["perDelta"] = element_to_json(per_delta(a, delta));
      j["expansionOk"] = per_delta_expansion_check(a, delta);
      const auto rep = column_repeat_check(a, delta);
      j["columnRepeat"] = rep ? Json(*rep) : Json();
      if (with_poly) j["matrixPolynomial"] = poly_to_json(matrix_polynomial(a, b));
      if (grid) {
        if (a.rows() <= grid->degree_sum() && grid->is_integral())
          j["gridSum"] = element_to_json(permanent_formula(a, b, *grid));
        const auto x = coloring_search(a, b, *grid, opt.limits);
        j["coloring"] = x ? point_to_json(*x) : Json();
      }
      return j;
    };
  });

  // alon-tarsi
  auto* at = app.add_subcommand("alon-tarsi", "Even and odd orientations with given in-degrees");
  bool with_matrix = false;
  at->add_flag("--matrix", with_matrix, "Include the incidence matrix");
  at->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      const OrientedMultigraph g = graph_from_json(input.contains("graph") ? input["graph"] : input);
      MultiIndex delta(g.vertices.size());
      if (input.contains("delta")) {
        delta = multiindex_from_json(input["delta"]);
      } else {
        for (const auto& e : g.edges) ++delta[e.head];
      }
      const auto c = alon_tarsi_count(g, delta, opt.limits);
      const RingMatrix inc = incidence_matrix(g);
      Json j;
      j["delta"] = multiindex_to_json(delta);
      j["even"] = c.even;
      j["odd"] = c.odd;
      j["difference"] = bigint_to_json(BigInt(static_cast<unsigned long>(c.even)) - static_cast<unsigned long>(c.odd));
      j["perDelta"] = element_to_json(per_delta(inc, delta));
      if (with_matrix) j["incidence"] = matrix_to_json(inc);
      if (input.contains("ring")) {
        const Ring r = ring_from_json(input["ring"]);
        if (r.one() == -r.one()) *opt.err << "warning: -1 = 1 in " << r.name() << "; incidence entries lose orientation\n";
        j["incidenceInRing"] = matrix_to_json(incidence_matrix(g, r));
      }
      return j;
    };
  });

  // solver
  auto load_impression = [&](const Json& input) {
    const Grid grid = grid_from_json(require_key(input, "grid"), opt.limits);
    const Json& pj = input.contains("problem") ? input["problem"] : input;
    return std::make_pair(problem_from_json(pj), Impression(grid, chi_from_json(grid.ring(), require_key(pj, "chi"))));
  };
  auto check_json = [](const AlgebraicSolutionCheck& c) {
    return Json{{"describes", c.describes}, {"degreeOk", c.degree_ok}, {"headOk", c.head_ok}, {"algebraicSolution", c.ok()}};
  };
  auto* solve_check = app.add_subcommand("solve-check", "Check an algebraic solution");
  solve_check->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      auto [prob, imp] = load_impression(input);
      const Ring ring = imp.grid.ring();
      return check_json(check_algebraic_solution(poly_from_json(require_key(input, "poly"), &ring), prob, imp));
    };
  });
  auto* solve_construct = app.add_subcommand("solve-construct", "Construct an algebraic solution");
  solve_construct->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      auto [prob, imp] = load_impression(input);
      const MultiPoly p = construct_algebraic_solution(prob, imp);
      Json j{{"poly", poly_to_json(p)}};
      j["check"] = check_json(check_algebraic_solution(p, prob, imp));
      return j;
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Application checkers with exhaustive oracles");
  check->require_subcommand(1);
  check->fallthrough();

  auto* subgraph = check->add_subcommand("subgraph", "3-regular subgraph of a 4-regular multigraph plus an edge");
  subgraph->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      const UndirectedMultigraph g = undirected_from_json(input);
      const Json& x = require_key(input, "extraEdge");
      auto index = [&](const Json& name) -> std::size_t {
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
          if (g.vertices[v] == name.get<std::string>()) return v;
        throw InputError("unknown vertex " + name.dump());
      };
      const auto r = regular_subgraph_check(g, {index(require_key(x, "head")), index(require_key(x, "tail"))}, opt.limits);
      Json edges = Json::array();
      for (auto e : r.edges) {
        const auto [u, v] = e < g.edges.size() ? g.edges[e] : std::make_pair(index(x["head"]), index(x["tail"]));
        edges.push_back(Json{{"index", e}, {"head", g.vertices[u]}, {"tail", g.vertices[v]}});
      }
      return Json{{"subgraph", std::move(edges)}, {"zeroCount", r.cw_count},
                  {"audit", Json{{"twoV", r.two_v}, {"E", r.e}, {"Ebar", r.e_bar}}}};
    };
  });

  auto* cube = check->add_subcommand("cube", "Hyperplanes covering all but one vertex of {0,1}^n");
  cube->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      const Ring ring = ring_from_json(require_key(input, "ring"));
      std::vector<Hyperplane> planes;
      for (const auto& h : require_key(input, "planes"))
        planes.push_back({vector_from_json(ring, require_key(h, "a")), element_from_json(ring, require_key(h, "b"))});
      const auto n = require_key(input, "n").get<std::size_t>();
      const auto r = cube_cover_check(ring, planes, n, opt.limits);
      Json u = Json::array();
      for (const auto& x : r.uncovered) u.push_back(point_to_json(x));
      return Json{{"uncovered", std::move(u)}, {"m", r.m}, {"n", r.n}, {"theoremConsistent", r.consistent}};
    };
  });

  auto* cw = check->add_subcommand("cw", "Common-zero counts over finite fields");
  cw->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      if (input.contains("grid")) {
        const Grid grid = grid_from_json(input["grid"], opt.limits);
        const Ring ring = grid.ring();
        const auto count = cw_variant_count(grid, polys_from_json(require_key(input, "polys"), &ring), opt.limits);
        return Json{{"count", count}, {"notOne", count != 1}};
      }
      const Ring ring = ring_from_json(require_key(input, "ring"));
      const auto n = require_key(input, "n").get<std::size_t>();
      const auto count = chevalley_warning_count(ring, polys_from_json(require_key(input, "polys"), &ring), n, opt.limits);
      return Json{{"count", count}, {"characteristic", ring.characteristic()}, {"divisible", count % ring.characteristic() == 0}};
    };
  });

  auto* cd = check->add_subcommand("cd", "Sumset bound in Z_p");
  std::uint64_t cd_p = 0;
  std::string cd_a, cd_b;
  cd->add_option("--p", cd_p, "Prime modulus");
  cd->add_option("--a", cd_a, "Comma-separated set A");
  cd->add_option("--b", cd_b, "Comma-separated set B");
  cd->callback([&] {
    action = [&] {
      std::uint64_t p = cd_p;
      std::vector<std::uint64_t> a, b;
      if (p == 0) {
        const Json input = opt.read_input();
        p = require_key(input, "p").get<std::uint64_t>();
        a = require_key(input, "A").get<std::vector<std::uint64_t>>();
        b = require_key(input, "B").get<std::vector<std::uint64_t>>();
      } else {
        a = parse_list(cd_a);
        b = parse_list(cd_b);
      }
      const auto r = cauchy_davenport(p, a, b);
      return Json{{"sumset", r.sumset}, {"bound", r.bound}, {"ok", r.ok}};
    };
  });

  auto* zm = check->add_subcommand("zm", "Second nonzeros over Z_m");
  std::uint64_t zm_m = 0, zm_n = 1;
  std::string zm_poly;
  bool zm_search = false;
  zm->add_option("--m", zm_m, "Modulus");
  zm->add_option("--n", zm_n, "Number of variables");
  zm->add_option("--poly", zm_poly, "Univariate polynomial such as X^3+X+2");
  zm->add_flag("--search", zm_search, "List all normalized cubic exceptions over Z_4");
  zm->callback([&] {
    action = [&] {
      if (zm_search) {
        Json list = Json::array();
        for (const auto& c : zm4_exception_search()) list.push_back(c);
        return Json{{"exceptions", std::move(list)}};
      }
      std::optional<MultiPoly> p;
      if (!zm_poly.empty()) {
        if (zm_m == 0) throw InputError("--poly needs --m");
        if (zm_n != 1) throw InputError("--poly is univariate; give multivariate input as JSON");
        p = parse_univariate(Ring::integers_mod(zm_m), zm_poly);
      } else {
        const Json input = opt.read_input();
        p = poly_from_json(require_key(input, "poly"));
      }
      const auto r = zm_second_nonzero(*p, opt.limits);
      Json j{{"nonzeroCount", r.nonzero_count}, {"exception", r.exception_case && r.nonzero_count == 1}};
      if (!r.exception_case) {
        j["alternatingSum"] = element_to_json(*r.alternating_sum);
        j["weightedWitness"] = r.weighted_witness ? point_to_json(*r.weighted_witness) : Json();
      }
      return j;
    };
  });

  auto* olson = check->add_subcommand("olson", "Prime-power divisibility counts on p-integral grids");
  olson->callback([&] {
    action = [&] {
      const Json input = opt.read_input();
      const Grid grid = grid_from_json(require_key(input, "grid"), opt.limits);
      const Ring ring = grid.ring();
      const auto count = olson_generalized(polys_from_json(require_key(input, "polys"), &ring),
                                           require_key(input, "p").get<std::uint64_t>(),
                                           require_key(input, "k").get<std::vector<std::uint64_t>>(), grid, opt.limits);
      return Json{{"count", count}, {"notOne", count != 1}};
    };
  });

  auto* padic = check->add_subcommand("padic", "p-adic valuation of prod (y - t), 0 < t < p^k");
  std::string padic_y = "0";
  std::uint64_t padic_p = 2, padic_k = 1;
  padic->add_option("--y", padic_y, "Integer y")->required();
  padic->add_option("--p", padic_p, "Prime p")->required();
  padic->add_option("--k", padic_k, "Exponent k")->required();
  padic->callback([&] {
    action = [&] {
      BigInt y;
      if (y.set_str(padic_y, 10) != 0) throw InputError("--y must be an integer");
      const auto r = padic_product_divisibility(y, padic_p, padic_k);
      Json j{{"c", r.c}};
      j["valuation"] = r.valuation ? Json(*r.valuation) : Json();
      j["divides"] = r.divides;
      j["exact"] = r.exact;
      j["pkDividesY"] = r.pk_divides_y;
      return j;
    };
  });

  auto* conj = check->add_subcommand("conjecture", "Search for single-solution linear systems mod k");
  std::size_t cj_n = 0, cj_m = 0;
  std::uint64_t cj_k = 2, cj_trials = 1000, cj_seed = 1;
  std::int64_t cj_bound = 2;
  conj->add_option("--n", cj_n, "Variables")->required();
  conj->add_option("--m", cj_m, "Forms")->required();
  conj->add_option("--k", cj_k, "Modulus k")->required();
  conj->add_option("--trials", cj_trials, "Random trials when exhaustive search is too large");
  conj->add_option("--bound", cj_bound, "Coefficient range [-bound, bound]");
  conj->add_option("--seed", cj_seed, "Seed for the random search");
  conj->callback([&] {
    action = [&] {
      const auto r = afk_conjecture_search(cj_n, cj_m, cj_k, cj_trials, cj_bound, cj_seed);
      Json j;
      j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json();
      j["instances"] = r.instances;
      j["exhaustive"] = r.exhaustive;
      return j;
    };
  });

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  std::uint64_t st_seed = acceptance::kDefaultSeed;
  selftest->add_option("--seed", st_seed, "Seed for the random instances");
  selftest->callback([&] {
    action = [&] {
      const auto results = acceptance::run_all(st_seed);
      Json list = Json::array();
      bool all = true;
      for (const auto& r : results) {
        all = all && r.pass;
        list.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      if (!all) theorem_exit = kExitTheorem;
      return Json{{"pass", all}, {"criteria", std::move(list)}};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!action) throw InputError("no command");
    const Json result = action();
    out << result.dump() << "\n";
    return theorem_exit;
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TheoremViolated& e) {
    err << e.what() << "\n";
    return kExitTheorem;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace nullkit
