#include "acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "nullkit/coefficient.hpp"
#include "nullkit/errors.hpp"
#include "nullkit/interpolate.hpp"
#include "nullkit/nullsatz.hpp"
#include "nullkit/numapps.hpp"
#include "nullkit/permanent.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

namespace nullkit::acceptance {

namespace {

// Collects failures; a criterion passes when nothing was recorded and the
// instance quota was met.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  void count(const std::string& key) { ++counts_[key]; }
  std::uint64_t counted(const std::string& key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  }
  void require(const std::string& key, std::uint64_t minimum) {
    expect(counted(key) >= minimum, key + ": " + std::to_string(counted(key)) + " < " + std::to_string(minimum));
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    for (const auto& [k, v] : counts_) s << ", " << k << "=" << v;
    if (failures_) s << ", " << failures_ << " failed: " << first_;
    return s.str();
  }

 private:
  std::uint64_t checks_ = 0, failures_ = 0;
  std::string first_;
  std::map<std::string, std::uint64_t> counts_;
};

CriterionResult timed(int id, const std::string& name, const std::function<void(Tally&)>& body,
                      double limit_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) t.expect(r.seconds < limit_seconds, "runtime " + std::to_string(r.seconds) + " s");
  r.pass = t.ok();
  r.detail = t.summary();
  return r;
}

template <class F>
bool throws_theorem(F&& f) {
  try {
    f();
  } catch (const TheoremViolated&) {
    return true;
  }
  return false;
}

}  // namespace

CriterionResult coefficient_formula_oracle(std::uint64_t seed) {
  return timed(1, "coefficient formula vs stored P_d", [&](Tally& t) {
    gen::Generator g(seed);
    for (auto family : gen::all_families()) {
      for (int i = 0; i < 500; ++i) {
        const Ring ring = g.ring(family);
        // every fourth grid is three-dimensional with axes up to 9, so |X| reaches 729
        const Grid grid = i % 4 == 0 ? g.grid_with_dim(ring, 3, 9, true)
                                     : g.integral_grid(ring, 3, family == gen::Family::Integers ? 5 : 9);
        MultiPoly p = g.poly(ring, grid.d(), grid.degree_sum(), 6);
        if (g.coin()) p.add_term(grid.d(), g.element(ring));
        RingElement v = ring.zero();
        const bool violated = throws_theorem([&] { v = coeff_formula_main(grid, p); });
        t.expect(!violated && v == coefficient(p, grid.d()),
                 family_name(family) + " P = " + p.to_string() + " on " + ring.name());
        t.count(family_name(family));
      }
      t.require(family_name(family), 500);
    }
  }, 10.0);
}

CriterionResult general_formula(std::uint64_t seed) {
  return timed(2, "general coefficient formula and d-leading witnesses", [&](Tally& t) {
    gen::Generator g(seed + 2);
    for (int i = 0; i < 240; ++i) {
      const auto family = gen::all_families()[i % 4];
      const Ring ring = g.ring(family);
      const Grid grid = g.integral_grid(ring, 3, 4, 256);
      MultiIndex bound = grid.d();
      for (std::size_t j = 0; j < bound.size(); ++j) bound[j] += 2;
      const MultiPoly p = g.poly(ring, bound, bound.total(), 5);
      t.count("polynomials");
      for (std::uint64_t f = 0; f < grid.size(); ++f) {
        const auto idx = grid.indices(f);
        const MultiIndex e(std::vector<unsigned>(idx.begin(), idx.end()));
        const auto report = is_d_leading(p, e, grid.d());
        t.expect(report.is_leading == oracle::d_leading(p, e, grid.d()), "d-leading disagrees with definition");
        if (report.is_leading) {
          RingElement v = ring.zero();
          const bool violated = throws_theorem([&] { v = coeff_formula_general(grid, p, e); });
          t.expect(!violated && v == coefficient(p, e), "P_e mismatch for e = " + e.to_string());
          t.count("leading");
        } else {
          const MultiIndex& w = *report.witness;
          bool genuine = w != e && !coefficient(p, w).is_zero();
          for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j] != e[j] && w[j] <= grid.d()[j]) genuine = false;
          t.expect(genuine, "witness " + w.to_string() + " does not violate both cases");
          t.count("witnesses");
        }
      }
    }
    t.require("polynomials", 200);
    t.require("witnesses", 1);
  });
}

CriterionResult interpolation_round_trips(std::uint64_t seed) {
  return timed(3, "interpolation and inversion round trips", [&](Tally& t) {
    gen::Generator g(seed + 3);
    for (int i = 0; i < 240; ++i) {
      const Ring ring = g.ring(gen::all_families()[i % 4]);
      const Grid grid = g.any_grid(ring, 3, 4);
      GridMap y{grid, {}};
      for (std::uint64_t f = 0; f < grid.size(); ++f) y.values.push_back(g.element(ring));
      MultiPoly p(ring, grid.dim());
      const bool violated = throws_theorem([&] { p = psi_transform(y); });
      bool ok = !violated;
      for (std::uint64_t f = 0; f < grid.size() && ok; ++f) {
        const Point x = grid.point(f);
        ok = evaluate(p, x) == oracle::n_value(grid, x) * y.values[f];
      }
      t.expect(ok, "(Psi y)|_X != N y on " + ring.name());
      t.count("psi identity");
    }
    for (int i = 0; i < 240; ++i) {
      const auto family = gen::all_families()[1 + i % 3];
      const Ring ring = g.ring(family);
      const Grid grid = g.integral_grid(ring, 3, 4, 64);
      GridMap y{grid, {}};
      for (std::uint64_t f = 0; f < grid.size(); ++f) y.values.push_back(g.element(ring));
      MultiPoly p(ring, grid.dim());
      const bool violated = throws_theorem([&] { p = interpolate_division(y); });
      t.expect(!violated && oracle::values(p, grid) == y.values, "interpolant misses y on " + ring.name());
      for (std::size_t j = 0; j < grid.dim(); ++j)
        t.expect(partial_degree(p, j) <= static_cast<Degree>(grid.d()[j]), "interpolant degree too high");
      t.count("interpolate");
    }
    for (int i = 0; i < 240; ++i) {
      const Ring ring = g.ring(gen::all_families()[i % 4]);
      const Grid grid = g.integral_grid(ring, 3, 4, 64);
      const MultiPoly p = g.poly(ring, grid.d(), grid.degree_sum(), 6);
      MultiPoly q(ring, grid.dim());
      const bool violated = throws_theorem([&] { q = invert_integral(grid, p); });
      t.expect(!violated && q == p, "inversion lost P = " + p.to_string() + " on " + ring.name());
      t.count("invert");
    }
    t.require("psi identity", 200);
    t.require("interpolate", 200);
    t.require("invert", 200);
  });
}

CriterionResult nullstellensatz_certificates(std::uint64_t seed) {
  return timed(4, "Nullstellensatz certificates", [&](Tally& t) {
    gen::Generator g(seed + 4);
    for (int i = 0; i < 520; ++i) {
      const Ring ring = g.ring(gen::all_families()[i % 4]);
      const Grid grid = g.integral_grid(ring, 3, 3, 64);
      MultiIndex bound = grid.d();
      for (std::size_t j = 0; j < bound.size(); ++j) bound[j] += 3;
      MultiPoly p = g.poly(ring, bound, bound.total(), 5);
      if (i % 3 == 0) {
        // A vanishing polynomial built from the axis polynomials.
        const auto ls = axis_polynomials(grid);
        p = MultiPoly(ring, grid.dim());
        for (const auto& l : ls) p += g.poly(ring, bound, 3, 3) * l;
      }
      const Certificate c = trim(grid, p);
      MultiPoly rebuilt = c.trimmed;
      for (std::size_t j = 0; j < grid.dim(); ++j) rebuilt += c.cofactors[j] * c.axis_polys[j];
      t.expect(rebuilt == p, "reconstruction failed for " + p.to_string());
      for (std::size_t j = 0; j < grid.dim(); ++j) {
        t.expect(partial_degree(c.trimmed, j) <= static_cast<Degree>(grid.d()[j]), "trimmed degree too high");
        if (!c.cofactors[j].is_zero())
          t.expect(total_degree(c.cofactors[j]) <= total_degree(p) - static_cast<Degree>(grid.axis(j).size()),
                   "cofactor degree bound");
      }
      const bool vanish = oracle::vanishes(p, grid);
      t.expect(c.trimmed.is_zero() == vanish, "trimmed = 0 disagrees with vanishing");
      t.count(vanish ? "vanishing" : "nonvanishing");
      t.count("instances");
    }
    t.require("instances", 500);
    t.require("vanishing", 50);
  });
}

CriterionResult permanent_suite(std::uint64_t seed) {
  return timed(5, "permanent identities", [&](Tally& t) {
    gen::Generator g(seed + 5);
    for (int i = 0; i < 400; ++i) {
      const Ring ring = g.ring(gen::all_families()[i % 4]);
      const std::size_t m = g.below(5), n = 1 + g.below(4);
      const RingMatrix a = g.matrix(ring, m, n);
      const MultiPoly poly = matrix_polynomial(a);
      // Every delta with sum m.
      MultiIndex bound(n);
      for (std::size_t j = 0; j < n; ++j) bound[j] = static_cast<unsigned>(m);
      const Grid shape(Ring::integers(), std::vector<std::vector<RingElement>>(n, [&] {
                         std::vector<RingElement> ax;
                         for (std::size_t v = 0; v <= m; ++v) ax.push_back(Ring::integers().from_integer(static_cast<std::int64_t>(v)));
                         return ax;
                       }()));
      for (std::uint64_t f = 0; f < shape.size(); ++f) {
        const auto idx = shape.indices(f);
        const MultiIndex delta(std::vector<unsigned>(idx.begin(), idx.end()));
        if (delta.total() != m) continue;
        const RingElement per = per_delta(a, delta);
        t.expect(per == coefficient(poly, delta), "expansion coefficient differs");
        t.expect(per == oracle::per_delta_all_maps(a, delta), "per_delta differs from all-maps enumeration");
      }
      t.count("lemma matrices");

      const Grid grid = g.grid_with_dim(ring, n, 4, true);
      if (a.rows() > grid.degree_sum()) continue;
      std::vector<RingElement> b;
      for (std::size_t r = 0; r < m; ++r) b.push_back(g.element(ring));
      RingElement v = ring.zero();
      const bool violated = throws_theorem([&] { v = permanent_formula(a, b, grid); });
      t.expect(!violated && v == oracle::per_delta_all_maps(a, grid.d()), "grid sum differs from per_d");
      t.count("grid sums");
    }
    t.require("lemma matrices", 200);
    t.require("grid sums", 200);

    const Ring z = Ring::integers();
    auto square = [&](std::vector<std::vector<std::int64_t>> rows) {
      std::vector<std::vector<RingElement>> r;
      for (auto& row : rows) {
        r.emplace_back();
        for (auto v : row) r.back().push_back(z.from_integer(v));
      }
      return RingMatrix(z, std::move(r));
    };
    for (const auto& [a, expected] : {std::pair{square({{1, 2}, {3, 4}}), 10}, std::pair{square({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 450}}) {
      const std::size_t n = a.cols();
      const Grid cube(z, std::vector<std::vector<RingElement>>(n, {z.zero(), z.one()}));
      const RingElement ryser = permanent_formula(a, std::vector<RingElement>(n, z.zero()), cube);
      t.expect(ryser == z.from_integer(std::int64_t{expected}) && ryser == oracle::permanent(a),
               "Ryser special case gives " + ryser.to_string());
    }
  });
}

CriterionResult alon_tarsi_exhaustive() {
  return timed(6, "Alon-Tarsi orientation counts", [&](Tally& t) {
    for (std::size_t nv = 1; nv <= 3; ++nv) {
      std::vector<std::string> names;
      for (std::size_t v = 0; v < nv; ++v) names.push_back("v" + std::to_string(v + 1));
      std::vector<OrientedMultigraph::Edge> arcs;
      for (std::size_t h = 0; h < nv; ++h)
        for (std::size_t tl = 0; tl < nv; ++tl)
          if (h != tl) arcs.push_back({h, tl});
      for (std::size_t ne = 0; ne <= 4; ++ne) {
        if (ne > 0 && arcs.empty()) continue;
        std::uint64_t sequences = 1;
        for (std::size_t i = 0; i < ne; ++i) sequences *= arcs.size();
        for (std::uint64_t code = 0; code < sequences; ++code) {
          std::vector<OrientedMultigraph::Edge> edges;
          std::uint64_t rest = code;
          for (std::size_t i = 0; i < ne; ++i) {
            edges.push_back(arcs[rest % arcs.size()]);
            rest /= arcs.size();
          }
          const OrientedMultigraph graph(names, edges);
          const RingMatrix inc = incidence_matrix(graph);
          // All delta over V with sum |E|.
          std::vector<unsigned> delta(nv, 0);
          for (;;) {
            unsigned s = 0;
            for (auto d : delta) s += d;
            if (s == ne) {
              const MultiIndex di(delta);
              OrientationCount c;
              const bool violated = throws_theorem([&] { c = alon_tarsi_count(graph, di); });
              const BigInt diff = BigInt(static_cast<unsigned long>(c.even)) - static_cast<unsigned long>(c.odd);
              t.expect(!violated && diff == oracle::per_delta_all_maps(inc, di).integer_value(),
                       "orientation count differs from per_delta");
              t.count("cases");
            }
            std::size_t j = 0;
            while (j < nv && ++delta[j] > ne) delta[j++] = 0;
            if (j == nv) break;
          }
        }
      }
    }
    t.require("cases", 1);
  });
}

CriterionResult z4_exceptions() {
  return timed(7, "Z_4 exceptions", [&](Tally& t) {
    const Ring z4 = Ring::integers_mod(4);
    for (const std::vector<std::int64_t>& c : {std::vector<std::int64_t>{2, 1, 0, 1}, std::vector<std::int64_t>{2, -1, -2, 1}}) {
      MultiPoly p(z4, 1);
      for (unsigned e = 0; e < c.size(); ++e) p.add_term(MultiIndex{e}, z4.from_integer(c[e]));
      const auto r = zm_second_nonzero(p);
      t.expect(r.exception_case && r.nonzero_count == 1, p.to_string() + " nonzero count " + std::to_string(r.nonzero_count));
      const Grid all(z4, {{z4.from_code(0), z4.from_code(1), z4.from_code(2), z4.from_code(3)}});
      t.expect(oracle::nonzero_count(p, all) == 1 && !evaluate(p, Point{z4.zero()}).is_zero(), "oracle count");
    }
    const auto found = zm4_exception_search();
    const std::vector<std::vector<std::uint64_t>> expected{{2, 1, 0, 1}, {2, 3, 2, 1}};
    t.expect(found == expected, "search found " + std::to_string(found.size()) + " exceptions");
  }, 5.0);
}

CriterionResult padic_lemma() {
  return timed(8, "p-adic product lemma", [&](Tally& t) {
    for (std::uint64_t p : {2, 3, 5})
      for (std::uint64_t k = 1; k <= 3; ++k) {
        std::int64_t pk = 1;
        for (std::uint64_t i = 0; i < k; ++i) pk *= static_cast<std::int64_t>(p);
        const std::int64_t range = pk * pk;
        const std::int64_t c = oracle::padic_valuation_sum(0, p, k);
        for (std::int64_t y = -range; y <= range; ++y) {
          PadicReport r;
          const bool violated = throws_theorem([&] { r = padic_product_divisibility(BigInt(static_cast<long>(y)), p, k); });
          const std::int64_t v = oracle::padic_valuation_sum(y, p, k);
          const bool exact = v == c;
          t.expect(!violated && r.c == static_cast<std::uint64_t>(c) && r.divides && r.exact == exact &&
                       exact == (y % pk == 0) && r.pk_divides_y == (y % pk == 0),
                   "y = " + std::to_string(y) + ", p = " + std::to_string(p) + ", k = " + std::to_string(k));
          t.count("values");
        }
      }
  });
}

CriterionResult application_checkers(std::uint64_t seed) {
  return timed(9, "application checkers", [&](Tally& t) {
    gen::Generator g(seed + 9);
    for (std::uint64_t p : {2, 3, 5, 7})
      for (std::uint64_t ma = 1; ma < (1u << p); ++ma)
        for (std::uint64_t mb = 1; mb < (1u << p); ++mb) {
          std::vector<std::uint64_t> a, b;
          for (std::uint64_t x = 0; x < p; ++x) {
            if ((ma >> x) & 1) a.push_back(x);
            if ((mb >> x) & 1) b.push_back(x);
          }
          CauchyDavenportReport r;
          const bool violated = throws_theorem([&] { r = cauchy_davenport(p, a, b); });
          t.expect(!violated && r.ok, "sumset bound");
          t.count("sumset pairs");
        }

    const Ring fields[] = {Ring::integers_mod(2), Ring::integers_mod(3), Ring::galois_field(2, 2)};
    for (const Ring& f : fields)
      for (int i = 0; i < 110; ++i) {
        const std::size_t n = 2 + g.below(3);
        std::vector<MultiPoly> polys;
        std::uint64_t budget = n - 1;
        while (budget > 0 && (polys.empty() || g.coin())) {
          const std::uint64_t deg = 1 + g.below(budget);
          MultiIndex bound(n);
          for (std::size_t j = 0; j < n; ++j) bound[j] = static_cast<unsigned>(deg);
          MultiPoly q = g.poly(f, bound, deg, 4);
          if (total_degree(q) < 0) q = MultiPoly::constant(g.element(f), n);
          budget -= static_cast<std::uint64_t>(std::max<Degree>(0, total_degree(q)));
          polys.push_back(std::move(q));
        }
        std::uint64_t count = 0;
        const bool violated = throws_theorem([&] { count = chevalley_warning_count(f, polys, n); });
        t.expect(!violated && count % f.characteristic() == 0, "zero count not divisible");
        t.count("zero-count systems " + f.name());
      }

    for (int i = 0; i < 200; ++i) {
      const Ring f = i % 2 ? Ring::integers_mod(5) : Ring::integers_mod(3);
      const std::size_t n = 1 + g.below(4);
      std::vector<Hyperplane> planes;
      if (i % 4 == 0) {
        // x_j = 1 for every j misses exactly the origin.
        for (std::size_t j = 0; j < n; ++j) {
          Hyperplane h{std::vector<RingElement>(n, f.zero()), f.one()};
          h.a[j] = f.one();
          planes.push_back(h);
        }
      } else {
        for (std::size_t m = g.below(n + 2); m > 0; --m) {
          Hyperplane h{{}, g.element(f)};
          for (std::size_t j = 0; j < n; ++j) h.a.push_back(g.element(f));
          h.a[g.below(n)] = g.nonzero(f);
          planes.push_back(h);
        }
      }
      CubeCoverReport r;
      const bool violated = throws_theorem([&] { r = cube_cover_check(f, planes, n); });
      t.expect(!violated && r.consistent, "cube cover inconsistent");
      if (r.uncovered.size() == 1) t.count("single uncovered");
      t.count("plane sets");
    }

    UndirectedMultigraph k5;
    for (int v = 0; v < 5; ++v) k5.vertices.push_back("v" + std::to_string(v + 1));
    for (std::size_t u = 0; u < 5; ++u)
      for (std::size_t v = u + 1; v < 5; ++v) k5.edges.emplace_back(u, v);
    std::vector<std::pair<UndirectedMultigraph, std::pair<std::size_t, std::size_t>>> graphs{{k5, {0, 1}}};
    for (std::size_t nv : {5, 6}) {
      auto h = g.four_regular(nv);
      graphs.push_back({h, {0, 1 + g.below(nv - 1)}});
    }
    for (const auto& [graph, extra] : graphs) {
      SubgraphReport r;
      const bool violated = throws_theorem([&] { r = regular_subgraph_check(graph, extra); });
      bool cubic = !r.edges.empty();
      std::vector<unsigned> deg(graph.vertices.size(), 0);
      for (auto e : r.edges) {
        const auto [u, v] = e < graph.edges.size() ? graph.edges[e] : extra;
        ++deg[u];
        ++deg[v];
      }
      for (auto d : deg) cubic = cubic && (d == 0 || d == 3);
      t.expect(!violated && cubic && r.cw_count >= 2 && r.two_v == r.e && r.e < r.e_bar, "3-regular subgraph");
      t.count("graphs");
    }
    t.require("zero-count systems " + fields[0].name(), 100);
    t.require("zero-count systems " + fields[1].name(), 100);
    t.require("zero-count systems " + fields[2].name(), 100);
    t.require("single uncovered", 1);
    t.require("graphs", 3);
  });
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  return {coefficient_formula_oracle(seed), general_formula(seed), interpolation_round_trips(seed),
          nullstellensatz_certificates(seed), permanent_suite(seed), alon_tarsi_exhaustive(),
          z4_exceptions(), padic_lemma(), application_checkers(seed)};
}

}  // namespace nullkit::acceptance
