#include "nullkit/numapps.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "nullkit/coefficient.hpp"
#include "nullkit/scan.hpp"

namespace nullkit {

namespace {

// Point with coordinates elements[digit_j], last coordinate fastest.
Point point_from_digits(std::uint64_t index, std::size_t n, const std::vector<RingElement>& elements) {
  Point x(n, elements[0]);
  const std::uint64_t q = elements.size();
  for (std::size_t j = n; j-- > 0;) {
    x[j] = elements[index % q];
    index /= q;
  }
  return x;
}

long double power(long double base, std::size_t e) { return std::pow(base, static_cast<long double>(e)); }

void require_field(const Ring& ring) {
  if (!ring.is_field()) throw DomainError("ring " + ring.name() + " is not a finite field");
}

}  // namespace

SubgraphReport regular_subgraph_check(const UndirectedMultigraph& g, std::pair<std::size_t, std::size_t> extra,
                                      const ScanLimits& limits) {
  const std::size_t nv = g.vertices.size();
  auto all = g.edges;
  all.push_back(extra);
  std::vector<unsigned> degree(nv, 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto [u, v] = all[i];
    if (u >= nv || v >= nv) throw DomainError("edge references an unknown vertex");
    if (u == v) throw DomainError("loop at vertex " + g.vertices[u]);
    if (i < g.edges.size()) {
      ++degree[u];
      ++degree[v];
    }
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (degree[v] != 4) throw DomainError("graph without the extra edge is not 4-regular (vertex " + g.vertices[v] + ")");
  const std::size_t m = all.size();
  if (m >= 63) throw DomainError("too many edges for subset enumeration");
  const std::uint64_t total = std::uint64_t{1} << m;
  limits.require_scan(static_cast<long double>(total), "edge subset scan");

  auto cubic = [&](std::uint64_t mask) {
    std::vector<unsigned> deg(nv, 0);
    for (std::size_t e = 0; e < m; ++e)
      if ((mask >> e) & 1) {
        ++deg[all[e].first];
        ++deg[all[e].second];
      }
    return std::all_of(deg.begin(), deg.end(), [](unsigned d) { return d == 0 || d == 3; });
  };

  SubgraphReport r;
  r.two_v = 2 * nv;
  r.e = g.edges.size();
  r.e_bar = m;
  auto first = parallel_find_first(total - 1, limits.jobs, [&](std::uint64_t i) { return cubic(i + 1); });
  if (!first) throw TheoremViolated("no nonempty 3-regular subgraph");
  for (std::size_t e = 0; e < m; ++e)
    if (((*first + 1) >> e) & 1) r.edges.push_back(e);

  // The same count through P_v = sum_{e at v} X_e over F_3 on {0,1}^{E-bar}.
  const Ring f3 = Ring::integers_mod(3);
  std::vector<std::vector<RingElement>> axes(m, {f3.zero(), f3.one()});
  ScanLimits grid_limits = limits;
  grid_limits.max_grid_points = std::max<std::uint64_t>(limits.max_grid_points, total);
  const Grid grid(f3, axes, grid_limits);
  std::vector<MultiPoly> polys(nv, MultiPoly(f3, m));
  for (std::size_t e = 0; e < m; ++e) {
    polys[all[e].first].add_term(MultiIndex::unit(m, e), f3.one());
    polys[all[e].second].add_term(MultiIndex::unit(m, e), f3.one());
  }
  r.cw_count = cw_variant_count(grid, polys, limits);
  const std::uint64_t direct = parallel_count(total, limits.jobs, cubic);
  if (direct != r.cw_count) throw TheoremViolated("zero count over F_3 differs from the subgraph count");
  return r;
}

CubeCoverReport cube_cover_check(const Ring& field, const std::vector<Hyperplane>& planes, std::size_t n,
                                 const ScanLimits& limits) {
  require_field(field);
  for (const auto& h : planes) {
    if (h.a.size() != n) throw DomainError("hyperplane normal has the wrong length");
    for (const auto& v : h.a) require_same_ring(field, v.ring());
    require_same_ring(field, h.b.ring());
    if (std::all_of(h.a.begin(), h.a.end(), [](const RingElement& v) { return v.is_zero(); }))
      throw DomainError("hyperplane normal is zero");
  }
  if (n >= 63) throw DomainError("dimension too large");
  limits.require_scan(power(2, n), "cube scan");
  const std::vector<RingElement> bits{field.zero(), field.one()};
  CubeCoverReport r;
  r.m = planes.size();
  r.n = n;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    const Point x = point_from_digits(i, n, bits);
    bool covered = false;
    for (const auto& h : planes) {
      RingElement s = field.zero();
      for (std::size_t j = 0; j < n; ++j) s += h.a[j] * x[j];
      if (s == h.b) {
        covered = true;
        break;
      }
    }
    if (!covered) r.uncovered.push_back(x);
  }
  r.consistent = r.uncovered.size() != 1 || r.m >= r.n;
  if (!r.consistent) throw TheoremViolated("planes cover all but one cube vertex with m < n");
  return r;
}

std::uint64_t chevalley_warning_count(const Ring& field, const std::vector<MultiPoly>& polys, std::size_t n,
                                      const ScanLimits& limits) {
  require_field(field);
  Degree sum = 0;
  for (const auto& p : polys) {
    require_same_ring(field, p.ring());
    if (p.nvars() != n) throw DomainError("polynomial variable count does not match n");
    sum += std::max<Degree>(0, total_degree(p));
  }
  if (sum >= static_cast<Degree>(n)) throw DomainError("degree condition Σdeg(P_i) < n violated");
  const auto elements = enumerate_elements(field);
  const long double points = power(static_cast<long double>(elements.size()), n);
  limits.require_scan(points, "zero count");
  const std::uint64_t count = parallel_count(static_cast<std::uint64_t>(points), limits.jobs, [&](std::uint64_t i) {
    const Point x = point_from_digits(i, n, elements);
    for (const auto& p : polys)
      if (!evaluate(p, x).is_zero()) return false;
    return true;
  });
  if (count % field.characteristic() != 0) throw TheoremViolated("zero count not divisible by the characteristic");
  return count;
}

CauchyDavenportReport cauchy_davenport(std::uint64_t p, const std::vector<std::uint64_t>& a,
                                       const std::vector<std::uint64_t>& b) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (a.empty() || b.empty()) throw DomainError("A and B must be nonempty");
  for (auto v : a)
    if (v >= p) throw DomainError("element of A outside [0, p)");
  for (auto v : b)
    if (v >= p) throw DomainError("element of B outside [0, p)");
  const std::set<std::uint64_t> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::set<std::uint64_t> sum;
  for (auto x : sa)
    for (auto y : sb) sum.insert((x + y) % p);
  CauchyDavenportReport r;
  r.sumset = sum.size();
  r.bound = std::min<std::uint64_t>(p, sa.size() + sb.size() - 1);
  r.ok = r.sumset >= r.bound;
  if (!r.ok) throw TheoremViolated("|A+B| below min(p, |A|+|B|-1)");
  return r;
}

IntegerCoeffReport integer_coeff_formula(const MultiPoly& p, const MultiIndex& d, const ScanLimits& limits) {
  if (p.ring().kind() != RingKind::Integers) throw DomainError("polynomial must be over Z");
  if (d.size() != p.nvars()) throw DomainError("multiindex length does not match nvars");
  if (total_degree(p) > static_cast<Degree>(d.total())) throw DomainError("degree exceeds Σd");
  const std::size_t n = d.size();
  long double points = 1;
  for (std::size_t j = 0; j < n; ++j) points *= d[j] + 1;
  limits.require_scan(points, "grid sum over [d]");

  IntegerCoeffReport r;
  r.lhs = coefficient(p, d).integer_value();
  for (std::size_t j = 0; j < n; ++j) r.lhs *= factorial(d[j]);
  if (d.total() % 2) r.lhs = -r.lhs;

  r.rhs = 0;
  const Ring& z = p.ring();
  std::vector<std::size_t> x(n, 0);
  for (std::uint64_t f = 0; f < static_cast<std::uint64_t>(points); ++f) {
    BigInt w = 1;
    Point pt;
    unsigned parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      w *= binomial(d[j], x[j]);
      parity += x[j];
      pt.push_back(z.from_integer(static_cast<std::int64_t>(x[j])));
    }
    const BigInt term = w * evaluate(p, pt).integer_value();
    r.rhs += parity % 2 ? BigInt(-term) : term;
    for (std::size_t j = n; j-- > 0;) {
      if (++x[j] <= d[j]) break;
      x[j] = 0;
    }
  }
  if (r.lhs != r.rhs) throw TheoremViolated("integer coefficient formula sides differ");
  return r;
}

ZmReport zm_second_nonzero(const MultiPoly& p, const ScanLimits& limits) {
  const Ring& ring = p.ring();
  if (ring.kind() != RingKind::IntegersMod) throw DomainError("polynomial must be over Z_m");
  const std::uint64_t m = ring.modulus();
  if (is_prime(m)) throw DomainError("m is prime: use field-case theorems");
  const std::size_t n = p.nvars();
  const auto elements = enumerate_elements(ring);
  const long double points = power(static_cast<long double>(m), n);
  limits.require_scan(points, "Z_m^n scan");
  const auto total = static_cast<std::uint64_t>(points);

  ZmReport r;
  r.exception_case = m == 4 && n == 1;
  r.nonzero_count = parallel_count(total, limits.jobs,
                                   [&](std::uint64_t i) { return !evaluate(p, point_from_digits(i, n, elements)).is_zero(); });

  std::vector<RingElement> binom(m, ring.zero());
  for (std::uint64_t x = 0; x < m; ++x) binom[x] = ring.from_integer(binomial(m - 1, x));
  RingElement alt = ring.zero();
  for (std::uint64_t i = 0; i < total; ++i) {
    const Point x = point_from_digits(i, n, elements);
    RingElement t = evaluate(p, x);
    std::uint64_t parity = 0;
    for (std::size_t j = 0; j < n && !t.is_zero(); ++j) {
      t *= binom[x[j].residue()];
      parity += x[j].residue();
    }
    alt += parity % 2 ? -t : t;
    if (!r.weighted_witness && i > 0 && !t.is_zero()) r.weighted_witness = x;
  }
  r.alternating_sum = alt;
  const bool p0_nonzero = !coefficient(p, MultiIndex(n)).is_zero();
  if (!p0_nonzero) r.weighted_witness.reset();

  if (!r.exception_case) {
    if (r.nonzero_count == 1) throw TheoremViolated("exactly one nonzero on Z_m^n");
    if (!alt.is_zero()) throw TheoremViolated("alternating binomial sum is not 0 in Z_m");
    if (p0_nonzero && !r.weighted_witness) throw TheoremViolated("P_0 != 0 but no weighted nonzero away from 0");
  }
  return r;
}

std::vector<std::vector<std::uint64_t>> zm4_exception_search() {
  const Ring z4 = Ring::integers_mod(4);
  const auto elements = enumerate_elements(z4);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t a3 = 0; a3 < 3; ++a3)
    for (std::uint64_t a2 = 0; a2 < 4; ++a2)
      for (std::uint64_t a1 = 0; a1 < 4; ++a1)
        for (std::uint64_t a0 = 0; a0 < 4; ++a0) {
          const std::uint64_t c[4] = {a0, a1, a2, a3};
          bool match = true;
          for (std::uint64_t x = 0; x < 4 && match; ++x) {
            std::uint64_t v = 0, xp = 1;
            for (auto ci : c) {
              v += ci * xp;
              xp *= x;
            }
            match = (v % 4 != 0) == (x == 0);
          }
          if (match) out.push_back({a0, a1, a2, a3});
        }
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) {
    return std::lexicographical_compare(u.rbegin(), u.rend(), v.rbegin(), v.rend());
  });
  return out;
}

PadicReport padic_product_divisibility(const BigInt& y, std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (k == 0) throw DomainError("k must be positive");
  BigInt pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  if (pk > BigInt(1UL << 24)) throw DomainError("p^k too large for the product");
  PadicReport r;
  std::uint64_t pi = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r.c += pi - 1;
    pi *= p;
  }
  BigInt prod = 1;
  for (unsigned long t = 1; t < pk.get_ui(); ++t) prod *= y - t;
  if (prod == 0) {
    r.divides = true;
    r.exact = false;
  } else {
    BigInt rest;
    const BigInt pb(static_cast<unsigned long>(p));
    r.valuation = mpz_remove(rest.get_mpz_t(), prod.get_mpz_t(), pb.get_mpz_t());
    r.divides = *r.valuation >= r.c;
    r.exact = *r.valuation == r.c;
  }
  r.pk_divides_y = mpz_divisible_p(y.get_mpz_t(), pk.get_mpz_t()) != 0;
  if (!r.divides) throw TheoremViolated("p^c does not divide the product");
  if (r.exact != r.pk_divides_y) throw TheoremViolated("exact valuation does not match p^k | y");
  return r;
}

std::uint64_t olson_generalized(const std::vector<MultiPoly>& polys, std::uint64_t p,
                                const std::vector<std::uint64_t>& k, const Grid& grid, const ScanLimits& limits) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (grid.ring().kind() != RingKind::Integers) throw DomainError("grid must be over Z");
  if (k.size() != polys.size()) throw DomainError("one exponent k_i per polynomial required");
  const BigInt pb(static_cast<unsigned long>(p));
  for (std::size_t j = 0; j < grid.dim(); ++j) {
    const auto& axis = grid.axis(j);
    for (std::size_t a = 0; a < axis.size(); ++a)
      for (std::size_t b = a + 1; b < axis.size(); ++b) {
        const BigInt diff = axis[a].integer_value() - axis[b].integer_value();
        if (mpz_divisible_p(diff.get_mpz_t(), pb.get_mpz_t()))
          throw DomainError("grid not p-integral: p divides " + axis[a].to_string() + " - " + axis[b].to_string());
      }
  }
  std::vector<BigInt> moduli;
  BigInt lhs = 0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    require_same_ring(grid.ring(), polys[i].ring());
    if (polys[i].nvars() != grid.dim()) throw DomainError("polynomial variable count does not match grid dimension");
    if (k[i] == 0) throw DomainError("k_i must be positive");
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k[i]);
    moduli.push_back(pk);
    lhs += (pk - 1) * static_cast<long>(std::max<Degree>(0, total_degree(polys[i])));
  }
  if (lhs >= BigInt(static_cast<unsigned long>(grid.degree_sum())))
    throw DomainError("degree condition Σ(p^k_i - 1)deg(P_i) < Σd violated");
  limits.require_scan(static_cast<long double>(grid.size()), "grid count");
  const std::uint64_t count = parallel_count(grid.size(), limits.jobs, [&](std::uint64_t f) {
    const Point x = grid.point(f);
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const BigInt v = evaluate(polys[i], x).integer_value();
      if (!mpz_divisible_p(v.get_mpz_t(), moduli[i].get_mpz_t())) return false;
    }
    return true;
  });
  if (count == 1) throw TheoremViolated("exactly one grid point satisfies all divisibilities");
  return count;
}

ConjectureSearchResult afk_conjecture_search(std::size_t n, std::size_t m, std::uint64_t k, std::uint64_t trials,
                                             std::int64_t bound, std::uint64_t seed) {
  if (k == 0) throw DomainError("k must be positive");
  if ((k - 1) * m >= n) throw DomainError("parameter condition (k-1)m < n violated");
  if (n > 20) throw DomainError("n too large for the {0,1}^n scan");
  if (bound < 0) throw DomainError("coefficient bound must be nonnegative");
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  const long double space = power(static_cast<long double>(width), n * m);
  const auto mod = static_cast<std::int64_t>(k);

  ConjectureSearchResult r;
  std::vector<std::vector<std::int64_t>> a(m, std::vector<std::int64_t>(n, 0));
  auto single_solution = [&] {
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n) && count < 2; ++x) {
      bool all = true;
      for (std::size_t i = 0; i < m && all; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j)
          if ((x >> (n - 1 - j)) & 1) s += a[i][j];
        all = s % mod == 0;
      }
      if (all) ++count;
    }
    return count == 1;
  };

  if (space <= static_cast<long double>(1 << 20)) {
    r.exhaustive = true;
    const auto total = static_cast<std::uint64_t>(space);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = m; i-- > 0;)
        for (std::size_t j = n; j-- > 0;) {
          a[i][j] = static_cast<std::int64_t>(rest % width) - bound;
          rest /= width;
        }
      ++r.instances;
      if (single_solution()) {
        r.counterexample = a;
        break;
      }
    }
    return r;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (auto& row : a)
      for (auto& v : row) v = dist(rng);
    ++r.instances;
    if (single_solution()) {
      r.counterexample = a;
      break;
    }
  }
  return r;
}

}  // namespace nullkit
