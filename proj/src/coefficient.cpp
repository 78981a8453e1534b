#include "nullkit/coefficient.hpp"

#include "nullkit/scan.hpp"

namespace nullkit {

namespace {

void require_poly_on_grid(const Grid& grid, const MultiPoly& p) {
  require_same_ring(grid.ring(), p.ring());
  if (p.nvars() != grid.dim()) throw DomainError("polynomial variable count does not match grid dimension");
}

void require_integral(const Grid& grid) {
  if (!grid.is_integral()) throw DomainError("grid not integral (" + to_string(grid.classification()) + ")");
}

RingElement finish_sum(const NormalizedSum& s) {
  if (!s.is_integral()) throw TheoremViolated("normalized grid sum " + s.to_string() + " is not integral");
  return s.to_ring();
}

}  // namespace

DLeadingReport is_d_leading(const MultiPoly& p, const MultiIndex& e, const MultiIndex& d) {
  if (e.size() != p.nvars() || d.size() != p.nvars()) throw DomainError("multiindex length does not match nvars");
  if (!componentwise_le(e, d)) throw DomainError("e must be <= d componentwise");
  DLeadingReport r{e, true, std::nullopt};
  for (const auto& [delta, c] : p.terms()) {
    if (delta == e) continue;
    bool case2 = false;
    for (std::size_t j = 0; j < delta.size() && !case2; ++j) case2 = delta[j] != e[j] && delta[j] <= d[j];
    if (!case2) {
      r.is_leading = false;
      r.witness = delta;
      break;
    }
  }
  return r;
}

RingElement coeff_formula_general(const Grid& grid, const MultiPoly& p, const MultiIndex& e) {
  require_poly_on_grid(grid, p);
  require_integral(grid);
  const auto report = is_d_leading(p, e, grid.d());
  if (!report.is_leading)
    throw DomainError("e = " + e.to_string() + " is not d-leading (witness " + report.witness->to_string() + ")");
  AxisTable weights(grid.dim());
  for (std::size_t j = 0; j < grid.dim(); ++j) weights[j] = grid.axis_psi(j)[e[j]];
  const RingElement v = finish_sum(normalized_sum(grid, evaluate_on_grid(p, grid).values, &weights));
  if (v != coefficient(p, e)) throw TheoremViolated("coefficient formula disagrees with P_e");
  return v;
}

RingElement coeff_formula_main(const Grid& grid, const MultiPoly& p) {
  require_poly_on_grid(grid, p);
  require_integral(grid);
  if (total_degree(p) > static_cast<Degree>(grid.degree_sum())) throw DomainError("degree exceeds Σd");
  const RingElement v = finish_sum(normalized_sum(grid, evaluate_on_grid(p, grid).values));
  if (v != coefficient(p, grid.d())) throw TheoremViolated("coefficient formula disagrees with P_d");
  return v;
}

Point nonzero_exists(const Grid& grid, const MultiPoly& p, const ScanLimits& limits) {
  require_poly_on_grid(grid, p);
  require_integral(grid);
  if (total_degree(p) > static_cast<Degree>(grid.degree_sum())) throw DomainError("degree exceeds Σd");
  if (coefficient(p, grid.d()).is_zero()) throw DomainError("P_d = 0");
  auto hit = parallel_find_first(grid.size(), limits.jobs,
                                 [&](std::uint64_t f) { return !evaluate(p, grid.point(f)).is_zero(); });
  if (!hit) throw TheoremViolated("P_d != 0 but P vanishes on the grid");
  return grid.point(*hit);
}

Point second_nonzero(const Grid& grid, const MultiPoly& p, const Point& x0, const ScanLimits& limits) {
  require_poly_on_grid(grid, p);
  require_integral(grid);
  if (total_degree(p) >= static_cast<Degree>(grid.degree_sum()) && !coefficient(p, grid.d()).is_zero())
    throw DomainError("needs deg(P) < Σd or P_d = 0");
  const std::uint64_t f0 = grid.locate(x0);
  if (evaluate(p, x0).is_zero()) throw DomainError("P(x0) = 0");
  auto hit = parallel_find_first(grid.size(), limits.jobs, [&](std::uint64_t f) {
    return f != f0 && !evaluate(p, grid.point(f)).is_zero();
  });
  if (!hit) throw TheoremViolated("P has exactly one nonzero on the grid");
  return grid.point(*hit);
}

std::uint64_t cw_variant_count(const Grid& grid, const std::vector<MultiPoly>& polys, const ScanLimits& limits) {
  const Ring& ring = grid.ring();
  if (!ring.is_field()) throw DomainError("grid ring must be a finite field");
  long double lhs = 0;
  for (const auto& p : polys) {
    require_poly_on_grid(grid, p);
    lhs += static_cast<long double>(*ring.order() - 1) * static_cast<long double>(std::max<Degree>(0, total_degree(p)));
  }
  if (!(lhs < static_cast<long double>(grid.degree_sum()))) throw DomainError("degree condition (q-1)·Σdeg(P_i) < Σd violated");
  limits.require_scan(static_cast<long double>(grid.size()), "common-zero count");
  const std::uint64_t count = parallel_count(grid.size(), limits.jobs, [&](std::uint64_t f) {
    const Point x = grid.point(f);
    for (const auto& p : polys)
      if (!evaluate(p, x).is_zero()) return false;
    return true;
  });
  if (count == 1) throw TheoremViolated("exactly one common zero");
  return count;
}

}  // namespace nullkit
