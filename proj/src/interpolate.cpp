#include "nullkit/interpolate.hpp"

#include "nullkit/errors.hpp"

namespace nullkit {

namespace {

void require_map(const GridMap& y) {
  if (y.values.size() != y.grid.size()) throw DomainError("grid map is not total on the grid");
  for (const auto& v : y.values) require_same_ring(y.grid.ring(), v.ring());
}

void require_partial_degrees(const Grid& grid, const MultiPoly& p) {
  require_same_ring(grid.ring(), p.ring());
  if (p.nvars() != grid.dim()) throw DomainError("polynomial variable count does not match grid dimension");
  for (std::size_t j = 0; j < grid.dim(); ++j)
    if (partial_degree(p, j) > static_cast<Degree>(grid.d()[j]))
      throw DomainError("partial degree in X" + std::to_string(j + 1) + " exceeds d_" + std::to_string(j + 1));
}

}  // namespace

MultiPoly psi_transform(const GridMap& y) {
  require_map(y);
  const Grid& grid = y.grid;
  const auto coeffs = apply_psi(grid, y.values);
  const auto back = evaluate_coefficients(grid, coeffs);
  for (std::uint64_t f = 0; f < grid.size(); ++f)
    if (back[f] != grid.n_at(f) * y.values[f]) throw TheoremViolated("(Psi y)|_X != N y");
  return poly_from_coefficients(grid, coeffs);
}

MultiPoly interpolate_division(const GridMap& y) {
  require_map(y);
  const Grid& grid = y.grid;
  if (!grid.is_division()) throw DomainError("grid not division");
  const Normalizer nz = make_normalizer(grid);
  const auto coeffs = apply_psi(grid, scale_by_axes(grid, y.values, nz.factor));
  if (evaluate_coefficients(grid, coeffs) != y.values) throw TheoremViolated("interpolant does not reproduce y");
  return poly_from_coefficients(grid, coeffs);
}

MultiPoly invert_integral(const Grid& grid, const MultiPoly& p) {
  if (!grid.is_integral()) throw DomainError("grid not integral");
  require_partial_degrees(grid, p);
  const auto values = evaluate_on_grid(p, grid).values;
  std::vector<RingElement> coeffs;
  if (grid.is_division() || grid.ring().kind() == RingKind::Integers) {
    const Normalizer nz = make_normalizer(grid);
    coeffs = apply_psi(grid, scale_by_axes(grid, values, nz.factor));
    if (nz.denominator) {
      const RingElement den = grid.ring().from_integer(*nz.denominator);
      for (auto& c : coeffs) {
        auto q = divide_exact(c, den);
        if (!q) throw DomainError("inversion produced a non-integral coefficient");
        c = *q;
      }
    }
  } else {
    std::vector<RingElement> scaled;
    scaled.reserve(values.size());
    for (std::uint64_t f = 0; f < grid.size(); ++f) {
      auto c = divide_exact(values[f], grid.n_at(f));
      if (!c) throw DomainError("N(x) does not divide P(x)");
      scaled.push_back(*c);
    }
    coeffs = apply_psi(grid, std::move(scaled));
  }
  MultiPoly out = poly_from_coefficients(grid, coeffs);
  if (out != p) throw TheoremViolated("inversion formula did not reproduce P");
  return out;
}

RingElement inclusion_exclusion_coeff(const GridMap& values, const MultiIndex& delta) {
  require_map(values);
  const Grid& grid = values.grid;
  const Ring& ring = grid.ring();
  if (delta.size() != grid.dim()) throw DomainError("multiindex length does not match grid dimension");
  for (std::size_t j = 0; j < grid.dim(); ++j) {
    const auto& axis = grid.axis(j);
    if (axis.size() != 2 || !((axis[0].is_zero() && axis[1].is_one()) || (axis[0].is_one() && axis[1].is_zero())))
      throw DomainError("inclusion-exclusion needs the grid {0,1}^n");
    if (delta[j] > 1) throw DomainError("multiindex must be <= (1,...,1)");
  }
  const std::size_t n = grid.dim();
  RingElement sum = ring.zero();
  Point x(n, ring.zero());
  // Enumerate subsets of supp(delta).
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < n; ++j)
    if (delta[j]) support.push_back(j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << support.size()); ++mask) {
    unsigned zeros = 0;
    for (std::size_t b = 0; b < support.size(); ++b) {
      const bool one = (mask >> b) & 1;
      x[support[b]] = one ? ring.one() : ring.zero();
      if (!one) ++zeros;
    }
    const RingElement& v = values.at(x);
    sum += zeros % 2 ? -v : v;
  }
  return sum;
}

}  // namespace nullkit
