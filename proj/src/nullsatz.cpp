#include "nullkit/nullsatz.hpp"

#include "nullkit/coefficient.hpp"
#include "nullkit/errors.hpp"

namespace nullkit {

std::vector<MultiPoly> axis_polynomials(const Grid& grid) {
  std::vector<MultiPoly> out;
  const std::size_t n = grid.dim();
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly l = MultiPoly::constant(grid.ring().one(), n);
    for (const auto& y : grid.axis(j)) l = l * (MultiPoly::variable(grid.ring(), n, j) - MultiPoly::constant(y, n));
    out.push_back(std::move(l));
  }
  return out;
}

Certificate trim(const Grid& grid, const MultiPoly& p) {
  require_same_ring(grid.ring(), p.ring());
  const std::size_t n = grid.dim();
  if (p.nvars() != n) throw DomainError("polynomial variable count does not match grid dimension");
  Certificate cert{p, std::vector<MultiPoly>(n, MultiPoly(grid.ring(), n)), axis_polynomials(grid)};
  const MultiIndex& d = grid.d();
  for (;;) {
    const MultiIndex* delta = nullptr;
    std::size_t j = 0;
    const auto& terms = cert.trimmed.terms();
    for (auto it = terms.rbegin(); it != terms.rend() && !delta; ++it)
      for (std::size_t k = 0; k < n; ++k)
        if (it->first[k] > d[k]) {
          delta = &it->first;
          j = k;
          break;
        }
    if (!delta) break;
    MultiIndex shift = *delta;
    shift[j] -= d[j] + 1;
    const MultiPoly q = MultiPoly::monomial(coefficient(cert.trimmed, *delta), shift);
    cert.cofactors[j] += q;
    cert.trimmed -= q * cert.axis_polys[j];
  }
  return cert;
}

std::variant<Certificate, NotVanishing> certify_vanishing(const Grid& grid, const MultiPoly& p) {
  if (!grid.is_integral()) throw DomainError("grid not integral (" + to_string(grid.classification()) + ")");
  Certificate cert = trim(grid, p);
  if (cert.trimmed.is_zero()) return cert;
  const auto values = evaluate_on_grid(cert.trimmed, grid).values;
  for (std::uint64_t f = 0; f < grid.size(); ++f)
    if (!values[f].is_zero()) return NotVanishing{grid.point(f)};
  throw TheoremViolated("nonzero trimmed polynomial vanishes on an integral grid");
}

bool check_dleading_preserved(const Grid& grid, const MultiPoly& p, const MultiIndex& e) {
  const auto report = is_d_leading(p, e, grid.d());
  if (!report.is_leading)
    throw DomainError("e = " + e.to_string() + " is not d-leading (witness " + report.witness->to_string() + ")");
  return coefficient(trim(grid, p).trimmed, e) == coefficient(p, e);
}

}  // namespace nullkit
