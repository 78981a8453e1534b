#pragma once

#include <optional>
#include <vector>

#include "nullkit/errors.hpp"
#include "nullkit/grid.hpp"
#include "nullkit/multipoly.hpp"

namespace nullkit {

/// Outcome of the d-leading test. `witness` is a monomial delta != e of P
/// with delta_j > d_j wherever delta_j != e_j.
struct DLeadingReport {
  MultiIndex e;
  bool is_leading = true;
  std::optional<MultiIndex> witness;
};

DLeadingReport is_d_leading(const MultiPoly& p, const MultiIndex& e, const MultiIndex& d);

/// P_e = sum_x psi_{e,x} N(x)^-1 P(x) for d-leading e on an integral grid.
RingElement coeff_formula_general(const Grid& grid, const MultiPoly& p, const MultiIndex& e);

/// P_d = sum_x N(x)^-1 P(x) when deg(P) <= Sigma d.
RingElement coeff_formula_main(const Grid& grid, const MultiPoly& p);

/// First grid point (lexicographic) with P(x) != 0, given P_d != 0.
Point nonzero_exists(const Grid& grid, const MultiPoly& p, const ScanLimits& limits = {});

/// First grid point x != x0 with P(x) != 0, given P_d = 0 and P(x0) != 0.
Point second_nonzero(const Grid& grid, const MultiPoly& p, const Point& x0, const ScanLimits& limits = {});

/// Common zeros on a grid over F_q of polynomials with (q-1) sum deg P_i < Sigma d.
/// The count is never 1; a count of 1 throws TheoremViolated.
std::uint64_t cw_variant_count(const Grid& grid, const std::vector<MultiPoly>& polys,
                               const ScanLimits& limits = {});

}  // namespace nullkit
