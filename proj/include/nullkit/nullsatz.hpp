#pragma once

#include <variant>
#include <vector>

#include "nullkit/grid.hpp"
#include "nullkit/multipoly.hpp"

namespace nullkit {

/// P = trimmed + sum_j cofactors[j] * axis_polys[j], deg_j(trimmed) <= d_j.
struct Certificate {
  MultiPoly trimmed;
  std::vector<MultiPoly> cofactors;
  std::vector<MultiPoly> axis_polys;
};

/// L_j = prod_{y in X_j} (X_j - y) as polynomials in n variables.
std::vector<MultiPoly> axis_polynomials(const Grid& grid);

/// Reduces P modulo the L_j. The lexicographically largest term with some
/// delta_j > d_j is reduced first, at its first such j.
Certificate trim(const Grid& grid, const MultiPoly& p);

struct NotVanishing {
  Point witness;
};

/// A certificate with trimmed = 0 if P vanishes on the (integral) grid, else
/// the first grid point where it does not.
std::variant<Certificate, NotVanishing> certify_vanishing(const Grid& grid, const MultiPoly& p);

/// Whether (P/X)_e = P_e; e must be d-leading in P.
bool check_dleading_preserved(const Grid& grid, const MultiPoly& p, const MultiIndex& e);

}  // namespace nullkit
