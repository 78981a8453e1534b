#pragma once

#include "nullkit/grid.hpp"
#include "nullkit/multipoly.hpp"

namespace nullkit {

/// (Psi y)(X) = sum_x y(x) L_{X,x}. Checks (Psi y)|_X = N y before returning.
MultiPoly psi_transform(const GridMap& y);

/// The unique P with deg_j P <= d_j and P|_X = y. Division grids only.
MultiPoly interpolate_division(const GridMap& y);

/// Recovers P from P|_X on an integral grid (deg_j P <= d_j required). Over Z
/// the division by N happens with a common denominator; on finite integral
/// grids that are not division grids each N(x) c = P(x) is solved by scan.
MultiPoly invert_integral(const Grid& grid, const MultiPoly& p);

/// P_delta = sum_{x <= delta} (-1)^(sum(delta - x)) P(x) on {0,1}^n.
RingElement inclusion_exclusion_coeff(const GridMap& values, const MultiIndex& delta);

}  // namespace nullkit
