#pragma once

#include <cstdint>
#include <vector>

#include "nullkit/grid.hpp"
#include "nullkit/multipoly.hpp"
#include "nullkit/permanent.hpp"

// Brute-force reference computations. None of these call the transform,
// normalizer or reduction code they are used to check.
namespace nullkit::oracle {

/// prod_j prod_{y != x_j} (x_j - y) straight from the definition.
RingElement n_value(const Grid& grid, const Point& x);

/// psi_{delta,x}: coefficient of X^delta in L_{X,x}, via elementary symmetric
/// sums e_k(X_j \ {x_j}) computed over all subsets.
RingElement psi_value(const Grid& grid, const MultiIndex& delta, const Point& x);

/// All values of P on the grid, one `evaluate` call per point.
std::vector<RingElement> values(const MultiPoly& p, const Grid& grid);

bool vanishes(const MultiPoly& p, const Grid& grid);
std::uint64_t nonzero_count(const MultiPoly& p, const Grid& grid);

/// Def. of d-leading checked monomial by monomial.
bool d_leading(const MultiPoly& p, const MultiIndex& e, const MultiIndex& d);

/// per_delta over all n^m maps sigma.
RingElement per_delta_all_maps(const RingMatrix& a, const MultiIndex& delta);

/// Classical permanent of a square matrix over all permutations.
RingElement permanent(const RingMatrix& a);

/// Sum of v_p(y - t) over 0 < t < p^k; -1 when some factor is 0.
std::int64_t padic_valuation_sum(std::int64_t y, std::uint64_t p, std::uint64_t k);

}  // namespace nullkit::oracle
