#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nullkit/errors.hpp"
#include "nullkit/multipoly.hpp"
#include "nullkit/ring.hpp"

namespace nullkit {

enum class GridClass { Division, IntegralNotDivision, AffineNotIntegral, NotAffine };

std::string to_string(GridClass c);

namespace detail {
struct GridData;
}

/// A d-grid X = X_1 x ... x X_n with d_j = |X_j| - 1.
///
/// Points are enumerated lexicographically in axis order (the last axis
/// varies fastest); a point's position in that order is its flat index.
/// The per-axis constants N_j and Psi^j are computed at construction;
/// full tensors are formed on demand.
class Grid {
 public:
  Grid(Ring ring, std::vector<std::vector<RingElement>> axes, const ScanLimits& limits = {});

  const Ring& ring() const;
  std::size_t dim() const;
  const std::vector<RingElement>& axis(std::size_t j) const;
  const MultiIndex& d() const;
  /// Sigma d.
  std::uint64_t degree_sum() const;
  /// Number of points.
  std::uint64_t size() const;

  /// N_j(x) for the elements of X_j, in axis order.
  const std::vector<RingElement>& axis_n(std::size_t j) const;
  /// psi^j_{delta, x}: row delta in [d_j], column = axis position of x.
  const std::vector<std::vector<RingElement>>& axis_psi(std::size_t j) const;

  GridClass classification() const;
  bool is_integral() const;
  bool is_division() const;

  std::vector<std::size_t> indices(std::uint64_t flat) const;
  std::uint64_t flat_index(std::span<const std::size_t> idx) const;
  Point point(std::uint64_t flat) const;
  std::optional<std::uint64_t> find(std::span<const RingElement> x) const;
  /// Flat index of x; throws DomainError if x is not a grid point.
  std::uint64_t locate(std::span<const RingElement> x) const;

  /// N(x) = prod_j N_j(x_j) at a flat index.
  RingElement n_at(std::uint64_t flat) const;

 private:
  std::shared_ptr<const detail::GridData> data_;
};

Grid build_grid(const Ring& ring, std::vector<std::vector<RingElement>> axes, const ScanLimits& limits = {});

/// All points in enumeration order.
std::vector<Point> enumerate_points(const Grid& grid);

/// A total map X -> R, stored in enumeration order.
struct GridMap {
  Grid grid;
  std::vector<RingElement> values;

  const RingElement& at(std::span<const RingElement> x) const { return values[grid.locate(x)]; }
};

/// N together with the full table psi_{delta, x}. Rows are indexed by the
/// flat index of delta in [d] (same shape as the grid), columns by points.
struct GridConstants {
  GridMap n;
  std::vector<std::vector<RingElement>> psi;
};

GridMap compute_n(const Grid& grid);
GridConstants compute_psi(const Grid& grid, const ScanLimits& limits = {});

/// P|_X, evaluated with per-axis power caches.
GridMap evaluate_on_grid(const MultiPoly& p, const Grid& grid);

/// L_{X,x} = prod_j prod_{y in X_j, y != x_j} (X_j - y).
MultiPoly lagrange_polynomial(const Grid& grid, std::span<const RingElement> x);

/// Closed forms for N_j on special axes.
enum class AxisFamily {
  RootsOfUnity,          ///< X_j = E_{d_j+1} in an integral domain: (d_j+1) x^-1
  SubfieldMinusZero,     ///< X_j u {0} a finite subfield: -x^-1
  RootsOfUnityWithZero,  ///< X_j = E_{d_j} u {0} in an integral domain: d_j for x != 0, -1 at 0
  Subfield,              ///< X_j a finite subfield: -1
  IntegerRange,          ///< X_j = {0, ..., d_j} in Z: (-1)^(d_j+x) d_j! / binom(d_j, x)
  Shifted,               ///< X_j = Y + alpha: N_{Y+alpha}(y+alpha) = N_Y(y)
};

/// N_j on `axis` by the closed form of `family`, in axis order. Verifies that
/// the axis belongs to the family (DomainError otherwise). `shift` is the
/// alpha of the Shifted family and is ignored by the others.
std::vector<RingElement> n_specialization(const Ring& ring, std::span<const RingElement> axis,
                                          AxisFamily family,
                                          const std::optional<RingElement>& shift = std::nullopt);

GridClass classify_grid(const Grid& grid);

/// Per-axis multipliers: entry [j][i] weights the i-th element of X_j.
using AxisTable = std::vector<std::vector<RingElement>>;

/// Sum over the given points of  w(x) N(x)^-1 v(x),  w(x) = prod_j weights[j][x_j]
/// (w = 1 when `weights` is null). On division grids the sum is formed in R;
/// over Z it is formed in Q with a common denominator.
class NormalizedSum {
 public:
  NormalizedSum(RingElement value) : value_(std::move(value)) {}
  NormalizedSum(const Ring& ring, Rational value) : value_(ring.zero()), rational_(std::move(value)) {}

  bool is_zero() const;
  bool is_integral() const;
  /// The value as a ring element; DomainError if it is a non-integral rational.
  RingElement to_ring() const;
  std::string to_string() const;

 private:
  RingElement value_;
  std::optional<Rational> rational_;
};

NormalizedSum normalized_sum(const Grid& grid,
                             std::span<const std::pair<std::uint64_t, RingElement>> terms,
                             const AxisTable* weights = nullptr);
NormalizedSum normalized_sum(const Grid& grid, const std::vector<RingElement>& values,
                             const AxisTable* weights = nullptr);

/// Factors of N^-1. On division grids factor[j][i] = N_j(x)^-1 and there is
/// no denominator. Over Z, factor[j][i] = L_j / N_j(x) with L_j the lcm of
/// |N_j| on the axis, and N(x)^-1 = prod_j factor[j][x_j] / denominator.
/// DomainError on any other non-division grid.
struct Normalizer {
  AxisTable factor;
  std::optional<BigInt> denominator;
};
Normalizer make_normalizer(const Grid& grid);

/// A square |X_j| x |X_j| matrix per axis, applied as out = M v along axis j.
using AxisMatrix = std::vector<std::vector<RingElement>>;
std::vector<RingElement> apply_axis_maps(const Grid& grid, std::vector<RingElement> values,
                                         const std::vector<AxisMatrix>& maps);

/// Separable transform  c_delta = sum_x psi_{delta,x} v(x)  over the whole
/// grid; values and result are in enumeration order.
std::vector<RingElement> apply_psi(const Grid& grid, std::vector<RingElement> values);

/// Values on X of the polynomial with coefficient tensor c (shape [d]).
std::vector<RingElement> evaluate_coefficients(const Grid& grid, std::vector<RingElement> coeffs);

/// Pointwise product of a value table with N (or with an axis table).
std::vector<RingElement> scale_by_axes(const Grid& grid, std::vector<RingElement> values, const AxisTable& factor);

/// Polynomial with coefficient tensor c (shape [d]); zero entries dropped.
MultiPoly poly_from_coefficients(const Grid& grid, const std::vector<RingElement>& coeffs);

}  // namespace nullkit
