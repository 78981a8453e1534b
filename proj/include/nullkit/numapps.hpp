#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nullkit/errors.hpp"
#include "nullkit/grid.hpp"
#include "nullkit/multipoly.hpp"

namespace nullkit {

/// Undirected multigraph; edges are unordered vertex pairs.
struct UndirectedMultigraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct SubgraphReport {
  /// Indices into g.edges followed by the extra edge (index |E|).
  std::vector<std::size_t> edges;
  /// Subsets of all |E|+1 edges (including the empty one) whose degrees lie in {0,3}.
  std::uint64_t cw_count = 0;
  std::uint64_t two_v = 0;
  std::uint64_t e = 0;
  std::uint64_t e_bar = 0;
};

/// A nonempty 3-regular subgraph of a loopless 4-regular multigraph plus one edge.
SubgraphReport regular_subgraph_check(const UndirectedMultigraph& g, std::pair<std::size_t, std::size_t> extra,
                                      const ScanLimits& limits = {});

struct Hyperplane {
  std::vector<RingElement> a;
  RingElement b;
};

struct CubeCoverReport {
  std::vector<Point> uncovered;
  std::size_t m = 0;
  std::size_t n = 0;
  bool consistent = true;
};

/// Vertices of {0,1}^n missed by the planes a.x = b over a field.
CubeCoverReport cube_cover_check(const Ring& field, const std::vector<Hyperplane>& planes, std::size_t n,
                                 const ScanLimits& limits = {});

/// Common zeros on F_q^n of polynomials with sum deg P_i < n; divisible by p.
std::uint64_t chevalley_warning_count(const Ring& field, const std::vector<MultiPoly>& polys, std::size_t n,
                                      const ScanLimits& limits = {});

struct CauchyDavenportReport {
  std::uint64_t sumset = 0;
  std::uint64_t bound = 0;
  bool ok = true;
};

CauchyDavenportReport cauchy_davenport(std::uint64_t p, const std::vector<std::uint64_t>& a,
                                       const std::vector<std::uint64_t>& b);

struct IntegerCoeffReport {
  BigInt lhs;
  BigInt rhs;
};

/// (-1)^{Sigma d} (prod d_j!) P_d  against  sum_{x in [d]} prod (-1)^{x_j} binom(d_j, x_j) P(x).
IntegerCoeffReport integer_coeff_formula(const MultiPoly& p, const MultiIndex& d, const ScanLimits& limits = {});

struct ZmReport {
  std::uint64_t nonzero_count = 0;
  /// (m, n) = (4, 1): reported only, nothing asserted.
  bool exception_case = false;
  /// sum_x prod (-1)^{x_j} binom(m-1, x_j) P(x) in Z_m; always 0 outside the exception.
  std::optional<RingElement> alternating_sum;
  /// When P_0 != 0, the first x != 0 with prod binom(m-1, x_j) P(x) != 0.
  std::optional<Point> weighted_witness;
};

ZmReport zm_second_nonzero(const MultiPoly& p, const ScanLimits& limits = {});

/// All normalized cubics over Z_4 (P_3 != -1) whose only nonzero is at 0,
/// as ascending coefficient lists.
std::vector<std::vector<std::uint64_t>> zm4_exception_search();

struct PadicReport {
  std::uint64_t c = 0;
  /// p-adic valuation of prod_{0<t<p^k} (y - t); empty when the product is 0.
  std::optional<std::uint64_t> valuation;
  bool divides = false;        ///< p^c divides the product
  bool exact = false;          ///< p^{c+1} does not
  bool pk_divides_y = false;
};

PadicReport padic_product_divisibility(const BigInt& y, std::uint64_t p, std::uint64_t k);

/// x in X with p^{k_i} | P_i(x) for all i, on a p-integral grid over Z.
std::uint64_t olson_generalized(const std::vector<MultiPoly>& polys, std::uint64_t p,
                                const std::vector<std::uint64_t>& k, const Grid& grid,
                                const ScanLimits& limits = {});

struct ConjectureSearchResult {
  std::optional<std::vector<std::vector<std::int64_t>>> counterexample;
  std::uint64_t instances = 0;
  bool exhaustive = false;
};

/// Linear forms with coefficients in [-bound, bound]: looks for an instance
/// where exactly one x in {0,1}^n has k | (Ax)_i for all i.
ConjectureSearchResult afk_conjecture_search(std::size_t n, std::size_t m, std::uint64_t k, std::uint64_t trials,
                                             std::int64_t bound = 2, std::uint64_t seed = 1);

}  // namespace nullkit
