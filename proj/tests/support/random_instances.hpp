#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nullkit/grid.hpp"
#include "nullkit/multipoly.hpp"
#include "nullkit/numapps.hpp"
#include "nullkit/permanent.hpp"

namespace nullkit::gen {

enum class Family { Integers, IntegersMod, PrimeField, ExtensionField };

std::string family_name(Family f);
const std::vector<Family>& all_families();

/// Seeded source of random desk-scale instances.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n);
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return below(2) == 1; }

  Ring ring(Family f);
  /// Uniform over finite rings; integers in [-5, 5] over Z.
  RingElement element(const Ring& ring);
  RingElement nonzero(const Ring& ring);

  /// Axis differences are units (finite rings) or nonzero (Z).
  Grid integral_grid(const Ring& ring, std::size_t max_dim = 3, std::size_t max_axis = 4,
                     std::uint64_t max_points = 729);
  /// Arbitrary distinct axis elements.
  Grid any_grid(const Ring& ring, std::size_t max_dim = 3, std::size_t max_axis = 4);
  Grid grid_with_dim(const Ring& ring, std::size_t dim, std::size_t max_axis, bool integral);

  /// Up to `max_terms` terms with deg_j <= bound[j] and total degree <= max_total.
  MultiPoly poly(const Ring& ring, const MultiIndex& bound, std::uint64_t max_total, std::size_t max_terms = 6);
  MultiIndex below_index(const MultiIndex& bound);

  RingMatrix matrix(const Ring& ring, std::size_t m, std::size_t n);

  /// Loopless 4-regular multigraph on `nv` vertices (pairing model).
  UndirectedMultigraph four_regular(std::size_t nv);

 private:
  std::vector<RingElement> distinct_axis(const Ring& ring, std::size_t size, bool integral);

  std::mt19937_64 rng_;
};

}  // namespace nullkit::gen
