#include "nullkit/permanent.hpp"

#include <bit>

#include "nullkit/scan.hpp"

namespace nullkit {

RingMatrix::RingMatrix(Ring ring, std::vector<std::vector<RingElement>> rows, std::optional<std::size_t> cols)
    : ring_(std::move(ring)), entries_(std::move(rows)) {
  cols_ = entries_.empty() ? cols.value_or(0) : entries_[0].size();
  for (const auto& row : entries_) {
    if (row.size() != cols_) throw DomainError("matrix rows have different lengths");
    for (const auto& v : row) require_same_ring(ring_, v.ring());
  }
}

OrientedMultigraph::OrientedMultigraph(std::vector<std::string> v, std::vector<Edge> e)
    : vertices(std::move(v)), edges(std::move(e)) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].head >= vertices.size() || edges[i].tail >= vertices.size())
      throw DomainError("edge " + std::to_string(i + 1) + " references an unknown vertex");
    if (edges[i].head == edges[i].tail) throw DomainError("loop at vertex " + vertices[edges[i].head]);
  }
}

namespace {

std::vector<RingElement> zero_shift(const RingMatrix& a) { return std::vector<RingElement>(a.rows(), a.ring().zero()); }

void require_shift(const RingMatrix& a, const std::vector<RingElement>& b) {
  if (b.size() != a.rows()) throw DomainError("shift vector length does not match row count");
  for (const auto& v : b) require_same_ring(a.ring(), v.ring());
}

struct PerDelta {
  const RingMatrix& a;
  std::vector<unsigned> remaining;

  RingElement run(std::size_t row, const RingElement& prefix) {
    if (row == a.rows()) return prefix;
    RingElement sum = a.ring().zero();
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      if (remaining[j] == 0 || a(row, j).is_zero()) continue;
      --remaining[j];
      sum += run(row + 1, prefix * a(row, j));
      ++remaining[j];
    }
    return sum;
  }
};

}  // namespace

MultiPoly matrix_polynomial(const RingMatrix& a, const std::optional<std::vector<RingElement>>& b) {
  const auto shift = b ? *b : zero_shift(a);
  require_shift(a, shift);
  const std::size_t n = a.cols();
  MultiPoly out = MultiPoly::constant(a.ring().one(), n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    MultiPoly row = MultiPoly::constant(-shift[i], n);
    for (std::size_t j = 0; j < n; ++j) row.add_term(MultiIndex::unit(n, j), a(i, j));
    out = out * row;
  }
  return out;
}

RingElement per_delta(const RingMatrix& a, const MultiIndex& delta) {
  if (delta.size() != a.cols()) throw DomainError("multiindex length does not match column count");
  if (delta.total() != a.rows()) return a.ring().zero();
  PerDelta p{a, delta.values()};
  return p.run(0, a.ring().one());
}

bool per_delta_expansion_check(const RingMatrix& a, const MultiIndex& delta) {
  return coefficient(matrix_polynomial(a), delta) == per_delta(a, delta);
}

std::optional<bool> column_repeat_check(const RingMatrix& a, const MultiIndex& delta) {
  if (delta.size() != a.cols()) throw DomainError("multiindex length does not match column count");
  if (delta.total() != a.rows()) return std::nullopt;
  RingElement scale = a.ring().one();
  for (unsigned dj : delta.values()) scale *= a.ring().from_integer(factorial(dj));
  if (scale.is_zero() || is_zero_divisor(scale)) return std::nullopt;
  std::vector<std::vector<RingElement>> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<RingElement> row;
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (unsigned r = 0; r < delta[j]; ++r) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  const RingMatrix repeated(a.ring(), std::move(rows), delta.total());
  const RingElement per = per_delta(repeated, MultiIndex(std::vector<unsigned>(a.rows(), 1)));
  return scale * per_delta(a, delta) == per;
}

RingElement permanent_formula(const RingMatrix& a, const std::vector<RingElement>& b, const Grid& grid) {
  require_same_ring(a.ring(), grid.ring());
  require_shift(a, b);
  if (grid.dim() != a.cols()) throw DomainError("grid dimension does not match column count");
  if (!grid.is_integral()) throw DomainError("grid not integral (" + to_string(grid.classification()) + ")");
  if (a.rows() > grid.degree_sum()) throw DomainError("row count m exceeds Σd");
  std::vector<RingElement> values;
  values.reserve(grid.size());
  for (std::uint64_t f = 0; f < grid.size(); ++f) {
    const Point x = grid.point(f);
    RingElement v = a.ring().one();
    for (std::size_t i = 0; i < a.rows() && !v.is_zero(); ++i) {
      RingElement s = -b[i];
      for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
      v *= s;
    }
    values.push_back(std::move(v));
  }
  const NormalizedSum sum = normalized_sum(grid, values);
  if (!sum.is_integral()) throw TheoremViolated("permanent grid sum " + sum.to_string() + " is not integral");
  const RingElement v = sum.to_ring();
  if (v != per_delta(a, grid.d())) throw TheoremViolated("grid sum differs from per_d(A)");
  return v;
}

RingMatrix incidence_matrix(const OrientedMultigraph& g, const Ring& ring) {
  std::vector<std::vector<RingElement>> rows;
  for (const auto& e : g.edges) {
    std::vector<RingElement> row(g.vertices.size(), ring.zero());
    row[e.head] = ring.one();
    row[e.tail] = -ring.one();
    rows.push_back(std::move(row));
  }
  return RingMatrix(ring, std::move(rows), g.vertices.size());
}

OrientationCount alon_tarsi_count(const OrientedMultigraph& g, const MultiIndex& delta, const ScanLimits& limits) {
  const std::size_t m = g.edges.size();
  if (delta.size() != g.vertices.size()) throw DomainError("multiindex length does not match vertex count");
  if (delta.total() != m) throw DomainError("Σδ must equal the number of edges");
  if (m >= 63) throw DomainError("too many edges for orientation enumeration");
  limits.require_scan(static_cast<long double>(std::uint64_t{1} << m), "orientation enumeration");
  const std::uint64_t total = std::uint64_t{1} << m;
  auto matches = [&](std::uint64_t mask) {
    std::vector<unsigned> fibre(g.vertices.size(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      const std::size_t v = ((mask >> e) & 1) ? g.edges[e].tail : g.edges[e].head;
      if (++fibre[v] > delta[v]) return false;
    }
    return true;
  };
  OrientationCount c;
  c.even = parallel_count(total, limits.jobs,
                          [&](std::uint64_t mask) { return std::popcount(mask) % 2 == 0 && matches(mask); });
  c.odd = parallel_count(total, limits.jobs,
                         [&](std::uint64_t mask) { return std::popcount(mask) % 2 == 1 && matches(mask); });
  const BigInt per = per_delta(incidence_matrix(g), delta).integer_value();
  if (BigInt(static_cast<unsigned long>(c.even)) - BigInt(static_cast<unsigned long>(c.odd)) != per)
    throw TheoremViolated("|DE| - |DO| differs from per_delta of the incidence matrix");
  return c;
}

OrientationCount eulerian_subgraph_count(const OrientedMultigraph& g, const ScanLimits& limits) {
  MultiIndex delta(g.vertices.size());
  for (const auto& e : g.edges) ++delta[e.head];
  return alon_tarsi_count(g, delta, limits);
}

std::optional<Point> coloring_search(const RingMatrix& a, const std::vector<RingElement>& b, const Grid& grid,
                                     const ScanLimits& limits) {
  require_same_ring(a.ring(), grid.ring());
  require_shift(a, b);
  if (grid.dim() != a.cols()) throw DomainError("grid dimension does not match column count");
  auto hit = parallel_find_first(grid.size(), limits.jobs, [&](std::uint64_t f) {
    const Point x = grid.point(f);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      RingElement s = a.ring().zero();
      for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
      if (s == b[i]) return false;
    }
    return true;
  });
  if (hit) return grid.point(*hit);
  if (grid.is_integral() && a.rows() <= grid.degree_sum() && !per_delta(a, grid.d()).is_zero())
    throw TheoremViolated("per_d(A) != 0 but no coloring exists on the grid");
  return std::nullopt;
}

}  // namespace nullkit
