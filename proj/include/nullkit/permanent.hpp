#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullkit/errors.hpp"
#include "nullkit/grid.hpp"
#include "nullkit/multipoly.hpp"

namespace nullkit {

/// Dense m x n matrix over a ring.
class RingMatrix {
 public:
  /// `cols` is needed only when there are no rows.
  RingMatrix(Ring ring, std::vector<std::vector<RingElement>> rows, std::optional<std::size_t> cols = std::nullopt);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return entries_.size(); }
  std::size_t cols() const { return cols_; }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<RingElement>>& entries() const { return entries_; }

 private:
  Ring ring_;
  std::size_t cols_ = 0;
  std::vector<std::vector<RingElement>> entries_;
};

/// Loopless directed multigraph; edge e points from `tail` to `head`.
struct OrientedMultigraph {
  struct Edge {
    std::size_t head;
    std::size_t tail;
  };

  OrientedMultigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

/// prod_i (sum_j a_ij X_j - b_i); b defaults to 0.
MultiPoly matrix_polynomial(const RingMatrix& a, const std::optional<std::vector<RingElement>>& b = std::nullopt);

/// Sum over sigma: (m] -> (n] with fibre sizes delta of prod_i a_{i,sigma(i)}.
RingElement per_delta(const RingMatrix& a, const MultiIndex& delta);

/// coefficient(matrix_polynomial(A), delta) == per_delta(A, delta).
bool per_delta_expansion_check(const RingMatrix& a, const MultiIndex& delta);

/// (prod delta_j!) per_delta(A) == per(A|delta), where A|delta repeats column
/// j delta_j times. Empty when prod delta_j! is zero or a zero divisor.
std::optional<bool> column_repeat_check(const RingMatrix& a, const MultiIndex& delta);

/// sum_x N(x)^-1 prod(Ax - b) over an integral grid; checked against per_d(A).
RingElement permanent_formula(const RingMatrix& a, const std::vector<RingElement>& b, const Grid& grid);

/// a_{e,v} = [head(e) = v] - [tail(e) = v].
RingMatrix incidence_matrix(const OrientedMultigraph& g, const Ring& ring = Ring::integers());

/// Even and odd orientations with in-degree vector delta, where an
/// orientation is odd when it reverses an odd number of edges.
struct OrientationCount {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
};

OrientationCount alon_tarsi_count(const OrientedMultigraph& g, const MultiIndex& delta, const ScanLimits& limits = {});

/// Even and odd orientations sharing the in-degrees of the defining
/// orientation; these count even and odd Eulerian subgraphs.
OrientationCount eulerian_subgraph_count(const OrientedMultigraph& g, const ScanLimits& limits = {});

/// First x in X (lexicographic) with (Ax)_i != b_i for all i.
std::optional<Point> coloring_search(const RingMatrix& a, const std::vector<RingElement>& b, const Grid& grid,
                                     const ScanLimits& limits = {});

}  // namespace nullkit
