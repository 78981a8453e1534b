#include "nullkit/grid.hpp"

#include <algorithm>
#include <set>

namespace nullkit {

std::string to_string(GridClass c) {
  switch (c) {
    case GridClass::Division: return "division";
    case GridClass::IntegralNotDivision: return "integral_not_division";
    case GridClass::AffineNotIntegral: return "affine_not_integral";
    case GridClass::NotAffine: return "not_affine";
  }
  return "?";
}

namespace detail {

struct GridData {
  Ring ring;
  std::vector<std::vector<RingElement>> axes;
  MultiIndex d;
  std::vector<std::uint64_t> strides;
  std::uint64_t size = 1;
  std::vector<std::vector<RingElement>> axis_n;
  std::vector<std::vector<std::vector<RingElement>>> axis_psi;
  GridClass cls = GridClass::Division;
};

}  // namespace detail

namespace {

// Ascending coefficients of prod_{y in roots} (X - y).
std::vector<RingElement> expand_roots(const Ring& ring, std::span<const RingElement> roots) {
  std::vector<RingElement> c{ring.one()};
  for (const auto& y : roots) {
    std::vector<RingElement> next(c.size() + 1, ring.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * y;
    }
    c = std::move(next);
  }
  return c;
}

GridClass classify(const detail::GridData& g) {
  bool all_units = true;
  bool all_regular = true;
  for (const auto& axis : g.axes) {
    for (std::size_t a = 0; a < axis.size(); ++a)
      for (std::size_t b = a + 1; b < axis.size(); ++b) {
        const RingElement diff = axis[a] - axis[b];
        if (!try_invert(diff)) {
          all_units = false;
          if (is_zero_divisor(diff)) all_regular = false;
        }
      }
  }
  if (all_units) return GridClass::Division;
  if (all_regular) return GridClass::IntegralNotDivision;
  // Prod N is a product of positive powers of the per-axis products, so it is
  // nilpotent iff the product of the per-axis products is.
  RingElement prod = g.ring.one();
  for (const auto& nj : g.axis_n)
    for (const auto& v : nj) prod *= v;
  return is_nilpotent(prod) ? GridClass::NotAffine : GridClass::AffineNotIntegral;
}

bool contains(std::span<const RingElement> set, const RingElement& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

bool is_subfield(const Ring& ring, std::span<const RingElement> set) {
  if (!contains(set, ring.zero()) || !contains(set, ring.one())) return false;
  for (const auto& a : set) {
    if (!contains(set, -a)) return false;
    if (!a.is_zero()) {
      auto inv = try_invert(a);
      if (!inv || !contains(set, *inv)) return false;
    }
    for (const auto& b : set)
      if (!contains(set, a + b) || !contains(set, a * b)) return false;
  }
  return true;
}

// Number of l-th roots of unity in the ring.
std::uint64_t count_roots_of_unity(const Ring& ring, std::uint64_t l) {
  if (!ring.is_finite()) return l % 2 == 0 ? 2 : 1;
  std::uint64_t n = 0;
  for (const auto& c : enumerate_elements(ring))
    if (ring_pow(c, l).is_one()) ++n;
  return n;
}

void require_roots_of_unity(const Ring& ring, std::span<const RingElement> roots) {
  if (!ring.is_integral_domain()) throw DomainError("axis family requires an integral domain");
  const std::uint64_t l = roots.size();
  for (const auto& x : roots)
    if (!ring_pow(x, l).is_one()) throw DomainError("axis element " + x.to_string() + " is not an l-th root of unity");
  if (count_roots_of_unity(ring, l) != l) throw DomainError("axis is not the full set of l-th roots of unity");
}

}  // namespace

// ---------------------------------------------------------------------------
// Grid

Grid::Grid(Ring ring, std::vector<std::vector<RingElement>> axes, const ScanLimits& limits) {
  auto g = std::make_shared<detail::GridData>(detail::GridData{std::move(ring), std::move(axes), {}, {}, 1, {}, {}, GridClass::Division});
  const std::size_t n = g->axes.size();
  g->d = MultiIndex(n);
  long double points = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& axis = g->axes[j];
    if (axis.empty()) throw DomainError("grid axis " + std::to_string(j + 1) + " is empty");
    for (const auto& x : axis) require_same_ring(g->ring, x.ring());
    for (std::size_t a = 0; a < axis.size(); ++a)
      for (std::size_t b = a + 1; b < axis.size(); ++b)
        if (axis[a] == axis[b])
          throw DomainError("grid axis " + std::to_string(j + 1) + " has duplicate element " + axis[a].to_string());
    g->d[j] = static_cast<unsigned>(axis.size() - 1);
    points *= static_cast<long double>(axis.size());
  }
  if (points > static_cast<long double>(limits.max_grid_points))
    throw DomainError("grid has more points than --max-grid-points allows");
  g->size = static_cast<std::uint64_t>(points);
  g->strides.assign(n, 1);
  for (std::size_t j = n; j-- > 1;) g->strides[j - 1] = g->strides[j] * g->axes[j].size();

  for (std::size_t j = 0; j < n; ++j) {
    const auto& axis = g->axes[j];
    std::vector<RingElement> nj;
    std::vector<std::vector<RingElement>> psi(axis.size(), std::vector<RingElement>(axis.size(), g->ring.zero()));
    for (std::size_t i = 0; i < axis.size(); ++i) {
      std::vector<RingElement> others;
      for (std::size_t k = 0; k < axis.size(); ++k)
        if (k != i) others.push_back(axis[k]);
      const auto coeffs = expand_roots(g->ring, others);
      for (std::size_t delta = 0; delta < coeffs.size(); ++delta) psi[delta][i] = coeffs[delta];
      RingElement v = g->ring.one();
      for (const auto& y : others) v *= axis[i] - y;
      nj.push_back(std::move(v));
    }
    g->axis_n.push_back(std::move(nj));
    g->axis_psi.push_back(std::move(psi));
  }
  g->cls = classify(*g);
  data_ = std::move(g);
}

const Ring& Grid::ring() const { return data_->ring; }
std::size_t Grid::dim() const { return data_->axes.size(); }
const std::vector<RingElement>& Grid::axis(std::size_t j) const { return data_->axes.at(j); }
const MultiIndex& Grid::d() const { return data_->d; }
std::uint64_t Grid::degree_sum() const { return data_->d.total(); }
std::uint64_t Grid::size() const { return data_->size; }
const std::vector<RingElement>& Grid::axis_n(std::size_t j) const { return data_->axis_n.at(j); }
const std::vector<std::vector<RingElement>>& Grid::axis_psi(std::size_t j) const { return data_->axis_psi.at(j); }
GridClass Grid::classification() const { return data_->cls; }
bool Grid::is_integral() const {
  return data_->cls == GridClass::Division || data_->cls == GridClass::IntegralNotDivision;
}
bool Grid::is_division() const { return data_->cls == GridClass::Division; }

std::vector<std::size_t> Grid::indices(std::uint64_t flat) const {
  std::vector<std::size_t> idx(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    idx[j] = static_cast<std::size_t>(flat / data_->strides[j]);
    flat %= data_->strides[j];
  }
  return idx;
}

std::uint64_t Grid::flat_index(std::span<const std::size_t> idx) const {
  std::uint64_t flat = 0;
  for (std::size_t j = 0; j < dim(); ++j) flat += idx[j] * data_->strides[j];
  return flat;
}

Point Grid::point(std::uint64_t flat) const {
  Point x;
  x.reserve(dim());
  const auto idx = indices(flat);
  for (std::size_t j = 0; j < dim(); ++j) x.push_back(data_->axes[j][idx[j]]);
  return x;
}

std::optional<std::uint64_t> Grid::find(std::span<const RingElement> x) const {
  if (x.size() != dim()) return std::nullopt;
  std::uint64_t flat = 0;
  for (std::size_t j = 0; j < dim(); ++j) {
    const auto& axis = data_->axes[j];
    auto it = std::find(axis.begin(), axis.end(), x[j]);
    if (it == axis.end()) return std::nullopt;
    flat += static_cast<std::uint64_t>(it - axis.begin()) * data_->strides[j];
  }
  return flat;
}

std::uint64_t Grid::locate(std::span<const RingElement> x) const {
  if (auto f = find(x)) return *f;
  std::string s = "(";
  for (std::size_t j = 0; j < x.size(); ++j) s += (j ? "," : "") + x[j].to_string();
  throw DomainError("point " + s + ") is not in the grid");
}

RingElement Grid::n_at(std::uint64_t flat) const {
  const auto idx = indices(flat);
  RingElement v = ring().one();
  for (std::size_t j = 0; j < dim(); ++j) v *= data_->axis_n[j][idx[j]];
  return v;
}

Grid build_grid(const Ring& ring, std::vector<std::vector<RingElement>> axes, const ScanLimits& limits) {
  return Grid(ring, std::move(axes), limits);
}

std::vector<Point> enumerate_points(const Grid& grid) {
  std::vector<Point> out;
  out.reserve(grid.size());
  for (std::uint64_t f = 0; f < grid.size(); ++f) out.push_back(grid.point(f));
  return out;
}

GridMap compute_n(const Grid& grid) {
  GridMap m{grid, {}};
  m.values.reserve(grid.size());
  for (std::uint64_t f = 0; f < grid.size(); ++f) m.values.push_back(grid.n_at(f));
  return m;
}

GridConstants compute_psi(const Grid& grid, const ScanLimits& limits) {
  limits.require_scan(static_cast<long double>(grid.size()) * static_cast<long double>(grid.size()),
                      "psi table");
  GridConstants out{compute_n(grid), {}};
  out.psi.assign(grid.size(), std::vector<RingElement>(grid.size(), grid.ring().zero()));
  for (std::uint64_t delta = 0; delta < grid.size(); ++delta) {
    const auto di = grid.indices(delta);
    for (std::uint64_t x = 0; x < grid.size(); ++x) {
      const auto xi = grid.indices(x);
      RingElement v = grid.ring().one();
      for (std::size_t j = 0; j < grid.dim() && !v.is_zero(); ++j) v *= grid.axis_psi(j)[di[j]][xi[j]];
      out.psi[delta][x] = std::move(v);
    }
  }
  return out;
}

GridMap evaluate_on_grid(const MultiPoly& p, const Grid& grid) {
  require_same_ring(p.ring(), grid.ring());
  if (p.nvars() != grid.dim()) throw DomainError("polynomial variable count does not match grid dimension");
  const std::size_t n = grid.dim();
  // pw[j][i][e] = (i-th element of X_j)^e
  std::vector<std::vector<std::vector<RingElement>>> pw(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Degree dj = partial_degree(p, j);
    const std::size_t top = dj < 0 ? 0 : static_cast<std::size_t>(dj);
    for (const auto& x : grid.axis(j)) {
      std::vector<RingElement> row{grid.ring().one()};
      for (std::size_t e = 1; e <= top; ++e) row.push_back(row.back() * x);
      pw[j].push_back(std::move(row));
    }
  }
  GridMap out{grid, {}};
  out.values.reserve(grid.size());
  std::vector<std::size_t> idx(n, 0);
  for (std::uint64_t f = 0; f < grid.size(); ++f) {
    RingElement sum = grid.ring().zero();
    for (const auto& [e, c] : p.terms()) {
      RingElement t = c;
      for (std::size_t j = 0; j < n; ++j)
        if (e[j] > 0) t *= pw[j][idx[j]][e[j]];
      sum += t;
    }
    out.values.push_back(std::move(sum));
    for (std::size_t j = n; j-- > 0;) {
      if (++idx[j] < grid.axis(j).size()) break;
      idx[j] = 0;
    }
  }
  return out;
}

MultiPoly lagrange_polynomial(const Grid& grid, std::span<const RingElement> x) {
  grid.locate(x);
  const std::size_t n = grid.dim();
  MultiPoly l = MultiPoly::constant(grid.ring().one(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& y : grid.axis(j)) {
      if (y == x[j]) continue;
      l = l * (MultiPoly::variable(grid.ring(), n, j) - MultiPoly::constant(y, n));
    }
  return l;
}

std::vector<RingElement> n_specialization(const Ring& ring, std::span<const RingElement> axis,
                                          AxisFamily family, const std::optional<RingElement>& shift) {
  if (axis.empty()) throw DomainError("empty axis");
  for (const auto& x : axis) require_same_ring(ring, x.ring());
  const std::uint64_t dj = axis.size() - 1;
  std::vector<RingElement> out;
  switch (family) {
    case AxisFamily::RootsOfUnity: {
      require_roots_of_unity(ring, axis);
      const RingElement l = ring.from_integer(static_cast<std::int64_t>(dj + 1));
      for (const auto& x : axis) out.push_back(l * *try_invert(x));
      break;
    }
    case AxisFamily::SubfieldMinusZero: {
      if (contains(axis, ring.zero())) throw DomainError("axis must not contain 0");
      std::vector<RingElement> with_zero(axis.begin(), axis.end());
      with_zero.push_back(ring.zero());
      if (!is_subfield(ring, with_zero)) throw DomainError("axis plus 0 is not a finite subfield");
      for (const auto& x : axis) out.push_back(-*try_invert(x));
      break;
    }
    case AxisFamily::RootsOfUnityWithZero: {
      if (!contains(axis, ring.zero())) throw DomainError("axis must contain 0");
      std::vector<RingElement> roots;
      for (const auto& x : axis)
        if (!x.is_zero()) roots.push_back(x);
      require_roots_of_unity(ring, roots);
      const RingElement dv = ring.from_integer(static_cast<std::int64_t>(dj));
      for (const auto& x : axis) out.push_back(x.is_zero() ? -ring.one() : dv);
      break;
    }
    case AxisFamily::Subfield: {
      if (!is_subfield(ring, axis)) throw DomainError("axis is not a finite subfield");
      out.assign(axis.size(), -ring.one());
      break;
    }
    case AxisFamily::IntegerRange: {
      if (ring.kind() != RingKind::Integers) throw DomainError("integer range axis requires the ring Z");
      std::vector<bool> seen(dj + 1, false);
      for (const auto& x : axis) {
        const BigInt v = x.integer_value();
        if (v < 0 || v > BigInt(static_cast<unsigned long>(dj)) || seen[v.get_ui()])
          throw DomainError("axis is not {0, ..., d_j}");
        seen[v.get_ui()] = true;
      }
      const BigInt fact = factorial(dj);
      for (const auto& x : axis) {
        const unsigned long xv = x.integer_value().get_ui();
        BigInt v = fact / binomial(dj, xv);
        if ((dj + xv) % 2 == 1) v = -v;
        out.push_back(ring.from_integer(v));
      }
      break;
    }
    case AxisFamily::Shifted: {
      if (!shift) throw DomainError("shifted family requires a shift");
      require_same_ring(ring, shift->ring());
      std::vector<RingElement> base;
      for (const auto& x : axis) base.push_back(x - *shift);
      for (std::size_t i = 0; i < base.size(); ++i) {
        RingElement v = ring.one();
        for (std::size_t k = 0; k < base.size(); ++k)
          if (k != i) v *= base[i] - base[k];
        out.push_back(std::move(v));
      }
      break;
    }
  }
  return out;
}

GridClass classify_grid(const Grid& grid) { return grid.classification(); }

// ---------------------------------------------------------------------------
// normalized sums

bool NormalizedSum::is_zero() const { return rational_ ? *rational_ == 0 : value_.is_zero(); }

bool NormalizedSum::is_integral() const { return !rational_ || rational_->get_den() == 1; }

RingElement NormalizedSum::to_ring() const {
  if (!rational_) return value_;
  if (rational_->get_den() != 1)
    throw DomainError("normalized sum " + rational_->get_str() + " is not an integer");
  return value_.ring().from_integer(BigInt(rational_->get_num()));
}

std::string NormalizedSum::to_string() const { return rational_ ? rational_->get_str() : value_.to_string(); }

Normalizer make_normalizer(const Grid& grid) {
  Normalizer nz;
  if (grid.is_division()) {
    for (std::size_t j = 0; j < grid.dim(); ++j) {
      std::vector<RingElement> inv;
      for (const auto& v : grid.axis_n(j)) {
        auto vi = try_invert(v);
        if (!vi) throw DomainError("N(x) is not invertible");
        inv.push_back(*vi);
      }
      nz.factor.push_back(std::move(inv));
    }
    return nz;
  }
  if (grid.ring().kind() != RingKind::Integers)
    throw DomainError("grid not integral: N(x) is not invertible in " + grid.ring().name());
  BigInt denom = 1;
  for (std::size_t j = 0; j < grid.dim(); ++j) {
    const auto& nj = grid.axis_n(j);
    BigInt lj = 1;
    for (const auto& v : nj) {
      const BigInt a = abs(v.integer_value());
      mpz_lcm(lj.get_mpz_t(), lj.get_mpz_t(), a.get_mpz_t());
    }
    std::vector<RingElement> mult;
    for (const auto& v : nj) mult.push_back(grid.ring().from_integer(BigInt(lj / v.integer_value())));
    nz.factor.push_back(std::move(mult));
    denom *= lj;
  }
  nz.denominator = denom;
  return nz;
}

namespace {

NormalizedSum finish(const Grid& grid, const Normalizer& nz, const RingElement& sum) {
  if (!nz.denominator) return NormalizedSum(sum);
  Rational q(sum.integer_value(), *nz.denominator);
  q.canonicalize();
  return NormalizedSum(grid.ring(), q);
}

}  // namespace

NormalizedSum normalized_sum(const Grid& grid, std::span<const std::pair<std::uint64_t, RingElement>> terms,
                             const AxisTable* weights) {
  const Normalizer nz = make_normalizer(grid);
  RingElement sum = grid.ring().zero();
  for (const auto& [flat, v] : terms) {
    if (v.is_zero()) continue;
    require_same_ring(grid.ring(), v.ring());
    const auto idx = grid.indices(flat);
    RingElement t = v;
    for (std::size_t j = 0; j < grid.dim(); ++j) {
      t *= nz.factor[j][idx[j]];
      if (weights) t *= (*weights)[j][idx[j]];
    }
    sum += t;
  }
  return finish(grid, nz, sum);
}

NormalizedSum normalized_sum(const Grid& grid, const std::vector<RingElement>& values, const AxisTable* weights) {
  if (values.size() != grid.size()) throw DomainError("value table does not match grid size");
  // Contract one axis at a time with the combined per-axis factor.
  const Normalizer nz = make_normalizer(grid);
  AxisTable w = nz.factor;
  if (weights)
    for (std::size_t j = 0; j < grid.dim(); ++j)
      for (std::size_t i = 0; i < w[j].size(); ++i) w[j][i] *= (*weights)[j][i];
  std::vector<RingElement> cur = values;
  for (std::size_t j = grid.dim(); j-- > 0;) {
    const std::size_t len = w[j].size();
    std::vector<RingElement> next;
    next.reserve(cur.size() / len);
    for (std::size_t base = 0; base < cur.size(); base += len) {
      RingElement s = grid.ring().zero();
      for (std::size_t i = 0; i < len; ++i)
        if (!cur[base + i].is_zero()) s += cur[base + i] * w[j][i];
      next.push_back(std::move(s));
    }
    cur = std::move(next);
  }
  return finish(grid, nz, cur.empty() ? grid.ring().zero() : cur[0]);
}

std::vector<RingElement> apply_axis_maps(const Grid& grid, std::vector<RingElement> values,
                                         const std::vector<AxisMatrix>& maps) {
  if (values.size() != grid.size()) throw DomainError("value table does not match grid size");
  const std::uint64_t total = grid.size();
  std::vector<RingElement> tmp(values.size(), grid.ring().zero());
  std::uint64_t stride = total;
  for (std::size_t j = 0; j < grid.dim(); ++j) {
    const auto& m = maps.at(j);
    const std::size_t len = grid.axis(j).size();
    stride /= len;
    const std::uint64_t block = stride * len;
    for (std::uint64_t outer = 0; outer < total; outer += block)
      for (std::uint64_t inner = 0; inner < stride; ++inner) {
        const std::uint64_t base = outer + inner;
        for (std::size_t r = 0; r < len; ++r) {
          RingElement s = grid.ring().zero();
          for (std::size_t i = 0; i < len; ++i) {
            const auto& v = values[base + i * stride];
            if (!v.is_zero() && !m[r][i].is_zero()) s += m[r][i] * v;
          }
          tmp[base + r * stride] = std::move(s);
        }
      }
    std::swap(values, tmp);
  }
  return values;
}

std::vector<RingElement> apply_psi(const Grid& grid, std::vector<RingElement> values) {
  std::vector<AxisMatrix> maps;
  for (std::size_t j = 0; j < grid.dim(); ++j) maps.push_back(grid.axis_psi(j));
  return apply_axis_maps(grid, std::move(values), maps);
}

std::vector<RingElement> evaluate_coefficients(const Grid& grid, std::vector<RingElement> coeffs) {
  // Vandermonde per axis: row = point, column = exponent.
  std::vector<AxisMatrix> maps;
  for (std::size_t j = 0; j < grid.dim(); ++j) {
    AxisMatrix v;
    for (const auto& x : grid.axis(j)) {
      std::vector<RingElement> row{grid.ring().one()};
      while (row.size() < grid.axis(j).size()) row.push_back(row.back() * x);
      v.push_back(std::move(row));
    }
    maps.push_back(std::move(v));
  }
  return apply_axis_maps(grid, std::move(coeffs), maps);
}

std::vector<RingElement> scale_by_axes(const Grid& grid, std::vector<RingElement> values, const AxisTable& factor) {
  if (values.size() != grid.size()) throw DomainError("value table does not match grid size");
  std::vector<std::size_t> idx(grid.dim(), 0);
  for (std::uint64_t f = 0; f < grid.size(); ++f) {
    if (!values[f].is_zero())
      for (std::size_t j = 0; j < grid.dim(); ++j) values[f] *= factor[j][idx[j]];
    for (std::size_t j = grid.dim(); j-- > 0;) {
      if (++idx[j] < grid.axis(j).size()) break;
      idx[j] = 0;
    }
  }
  return values;
}

MultiPoly poly_from_coefficients(const Grid& grid, const std::vector<RingElement>& coeffs) {
  if (coeffs.size() != grid.size()) throw DomainError("coefficient table does not match grid size");
  MultiPoly p(grid.ring(), grid.dim());
  for (std::uint64_t f = 0; f < grid.size(); ++f) {
    if (coeffs[f].is_zero()) continue;
    const auto idx = grid.indices(f);
    p.add_term(MultiIndex(std::vector<unsigned>(idx.begin(), idx.end())), coeffs[f]);
  }
  return p;
}

}  // namespace nullkit
