#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nullkit/ring.hpp"

namespace nullkit {

/// Exponent vector (delta_1, ..., delta_n). Orders lexicographically; the
/// componentwise partial order is `componentwise_le`.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  MultiIndex(std::initializer_list<unsigned> e) : exps_(e) {}
  explicit MultiIndex(std::vector<unsigned> e) : exps_(std::move(e)) {}

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t j) const { return exps_[j]; }
  unsigned& operator[](std::size_t j) { return exps_[j]; }
  const std::vector<unsigned>& values() const { return exps_; }

  /// Sum of entries.
  std::uint64_t total() const;

  static MultiIndex unit(std::size_t n, std::size_t j, unsigned power = 1);

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;
};

/// a_j <= b_j for all j (sizes must agree).
bool componentwise_le(const MultiIndex& a, const MultiIndex& b);
MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

/// Total or partial degree. The zero polynomial has degree kMinusInfinity,
/// which compares below every integer.
using Degree = std::int64_t;
inline constexpr Degree kMinusInfinity = std::numeric_limits<std::int64_t>::min();

/// Sparse polynomial sum_delta P_delta X^delta over a Ring in n variables.
/// No stored coefficient is zero; terms iterate in lexicographic order.
class MultiPoly {
 public:
  using Terms = std::map<MultiIndex, RingElement>;

  MultiPoly(Ring ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

  static MultiPoly constant(const RingElement& c, std::size_t nvars);
  /// X_j (0-based j).
  static MultiPoly variable(const Ring& ring, std::size_t nvars, std::size_t j);
  static MultiPoly monomial(const RingElement& c, const MultiIndex& exps);

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c X^delta to the polynomial (zero results are dropped).
  void add_term(const MultiIndex& delta, const RingElement& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t nvars_;
  Terms terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_neg(const MultiPoly& a);
MultiPoly poly_scale(const MultiPoly& a, const RingElement& c);
MultiPoly poly_pow(const MultiPoly& a, std::uint64_t e);

RingElement evaluate(const MultiPoly& p, std::span<const RingElement> x);
RingElement coefficient(const MultiPoly& p, const MultiIndex& delta);

Degree total_degree(const MultiPoly& p);
/// Degree in X_j (0-based j).
Degree partial_degree(const MultiPoly& p, std::size_t j);

/// Q(x) = P(x_1, ..., x_j + c, ..., x_n), by binomial expansion.
MultiPoly substitute_shift(const MultiPoly& p, std::size_t j, const RingElement& c);

/// binom(n, k) as an exact integer.
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

}  // namespace nullkit
