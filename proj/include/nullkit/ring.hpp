#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nullkit {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class RingKind { Integers, IntegersMod, GaloisField };

class RingElement;

namespace detail {
struct RingData;
}

/// Descriptor of one of the supported commutative rings: Z, Z_m (m >= 2)
/// and F_{p^k} = F_p[t]/(f) for a monic irreducible f of degree k.
///
/// A Ring is a cheap handle; copies share the same immutable descriptor.
/// Two handles compare equal iff they describe the same ring structurally.
class Ring {
 public:
  static Ring integers();
  static Ring integers_mod(std::uint64_t m);
  /// `modulus` is the ascending coefficient list of f (constant term first).
  static Ring galois_field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);
  /// Uses the built-in modulus table (Conway polynomials, p^k <= 64).
  static Ring galois_field(std::uint64_t p, unsigned k);

  RingKind kind() const;
  /// m for Z_m, p^k for F_{p^k}; throws for Z.
  std::uint64_t modulus() const;
  /// 0 for Z, m for Z_m, p for F_{p^k}.
  std::uint64_t characteristic() const;
  /// k for F_{p^k}, 1 otherwise.
  unsigned degree() const;
  /// Ascending coefficients of the defining polynomial of F_{p^k}.
  const std::vector<std::uint64_t>& modulus_poly() const;

  /// |R|, or nullopt for Z.
  std::optional<std::uint64_t> order() const;
  bool is_finite() const { return kind() != RingKind::Integers; }
  bool is_field() const;
  bool is_integral_domain() const;

  RingElement zero() const;
  RingElement one() const;
  /// Image of an integer under the canonical map Z -> R.
  RingElement from_integer(const BigInt& v) const;
  RingElement from_integer(std::int64_t v) const;
  /// Element of F_{p^k} from its ascending coefficient vector (length <= k).
  RingElement from_coefficients(const std::vector<std::uint64_t>& coeffs) const;
  /// Element of a finite ring from its position in enumeration order.
  RingElement from_code(std::uint64_t code) const;

  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  explicit Ring(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::RingData> data_;

  friend class RingElement;
  friend RingElement operator-(const RingElement& a);
};

/// An exact element of a Ring in canonical reduced form.
///
/// Z values that fit in 64 bits are stored inline, larger ones as GMP
/// integers. Z_m residues and F_{p^k} elements are stored as their
/// enumeration code (residue, resp. the base-p number whose digits are the
/// ascending coefficients).
class RingElement {
 public:
  const Ring& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;

  /// The integer value (Z only).
  BigInt integer_value() const;
  /// Residue in [0, m) (Z_m only).
  std::uint64_t residue() const;
  /// Ascending coefficient vector of length k (F_{p^k} only).
  std::vector<std::uint64_t> coefficients() const;
  /// Position in enumerate_elements order (finite rings only).
  std::uint64_t code() const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator-(const RingElement& a);

  /// Structural equality; elements of different rings are never equal.
  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }
  /// Canonical total order (integer order on Z, code order otherwise).
  friend bool operator<(const RingElement& a, const RingElement& b);

  std::string to_string() const;

 private:
  using Payload = std::variant<std::int64_t, BigInt>;
  RingElement(Ring ring, Payload payload) : ring_(std::move(ring)), value_(std::move(payload)) {}

  std::int64_t small() const { return std::get<std::int64_t>(value_); }
  void normalize_big();

  Ring ring_;
  Payload value_;

  friend class Ring;
};

using Point = std::vector<RingElement>;

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_pow(const RingElement& a, std::uint64_t e);

/// The multiplicative inverse, or nullopt if `a` is not a unit.
std::optional<RingElement> try_invert(const RingElement& a);
/// True iff a != 0 and a*b = 0 for some b != 0.
bool is_zero_divisor(const RingElement& a);
/// True iff a^t = 0 for some t >= 1.
bool is_nilpotent(const RingElement& a);
/// Some c with a*c = b, or nullopt. Exact division on Z, scan on finite rings.
std::optional<RingElement> divide_exact(const RingElement& b, const RingElement& a);

/// All elements of a finite ring in canonical order; throws for Z.
std::vector<RingElement> enumerate_elements(const Ring& ring);

/// Distinct prime factors of n by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Throws DomainError("ring mismatch") unless a == b.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace nullkit
