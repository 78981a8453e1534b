#include "nullkit/ring.hpp"

#include <algorithm>
#include <map>
#include <limits>
#include <numeric>
#include <utility>

#include "nullkit/errors.hpp"

namespace nullkit {

namespace detail {

struct RingData {
  RingKind kind = RingKind::Integers;
  std::uint64_t m = 0;  // Z_m modulus, or q = p^k
  std::uint64_t p = 0;
  unsigned k = 1;
  std::vector<std::uint64_t> modulus_poly;
  std::uint64_t radical = 0;  // rad(m) for Z_m
  std::vector<std::uint64_t> pow_p;
  // Full operation tables for small fields, indexed a*q+b.
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;

  bool same_as(const RingData& o) const {
    return kind == o.kind && m == o.m && p == o.p && k == o.k && modulus_poly == o.modulus_poly;
  }
};

}  // namespace detail

namespace {

constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 32;
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;
constexpr std::uint64_t kTableFieldOrder = 256;

using Digits = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

Digits decode(const detail::RingData& d, std::uint64_t code) {
  Digits out(d.k);
  for (unsigned i = 0; i < d.k; ++i) {
    out[i] = code % d.p;
    code /= d.p;
  }
  return out;
}

std::uint64_t encode(const detail::RingData& d, const Digits& digits) {
  std::uint64_t code = 0;
  for (unsigned i = d.k; i-- > 0;) code = code * d.p + digits[i];
  return code;
}

// Remainder of `a` modulo the monic polynomial `f` over F_p (ascending coefficients).
Digits poly_mod(Digits a, const Digits& f, std::uint64_t p) {
  const std::size_t df = f.size() - 1;
  for (std::size_t i = a.size(); i-- > df;) {
    const std::uint64_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= df; ++j) {
      a[i - df + j] = (a[i - df + j] + (p - c) * f[j]) % p;
    }
  }
  a.resize(std::min(a.size(), df));
  return a;
}

bool poly_divides(const Digits& divisor, const Digits& f, std::uint64_t p) {
  const Digits r = poly_mod(f, divisor, p);
  return std::all_of(r.begin(), r.end(), [](std::uint64_t c) { return c == 0; });
}

bool is_irreducible(const Digits& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits g(dd + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < dd; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[dd] = 1;
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

std::uint64_t gf_add(const detail::RingData& d, std::uint64_t a, std::uint64_t b) {
  if (!d.add_table.empty()) return d.add_table[a * d.m + b];
  std::uint64_t out = 0;
  for (unsigned i = 0; i < d.k; ++i) {
    const std::uint64_t s = (a % d.p + b % d.p) % d.p;
    out += s * d.pow_p[i];
    a /= d.p;
    b /= d.p;
  }
  return out;
}

std::uint64_t gf_neg(const detail::RingData& d, std::uint64_t a) {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < d.k; ++i) {
    const std::uint64_t c = a % d.p;
    out += ((d.p - c) % d.p) * d.pow_p[i];
    a /= d.p;
  }
  return out;
}

std::uint64_t gf_mul_slow(const detail::RingData& d, std::uint64_t a, std::uint64_t b) {
  const Digits x = decode(d, a);
  const Digits y = decode(d, b);
  Digits prod(2 * d.k - 1, 0);
  for (unsigned i = 0; i < d.k; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < d.k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % d.p;
  }
  Digits r = poly_mod(prod, d.modulus_poly, d.p);
  r.resize(d.k, 0);
  return encode(d, r);
}

std::uint64_t gf_mul(const detail::RingData& d, std::uint64_t a, std::uint64_t b) {
  if (!d.mul_table.empty()) return d.mul_table[a * d.m + b];
  return gf_mul_slow(d, a, b);
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) {
      std::uint64_t r = 1, b = g, e = (p - 1) / q;
      while (e > 0) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

const std::map<std::pair<std::uint64_t, unsigned>, Digits>& conway_table() {
  static const std::map<std::pair<std::uint64_t, unsigned>, Digits> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------
// number theory helpers

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a != b) throw DomainError("ring mismatch: " + a.name() + " vs " + b.name());
}

// ---------------------------------------------------------------------------
// Ring

Ring Ring::integers() {
  static const Ring z(std::make_shared<const detail::RingData>());
  return z;
}

Ring Ring::integers_mod(std::uint64_t m) {
  if (m < 2) throw DomainError("Z_m requires m >= 2");
  if (m > kMaxModulus) throw DomainError("Z_m modulus too large");
  auto d = std::make_shared<detail::RingData>();
  d->kind = RingKind::IntegersMod;
  d->m = m;
  d->p = m;
  std::uint64_t rad = 1;
  for (auto f : prime_factors(m)) rad *= f;
  d->radical = rad;
  return Ring(std::move(d));
}

Ring Ring::galois_field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw DomainError("GF requires a prime characteristic, got " + std::to_string(p));
  if (k == 0) throw DomainError("GF requires k >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > kMaxFieldOrder / p) throw DomainError("GF order too large");
    q *= p;
  }
  if (modulus.size() != k + 1) throw DomainError("GF modulus must have k+1 coefficients");
  for (auto c : modulus)
    if (c >= p) throw DomainError("GF modulus coefficients must lie in [0, p)");
  if (modulus.back() != 1) throw DomainError("GF modulus must be monic");
  if (!is_irreducible(modulus, p)) throw DomainError("GF modulus is not irreducible over F_p");

  auto d = std::make_shared<detail::RingData>();
  d->kind = RingKind::GaloisField;
  d->m = q;
  d->p = p;
  d->k = k;
  d->modulus_poly = std::move(modulus);
  d->radical = 0;
  d->pow_p.resize(k);
  std::uint64_t pw = 1;
  for (unsigned i = 0; i < k; ++i) {
    d->pow_p[i] = pw;
    pw *= p;
  }
  if (q <= kTableFieldOrder) {
    // filled off to the side: gf_add reads the table once it is non-empty
    std::vector<std::uint32_t> add(q * q), mul(q * q);
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b) {
        add[a * q + b] = static_cast<std::uint32_t>(gf_add(*d, a, b));
        mul[a * q + b] = static_cast<std::uint32_t>(gf_mul_slow(*d, a, b));
      }
    d->add_table = std::move(add);
    d->mul_table = std::move(mul);
  }
  return Ring(std::move(d));
}

Ring Ring::galois_field(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw DomainError("GF requires a prime characteristic, got " + std::to_string(p));
  if (k == 1) return galois_field(p, 1, {p - smallest_primitive_root(p) % p, 1});
  const auto& table = conway_table();
  if (auto it = table.find({p, k}); it != table.end()) return galois_field(p, k, it->second);
  // Outside the table: the smallest monic irreducible in code order.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (count > kMaxFieldOrder / p) throw DomainError("GF order too large");
    count *= p;
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    Digits f(k + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return galois_field(p, k, f);
  }
  throw DomainError("no irreducible polynomial found");
}

RingKind Ring::kind() const { return data_->kind; }

std::uint64_t Ring::modulus() const {
  if (kind() == RingKind::Integers) throw DomainError("Z has no modulus");
  return data_->m;
}

std::uint64_t Ring::characteristic() const { return kind() == RingKind::Integers ? 0 : data_->p; }

unsigned Ring::degree() const { return data_->k; }

const std::vector<std::uint64_t>& Ring::modulus_poly() const { return data_->modulus_poly; }

std::optional<std::uint64_t> Ring::order() const {
  if (kind() == RingKind::Integers) return std::nullopt;
  return data_->m;
}

bool Ring::is_field() const {
  switch (kind()) {
    case RingKind::Integers: return false;
    case RingKind::IntegersMod: return is_prime(data_->m);
    case RingKind::GaloisField: return true;
  }
  return false;
}

bool Ring::is_integral_domain() const { return kind() == RingKind::Integers || is_field(); }

RingElement Ring::zero() const { return RingElement(*this, std::int64_t{0}); }

RingElement Ring::one() const { return RingElement(*this, std::int64_t{1}); }

RingElement Ring::from_integer(const BigInt& v) const {
  if (kind() == RingKind::Integers) {
    RingElement e(*this, v);
    e.normalize_big();
    return e;
  }
  const BigInt modv = data_->p;
  BigInt r = v % modv;
  if (r < 0) r += modv;
  return RingElement(*this, static_cast<std::int64_t>(r.get_ui()));
}

RingElement Ring::from_integer(std::int64_t v) const {
  if (kind() == RingKind::Integers) return RingElement(*this, v);
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return RingElement(*this, r);
}

RingElement Ring::from_coefficients(const std::vector<std::uint64_t>& coeffs) const {
  if (kind() != RingKind::GaloisField) throw DomainError("coefficient vectors only describe GF elements");
  if (coeffs.size() > data_->k) throw DomainError("GF element has more than k coefficients");
  Digits digits(data_->k, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) digits[i] = coeffs[i] % data_->p;
  return RingElement(*this, static_cast<std::int64_t>(encode(*data_, digits)));
}

RingElement Ring::from_code(std::uint64_t code) const {
  if (kind() == RingKind::Integers) throw DomainError("infinite ring");
  if (code >= data_->m) throw DomainError("element code out of range");
  return RingElement(*this, static_cast<std::int64_t>(code));
}

std::string Ring::name() const {
  switch (kind()) {
    case RingKind::Integers: return "Z";
    case RingKind::IntegersMod: return "Z_" + std::to_string(data_->m);
    case RingKind::GaloisField:
      return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->k) + ")";
  }
  return "?";
}

bool operator==(const Ring& a, const Ring& b) {
  return a.data_ == b.data_ || a.data_->same_as(*b.data_);
}

// ---------------------------------------------------------------------------
// RingElement

void RingElement::normalize_big() {
  if (auto* big = std::get_if<BigInt>(&value_)) {
    if (big->fits_slong_p()) value_ = static_cast<std::int64_t>(big->get_si());
  }
}

namespace {
BigInt as_big(const std::variant<std::int64_t, BigInt>& v) {
  if (auto* s = std::get_if<std::int64_t>(&v)) return BigInt(static_cast<long>(*s));
  return std::get<BigInt>(v);
}
}  // namespace

bool RingElement::is_zero() const {
  if (auto* s = std::get_if<std::int64_t>(&value_)) return *s == 0;
  return false;
}

bool RingElement::is_one() const {
  if (auto* s = std::get_if<std::int64_t>(&value_)) return *s == 1;
  return false;
}

BigInt RingElement::integer_value() const {
  if (ring_.kind() != RingKind::Integers) throw DomainError("integer_value on a non-Z element");
  return as_big(value_);
}

std::uint64_t RingElement::residue() const {
  if (ring_.kind() != RingKind::IntegersMod) throw DomainError("residue on a non-Z_m element");
  return static_cast<std::uint64_t>(small());
}

std::vector<std::uint64_t> RingElement::coefficients() const {
  if (ring_.kind() != RingKind::GaloisField) throw DomainError("coefficients on a non-GF element");
  return decode(*ring_.data_, static_cast<std::uint64_t>(small()));
}

std::uint64_t RingElement::code() const {
  if (ring_.kind() == RingKind::Integers) throw DomainError("infinite ring");
  return static_cast<std::uint64_t>(small());
}

RingElement& RingElement::operator+=(const RingElement& o) {
  require_same_ring(ring_, o.ring_);
  const auto& d = *ring_.data_;
  switch (d.kind) {
    case RingKind::Integers: {
      std::int64_t r;
      if (value_.index() == 0 && o.value_.index() == 0 && !__builtin_add_overflow(small(), o.small(), &r)) {
        value_ = r;
      } else {
        value_ = BigInt(as_big(value_) + as_big(o.value_));
        normalize_big();
      }
      break;
    }
    case RingKind::IntegersMod: {
      const auto a = static_cast<std::uint64_t>(small());
      const auto b = static_cast<std::uint64_t>(o.small());
      const std::uint64_t s = a >= d.m - b ? a - (d.m - b) : a + b;
      value_ = static_cast<std::int64_t>(s);
      break;
    }
    case RingKind::GaloisField:
      value_ = static_cast<std::int64_t>(
          gf_add(d, static_cast<std::uint64_t>(small()), static_cast<std::uint64_t>(o.small())));
      break;
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) { return *this += -o; }

RingElement& RingElement::operator*=(const RingElement& o) {
  require_same_ring(ring_, o.ring_);
  const auto& d = *ring_.data_;
  switch (d.kind) {
    case RingKind::Integers: {
      std::int64_t r;
      if (value_.index() == 0 && o.value_.index() == 0 && !__builtin_mul_overflow(small(), o.small(), &r)) {
        value_ = r;
      } else {
        value_ = BigInt(as_big(value_) * as_big(o.value_));
        normalize_big();
      }
      break;
    }
    case RingKind::IntegersMod:
      value_ = static_cast<std::int64_t>(
          mulmod(static_cast<std::uint64_t>(small()), static_cast<std::uint64_t>(o.small()), d.m));
      break;
    case RingKind::GaloisField:
      value_ = static_cast<std::int64_t>(
          gf_mul(d, static_cast<std::uint64_t>(small()), static_cast<std::uint64_t>(o.small())));
      break;
  }
  return *this;
}

RingElement operator-(const RingElement& a) {
  const auto& d = *a.ring_.data_;
  switch (d.kind) {
    case RingKind::Integers: {
      if (a.value_.index() == 0 && a.small() != std::numeric_limits<std::int64_t>::min())
        return RingElement(a.ring_, -a.small());
      RingElement r(a.ring_, BigInt(-as_big(a.value_)));
      r.normalize_big();
      return r;
    }
    case RingKind::IntegersMod: {
      const auto v = static_cast<std::uint64_t>(a.small());
      return RingElement(a.ring_, static_cast<std::int64_t>(v == 0 ? 0 : d.m - v));
    }
    case RingKind::GaloisField:
      return RingElement(a.ring_, static_cast<std::int64_t>(gf_neg(d, static_cast<std::uint64_t>(a.small()))));
  }
  return a;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.value_ == b.value_ && a.ring_ == b.ring_;
}

bool operator<(const RingElement& a, const RingElement& b) {
  if (a.value_.index() == 0 && b.value_.index() == 0) return a.small() < b.small();
  return as_big(a.value_) < as_big(b.value_);
}

std::string RingElement::to_string() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return as_big(value_).get_str();
    case RingKind::IntegersMod: return std::to_string(small());
    case RingKind::GaloisField: {
      const auto c = coefficients();
      std::string out;
      for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
        if (i >= 1) out += "t";
        if (i >= 2) out += "^" + std::to_string(i);
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// free operations

RingElement ring_add(const RingElement& a, const RingElement& b) { return a + b; }
RingElement ring_mul(const RingElement& a, const RingElement& b) { return a * b; }
RingElement ring_neg(const RingElement& a) { return -a; }

RingElement ring_pow(const RingElement& a, std::uint64_t e) {
  RingElement result = a.ring().one();
  RingElement base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<RingElement> try_invert(const RingElement& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::Integers: {
      if (a.is_one()) return a;
      if (a == -r.one()) return a;
      return std::nullopt;
    }
    case RingKind::IntegersMod: {
      const auto m = static_cast<std::int64_t>(r.modulus());
      // Extended Euclid on (a, m) in 128-bit to avoid overflow of the coefficients.
      __int128 old_r = static_cast<__int128>(a.residue()), cur_r = m;
      __int128 old_s = 1, cur_s = 0;
      while (cur_r != 0) {
        const __int128 q = old_r / cur_r;
        std::swap(old_r, cur_r);
        cur_r -= q * old_r;
        std::swap(old_s, cur_s);
        cur_s -= q * old_s;
      }
      if (old_r != 1) return std::nullopt;
      __int128 inv = old_s % m;
      if (inv < 0) inv += m;
      return r.from_code(static_cast<std::uint64_t>(inv));
    }
    case RingKind::GaloisField: {
      if (a.is_zero()) return std::nullopt;
      return ring_pow(a, r.modulus() - 2);
    }
  }
  return std::nullopt;
}

bool is_zero_divisor(const RingElement& a) {
  if (a.is_zero()) return false;
  if (a.ring().kind() != RingKind::IntegersMod) return false;
  return std::gcd(a.residue(), a.ring().modulus()) > 1;
}

bool is_nilpotent(const RingElement& a) {
  if (a.ring().kind() != RingKind::IntegersMod) return a.is_zero();
  std::uint64_t rad = 1;
  for (auto f : prime_factors(a.ring().modulus())) rad *= f;
  return a.residue() % rad == 0;
}

std::optional<RingElement> divide_exact(const RingElement& b, const RingElement& a) {
  require_same_ring(a.ring(), b.ring());
  const Ring& r = a.ring();
  if (r.kind() == RingKind::Integers) {
    if (a.is_zero()) return b.is_zero() ? std::optional<RingElement>(r.zero()) : std::nullopt;
    const BigInt av = a.integer_value();
    const BigInt bv = b.integer_value();
    if (bv % av != 0) return std::nullopt;
    return r.from_integer(BigInt(bv / av));
  }
  if (auto inv = try_invert(a)) return b * *inv;
  for (std::uint64_t c = 0; c < r.modulus(); ++c) {
    RingElement candidate = r.from_code(c);
    if (a * candidate == b) return candidate;
  }
  return std::nullopt;
}

std::vector<RingElement> enumerate_elements(const Ring& ring) {
  if (!ring.is_finite()) throw DomainError("infinite ring");
  std::vector<RingElement> out;
  out.reserve(ring.modulus());
  for (std::uint64_t c = 0; c < ring.modulus(); ++c) out.push_back(ring.from_code(c));
  return out;
}

void ScanLimits::require_scan(long double points, const std::string& what) const {
  if (!force && points > static_cast<long double>(max_scan_points)) {
    throw DomainError(what + ": exhaustive scan of " + std::to_string(static_cast<double>(points)) +
                      " points exceeds the limit (use --force)");
  }
}

}  // namespace nullkit
