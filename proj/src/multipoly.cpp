#include "nullkit/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "nullkit/errors.hpp"

namespace nullkit {

std::uint64_t MultiIndex::total() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j, unsigned power) {
  MultiIndex m(n);
  m[j] = power;
  return m;
}

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(exps_[j]);
  }
  return out + ")";
}

bool componentwise_le(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw DomainError("multiindex length mismatch");
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw DomainError("multiindex length mismatch");
  MultiIndex out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] + b[j];
  return out;
}

namespace {

void require_compatible(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.nvars() != b.nvars()) throw DomainError("polynomial variable count mismatch");
}

}  // namespace

MultiPoly MultiPoly::constant(const RingElement& c, std::size_t nvars) {
  MultiPoly p(c.ring(), nvars);
  p.add_term(MultiIndex(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(const Ring& ring, std::size_t nvars, std::size_t j) {
  if (j >= nvars) throw DomainError("variable index out of range");
  MultiPoly p(ring, nvars);
  p.add_term(MultiIndex::unit(nvars, j), ring.one());
  return p;
}

MultiPoly MultiPoly::monomial(const RingElement& c, const MultiIndex& exps) {
  MultiPoly p(c.ring(), exps.size());
  p.add_term(exps, c);
  return p;
}

void MultiPoly::add_term(const MultiIndex& delta, const RingElement& c) {
  if (delta.size() != nvars_) throw DomainError("multiindex length does not match nvars");
  require_same_ring(ring_, c.ring());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(delta, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_compatible(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_compatible(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_compatible(a, b);
  MultiPoly out(a.ring_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out(a.ring_, a.nvars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.nvars_ == b.nvars_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "X" + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += "(" + c.to_string() + ")*" + mono;
    }
  }
  return out;
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly poly_neg(const MultiPoly& a) { return -a; }

MultiPoly poly_scale(const MultiPoly& a, const RingElement& c) {
  require_same_ring(a.ring(), c.ring());
  MultiPoly out(a.ring(), a.nvars());
  for (const auto& [e, v] : a.terms()) out.add_term(e, v * c);
  return out;
}

MultiPoly poly_pow(const MultiPoly& a, std::uint64_t e) {
  MultiPoly result = MultiPoly::constant(a.ring().one(), a.nvars());
  MultiPoly base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

RingElement evaluate(const MultiPoly& p, std::span<const RingElement> x) {
  if (x.size() != p.nvars()) throw DomainError("point length does not match nvars");
  for (const auto& xi : x) require_same_ring(p.ring(), xi.ring());
  // Powers are cached per variable up to the partial degree.
  std::vector<std::vector<RingElement>> powers(p.nvars());
  for (std::size_t j = 0; j < p.nvars(); ++j) powers[j].push_back(p.ring().one());
  RingElement sum = p.ring().zero();
  for (const auto& [e, c] : p.terms()) {
    RingElement term = c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      auto& pw = powers[j];
      while (pw.size() <= e[j]) pw.push_back(pw.back() * x[j]);
      if (e[j] > 0) term *= pw[e[j]];
    }
    sum += term;
  }
  return sum;
}

RingElement coefficient(const MultiPoly& p, const MultiIndex& delta) {
  auto it = p.terms().find(delta);
  return it == p.terms().end() ? p.ring().zero() : it->second;
}

Degree total_degree(const MultiPoly& p) {
  Degree d = kMinusInfinity;
  for (const auto& [e, c] : p.terms()) d = std::max<Degree>(d, static_cast<Degree>(e.total()));
  return d;
}

Degree partial_degree(const MultiPoly& p, std::size_t j) {
  if (j >= p.nvars()) throw DomainError("variable index out of range");
  Degree d = kMinusInfinity;
  for (const auto& [e, c] : p.terms()) d = std::max<Degree>(d, e[j]);
  return d;
}

MultiPoly substitute_shift(const MultiPoly& p, std::size_t j, const RingElement& c) {
  if (j >= p.nvars()) throw DomainError("variable index out of range");
  require_same_ring(p.ring(), c.ring());
  MultiPoly out(p.ring(), p.nvars());
  for (const auto& [e, coef] : p.terms()) {
    // (X_j + c)^k = sum_i binom(k, i) c^(k-i) X_j^i
    const unsigned k = e[j];
    std::vector<RingElement> cpow{p.ring().one()};
    for (unsigned i = 1; i <= k; ++i) cpow.push_back(cpow.back() * c);
    for (unsigned i = 0; i <= k; ++i) {
      MultiIndex f = e;
      f[j] = i;
      out.add_term(f, coef * p.ring().from_integer(binomial(k, i)) * cpow[k - i]);
    }
  }
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace nullkit
