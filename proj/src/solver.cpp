#include "nullkit/solver.hpp"

#include <algorithm>
#include <set>

#include "nullkit/errors.hpp"
#include "nullkit/interpolate.hpp"

namespace nullkit {

Problem::Problem(std::vector<std::string> s, std::vector<std::string> st) : solutions(std::move(s)), trivial(std::move(st)) {
  const std::set<std::string> all(solutions.begin(), solutions.end());
  if (all.size() != solutions.size()) throw DomainError("duplicate solution token");
  for (const auto& t : trivial)
    if (!all.count(t)) throw DomainError("trivial solution " + t + " is not a solution");
}

Impression::Impression(Grid g, std::map<std::string, Point> c) : grid(std::move(g)), chi(std::move(c)) {
  if (!grid.is_integral()) throw DomainError("impression grid not integral (" + to_string(grid.classification()) + ")");
  for (const auto& [s, x] : chi) grid.locate(x);
}

namespace {

std::set<std::uint64_t> image(const std::vector<std::string>& tokens, const Impression& imp) {
  std::set<std::uint64_t> out;
  for (const auto& s : tokens) {
    auto it = imp.chi.find(s);
    if (it == imp.chi.end()) throw DomainError("chi is undefined at " + s);
    out.insert(imp.grid.locate(it->second));
  }
  return out;
}

// Nonzero candidate values, in enumeration order (1..5 over Z).
std::vector<RingElement> candidates(const Ring& ring) {
  std::vector<RingElement> out;
  if (!ring.is_finite()) {
    for (int v = 1; v <= 5; ++v) out.push_back(ring.from_integer(std::int64_t{v}));
    return out;
  }
  for (auto& c : enumerate_elements(ring))
    if (!c.is_zero()) out.push_back(std::move(c));
  return out;
}

// A nonzero t with base + t != 0.
RingElement pick_nonzero_shift(const Ring& ring, const RingElement& base) {
  for (const auto& t : candidates(ring))
    if (!(base + t).is_zero()) return t;
  throw DomainError("no algebraic solution under this impression");
}

RingElement count_in(const Ring& ring, std::size_t k) { return ring.from_integer(static_cast<std::int64_t>(k)); }

}  // namespace

bool is_describing(const MultiPoly& p, const Problem& prob, const Impression& imp) {
  const auto img = image(prob.solutions, imp);
  const auto values = evaluate_on_grid(p, imp.grid).values;
  std::set<std::uint64_t> support;
  for (std::uint64_t f = 0; f < values.size(); ++f)
    if (!values[f].is_zero()) support.insert(f);
  return support == img;
}

AlgebraicSolutionCheck check_algebraic_solution(const MultiPoly& p, const Problem& prob, const Impression& imp) {
  AlgebraicSolutionCheck r;
  r.describes = is_describing(p, prob, imp);
  const Degree deg = total_degree(p);
  const auto sigma = static_cast<Degree>(imp.grid.degree_sum());
  if (prob.trivial.empty()) {
    r.degree_ok = deg <= sigma;
    r.head_ok = !coefficient(p, imp.grid.d()).is_zero();
  } else {
    r.degree_ok = deg < sigma;
    const auto values = evaluate_on_grid(p, imp.grid).values;
    std::vector<std::pair<std::uint64_t, RingElement>> terms;
    for (auto f : image(prob.trivial, imp)) terms.emplace_back(f, values[f]);
    r.head_ok = !normalized_sum(imp.grid, terms).is_zero();
  }
  return r;
}

MultiPoly construct_algebraic_solution(const Problem& prob, const Impression& imp) {
  const Grid& grid = imp.grid;
  const Ring& ring = grid.ring();
  const auto s_img = image(prob.solutions, imp);
  const auto t_img = image(prob.trivial, imp);
  if (prob.solutions.size() == prob.trivial.size()) throw DomainError("no algebraic solution under this impression: S = St");
  const bool binary = ring.is_finite() && *ring.order() == 2;
  if (binary) {
    const std::size_t flag = prob.trivial.empty() ? 0 : 1;
    if ((s_img.size() + 1) % 2 != t_img.size() % 2 || t_img.size() % 2 != flag)
      throw DomainError("no algebraic solution under this impression: |R| = 2 parity condition fails");
  } else if (s_img == t_img) {
    throw DomainError("no algebraic solution under this impression: chi(S) = chi(St)");
  }

  std::vector<RingElement> y(grid.size(), ring.zero());
  if (t_img.empty()) {
    for (auto f : s_img) y[f] = ring.one();
    const RingElement rest = count_in(ring, s_img.size() - 1);
    if ((rest + ring.one()).is_zero()) y[*s_img.begin()] = pick_nonzero_shift(ring, rest);
  } else {
    for (auto f : t_img) y[f] = ring.one();
    RingElement sum_t = count_in(ring, t_img.size());
    if (sum_t.is_zero()) {
      const RingElement rest = count_in(ring, t_img.size() - 1);
      y[*t_img.begin()] = pick_nonzero_shift(ring, rest);
      sum_t = rest + y[*t_img.begin()];
    }
    std::vector<std::uint64_t> u;
    std::set_difference(s_img.begin(), s_img.end(), t_img.begin(), t_img.end(), std::back_inserter(u));
    for (auto f : u) y[f] = ring.one();
    // Make the total sum vanish while keeping every U value nonzero.
    RingElement u0 = -(sum_t + count_in(ring, u.size() - 1));
    if (u0.is_zero()) {
      if (u.size() < 2) throw DomainError("no algebraic solution under this impression");
      const RingElement base = sum_t + count_in(ring, u.size() - 2);
      y[u[1]] = pick_nonzero_shift(ring, base);
      u0 = -(base + y[u[1]]);
    }
    y[u[0]] = u0;
  }

  MultiPoly p = psi_transform(GridMap{grid, std::move(y)});
  if (!check_algebraic_solution(p, prob, imp).ok()) throw TheoremViolated("constructed polynomial is not an algebraic solution");
  return p;
}

}  // namespace nullkit
