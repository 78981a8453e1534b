#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "nullkit/grid.hpp"
#include "nullkit/multipoly.hpp"
#include "nullkit/ring.hpp"

namespace nullkit::testing {

inline RingElement el(const Ring& r, std::int64_t v) { return r.from_integer(v); }

inline Point pt(const Ring& r, std::initializer_list<std::int64_t> xs) {
  Point out;
  for (auto x : xs) out.push_back(r.from_integer(x));
  return out;
}

struct Term {
  std::vector<unsigned> exp;
  std::int64_t coef;
};

inline MultiPoly poly(const Ring& r, std::size_t n, std::initializer_list<Term> terms) {
  MultiPoly p(r, n);
  for (const auto& t : terms) p.add_term(MultiIndex(t.exp), r.from_integer(t.coef));
  return p;
}

inline Grid grid(const Ring& r, std::initializer_list<std::initializer_list<std::int64_t>> axes) {
  std::vector<std::vector<RingElement>> out;
  for (const auto& a : axes) {
    out.emplace_back();
    for (auto x : a) out.back().push_back(r.from_integer(x));
  }
  return Grid(r, std::move(out));
}

inline Grid cube(const Ring& r, std::size_t n) {
  return Grid(r, std::vector<std::vector<RingElement>>(n, {r.zero(), r.one()}));
}

}  // namespace nullkit::testing
