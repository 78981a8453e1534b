#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nullkit/coefficient.hpp"
#include "nullkit/errors.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace nullkit;
using namespace nullkit::testing;

TEST(Coefficient, DLeading) {
  const Ring z = Ring::integers();
  const auto p = poly(z, 2, {{{2, 1}, 1}, {{3, 0}, 1}});
  EXPECT_TRUE(is_d_leading(p, {2, 1}, {2, 1}).is_leading);
  const auto r = is_d_leading(poly(z, 2, {{{3, 0}, 1}}), {1, 0}, {1, 1});
  EXPECT_FALSE(r.is_leading);
  EXPECT_EQ(r.witness, (MultiIndex{3, 0}));
  // deg P <= sum d makes d leading
  EXPECT_TRUE(is_d_leading(poly(z, 2, {{{2, 0}, 1}, {{1, 1}, 5}, {{0, 1}, 1}}), {1, 1}, {1, 1}).is_leading);
}

TEST(Coefficient, General) {
  const Ring z = Ring::integers();
  const auto p = poly(z, 2, {{{2, 1}, 1}, {{3, 0}, 1}});
  EXPECT_EQ(coeff_formula_general(grid(z, {{0, 1, 2}, {0, 1}}), p, {2, 1}), z.one());
  EXPECT_EQ(coeff_formula_general(cube(z, 2), MultiPoly(z, 2), {1, 0}), z.zero());
  EXPECT_EQ(coeff_formula_general(cube(z, 2), poly(z, 2, {{{1, 1}, 1}}), {1, 1}), z.one());
  EXPECT_THROW(coeff_formula_general(cube(z, 2), poly(z, 2, {{{3, 0}, 1}}), {1, 0}), DomainError);
}

TEST(Coefficient, Main) {
  const Ring z = Ring::integers();
  EXPECT_EQ(coeff_formula_main(cube(z, 2), poly(z, 2, {{{1, 1}, 1}})), z.one());
  EXPECT_EQ(coeff_formula_main(cube(z, 2), poly(z, 2, {{{1, 0}, 4}, {{0, 0}, 1}})), z.zero());
  try {
    coeff_formula_main(cube(z, 2), poly(z, 2, {{{2, 1}, 1}}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "degree exceeds Σd");
  }
  // (X1+X2)(X1+X2-1) on {0,1}^2: binom(2,1) = 2
  const Ring z5 = Ring::integers_mod(5);
  const auto s = MultiPoly::variable(z5, 2, 0) + MultiPoly::variable(z5, 2, 1);
  MultiPoly prod = MultiPoly::constant(z5.one(), 2);
  for (std::int64_t c : {0, 1}) prod = prod * (s - MultiPoly::constant(el(z5, c), 2));
  EXPECT_EQ(coeff_formula_main(grid(z5, {{0, 1}, {0, 1}}), prod), el(z5, 2));
}

TEST(Coefficient, NonzeroExists) {
  const Ring z = Ring::integers();
  EXPECT_EQ(nonzero_exists(cube(z, 2), poly(z, 2, {{{1, 1}, 1}})), pt(z, {1, 1}));
  const Ring z5 = Ring::integers_mod(5);
  const auto p = poly(z5, 2, {{{1, 1}, 1}, {{1, 0}, -1}, {{0, 1}, -1}, {{0, 0}, 1}});
  EXPECT_THROW(nonzero_exists(grid(z5, {{0, 1, 2}, {0, 1, 2}}), p), DomainError);
}

TEST(Coefficient, SecondNonzero) {
  const Ring z = Ring::integers();
  const auto p = poly(z, 2, {{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, -1}});
  // P(1,0) = 0, so the listed starting point is rejected
  EXPECT_THROW(second_nonzero(cube(z, 2), p, pt(z, {1, 0})), DomainError);
  EXPECT_EQ(second_nonzero(cube(z, 2), p, pt(z, {0, 0})), pt(z, {1, 1}));
  EXPECT_EQ(second_nonzero(cube(z, 1), poly(z, 1, {{{0}, 1}}), pt(z, {0})), pt(z, {1}));
  const Ring z4 = Ring::integers_mod(4);
  const auto q = poly(z4, 1, {{{1}, 2}, {{0}, 2}});
  EXPECT_THROW(second_nonzero(grid(z4, {{0, 1, 3}}), q, pt(z4, {0})), DomainError);
  EXPECT_THROW(second_nonzero(cube(z, 2), poly(z, 2, {{{1, 1}, 1}}), pt(z, {1, 1})), DomainError);
}

TEST(Coefficient, CwVariant) {
  const Ring f3 = Ring::integers_mod(3);
  const auto s = poly(f3, 3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
  EXPECT_EQ(cw_variant_count(cube(f3, 3), {s}), 2u);
  EXPECT_EQ(cw_variant_count(cube(f3, 3), {}), 8u);
  EXPECT_THROW(cw_variant_count(cube(f3, 3), {s, s}), DomainError);
  EXPECT_THROW(cw_variant_count(cube(Ring::integers(), 3), {}), DomainError);
}

TEST(CoefficientProperty, VanishingTopCoefficientNeverSingleNonzero) {
  gen::Generator g(51);
  int checked = 0;
  for (int i = 0; i < 600; ++i) {
    const Ring r = g.ring(gen::all_families()[i % 4]);
    const Grid grid = g.integral_grid(r, 3, 4, 128);
    if (grid.degree_sum() == 0) continue;
    MultiPoly p = g.poly(r, grid.d(), grid.degree_sum());
    p.add_term(grid.d(), -coefficient(p, grid.d()));
    if (i % 5 == 0) {
      // a Lagrange polynomial minus its top term still has P_d = 0
      p = lagrange_polynomial(grid, grid.point(g.below(grid.size())));
      p.add_term(grid.d(), -r.one());
    }
    ASSERT_NE(oracle::nonzero_count(p, grid), 1u) << p.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 400);
}

TEST(CoefficientProperty, BoundedDegreesAreLeading) {
  gen::Generator g(52);
  for (int i = 0; i < 300; ++i) {
    const Ring r = g.ring(gen::all_families()[i % 4]);
    const MultiIndex d = g.below_index(MultiIndex(std::vector<unsigned>(3, 4)));
    const MultiPoly p = g.poly(r, d, d.total());
    const MultiIndex e = g.below_index(d);
    ASSERT_TRUE(is_d_leading(p, e, d).is_leading);
    ASSERT_TRUE(oracle::d_leading(p, e, d));
  }
}
