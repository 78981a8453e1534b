#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

// Frozen hand-computed values for the brute-force references; everything
// else is checked against these oracles.

using namespace nullkit;
using namespace nullkit::testing;

TEST(Oracle, NAndPsi) {
  const Ring z = Ring::integers();
  const Grid g = grid(z, {{0, 1, 2}, {3, 5}});
  // (0-1)(0-2) * (5-3)
  EXPECT_EQ(oracle::n_value(g, pt(z, {0, 5})), el(z, 4));
  EXPECT_EQ(oracle::n_value(g, pt(z, {1, 3})), el(z, 2));
  // L = (X1-1)(X1-2)(X2-5) = X1^2 X2 - 3 X1 X2 + 2 X2 - 5 X1^2 + 15 X1 - 10
  EXPECT_EQ(oracle::psi_value(g, {2, 1}, pt(z, {0, 3})), el(z, 1));
  EXPECT_EQ(oracle::psi_value(g, {1, 1}, pt(z, {0, 3})), el(z, -3));
  EXPECT_EQ(oracle::psi_value(g, {1, 0}, pt(z, {0, 3})), el(z, 15));
  EXPECT_EQ(oracle::psi_value(g, {0, 0}, pt(z, {0, 3})), el(z, -10));
}

TEST(Oracle, Values) {
  const Ring z4 = Ring::integers_mod(4);
  const Grid all = grid(z4, {{0, 1, 2, 3}});
  const auto p = poly(z4, 1, {{{3}, 1}, {{1}, 1}, {{0}, 2}});
  EXPECT_EQ(oracle::values(p, all), (std::vector<RingElement>{el(z4, 2), z4.zero(), z4.zero(), z4.zero()}));
  EXPECT_EQ(oracle::nonzero_count(p, all), 1u);
  EXPECT_FALSE(oracle::vanishes(p, all));
  EXPECT_TRUE(oracle::vanishes(poly(z4, 1, {{{2}, 2}, {{1}, 2}}), all));
}

TEST(Oracle, DLeading) {
  const Ring z = Ring::integers();
  EXPECT_TRUE(oracle::d_leading(poly(z, 2, {{{2, 1}, 1}, {{3, 0}, 1}}), {2, 1}, {2, 1}));
  EXPECT_FALSE(oracle::d_leading(poly(z, 2, {{{3, 0}, 1}}), {1, 0}, {1, 1}));
  EXPECT_FALSE(oracle::d_leading(poly(z, 1, {{{3}, 1}}), {1}, {1}));
}

TEST(Oracle, Permanents) {
  const Ring z = Ring::integers();
  auto m = [&](std::vector<std::vector<std::int64_t>> rows) {
    std::vector<std::vector<RingElement>> out;
    for (auto& r : rows) {
      out.emplace_back();
      for (auto v : r) out.back().push_back(el(z, v));
    }
    return RingMatrix(z, out);
  };
  EXPECT_EQ(oracle::permanent(m({{1, 2}, {3, 4}})), el(z, 10));
  EXPECT_EQ(oracle::permanent(m({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), el(z, 450));
  EXPECT_EQ(oracle::per_delta_all_maps(m({{1, 2}, {3, 4}}), {2, 0}), el(z, 3));
  EXPECT_EQ(oracle::per_delta_all_maps(m({{1, 2}, {3, 4}}), {0, 2}), el(z, 8));
  EXPECT_EQ(oracle::per_delta_all_maps(m({{1, 2}, {3, 4}}), {1, 0}), z.zero());
  EXPECT_EQ(oracle::per_delta_all_maps(RingMatrix(z, {}, 2), {0, 0}), z.one());
}

TEST(Oracle, Padic) {
  EXPECT_EQ(oracle::padic_valuation_sum(4, 2, 2), 1);
  EXPECT_EQ(oracle::padic_valuation_sum(5, 2, 2), 3);
  EXPECT_EQ(oracle::padic_valuation_sum(-5, 2, 2), 4);
  EXPECT_EQ(oracle::padic_valuation_sum(3, 3, 1), 0);
  EXPECT_EQ(oracle::padic_valuation_sum(2, 3, 1), -1);
  // (p^k - 1)! for y = 0: v_2(7!) = 4
  EXPECT_EQ(oracle::padic_valuation_sum(0, 2, 3), 4);
}
