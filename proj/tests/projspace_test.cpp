#include <gtest/gtest.h>

#include <functional>

#include "wittforge/projspace.hpp"

namespace wittforge {
namespace {

/// Number of exponent vectors of length n summing to m with every entry in [lo, hi].
std::uint64_t count_monomials(int n, int m, int lo, int hi) {
  std::function<std::uint64_t(int, int)> rec = [&](int left, int sum) -> std::uint64_t {
    if (left == 0) return sum == m ? 1 : 0;
    std::uint64_t c = 0;
    for (int a = lo; a <= hi; ++a) c += rec(left - 1, sum + a);
    return c;
  };
  return rec(n, 0);
}

TEST(ProjSpaceTest, MatchesMonomialCounting) {
  for (int r = 1; r <= 3; ++r)
    for (int m = -8; m <= 6; ++m) {
      const CohomologyReport c = cohomology(r, m, Q());
      // h^0: monomials with nonnegative exponents; h^r: all exponents <= -1
      EXPECT_EQ(c.dims[0], count_monomials(r + 1, m, 0, std::max(m, 0))) << r << " " << m;
      EXPECT_EQ(c.dims[r], count_monomials(r + 1, m, std::min(m, -1), -1)) << r << " " << m;
      for (int i = 1; i < r; ++i) EXPECT_EQ(c.dims[i], 0u);
      EXPECT_TRUE(c.agrees);
    }
}

TEST(ProjSpaceTest, SerreDuality) {
  for (int r = 1; r <= 4; ++r)
    for (int m = -10; m <= 6; ++m) {
      const auto a = cohomology(r, m, Fp(3)), b = cohomology(r, -m - r - 1, Fp(3));
      for (int i = 0; i <= r; ++i) EXPECT_EQ(a.dims[i], b.dims[r - i]);
    }
}

TEST(ProjSpaceTest, VanishingWindowOverSeveralFields) {
  for (FieldRef f : {Q(), Fp(3), Fp(7)})
    for (int r = 1; r <= 4; ++r)
      for (int m = -r; m <= -1; ++m) EXPECT_TRUE(cohomology(r, m, f).all_zero()) << r << " " << m;
}

TEST(ProjSpaceTest, WitnessMonomials) {
  const auto c = cohomology(2, -3, Q());
  EXPECT_EQ(c.dims, (std::vector<std::uint64_t>{0, 0, 1}));
  ASSERT_EQ(c.witnesses.at(2).size(), 1u);
  EXPECT_EQ(monomial_string(c.witnesses.at(2)[0]), "x^-1*y^-1*z^-1");
  const auto h0 = cohomology(1, 2, Q());
  EXPECT_EQ(h0.dims[0], 3u);
  EXPECT_EQ(h0.witnesses.at(0).size(), 3u);
}

TEST(ProjSpaceTest, PatternCohomologyIsConcentrated) {
  const auto c = cohomology(3, 0, Q());
  const unsigned full = 0b1111;
  for (const auto& [pattern, h] : c.pattern_cohomology) {
    std::size_t total = 0;
    for (auto x : h) total += x;
    if (pattern == 0 || pattern == full) EXPECT_EQ(total, 1u);
    else EXPECT_EQ(total, 0u);
  }
}

TEST(ProjSpaceTest, PhiR) {
  for (int r : {1, 3, 5}) {
    const auto c = pushforward_phi_r(r, Q());
    EXPECT_TRUE(c.pushforward_zero);
    EXPECT_EQ(2 * c.twist, canonical_twist(r));
  }
  try {
    pushforward_phi_r(2, Q());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParityError);
  }
}

TEST(ProjSpaceTest, Bounds) {
  EXPECT_THROW(cohomology(7, 0, Q()), Error);
  EXPECT_THROW(cohomology(2, 25, Q()), Error);
  EXPECT_THROW(cohomology(0, 0, Q()), Error);
}

}  // namespace
}  // namespace wittforge
