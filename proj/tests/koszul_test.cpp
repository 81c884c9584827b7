#include <gtest/gtest.h>

#include "wittforge/koszul.hpp"
#include "wittforge/projspace.hpp"

namespace wittforge {
namespace {

PMatrix pm(const Ring& r, const std::vector<std::vector<std::string>>& rows) {
  PMatrix m = pzeros(r, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_poly(r, rows[i][j]);
  return m;
}

KoszulDatum datum(const std::vector<std::string>& vars, const std::vector<std::string>& section) {
  const Ring r{Q(), vars};
  std::vector<Poly> s;
  for (const auto& p : section) s.push_back(parse_poly(r, p));
  return KoszulDatum(r, s);
}

TEST(KoszulTest, SubsetsAreLexicographic) {
  const auto s = subsets(3, 2);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], (Subset{0, 1}));
  EXPECT_EQ(s[1], (Subset{0, 2}));
  EXPECT_EQ(s[2], (Subset{1, 2}));
  EXPECT_EQ(subset_index(4, {1, 3}), 4u);
  EXPECT_EQ(shuffle_sign({1}, {0}), -1);
  EXPECT_EQ(shuffle_sign({0, 2}, {1}), -1);
  EXPECT_EQ(shuffle_sign({2}, {0, 1}), 1);
  EXPECT_EQ(shuffle_sign({1}, {1}), 0);
}

TEST(KoszulTest, ComplexByHand) {
  const KoszulDatum k = KoszulDatum::coordinates(Q(), 2);
  const ChainComplex c = koszul_complex(k);
  EXPECT_EQ(c.d(1), pm(k.ring, {{"x", "y"}}));
  // d(e_0 ^ e_1) = x e_1 - y e_0
  EXPECT_EQ(c.d(2), pm(k.ring, {{"-y"}, {"x"}}));
  for (int d = 1; d <= 4; ++d) {
    const ChainComplex kd = koszul_complex(KoszulDatum::coordinates(Q(), d));
    for (int i = 0; i <= d; ++i) EXPECT_EQ(kd.rank(i), binomial(d, i));
  }
}

TEST(KoszulTest, ThetaByHand) {
  // theta(e_I)(e_{I^c}) = (-1)^(sum of I counted from 1)
  const KoszulDatum k = KoszulDatum::coordinates(Q(), 2);
  const ChainMap t = theta_map(k);
  EXPECT_EQ(t.component(0), pm(k.ring, {{"1"}}));
  EXPECT_EQ(t.component(1), pm(k.ring, {{"0", "1"}, {"-1", "0"}}));
  EXPECT_EQ(t.component(2), pm(k.ring, {{"-1"}}));
}

TEST(KoszulTest, SymmetrySignsPerRank) {
  const int expected[] = {-1, -1, 1, 1};
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(koszul_form(KoszulDatum::coordinates(Q(), d)).symmetry_sign, expected[d - 1]) << d;
  // the sign depends only on d, not on the section
  EXPECT_EQ(koszul_form(datum({"x", "y"}, {"x^2", "x*y + y^2"})).symmetry_sign, -1);
  EXPECT_EQ(koszul_form(datum({"x", "y", "z"}, {"x", "y^3", "z + x"})).symmetry_sign, 1);
}

TEST(KoszulTest, XMapEqualsTheta) {
  for (int d = 1; d <= 3; ++d) {
    const KoszulDatum k = KoszulDatum::coordinates(Q(), d);
    EXPECT_TRUE(x_map(k) == theta_map(k)) << d;
  }
  const KoszulDatum k = datum({"x", "y"}, {"x^2", "y + x"});
  EXPECT_TRUE(x_map(k) == theta_map(k));
}

TEST(KoszulTest, DeltaIsUnitalAndSigmaDeltaPairsLikeTheta) {
  const KoszulDatum k = KoszulDatum::coordinates(Q(), 2);
  const ChainComplex kos = koszul_complex(k);
  // delta o (unit (x) id) = left unitor
  const ChainMap left = compose(delta_map(k), tensor(koszul_unit(k), identity_map(kos)));
  EXPECT_TRUE(left == left_unitor(kos));
  // sigma o delta on e_I (x) e_{I^c} is the shuffle sign, which is theta(e_I)(e_{I^c})
  const ChainMap pairing = compose(sigma_map(k), delta_map(k));
  const PMatrix top = pairing.component(2);
  // degree-2 basis of Kos (x) Kos: (e_{} (x) e_01), (e_0 (x) e_0), (e_0 (x) e_1), (e_1 (x) e_0), (e_1 (x) e_1), (e_01 (x) e_{})
  EXPECT_EQ(top, pm(k.ring, {{"1", "0", "1", "-1", "0", "1"}}));
}

TEST(KoszulTest, MultiplicativityOfTheta) {
  for (int d = 2; d <= 4; ++d)
    for (int d1 = 1; d1 < d; ++d1) {
      const auto r = multiplicativity_check(KoszulDatum::coordinates(Q(), d), d1, d <= 3);
      EXPECT_TRUE(r.iso_is_chain_isomorphism);
      EXPECT_TRUE(r.theta_multiplicative) << d << " " << d1;
      if (d <= 3) {
        EXPECT_TRUE(r.xmap_multiplicative) << d << " " << d1;
      }
    }
}

TEST(KoszulTest, ExactnessOfRegularSections) {
  for (int d = 1; d <= 3; ++d) EXPECT_TRUE(koszul_exactness(KoszulDatum::coordinates(Q(), d), 5).exact);
  EXPECT_TRUE(koszul_exactness(datum({"x", "y"}, {"x", "y^2"}), 5).exact);
  const auto bad = koszul_exactness(datum({"x"}, {"x", "x"}), 4);
  EXPECT_FALSE(bad.exact);
  EXPECT_EQ(bad.witness, "H_1 in internal degree 1 has dimension 1");
  EXPECT_FALSE(koszul_exactness(datum({"x", "y", "z"}, {"x*y", "x*z"}), 4).exact);
  try {
    require_regular(datum({"x"}, {"x", "x"}), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegularSequence);
  }
}

TEST(KoszulTest, TraceDiagramHomotopy) {
  for (int d = 1; d <= 3; ++d) {
    const TraceDiagram t = trace_diagram(KoszulDatum::coordinates(Q(), d), 4);
    EXPECT_TRUE(t.homotopy_verified) << d;
    EXPECT_EQ(t.top.rank(-d), 1u);
    EXPECT_EQ(t.middle.rank(0), static_cast<std::size_t>(d));
  }
}

TEST(KoszulTest, SplitFactorization) {
  const auto one = split_factorization(KoszulDatum::coordinates(Q(), 1));
  EXPECT_TRUE(one.cone_identified);
  EXPECT_TRUE(one.multiplicativity.xmap_multiplicative);
  EXPECT_TRUE(one.lagrangian.isotropic);
  EXPECT_TRUE(one.lagrangian.exact);
  for (int d = 2; d <= 3; ++d) {
    const auto f = split_factorization(KoszulDatum::coordinates(Q(), d));
    EXPECT_TRUE(f.cone_identified);
    EXPECT_TRUE(f.multiplicativity.theta_multiplicative);
    EXPECT_TRUE(f.multiplicativity.xmap_multiplicative);
    EXPECT_TRUE(f.lagrangian.isotropic);
    EXPECT_TRUE(f.lagrangian.exact);
  }
}

TEST(KoszulTest, PushforwardOfUnitForm) {
  const auto p = pushforward_unit_form(KoszulDatum::coordinates(Fp(5), 2), 4);
  EXPECT_TRUE(p.regularity.exact);
  EXPECT_EQ(p.space.symmetry_sign, -1);
  EXPECT_THROW(pushforward_unit_form(datum({"x"}, {"x", "x"}), 4), Error);
}

}  // namespace
}  // namespace wittforge
