#include <gtest/gtest.h>

#include <random>

#include "wittforge/homalg.hpp"
#include "wittforge/verify.hpp"

namespace wittforge {
namespace {

/// R --f--> R in degrees 1 -> 0.
ChainComplex two_term(const Ring& r, const std::string& f) {
  PMatrix d = pzeros(r, 1, 1);
  d(0, 0) = parse_poly(r, f);
  return ChainComplex(r, {{0, 1}, {1, 1}}, {{1, d}});
}

PMatrix pm(const Ring& r, const std::vector<std::vector<std::string>>& rows) {
  PMatrix m = pzeros(r, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_poly(r, rows[i][j]);
  return m;
}

const Ring kXY{Q(), {"x", "y"}};

TEST(HomalgTest, RejectsNonComplexes) {
  const Ring r{Q(), {}};
  try {
    ChainComplex(r, {{0, 1}, {1, 1}, {2, 1}}, {{1, pm(r, {{"1"}})}, {2, pm(r, {{"1"}})}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  const ChainComplex a = two_term(kXY, "x");
  try {
    ChainMap(a, a, {{0, pm(kXY, {{"1"}})}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAChainMap);
  }
}

TEST(HomalgTest, TensorSignsByHand) {
  // d(a1 (x) b1) = x a0 (x) b1 - y a1 (x) b0; degree-1 basis (a0 (x) b1, a1 (x) b0)
  const ChainComplex t = tensor(two_term(kXY, "x"), two_term(kXY, "y"));
  EXPECT_EQ(t.rank(1), 2u);
  EXPECT_EQ(t.d(2), pm(kXY, {{"x"}, {"-y"}}));
  EXPECT_EQ(t.d(1), pm(kXY, {{"y", "x"}}));
}

TEST(HomalgTest, HomSignsByHand) {
  // Hom(A, R)_0 = Hom(A_0, R), Hom(A, R)_{-1} = Hom(A_1, R); D(f) = -f o d_A
  const ChainComplex h = hom_complex(two_term(kXY, "x"), ChainComplex::line(kXY, 0));
  EXPECT_EQ(h.rank(0), 1u);
  EXPECT_EQ(h.rank(-1), 1u);
  EXPECT_EQ(h.d(0), pm(kXY, {{"-x"}}));
  // Hom(R, A) has the ranks of A and differential (-1)^n d_A in degree n
  const ChainComplex a = two_term(kXY, "x + y");
  const ChainComplex ha = hom_complex(ChainComplex::line(kXY, 0), a);
  EXPECT_EQ(ha.rank(0), 1u);
  EXPECT_EQ(ha.rank(1), 1u);
  EXPECT_EQ(ha.d(1), pm(kXY, {{"-x - y"}}));
  EXPECT_EQ(hom_complex(ChainComplex::line(kXY, 0), shift(a, 1)).d(2), pm(kXY, {{"-x - y"}}));
}

TEST(HomalgTest, ShiftSign) {
  const ChainComplex a = two_term(kXY, "x");
  const ChainComplex s = shift(a, 1);
  EXPECT_EQ(s.rank(2), 1u);
  EXPECT_EQ(s.rank(1), 1u);
  EXPECT_EQ(s.d(2), pm(kXY, {{"-x"}}));
  EXPECT_EQ(shift(a, 2).d(3), pm(kXY, {{"x"}}));
}

TEST(HomalgTest, ConeOfIdentityIsAcyclic) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const ChainComplex a = random_field_complex(Fp(7), rng);
    for (const auto& [n, h] : homology_dims(cone(identity_map(a)).complex)) EXPECT_EQ(h, 0u);
    EXPECT_TRUE(is_quasi_isomorphism(identity_map(a)));
  }
}

TEST(HomalgTest, EulerCharacteristicMatchesHomology) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const ChainComplex a = random_field_complex(t % 2 ? Q() : Fp(5), rng);
    long chi_ranks = 0, chi_h = 0;
    for (const auto& [n, h] : homology_dims(a)) {
      const long s = n % 2 == 0 ? 1 : -1;
      chi_ranks += s * static_cast<long>(a.rank(n));
      chi_h += s * static_cast<long>(h);
    }
    EXPECT_EQ(chi_ranks, chi_h);
  }
}

TEST(HomalgTest, HomologyNeedsAField) {
  try {
    homology_dims(two_term(kXY, "x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAField);
  }
}

TEST(HomalgTest, TensorHomAdjunctionTriangles) {
  Rng rng(4);
  for (int t = 0; t < 15; ++t) {
    const ChainComplex a = random_field_complex(Q(), rng), b = random_field_complex(Q(), rng), c = random_field_complex(Q(), rng);
    if (a.total_rank() * b.total_rank() * b.total_rank() > 300 || b.total_rank() * c.total_rank() * b.total_rank() > 300) continue;
    const ChainMap first = compose(adjunction_counit(b, tensor(a, b)), tensor(adjunction_unit(a, b), identity_map(b)));
    EXPECT_TRUE(first == identity_map(tensor(a, b)));
    const ChainComplex h = hom_complex(b, c);
    const ChainMap second = compose(postcompose(b, adjunction_counit(b, c)), adjunction_unit(h, b));
    EXPECT_TRUE(second == identity_map(h));
  }
}

TEST(HomalgTest, MonoidalStructureIsoms) {
  const ChainComplex a = two_term(kXY, "x"), b = two_term(kXY, "y"), c = two_term(kXY, "x + y");
  EXPECT_TRUE(associator(a, b, c).is_degreewise_isomorphism());
  EXPECT_TRUE(left_unitor(a).is_degreewise_isomorphism());
  EXPECT_TRUE(right_unitor(a).is_degreewise_isomorphism());
}

TEST(HomalgTest, BidualIsAChainIsomorphism) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const ChainComplex a = t % 3 == 2 ? random_polynomial_complex(rng) : random_field_complex(Fp(3), rng);
    const DualityDatum dd{"K", t % 5 - 2};
    const ChainMap bid = bidual_map(a, dd);
    EXPECT_TRUE(bid.is_chain_map());
    EXPECT_TRUE(bid.is_degreewise_isomorphism());
    const ChainComplex da = dualize(a, dd);
    EXPECT_TRUE(compose(dualize(bid, dd), bidual_map(da, dd)) == identity_map(da));
  }
}

TEST(HomalgTest, GradedHomologyOfKoszulTwoVariables) {
  // Kos(x, y) resolves Q = R/(x, y): H_0 is 1-dimensional in internal degree 0 only
  const ChainComplex k = tensor(two_term(kXY, "x"), two_term(kXY, "y"));
  const auto h = graded_homology_dims(k, 5);
  for (const auto& [key, dim] : h) EXPECT_EQ(dim, (key.first == 0 && key.second == 0) ? 1u : 0u) << key.first << "," << key.second;
  // dimension of monomials of degree t in 2 variables is t + 1
  for (int t = 0; t < 6; ++t) EXPECT_EQ(monomials_of_degree(2, t).size(), static_cast<std::size_t>(t + 1));
  // (x, x) is not regular: H_1 appears
  const auto bad = graded_homology_dims(tensor(two_term(kXY, "x"), two_term(kXY, "x")), 3);
  std::size_t h1 = 0;
  for (const auto& [key, dim] : bad)
    if (key.first == 1) h1 += dim;
  EXPECT_GT(h1, 0u);
}

TEST(HomalgTest, GradingInferenceRejectsInhomogeneousEntries) {
  try {
    graded_homology_dims(two_term(kXY, "x + 1"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHomogeneous);
  }
}

TEST(HomalgTest, TotalRankCapRaises) {
  const Ring r{Q(), {}};
  try {
    ChainComplex(r, {{0, 5000}}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundsExceeded);
  }
}

}  // namespace
}  // namespace wittforge
