#include <gtest/gtest.h>

#include <random>

#include "wittforge/catalog.hpp"
#include "wittforge/transfer.hpp"
#include "wittforge/verify.hpp"

namespace wittforge {
namespace {

/// Tr_{F_{p^k}/F_p}(x) = x + x^p + ... + x^(p^(k-1)).
Scalar frobenius_trace(const Scalar& x, std::int64_t p, int k) {
  Scalar sum = x.field()->zero(), y = x;
  for (int i = 0; i < k; ++i) {
    sum = sum + y;
    y = y.pow(static_cast<std::uint64_t>(p));
  }
  return sum;
}

TEST(TransferTest, TraceFormOfF9) {
  FieldRef f3 = Fp(3), f9 = parse_field("F9");
  const ExtensionDatum ext(f3, f9);
  EXPECT_EQ(trace_form(ext).gram(), from_ints(f3, {{2, 0}, {0, 1}}));
  const QuadraticForm t = scharlau_transfer(ext, QuadraticForm::diagonal(f9, {f9->generator()}));
  EXPECT_EQ(t.gram(), from_ints(f3, {{0, 1}, {1, 0}}));
  EXPECT_TRUE(witt_trivial(t));
}

TEST(TransferTest, TraceAgreesWithFrobeniusSum) {
  for (const char* name : {"F27", "F625", "F343"}) {
    FieldRef e = parse_field(name);
    FieldRef f = e->prime_field();
    const ExtensionDatum ext(f, e);
    const int k = e->degree_over(f);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 100; ++t) {
      const Scalar x = e->element(rng() % e->order());
      EXPECT_EQ(e->embed(trace(ext, x)), frobenius_trace(x, f->characteristic(), k)) << name;
    }
  }
  // relative trace in a tower: Tr_{F81/F9}(x) = x + x^9
  const auto tower = parse_tower("F81/F9/F3");
  const ExtensionDatum rel(tower[1], tower[2]);
  for (std::uint64_t i = 0; i < 81; ++i) {
    const Scalar x = tower[2]->element(i);
    EXPECT_EQ(tower[2]->embed(trace(rel, x)), x + x.pow(std::uint64_t{9}));
  }
}

TEST(TransferTest, TraceFormOfQuadraticNumberFields) {
  const ExtensionDatum e2(Q(), quadratic_field(2));
  EXPECT_EQ(trace_form(e2).gram(), from_ints(Q(), {{2, 0}, {0, 4}}));
  const ExtensionDatum e5(Q(), quadratic_field(5));
  EXPECT_EQ(trace_form(e5).gram(), from_ints(Q(), {{2, 0}, {0, 10}}));
}

TEST(TransferTest, CustomBasisGivesCongruentTraceForm) {
  FieldRef f3 = Fp(3), f9 = parse_field("F9");
  const Scalar t = f9->generator();
  const ExtensionDatum power(f3, f9), custom(f3, f9, {f9->one() + t, t});
  // columns of P are the coordinates of the custom basis in the power basis
  const FMatrix p = from_ints(f3, {{1, 0}, {1, 1}});
  EXPECT_EQ(trace_form(custom).gram(), trace_form(power).congruent(p).gram());
  EXPECT_THROW(ExtensionDatum(f3, f9, {t, t + t}), Error);
}

TEST(TransferTest, TransferDimensionAndTensorStructure) {
  std::mt19937_64 rng(4);
  FieldRef f5 = Fp(5), e = parse_field("F125");
  const ExtensionDatum ext(f5, e);
  for (int i = 0; i < 10; ++i) {
    const QuadraticForm q = random_form(e, 1 + rng() % 3, rng);
    EXPECT_EQ(scharlau_transfer(ext, q).dim(), 3 * q.dim());
  }
}

TEST(TransferTest, TriangleIdentitiesAndCartan) {
  std::mt19937_64 rng(6);
  for (const char* name : {"F9/F3", "F125/F5", "F81/F9", "F2401/F7"}) {
    const auto tower = parse_tower(name);
    const ExtensionDatum ext(tower.front(), tower.back());
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto t = check_triangle_identities(ext, m, 4 - m);
      EXPECT_TRUE(t.first) << name;
      EXPECT_TRUE(t.second) << name;
      EXPECT_TRUE(inverse(cartan_isomorphism(ext, m)).has_value());
      const QuadraticForm q = random_form(ext.top(), m, rng);
      EXPECT_EQ(cartan_isomorphism(ext, m) * pushed_adjoint(ext, q), scharlau_transfer(ext, q).gram());
    }
  }
}

TEST(TransferTest, CompositionBaseChangeProjection) {
  const auto tower = parse_tower("F81/F9/F3");
  FieldRef f81 = tower[2];
  EXPECT_TRUE(transfer_compose_check(tower[0], tower[1], f81, QuadraticForm::diagonal(f81, std::vector<long>{1})).equal);
  EXPECT_TRUE(transfer_compose_check(tower[0], tower[1], f81, QuadraticForm::diagonal(f81, {f81->generator(), f81->one()})).equal);

  FieldRef f9 = parse_field("F9"), f27 = parse_field("F27");
  EXPECT_TRUE(base_change_check(f27, f9, QuadraticForm::diagonal(f27, std::vector<long>{1})).equal);
  EXPECT_TRUE(base_change_check(f9, f9, QuadraticForm::diagonal(f9, {f9->generator()})).equal);

  const ExtensionDatum ext(Fp(5), parse_field("F25"));
  const QuadraticForm x = QuadraticForm::diagonal(ext.top(), {ext.top()->generator()});
  const QuadraticForm y = QuadraticForm::diagonal(Fp(5), std::vector<long>{1, 2});
  EXPECT_TRUE(projection_formula_check(ext, x, y).equal);

  const ExtensionDatum q2(Q(), quadratic_field(2));
  EXPECT_TRUE(projection_formula_check(q2, QuadraticForm::diagonal(q2.top(), {q2.top()->generator()}),
                                       QuadraticForm::diagonal(Q(), std::vector<long>{1, -3}))
                  .equal);
}

TEST(TransferTest, SplitTensorProductFactors) {
  FieldRef f9 = parse_field("F9"), f27 = parse_field("F27");
  const auto two = split_tensor_product(f9, f9);
  ASSERT_EQ(two.size(), 2u);
  for (const auto& s : two) {
    EXPECT_EQ(s.field, f9);
    EXPECT_TRUE((s.root * s.root + f9->one()).is_zero());
  }
  const auto one = split_tensor_product(f27, f9);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].field->order(), 729u);
}

TEST(TransferTest, FieldMismatchRaises) {
  const ExtensionDatum ext(Fp(3), parse_field("F9"));
  try {
    scharlau_transfer(ext, QuadraticForm::diagonal(Fp(3), std::vector<long>{1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
}

}  // namespace
}  // namespace wittforge
