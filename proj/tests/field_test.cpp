#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wittforge/catalog.hpp"
#include "wittforge/field.hpp"
#include "wittforge/upoly.hpp"

namespace wittforge {
namespace {

/// Every nonzero x satisfies x^(q-1) = 1; used as an independent check of inverses.
void check_axioms(FieldRef f, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto rand_elem = [&]() -> Scalar {
    if (f->is_finite()) return f->element(rng() % f->order());
    std::vector<Scalar> c;
    for (int i = 0; i < f->degree(); ++i) c.push_back(f->base()->from_rational(mpq_class(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4)));
    return f->kind() == Field::Kind::Extension ? f->from_coeffs(c) : c[0];
  };
  for (int t = 0; t < trials; ++t) {
    const Scalar a = rand_elem(), b = rand_elem(), c = rand_elem();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + f->zero(), a);
    EXPECT_EQ(a * f->one(), a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), f->one());
    }
  }
}

TEST(FieldTest, AxiomsOnRandomTriples) {
  check_axioms(Fp(7), 1000, 1);
  check_axioms(parse_field("F9"), 1000, 2);
  check_axioms(parse_field("F125"), 1000, 3);
  check_axioms(parse_field("F81/F9/F3"), 1000, 4);
  check_axioms(quadratic_field(2), 300, 5);
}

TEST(FieldTest, FermatLittleTheoremInExtensions) {
  for (const char* name : {"F9", "F27", "F49", "F625"}) {
    FieldRef f = parse_field(name);
    const std::uint64_t q = f->order();
    for (std::uint64_t i = 1; i < std::min<std::uint64_t>(q, 200); ++i) EXPECT_TRUE(f->element(i).pow(q - 1).is_one()) << name << " " << i;
  }
}

TEST(FieldTest, FrobeniusIsAdditive) {
  FieldRef f = parse_field("F343");
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Scalar a = f->element(rng() % f->order()), b = f->element(rng() % f->order());
    EXPECT_EQ((a + b).pow(std::uint64_t{7}), a.pow(std::uint64_t{7}) + b.pow(std::uint64_t{7}));
  }
}

TEST(FieldTest, ElementIndexIsABijection) {
  FieldRef f = parse_field("F25");
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < f->order(); ++i) {
    EXPECT_EQ(f->index(f->element(i)), i);
    seen.insert(f->element(i).to_string());
  }
  EXPECT_EQ(seen.size(), 25u);
}

TEST(FieldTest, CatalogResolvesTowers) {
  const auto tower = parse_tower("F81/F9/F3");
  ASSERT_EQ(tower.size(), 3u);
  EXPECT_EQ(tower[0], Fp(3));
  EXPECT_EQ(tower[1]->order(), 9u);
  EXPECT_EQ(tower[2]->order(), 81u);
  EXPECT_EQ(tower[2]->degree(), 2);
  EXPECT_EQ(tower[2]->degree_over(tower[0]), 4);
  // F9 = F3[t]/(t^2 + 1), so t^2 = -1
  FieldRef f9 = parse_field("F9");
  EXPECT_EQ(f9->generator() * f9->generator(), f9->from_int(-1));
  EXPECT_EQ(parse_field("F9"), f9);
  EXPECT_EQ(parse_field("Q(2^(1/4))")->degree_over(Q()), 4);
  EXPECT_THROW(parse_field("F6"), Error);
  EXPECT_THROW(parse_field("G7"), Error);
  EXPECT_THROW(parse_field("F9/F5"), Error);
}

TEST(FieldTest, RationalsAreCanonical) {
  FieldRef q = Q();
  EXPECT_EQ(q->from_rational(mpq_class(6, 4)), q->from_rational(mpq_class(3, 2)));
  EXPECT_EQ(q->from_rational(mpq_class(1, 2)) + q->from_rational(mpq_class(1, 3)), q->from_rational(mpq_class(5, 6)));
  EXPECT_EQ(q->from_rational(mpq_class(6, 4)).to_string(), "3/2");
}

TEST(FieldTest, DivisionByZeroRaises) {
  try {
    Fp(5)->zero().inverse();
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  EXPECT_THROW(Q()->zero().inverse(), Error);
}

TEST(FieldTest, SquareRootsMatchBruteForceSquares) {
  for (const char* name : {"F7", "F49", "F27"}) {
    FieldRef f = parse_field(name);
    std::set<std::uint64_t> squares;
    for (std::uint64_t i = 0; i < f->order(); ++i) squares.insert(f->index(f->element(i) * f->element(i)));
    EXPECT_EQ(squares.size(), (f->order() + 1) / 2);
    for (std::uint64_t i = 0; i < f->order(); ++i) {
      const Scalar a = f->element(i);
      const auto r = square_root(a);
      EXPECT_EQ(r.has_value(), squares.count(i) == 1) << name << " " << a;
      if (r) {
        EXPECT_EQ(*r * *r, a);
      }
    }
  }
}

TEST(FieldTest, QuadraticNumberFieldSqrtAndNorm) {
  FieldRef k = quadratic_field(2);
  const Scalar s = k->generator();
  const Scalar x = k->from_int(3) + k->from_int(2) * s;  // (1 + sqrt2)^2
  const auto r = square_root(x);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, x);
  EXPECT_FALSE(square_root(s).has_value());
  // N(a + b sqrt2) = a^2 - 2 b^2
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) EXPECT_EQ(rational_norm(k->from_int(a) + k->from_int(b) * s), mpq_class(a * a - 2 * b * b));
}

TEST(FieldTest, IrreducibilityAgainstExhaustiveRootAndQuadraticSearch) {
  FieldRef f5 = Fp(5);
  // x^4 + 1 over F5: no roots, but (x^2 + 2)(x^2 + 3) = x^4 + 5x^2 + 6 = x^4 + 1
  const poly::Coeffs m{f5->one(), f5->zero(), f5->zero(), f5->zero(), f5->one()};
  bool has_quadratic_factor = false;
  for (long a = 0; a < 5; ++a)
    for (long b = 0; b < 5; ++b)
      for (long c = 0; c < 5; ++c)
        for (long d = 0; d < 5; ++d) {
          // (x^2 + a x + b)(x^2 + c x + d) coefficients, by hand
          const long c3 = (a + c) % 5, c2 = (b + d + a * c) % 5, c1 = (a * d + b * c) % 5, c0 = (b * d) % 5;
          if (c3 == 0 && c2 == 0 && c1 == 0 && c0 == 1) has_quadratic_factor = true;
        }
  EXPECT_TRUE(has_quadratic_factor);
  EXPECT_EQ(decide_irreducible(m), std::optional<bool>(false));
  EXPECT_THROW(Field::extension(f5, m), Error);
  // x^2 + 1 over F3 has no root
  FieldRef f3 = Fp(3);
  const poly::Coeffs g{f3->one(), f3->zero(), f3->one()};
  int roots = 0;
  for (long x = 0; x < 3; ++x) roots += ((x * x + 1) % 3 == 0);
  EXPECT_EQ(roots, 0);
  EXPECT_EQ(decide_irreducible(g), std::optional<bool>(true));
}

TEST(FieldTest, FactorOverSplitsLikeRootCounting) {
  FieldRef f9 = parse_field("F9");
  const auto factors = factor_over(f9->modulus(), f9);
  int roots = 0;
  for (std::uint64_t i = 0; i < 9; ++i) roots += poly::eval(poly::lift(f9->modulus(), f9), f9->element(i)).is_zero();
  EXPECT_EQ(roots, 2);
  ASSERT_EQ(factors.size(), 2u);
  for (const auto& g : factors) EXPECT_EQ(poly::degree(g), 1);
  FieldRef f27 = parse_field("F27");
  const auto one = factor_over(f27->modulus(), f9);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(poly::degree(one[0]), 3);
}

TEST(FieldTest, TowerDegreeCapRaises) {
  FieldRef f3 = Fp(3);
  try {
    finite_extension(f3, 17);
    FAIL() << "expected InvalidField";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidField);
  }
}

}  // namespace
}  // namespace wittforge
