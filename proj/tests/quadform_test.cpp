#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wittforge/catalog.hpp"
#include "wittforge/quadform.hpp"
#include "wittforge/verify.hpp"

namespace wittforge {
namespace {

/// Brute-force isotropy: some nonzero v with v^T G v = 0.
bool brute_isotropic(const QuadraticForm& q) {
  FieldRef f = q.field();
  const std::size_t n = q.dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= f->order();
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    FMatrix v = zeros(f, n, 1);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      v(i, 0) = f->element(rest % f->order());
      rest /= f->order();
    }
    if (q.bilinear(v, v).is_zero()) return true;
  }
  return false;
}

/// (a,b)_p for squarefree a, b by searching primitive solutions of
/// a x^2 + b y^2 = z^2 modulo p^k.
int brute_hilbert(long a, long b, long p, int k) {
  long mod = 1;
  for (int i = 0; i < k; ++i) mod *= p;
  std::set<long> squares;
  for (long z = 0; z < mod; ++z) squares.insert(z * z % mod);
  auto norm = [&](long v) { return ((v % mod) + mod) % mod; };
  for (long x = 0; x < mod; ++x)
    for (long y = 0; y < mod; ++y) {
      if (x % p == 0 && y % p == 0) continue;
      if (squares.count(norm(a * x % mod * x + b * y % mod * y))) return 1;
    }
  return -1;
}

TEST(QuadFormTest, DiagonalizationCertificate) {
  std::mt19937_64 rng(3);
  for (const char* name : {"Q", "F5", "F9", "F49"}) {
    FieldRef f = parse_field(name);
    for (int t = 0; t < 40; ++t) {
      const QuadraticForm q = random_form(f, 1 + rng() % 4, rng);
      const Diagonalization dz = diagonalize(q);
      EXPECT_TRUE(inverse(dz.basis).has_value());
      EXPECT_EQ(q.congruent(dz.basis).gram(), QuadraticForm::diagonal(f, dz.entries).gram());
    }
  }
}

TEST(QuadFormTest, DiagonalizationNeedsPivotSubstitution) {
  FieldRef f3 = Fp(3);
  const QuadraticForm h(from_ints(f3, {{0, 1}, {1, 0}}));
  const Diagonalization dz = diagonalize(h);
  EXPECT_EQ(h.congruent(dz.basis).gram(), QuadraticForm::diagonal(f3, dz.entries).gram());
  const QuadraticForm q(from_ints(f3, {{1, 1}, {1, 2}}));
  const Diagonalization d2 = diagonalize(q);
  EXPECT_EQ(d2.entries[0], f3->one());
  EXPECT_EQ(d2.entries[1], f3->one());
}

TEST(QuadFormTest, DecompositionAgreesWithBruteForceIsotropy) {
  std::mt19937_64 rng(5);
  for (const char* name : {"F3", "F5", "F7", "F9"}) {
    FieldRef f = parse_field(name);
    for (int t = 0; t < 30; ++t) {
      const QuadraticForm q = random_form(f, 1 + rng() % 3, rng);
      const WittClass c = witt_decompose(q);
      EXPECT_EQ(c.hyperbolic_count > 0, brute_isotropic(q)) << q.to_string();
      EXPECT_FALSE(c.anisotropic.dim() > 0 && brute_isotropic(c.anisotropic)) << c.anisotropic.to_string();
      EXPECT_EQ(c.anisotropic.dim() + 2 * c.hyperbolic_count, q.dim());
      // the certificate carries q to anisotropic part (+) hyperbolic planes
      const QuadraticForm normal = c.anisotropic.orthogonal_sum(QuadraticForm::hyperbolic(f, c.hyperbolic_count));
      EXPECT_EQ(q.congruent(c.certificate).gram(), normal.gram());
      EXPECT_EQ(witt_decompose(c.anisotropic).hyperbolic_count, 0u);
    }
  }
}

TEST(QuadFormTest, ExhaustiveSearchMatchesBruteForce) {
  FieldRef f5 = Fp(5);
  const QuadraticForm aniso = QuadraticForm::diagonal(f5, std::vector<long>{1, 3});
  EXPECT_FALSE(exhaustive_isotropic_vector(aniso).has_value());
  EXPECT_FALSE(brute_isotropic(aniso));
  const QuadraticForm iso = QuadraticForm::diagonal(f5, std::vector<long>{1, 1});
  const auto v = exhaustive_isotropic_vector(iso);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(iso.bilinear(*v, *v).is_zero());
}

TEST(QuadFormTest, SmallExamples) {
  FieldRef f3 = Fp(3);
  const WittClass c = witt_decompose(QuadraticForm::diagonal(f3, std::vector<long>{1, 1, 1}));
  EXPECT_EQ(c.hyperbolic_count, 1u);
  ASSERT_EQ(c.anisotropic.dim(), 1u);
  EXPECT_TRUE(witt_equal(c.anisotropic, QuadraticForm::diagonal(f3, std::vector<long>{2})));
  const QuadraticForm two = QuadraticForm::diagonal(f3, std::vector<long>{1, 1});
  EXPECT_TRUE(witt_trivial(two.tensor(two)));
  for (const char* name : {"F3", "F5"}) {
    const WittClass four = witt_decompose(QuadraticForm::diagonal(parse_field(name), std::vector<long>{1, 1, 1, 1}));
    EXPECT_EQ(four.hyperbolic_count, 2u);
    EXPECT_EQ(four.anisotropic.dim(), 0u);
  }
}

TEST(QuadFormTest, RationalWittClasses) {
  FieldRef q = Q();
  const WittClass c = witt_decompose(QuadraticForm::diagonal(q, std::vector<long>{1, 1, -1, -1, 2, -3}));
  EXPECT_EQ(c.hyperbolic_count, 2u);
  EXPECT_EQ(c.anisotropic.dim(), 2u);
  // 2 = 1 + 1 is a sum of two squares, 3 is not
  EXPECT_TRUE(witt_equal(QuadraticForm::diagonal(q, std::vector<long>{1, 1}), QuadraticForm::diagonal(q, std::vector<long>{2, 2})));
  EXPECT_FALSE(witt_equal(QuadraticForm::diagonal(q, std::vector<long>{1, 1}), QuadraticForm::diagonal(q, std::vector<long>{3, 3})));
  EXPECT_TRUE(witt_trivial(QuadraticForm::diagonal(q, std::vector<long>{5, -5})));
  EXPECT_FALSE(witt_trivial(QuadraticForm::diagonal(q, std::vector<long>{1, 1})));
}

TEST(QuadFormTest, WittEqualityInvariantUnderSquareScaling) {
  std::mt19937_64 rng(8);
  for (const char* name : {"Q", "F7", "F25"}) {
    FieldRef f = parse_field(name);
    for (int t = 0; t < 20; ++t) {
      std::vector<Scalar> d;
      for (int i = 0; i < 3; ++i) d.push_back(random_unit(f, rng));
      const QuadraticForm q = QuadraticForm::diagonal(f, d);
      const Scalar s = random_unit(f, rng);
      d[rng() % 3] = d[rng() % 3] * s * s;
      std::vector<Scalar> e = d;
      const QuadraticForm p = QuadraticForm::diagonal(f, e);
      EXPECT_TRUE(witt_equal(q, q));
      EXPECT_EQ(witt_equal(q, p), witt_equal(p, q));
    }
    // scaling one entry by a square keeps the class
    const Scalar u = random_unit(f, rng), v = random_unit(f, rng);
    EXPECT_TRUE(witt_equal(QuadraticForm::diagonal(f, {u, v}), QuadraticForm::diagonal(f, {u * v * v, v})));
  }
}

TEST(QuadFormTest, HilbertSymbolAgainstBruteForce) {
  const long values[] = {-30, -15, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 14, 15, 21};
  for (long a : values)
    for (long b : values) {
      for (long p : {3L, 5L, 7L}) EXPECT_EQ(hilbert_symbol(a, b, Place::finite(p)), brute_hilbert(a, b, p, 3)) << a << "," << b << " at " << p;
      EXPECT_EQ(hilbert_symbol(a, b, Place::finite(2)), brute_hilbert(a, b, 2, 5)) << a << "," << b << " at 2";
      EXPECT_EQ(hilbert_symbol(a, b, Place::real()), (a < 0 && b < 0) ? -1 : 1);
    }
}

TEST(QuadFormTest, HilbertSymbolSymmetryAndBimultiplicativity) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    long a = 0, b = 0, c = 0;
    while (a == 0) a = static_cast<long>(rng() % 201) - 100;
    while (b == 0) b = static_cast<long>(rng() % 201) - 100;
    while (c == 0) c = static_cast<long>(rng() % 201) - 100;
    int prod = 1;
    for (const auto& v : relevant_places({a, b, c})) {
      EXPECT_EQ(hilbert_symbol(a, b, v), hilbert_symbol(b, a, v));
      EXPECT_EQ(hilbert_symbol(a, b * c, v), hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
      prod *= hilbert_symbol(a, b, v);
    }
    EXPECT_EQ(prod, 1);
  }
}

TEST(QuadFormTest, DegenerateFormRaises) {
  try {
    witt_decompose(QuadraticForm(from_ints(Fp(5), {{1, 1}, {1, 1}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateForm);
  }
}

}  // namespace
}  // namespace wittforge
