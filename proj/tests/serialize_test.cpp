#include <gtest/gtest.h>

#include "wittforge/serialize.hpp"
#include "wittforge/verify.hpp"

namespace wittforge {
namespace {

TEST(SerializeTest, FieldSpecsRoundTrip) {
  for (const char* name : {"Q", "F7", "F9", "F81/F9/F3", "Q(sqrt5)", "Q(2^(1/4))"}) {
    FieldRef f = parse_field(name);
    EXPECT_EQ(field_from_json(field_to_json(f)), f) << name;
  }
  EXPECT_EQ(field_to_json(Fp(5)), Json::parse(R"({"kind":"Fp","p":5})"));
  EXPECT_EQ(field_from_json(Json::parse(R"({"kind":"ext","base":{"kind":"Fp","p":3},"modulus":[1,0,1]})")), parse_field("F9"));
  EXPECT_EQ(field_from_json(Json("F9/F3")), parse_field("F9"));
  EXPECT_THROW(field_from_json(Json::parse(R"({"kind":"ext","base":{"kind":"Fp","p":5},"modulus":[1,0,0,0,1]})")), Error);
}

TEST(SerializeTest, ElementsRoundTrip) {
  Rng rng(1);
  for (const char* name : {"Q", "F7", "F9", "F81/F9/F3", "Q(sqrt2)"}) {
    FieldRef f = parse_field(name);
    for (int t = 0; t < 50; ++t) {
      const Scalar x = random_element(f, rng);
      EXPECT_EQ(scalar_from_json(f, to_json(x)), x) << name;
    }
  }
  EXPECT_EQ(to_json(Q()->from_rational(mpq_class(-3, 4))), Json("-3/4"));
  EXPECT_EQ(scalar_from_json(Q(), Json("6/8")), Q()->from_rational(mpq_class(3, 4)));
  EXPECT_EQ(scalar_from_json(Fp(5), Json(-1)), Fp(5)->from_int(4));
  EXPECT_THROW(scalar_from_json(Q(), Json("abc")), Error);
}

TEST(SerializeTest, FormsAndClasses) {
  Rng rng(2);
  FieldRef f = parse_field("F25");
  const QuadraticForm q = random_form(f, 3, rng);
  EXPECT_EQ(form_from_json(to_json(q)), q);
  const QuadraticForm d = form_from_json(Json::parse(R"({"field":"F5","diag":[1,2]})"));
  EXPECT_EQ(d, QuadraticForm::diagonal(Fp(5), std::vector<long>{1, 2}));
  const Json c = to_json(witt_decompose(QuadraticForm::diagonal(Fp(3), std::vector<long>{1, 1, 1})));
  EXPECT_EQ(c.at("hyperbolic"), 1);
  EXPECT_EQ(c.at("anisotropic").at("gram").size(), 1u);
}

TEST(SerializeTest, PolynomialsAndComplexes) {
  const Ring r{Q(), {"x", "y"}};
  const Poly p = parse_poly(r, "3/2*x^2*y - y + 4");
  EXPECT_EQ(poly_from_json(r, to_json(p, r)), p);
  EXPECT_EQ(poly_from_json(r, Json("3/2*x^2*y - y + 4")), p);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const ChainComplex a = t % 2 ? random_polynomial_complex(rng) : random_field_complex(Fp(7), rng);
    EXPECT_EQ(complex_from_json(to_json(a)), a);
  }
  const ChainComplex a = random_polynomial_complex(rng);
  const ChainMap id = identity_map(a);
  EXPECT_TRUE(map_from_json(to_json(id)) == id);
}

TEST(SerializeTest, VerifySuitesAreReproducible) {
  VerifyOptions opt;
  opt.seed = 7;
  opt.cases = 5;
  for (const auto& e : all_suites()) {
    if (std::string(e.name) == "koszul-lemma") continue;
    const Json a = to_json(run_suite(e, opt)), b = to_json(run_suite(e, opt));
    EXPECT_EQ(a.dump(), b.dump()) << e.name;
    for (const auto& c : a.at("cases")) EXPECT_FALSE(c.at("anchor").get<std::string>().empty());
  }
}

}  // namespace
}  // namespace wittforge
