#include <gtest/gtest.h>

#include "generators.hpp"
#include "lpa/error.hpp"
#include "lpa/polynomial.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

RationalPolynomial P(const char* text) { return RationalPolynomial::parse(text); }

RationalPolynomial random_poly(Rng& rng, std::size_t max_degree) {
  std::vector<mpq_class> c;
  const std::size_t d = uniform(rng, 0, max_degree);
  for (std::size_t i = 0; i <= d; ++i) c.push_back(uniform(rng, 0, 3) ? small_rational(rng) : mpq_class(0));
  return RationalPolynomial(c);
}

}  // namespace

TEST(Polynomial, ParseAndPrint) {
  const auto f = P("1 - 3/2 x + x^3");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.coefficient(1), mpq_class(-3, 2));
  EXPECT_EQ(f.to_string(), "1 - 3/2 x + x^3");
  EXPECT_EQ(P("1-x").to_string(), "1 - x");
  EXPECT_EQ(P("x^2 + x^2").to_string(), "2 x^2");
  EXPECT_EQ(P("0").degree(), -1);
  EXPECT_EQ(P("-x + 1"), P("1 - x"));
  EXPECT_EQ(P("2*x"), P("2 x"));
}

TEST(Polynomial, ParseErrorsCarryColumns) {
  try {
    P("1 + + x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GE(e.column(), 3u);
  }
  EXPECT_THROW(P("1 + y"), ParseError);
  EXPECT_THROW(P("x^"), ParseError);
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
}

TEST(Polynomial, DivisionAndGcd) {
  const auto [q, r] = divide(P("x^2 - 1"), P("x - 1"));
  EXPECT_EQ(q, P("x + 1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(P("1 - x^2"), P("2 - 2x")), P("x - 1"));
  EXPECT_EQ(gcd(P("1 - x"), P("1 + x")), P("1"));
  EXPECT_THROW(divide(P("x"), P("0")), InvalidInput);
}

TEST(Polynomial, Irreducibility) {
  EXPECT_EQ(check_irreducible(P("1 - x")), Irreducibility::Verified);
  EXPECT_EQ(check_irreducible(P("1 + x^2")), Irreducibility::Verified);
  EXPECT_EQ(check_irreducible(P("1 - x^2")), Irreducibility::Reducible);
  EXPECT_EQ(check_irreducible(P("1 - 2 x^3")), Irreducibility::Verified);
  EXPECT_EQ(check_irreducible(P("1 - 1/8 x^3")), Irreducibility::Reducible);
  EXPECT_EQ(check_irreducible(P("1 + x^4")), Irreducibility::Unverified);
}

TEST(PolynomialProperties, RingLawsAndDivision) {
  Rng rng = rng_for("polynomial.laws");
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng, 4), b = random_poly(rng, 3), c = random_poly(rng, 3);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b - b, a);
    const mpq_class x = small_rational(rng);
    ASSERT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
    ASSERT_EQ(RationalPolynomial::parse(a.to_string()), a);
    if (b.is_zero()) continue;
    const auto [q, r] = divide(a, b);
    ASSERT_EQ(q * b + r, a);
    ASSERT_LT(r.degree(), b.degree());
    const auto g = gcd(a * c, b * c);
    if (g.is_zero()) continue;
    ASSERT_EQ(g.leading(), 1);
    ASSERT_TRUE(divide(a * c, g).remainder.is_zero());
    ASSERT_TRUE(divide(b * c, g).remainder.is_zero());
    if (!c.is_zero()) {
      ASSERT_TRUE(divide(g, c.monic()).remainder.is_zero());
    }
  }
}
