#include <gtest/gtest.h>

#include <stdexcept>

#include "gtsp/edge_space.hpp"
#include "support/test_support.hpp"

namespace gtsp {
namespace {

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

TEST(Rational, StoredInLowestTerms) {
  const Rational r = q(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ((q(1, 6) + q(1, 3)).to_string(), "1/2");
  EXPECT_EQ((q(2, 3) * q(3, 2)).to_string(), "1");
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("7"), q(7));
  EXPECT_EQ(Rational::parse("-7"), q(-7));
  EXPECT_EQ(Rational::parse("4/6"), q(2, 3));
  EXPECT_EQ(Rational::parse("-1/3"), q(-1, 3));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
}

TEST(Rational, ZeroDenominatorAndDivisionThrow) {
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), std::domain_error);
  EXPECT_THROW(q(1) / q(0), std::domain_error);
}

TEST(Rational, ArithmeticStaysCanonical) {
  testing::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = rng.rational(-30, 30, 12);
    const Rational b = rng.rational(-30, 30, 12);
    for (const Rational& r : {a + b, a - b, a * b}) {
      EXPECT_GT(r.denominator(), 0);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      EXPECT_TRUE(r.is_zero() ? r.denominator() == 1 : g == 1);
    }
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    Rational acc = a;
    acc.add_product(a, b);
    EXPECT_EQ(acc, a + a * b);
  }
}

TEST(EdgeIndex, Examples) {
  EXPECT_EQ(edge_index(1, 2, 4), 0u);
  EXPECT_EQ(edge_index(4, 3, 4), 5u);
  EXPECT_EQ(edge_index(3, 4, 4), 5u);
  EXPECT_EQ(edge_index(2, 3, 5), 4u);
}

TEST(EdgeIndex, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(edge_index(2, 2, 4), std::invalid_argument);
  EXPECT_THROW(edge_index(0, 2, 4), std::out_of_range);
  EXPECT_THROW(edge_index(1, 5, 4), std::out_of_range);
}

TEST(EdgeIndex, BijectiveUpToTen) {
  for (int n = 3; n <= 10; ++n) {
    const EdgeSpace space(n);
    std::size_t expected = 0;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        ASSERT_EQ(edge_index(u, v, n), expected);
        ASSERT_EQ(edge_index(v, u, n), expected);
        const Edge e = space.edge(expected);
        ASSERT_EQ(e.u, u);
        ASSERT_EQ(e.v, v);
        ++expected;
      }
    }
    EXPECT_EQ(expected, space.dim());
    EXPECT_EQ(space.dim(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(EdgeSpace, NeedsThreeVertices) {
  EXPECT_THROW(EdgeSpace(2), std::invalid_argument);
  EXPECT_NO_THROW(EdgeSpace(3));
}

TEST(CharVector, Examples) {
  const EdgeSpace s3(3);
  EXPECT_TRUE(char_vector({}, s3).is_zero());
  const std::vector<Edge> one{{1, 2}};
  EXPECT_EQ(char_vector(one, s3), EdgeVector(s3, {1, 0, 0}));
  const std::vector<Edge> multi{{1, 2}, {2, 1}, {2, 3}};
  EXPECT_EQ(char_vector(multi, s3), EdgeVector(s3, {2, 0, 1}));
  const std::vector<Edge> loop{{2, 2}};
  EXPECT_THROW(char_vector(loop, s3), std::invalid_argument);
}

TEST(Dot, Examples) {
  const EdgeSpace s3(3);
  testing::Rng rng(3);
  EXPECT_EQ(dot(EdgeVector(s3), testing::random_edge_vector(3, rng)), q(0));

  for (int n = 3; n <= 8; ++n) {
    const EdgeSpace s(n);
    const EdgeVector ones(s, std::vector<Rational>(s.dim(), Rational(1)));
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = n - i;
    const auto tour = HamiltonianCycle(order).edges();
    EXPECT_EQ(dot(ones, char_vector(tour, s)), q(n));
  }

  EXPECT_EQ(dot(EdgeVector(s3, {1, 2, 3}), EdgeVector(s3, {q(1, 2), q(1, 3), q(1, 6)})), q(5, 3));
  EXPECT_THROW(dot(EdgeVector(s3), EdgeVector(EdgeSpace(4))), std::invalid_argument);
}

TEST(Dot, SymmetricBilinearPositiveDefinite) {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform(3, 7);
    const EdgeVector x = testing::random_edge_vector(n, rng);
    const EdgeVector y = testing::random_edge_vector(n, rng);
    const EdgeVector z = testing::random_edge_vector(n, rng);
    const Rational s = rng.rational(-9, 9, 5);
    EXPECT_EQ(dot(x, y), dot(y, x));
    EXPECT_EQ(dot(x + s * y, z), dot(x, z) + s * dot(y, z));
    EXPECT_GE(dot(x, x), q(0));
    EXPECT_EQ(dot(x, x).is_zero(), x.is_zero());
  }
  const EdgeSpace s4(4);
  EXPECT_TRUE(dot(EdgeVector(s4), EdgeVector(s4)).is_zero());
}

}  // namespace
}  // namespace gtsp
