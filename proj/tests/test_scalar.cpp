#include <gtest/gtest.h>

#include <random>

#include "tga/cyclotomic.hpp"
#include "tga/errors.hpp"
#include "tga/int_matrix.hpp"
#include "tga/scalar.hpp"

using namespace tga;

TEST(Scalar, MakeAlphaBasics) {
  EXPECT_TRUE(make_alpha(1, 0).value.is_one());
  Alpha a = make_alpha(4, 1);
  EXPECT_EQ(a.value.pow(2), Scalar::minus_one());
  EXPECT_TRUE(a.value.pow(4).is_one());
  EXPECT_EQ(a.value.order(), 4);
  EXPECT_EQ(make_alpha(6, 4).value.order(), 3);
}

TEST(Scalar, HalfPowerOrder) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    Alpha a = make_alpha(n, 1);
    EXPECT_EQ(half_power(a, 1).order(), 2 * n) << n;
    EXPECT_EQ(half_power(a, 2), a.value);
    EXPECT_TRUE(half_power(a, 0).is_one());
  }
  EXPECT_EQ(half_power(make_alpha(3, 1), 3), Scalar::minus_one());
}

TEST(Scalar, HalfPowerAdditive) {
  for (std::int64_t n : {1, 2, 3, 5, 8, 12}) {
    for (std::int64_t k = 0; k < n; ++k) {
      Alpha a = make_alpha(n, k);
      for (std::int64_t m = -4 * n; m <= 4 * n; ++m)
        for (std::int64_t m2 = -4 * n; m2 <= 4 * n; m2 += 3)
          ASSERT_EQ(half_power(a, m) * half_power(a, m2), half_power(a, m + m2));
    }
  }
}

TEST(Scalar, GroupLaws) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> order(1, 60), e(-200, 200), h(-5, 5);
  auto draw = [&] { return Scalar::root_of_unity(order(rng), e(rng)) * Scalar::symbolic(h(rng), h(rng)); };
  for (int i = 0; i < 2000; ++i) {
    Scalar a = draw(), b = draw(), c = draw();
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a.conj() * a).is_one());
    if (a == b) ASSERT_EQ(a * c, b * c);
    auto z = (a * b).to_complex();
    auto w = a.to_complex() * b.to_complex();
    ASSERT_NEAR(std::abs(z - w), 0.0, 1e-9);
  }
  EXPECT_TRUE(Scalar::root_of_unity(5, 1).pow(5).is_one());
}

TEST(Scalar, SymbolicIndependence) {
  for (std::int64_t p = -4; p <= 4; ++p)
    for (std::int64_t q = -4; q <= 4; ++q) {
      Scalar s = Scalar::symbolic(2 * p, 0) * Scalar::symbolic(0, -2 * q);
      EXPECT_EQ(s.is_one(), p == 0 && q == 0);
    }
}

TEST(Scalar, RenderAndParse) {
  std::vector<Scalar> xs = {Scalar::one(), Scalar::root_of_unity(12, 5), Scalar::symbolic(3, 0),
                            Scalar::symbolic(-2, 4) * Scalar::root_of_unity(7, 3), Scalar::minus_one()};
  for (const auto& s : xs) EXPECT_EQ(Scalar::parse(s.to_string()), s) << s.to_string();
  EXPECT_EQ(Scalar::parse("zeta(8)^2"), Scalar::root_of_unity(4, 1));
  EXPECT_EQ(Scalar::parse("alpha1^3/2"), Scalar::symbolic(3, 0));
  EXPECT_THROW(Scalar::parse("zeta(0)^1"), ParseError);
  EXPECT_THROW(Scalar::parse("beta"), ParseError);
  EXPECT_THROW(parse_alpha("3:"), ParseError);
  EXPECT_EQ(parse_alpha("2:1").value, Scalar::minus_one());
}

TEST(Scalar, UpperHalfTorus) {
  EXPECT_TRUE(in_upper_half_torus(Scalar::root_of_unity(7, 3)));
  EXPECT_FALSE(in_upper_half_torus(Scalar::root_of_unity(7, 4)));
  EXPECT_TRUE(in_upper_half_torus(Scalar::minus_one()));
  EXPECT_TRUE(in_upper_half_torus(Scalar::symbolic(2, 0)));
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, ExactZero) {
  EXPECT_TRUE((Cyclotomic(1) + Cyclotomic(Scalar::minus_one())).is_zero());
  for (std::int64_t n = 2; n <= 64; ++n) {
    Cyclotomic sum;
    for (std::int64_t k = 0; k < n; ++k) sum += Cyclotomic(Scalar::root_of_unity(n, k));
    ASSERT_TRUE(sum.is_zero()) << n;
    Cyclotomic partial = sum - Cyclotomic(Scalar::root_of_unity(n, 1));
    ASSERT_FALSE(partial.is_zero()) << n;
  }
  Scalar s = Scalar::symbolic(1, 0);
  EXPECT_TRUE((Cyclotomic(s) + Cyclotomic(s * Scalar::minus_one())).is_zero());
  EXPECT_FALSE((Cyclotomic(s) + Cyclotomic(Scalar::minus_one())).is_zero());
}

TEST(Cyclotomic, ArithmeticMatchesComplex) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> order(1, 24), e(0, 100), c(-3, 3);
  auto draw = [&] {
    Cyclotomic x;
    for (int i = 0; i < 4; ++i) x.add_term(Scalar::root_of_unity(order(rng), e(rng)), c(rng));
    return x;
  };
  for (int i = 0; i < 300; ++i) {
    Cyclotomic a = draw(), b = draw();
    auto prod = (a * b).to_complex();
    ASSERT_NEAR(std::abs(prod - a.to_complex() * b.to_complex()), 0.0, 1e-9);
    ASSERT_EQ((a * b).is_zero(), std::abs(prod) < 1e-9);
    ASSERT_NEAR(std::abs(a.reduced().to_complex() - a.to_complex()), 0.0, 1e-9);
    ASSERT_EQ(Cyclotomic::parse(a.to_string()), a);
  }
  EXPECT_EQ((Cyclotomic(3) * Cyclotomic(Scalar::root_of_unity(3, 1))).conj().to_complex().imag() < 0, true);
  EXPECT_EQ(Cyclotomic(7).as_integer(), 7);
}

TEST(IntMatrix, ThetaEmbedding) {
  IntMatrix t{{1, 1}, {0, 1}};
  IntMatrix s{{0, -1}, {1, 0}};
  EXPECT_EQ(theta_embedding(IntMatrix::identity(2)), IntMatrix::identity(4));
  EXPECT_TRUE(theta_embedding(t).is_symplectic());
  std::mt19937_64 rng(3);
  std::vector<IntMatrix> gens = {t, s, IntMatrix{{1, 0}, {0, -1}}};
  for (int i = 0; i < 100; ++i) {
    IntMatrix g = IntMatrix::identity(2), h = IntMatrix::identity(2);
    for (int j = 0; j < 5; ++j) {
      g = g * gens[rng() % 3];
      h = h * gens[rng() % 3];
    }
    ASSERT_EQ(theta_embedding(g * h), theta_embedding(g) * theta_embedding(h));
    ASSERT_TRUE(theta_embedding(g).is_symplectic());
  }
  EXPECT_THROW(theta_embedding(IntMatrix{{2, 0}, {0, 1}}), PreconditionError);
  IntMatrix g3{{1, 2, 0}, {0, 1, 0}, {3, 0, 1}};
  EXPECT_TRUE(theta_embedding(g3).is_symplectic());
  EXPECT_EQ(g3.pow(-2) * g3.pow(2), IntMatrix::identity(3));
}

TEST(IntMatrix, Parabolic) {
  EXPECT_TRUE(is_parabolic(IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_TRUE(is_parabolic(IntMatrix{{-1, 3}, {0, -1}}));
  EXPECT_FALSE(is_parabolic(IntMatrix::identity(2)));
  EXPECT_FALSE(is_parabolic(-IntMatrix::identity(2)));
  EXPECT_FALSE(is_parabolic(IntMatrix{{0, -1}, {1, 0}}));
}
