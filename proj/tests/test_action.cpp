#include <gtest/gtest.h>

#include "tga/action.hpp"
#include "tga/errors.hpp"

using namespace tga;

TEST(Action, FormulaAgreesWithTransportAndAxiomsHold) {
  for (auto [n, k, q] : {std::tuple{2, 1, 4}, {3, 1, 6}, {4, 1, 8}, {4, 3, 8}, {1, 0, 5}}) {
    auto ctx = make_action_context(make_alpha(n, k), 1, q, sl2_generators());
    auto r = verify_action(ctx);
    EXPECT_TRUE(r.ok()) << n << ":" << k << " q=" << q << " " << r.witness;
    EXPECT_TRUE(r.exhaustive);
  }
}

TEST(Action, ParabolicClosedForm) {
  // sigma((1 m; 0 1))(u^k v^l) = alpha^(-m l^2 / 2) u^(k + m l) v^l
  Alpha alpha = make_alpha(6, 1);
  for (std::int64_t m = -2; m <= 2; ++m) {
    IntMatrix t{{1, m}, {0, 1}};
    auto ctx = make_action_context(alpha, 1, 12, {t});
    for (std::int64_t k = 0; k < 5; ++k)
      for (std::int64_t l = 0; l < 5; ++l) {
        auto lhs = sigma(ctx, t, uv_monomial(ctx.algebra, alpha, k, l));
        auto rhs = uv_monomial(ctx.algebra, alpha, k + m * l, l) * Cyclotomic(half_power(alpha, -m * l * l));
        ASSERT_EQ(lhs, rhs);
      }
  }
}

TEST(Action, HigherRankTransport) {
  std::vector<IntMatrix> gens = {IntMatrix::symplectic_form(2), theta_embedding(IntMatrix{{1, 1}, {0, 1}}),
                                 theta_embedding(IntMatrix{{0, 1}, {1, 0}})};
  auto ctx = make_action_context(make_alpha(2, 1), 2, 4, gens);
  auto r = verify_action(ctx, 3, 3000);
  EXPECT_TRUE(r.ok()) << r.witness;
}

TEST(Action, FaultInjectionBreaksMultiplicativity) {
  auto ctx = make_action_context(make_alpha(4, 1), 1, 8, sl2_generators(), 1);
  auto r = verify_action(ctx);
  EXPECT_FALSE(r.multiplicative);
  EXPECT_FALSE(r.formula_matches_transport);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Action, RejectsBadInputs) {
  EXPECT_THROW(make_action_context(make_alpha(3, 1), 1, 4, sl2_generators()), WellDefinednessError);
  EXPECT_THROW(make_action_context(make_alpha(4, 1), 1, 8, {IntMatrix{{0, 1}, {1, 0}}}), InvarianceViolation);
  auto infinite = make_action_context(symbolic_alpha(1, 0), 1, std::nullopt, sl2_generators());
  EXPECT_THROW(verify_action(infinite), PreconditionError);
}

TEST(FiniteModel, RegularRepOfExtension) {
  for (auto [n, k, q] : {std::tuple{2, 1, 4}, {1, 0, 2}, {3, 1, 6}}) {
    auto gamma = q == 6 ? matrix_group_mod(q, {IntMatrix{{1, 1}, {0, 1}}}) : sl2_mod(q);
    auto rep = finite_model(make_alpha(n, k), q, gamma);
    EXPECT_EQ(rep.dim(), static_cast<std::size_t>(q * q) * gamma->order());
    auto check = verify_projective(rep);
    EXPECT_TRUE(check.ok) << check.witness;
  }
  EXPECT_THROW(finite_model(make_alpha(3, 1), 4, sl2_mod(4)), WellDefinednessError);
}

TEST(CrossedProduct, ConsistentAndDetectsFaults) {
  auto small = matrix_group_mod(4, {IntMatrix{{1, 1}, {0, 1}}});
  auto r = crossed_product_consistency(make_alpha(2, 1), 4, small);
  EXPECT_TRUE(r.consistent && r.exhaustive) << r.witness;
  EXPECT_EQ(r.pairs, 64u * 64u);
  auto sampled = crossed_product_consistency(make_alpha(2, 1), 4, sl2_mod(4), false, 5, 0, 3000);
  EXPECT_TRUE(sampled.consistent && !sampled.exhaustive) << sampled.witness;
  auto bad = crossed_product_consistency(make_alpha(2, 1), 4, small, true);
  EXPECT_FALSE(bad.consistent);
  EXPECT_FALSE(bad.witness.empty());
}
