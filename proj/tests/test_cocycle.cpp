#include <gtest/gtest.h>

#include <random>

#include "tga/cocycle.hpp"
#include "tga/errors.hpp"
#include "tga/modular.hpp"

using namespace tga;

namespace {

// Independent oracle for finite abelian groups: a cocycle is a coboundary iff
// it is symmetric, mu(g, h) = mu(h, g).
bool symmetric(const TwoCocycle& mu) {
  const FiniteGroup* g = mu.finite_group();
  for (const auto& a : g->elements())
    for (const auto& b : g->elements())
      if (mu(a, b) != mu(b, a)) return false;
  return true;
}

// Random bicharacter on (Z/m)^2: zeta_m^(x^t B y) for an integer matrix B.
TwoCocycle random_bicharacter(AbelianGroupPtr g, std::int64_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> pick(0, m - 1);
  std::array<std::int64_t, 4> b{pick(rng), pick(rng), pick(rng), pick(rng)};
  return TwoCocycle(
      g,
      [b, m](const GroupElement& x, const GroupElement& y) {
        std::int64_t e = x[0] * (b[0] * y[0] + b[1] * y[1]) + x[1] * (b[2] * y[0] + b[3] * y[1]);
        return Scalar::root_of_unity(m, e);
      },
      m, "bichar");
}

}  // namespace

TEST(Modular, SolveSmallSystems) {
  // 2x = 1 mod 4 has no solution; 2x = 2 mod 4 does.
  EXPECT_FALSE(solve_mod({{2}}, {1}, 1, 4).has_value());
  EXPECT_TRUE(solve_mod({{2}}, {2}, 1, 4).has_value());
  // Needs the Howell closure: 2x + y = 0, 2y = 1 (mod 4) is inconsistent only via 2*(row 1).
  EXPECT_FALSE(solve_mod({{2, 1}, {0, 2}}, {0, 1}, 2, 4).has_value());
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t mod = std::uniform_int_distribution<std::int64_t>(2, 72)(rng);
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 4;
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    for (auto& r : a)
      for (auto& v : r) v = static_cast<std::int64_t>(rng() % mod);
    std::vector<std::int64_t> b(rows);
    for (auto& v : b) v = static_cast<std::int64_t>(rng() % mod);
    // brute force oracle over (Z/mod)^cols, when small enough
    std::int64_t total = 1;
    for (std::size_t c = 0; c < cols; ++c) total *= mod;
    if (total > 200000) continue;
    bool exists = false;
    for (std::int64_t code = 0; code < total && !exists; ++code) {
      std::int64_t x = code;
      std::vector<std::int64_t> z(cols);
      for (auto& v : z) {
        v = x % mod;
        x /= mod;
      }
      bool ok = true;
      for (std::size_t r = 0; r < rows && ok; ++r) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += a[r][c] * z[c];
        ok = mod64(s - b[r], mod) == 0;
      }
      exists = ok;
    }
    ASSERT_EQ(solve_mod(a, b, cols, mod).has_value(), exists) << "trial " << trial;
  }
}

TEST(Cocycles, SymplecticValues) {
  Alpha a = make_alpha(5, 2);
  auto nu = symplectic_cocycle(a, 1);
  EXPECT_EQ(nu(GroupElement{1, 0}, GroupElement{0, 1}), a.root);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    GroupElement x = nu.group().sample(rng), y = nu.group().sample(rng), x2 = nu.group().sample(rng);
    ASSERT_TRUE(nu(x, x).is_one());
    ASSERT_TRUE((nu(x, y) * nu(y, x)).is_one());
    ASSERT_EQ(nu(nu.group().multiply(x, x2), y), nu(x, y) * nu(x2, y));
  }
  auto nu2 = symplectic_cocycle(make_alpha(3, 1), 2, 6);
  EXPECT_TRUE(nu2.is_normalized());
  EXPECT_EQ(nu2.value_order(), 6);
  EXPECT_THROW(symplectic_cocycle(make_alpha(3, 1), 1, 4), WellDefinednessError);
  EXPECT_THROW(symplectic_cocycle(symbolic_alpha(2, 0), 1, 4), WellDefinednessError);
}

TEST(Cocycles, MuAlphaMatchesSymplectic) {
  for (Alpha a : {make_alpha(7, 3), make_alpha(2, 1), symbolic_alpha(2, 0), symbolic_alpha(1, 3)}) {
    auto mu = mu_alpha(a);
    auto nu = symplectic_cocycle(a, 1);
    for (std::int64_t k = -4; k <= 4; ++k)
      for (std::int64_t l = -4; l <= 4; ++l)
        for (std::int64_t k2 = -3; k2 <= 3; ++k2)
          for (std::int64_t l2 = -3; l2 <= 3; ++l2) {
            GroupElement x{k, l}, y{k2, l2};
            ASSERT_EQ(mu(x, y), nu(x, y));
          }
    EXPECT_EQ(mu(GroupElement{2, 0}, GroupElement{0, 3}), half_power(a, 6));
    EXPECT_EQ(mu(GroupElement{1, 0}, GroupElement{0, 1}), a.root);
  }
}

TEST(Cocycles, Invariance) {
  Alpha a = make_alpha(4, 1);
  auto nu = symplectic_cocycle(a, 1);
  IntMatrix s{{0, -1}, {1, 0}}, t{{1, 1}, {0, 1}};
  EXPECT_TRUE(verify_invariance(nu, s));
  EXPECT_TRUE(verify_invariance(nu, t));
  EXPECT_TRUE(verify_invariance(nu, s * t * s * t * t));
  EXPECT_TRUE(verify_invariance(nu, IntMatrix::identity(2)));
  EXPECT_FALSE(verify_invariance(nu, IntMatrix{{2, 0}, {0, 2}}));
  EXPECT_FALSE(verify_invariance(nu, IntMatrix{{1, 0}, {0, -1}}));
  auto nu4 = symplectic_cocycle(a, 2);
  EXPECT_TRUE(verify_invariance(nu4, theta_embedding(IntMatrix{{2, 1}, {1, 1}})));
}

TEST(Cocycles, IdentityPolicy) {
  auto nu = symplectic_cocycle(make_alpha(2, 1), 1, 4);
  auto r = verify_cocycle_identity(nu);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.triples, 4096u);
  auto ext = extend_to_semidirect(nu, sl2_mod(4));
  VerificationPolicy small;
  small.samples = 20000;
  auto r2 = verify_cocycle_identity(ext, small);
  EXPECT_TRUE(r2.ok) << r2.witness;
  EXPECT_FALSE(r2.exhaustive);
  auto ext2 = extend_to_semidirect(symplectic_cocycle(make_alpha(1, 0), 1, 2), sl2_mod(2));
  auto r3 = verify_cocycle_identity(ext2);
  EXPECT_TRUE(r3.exhaustive && r3.ok);
  auto lat = mu_alpha(symbolic_alpha(1, 0));
  EXPECT_TRUE(verify_cocycle_identity(lat, small).ok);
  auto aff = extend_to_affine(lat, {IntMatrix{{0, -1}, {1, 0}}, IntMatrix{{1, 1}, {0, 1}}});
  EXPECT_TRUE(verify_cocycle_identity(aff, small).ok);
  // a non-cocycle is caught with a witness
  auto g = AbelianGroup::power(3, 1);
  TwoCocycle bad(
      g, [](const GroupElement& x, const GroupElement& y) { return Scalar::root_of_unity(9, x[0] * x[0] * y[0]); }, 9,
      "bad");
  auto r4 = verify_cocycle_identity(bad);
  EXPECT_FALSE(r4.ok);
  EXPECT_FALSE(r4.witness.empty());
}

TEST(Cocycles, DeterministicSampling) {
  auto ext = extend_to_semidirect(symplectic_cocycle(make_alpha(2, 1), 1, 4), sl2_mod(4));
  TwoCocycle faulty(
      ext.group_ptr(),
      [ext](const GroupElement& a, const GroupElement& b) {
        Scalar v = ext(a, b);
        return (a[0] == 1 && b[1] == 3) ? v * Scalar::root_of_unity(3, 1) : v;
      },
      std::nullopt, "faulty");
  VerificationPolicy p;
  p.samples = 5000;
  auto r1 = verify_cocycle_identity(faulty, p);
  auto r2 = verify_cocycle_identity(faulty, p);
  EXPECT_FALSE(r1.ok);
  EXPECT_EQ(r1.witness, r2.witness);
}

TEST(Cocycles, SemidirectExtension) {
  auto nu = symplectic_cocycle(make_alpha(2, 1), 1, 4);
  auto ext = extend_to_semidirect(nu, sl2_mod(4));
  auto sd = std::dynamic_pointer_cast<const SemidirectProduct>(ext.group_ptr());
  ASSERT_TRUE(sd);
  GroupElement e = sd->acting().identity();
  for (const auto& x : sd->normal().elements())
    for (const auto& y : sd->normal().elements()) ASSERT_EQ(ext(sd->make(x, e), sd->make(y, e)), nu(x, y));
  auto bad = matrix_group_mod(4, {IntMatrix{{1, 0}, {0, -1}}});
  try {
    extend_to_semidirect(nu, bad);
    FAIL() << "expected InvarianceViolation";
  } catch (const InvarianceViolation& err) {
    EXPECT_NE(std::string(err.what()).find("[1 0; 0 3]"), std::string::npos) << err.what();
  }
}

TEST(Cocycles, CoboundaryDetectionMatchesSymmetryOracle) {
  std::mt19937_64 rng(4);
  for (std::int64_t m = 2; m <= 6; ++m) {
    auto g = AbelianGroup::power(m, 2);
    for (int trial = 0; trial < 6; ++trial) {
      auto bic = random_bicharacter(g, m, rng);
      auto [cob, lambda] = random_coboundary(g, 2 * m, rng);
      auto mu = bic * cob;
      auto witness = is_coboundary(mu);
      ASSERT_EQ(witness.has_value(), symmetric(mu)) << "m=" << m;
      if (witness) {
        auto check = coboundary_of(g, *witness);
        for (const auto& a : g->elements())
          for (const auto& b : g->elements()) ASSERT_EQ(check(a, b), mu(a, b));
      }
    }
  }
}

TEST(Cocycles, CoboundaryNeedsLargerRoots) {
  // mu(1, 1) = -1 on Z/2 is d(lambda) with lambda(1) = i, outside <zeta_2>.
  auto g = AbelianGroup::power(2, 1);
  auto mu = table_cocycle(g, {Scalar::one(), Scalar::one(), Scalar::one(), Scalar::minus_one()}, 2);
  EXPECT_TRUE(verify_cocycle_identity(mu).ok);
  auto lambda = is_coboundary(mu);
  ASSERT_TRUE(lambda.has_value());
  EXPECT_EQ((*lambda)[1].order(), 4);
}

TEST(Cocycles, SymplecticIsNotCoboundary) {
  for (std::int64_t q : {2, 4, 6, 8}) {
    for (std::int64_t k = 1; k < q / 2; ++k) {
      Alpha a = make_alpha(q / 2, k);
      if (a.value.is_one()) continue;
      auto nu = symplectic_cocycle(a, 1, q);
      EXPECT_FALSE(is_coboundary(nu).has_value()) << q << ":" << k;
    }
  }
  EXPECT_TRUE(is_coboundary(trivial_cocycle(AbelianGroup::power(3, 2))).has_value());
}

TEST(Cocycles, RestrictionAndClasses) {
  auto nu = symplectic_cocycle(make_alpha(4, 1), 1, 8);
  auto nu3 = symplectic_cocycle(make_alpha(4, 3), 1, 8);
  EXPECT_FALSE(same_class(nu, nu3));
  EXPECT_TRUE(same_class(nu, nu));
  std::mt19937_64 rng(5);
  auto g = std::dynamic_pointer_cast<const AbelianGroup>(nu.group_ptr());
  auto [cob, lambda] = random_coboundary(g, 8, rng);
  EXPECT_TRUE(same_class(nu, nu * cob));
  auto line = generated_subgroup(g, {g->make({1, 0})});
  auto r = restrict_cocycle(nu, line);
  for (const auto& a : line->elements())
    for (const auto& b : line->elements()) EXPECT_TRUE(r(a, b).is_one());
  auto diag = generated_subgroup(g, {g->make({2, 2})});
  EXPECT_TRUE(is_coboundary(restrict_cocycle(cob, diag)).has_value());
  auto ext = extend_to_semidirect(symplectic_cocycle(make_alpha(2, 1), 1, 4), sl2_mod(4));
  auto sd = std::dynamic_pointer_cast<const SemidirectProduct>(ext.group_ptr());
  std::vector<GroupElement> gens;
  for (const auto& x : sd->normal().elements()) gens.push_back(sd->make(x, sd->acting().identity()));
  auto torus = generated_subgroup(ext.group_ptr(), gens);
  auto restricted = restrict_cocycle(ext, torus);
  auto base = symplectic_cocycle(make_alpha(2, 1), 1, 4);
  for (const auto& a : torus->elements())
    for (const auto& b : torus->elements())
      ASSERT_EQ(restricted(a, b), base(sd->translation(a), sd->translation(b)));
  EXPECT_THROW(restrict_cocycle(nu, torus), MismatchError);
}
