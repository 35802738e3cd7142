#include <gtest/gtest.h>

#include <set>

#include "tga/errors.hpp"
#include "tga/group.hpp"
#include "tga/scalar.hpp"

using namespace tga;

namespace {

std::size_t brute_sl2_count(std::int64_t q) {
  std::size_t n = 0;
  for (std::int64_t a = 0; a < q; ++a)
    for (std::int64_t b = 0; b < q; ++b)
      for (std::int64_t c = 0; c < q; ++c)
        for (std::int64_t d = 0; d < q; ++d) n += mod64(a * d - b * c, q) == 1;
  return n;
}

}  // namespace

TEST(Groups, Sl2Orders) {
  EXPECT_EQ(sl2_mod(2)->order(), 6u);
  EXPECT_EQ(sl2_mod(3)->order(), 24u);
  for (std::int64_t q = 2; q <= 12; ++q) {
    EXPECT_EQ(sl2_order(q), brute_sl2_count(q)) << q;
    EXPECT_EQ(sl2_mod(q)->order(), sl2_order(q));
  }
  EXPECT_TRUE(sl2_mod(5)->contains(sl2_mod(5)->identity()));
  EXPECT_THROW(sl2_mod(1), PreconditionError);
  EXPECT_THROW(sl2_mod(60, 1000), PreconditionError);
}

TEST(Groups, AxiomsSmall) {
  std::vector<FiniteGroupPtr> groups = {AbelianGroup::power(3, 2), sl2_mod(2), sl2_mod(3),
                                        std::make_shared<SemidirectProduct>(AbelianGroup::power(2, 2), sl2_mod(2)),
                                        std::make_shared<AbelianGroup>(std::vector<std::int64_t>{2, 6})};
  for (const auto& g : groups) {
    auto r = verify_group_axioms(*g);
    EXPECT_TRUE(r.ok()) << g->name() << ": " << r.witness;
    EXPECT_EQ(r.exhaustive, g->order() <= 200);
  }
  auto big = std::make_shared<SemidirectProduct>(AbelianGroup::power(4, 2), sl2_mod(4));
  auto r = verify_group_axioms(*big, 5, 200, 20000);
  EXPECT_TRUE(r.ok()) << r.witness;
  EXPECT_FALSE(r.exhaustive);
}

TEST(Groups, SemidirectStructure) {
  auto n = AbelianGroup::power(2, 2);
  auto s = std::make_shared<SemidirectProduct>(n, sl2_mod(2));
  EXPECT_EQ(s->order(), 24u);
  for (const auto& g : s->elements()) {
    GroupElement x = s->translation(g), gamma = s->linear_part(g);
    GroupElement ginv = s->acting().inverse(gamma);
    auto y = s->acting().act(ginv, x.to_vector());
    GroupElement expected = s->make(n->inverse(GroupElement(y)), ginv);
    ASSERT_EQ(s->inverse(g), expected);
    ASSERT_EQ(s->multiply(g, s->inverse(g)), s->identity());
  }
  for (std::int64_t q : {2, 3}) {
    auto nq = AbelianGroup::power(q, 2);
    auto sq = std::make_shared<SemidirectProduct>(nq, sl2_mod(q));
    for (const auto& gamma : sq->acting().elements())
      for (const auto& x : nq->elements()) {
        GroupElement lhs = sq->multiply(sq->multiply(sq->make(nq->identity(), gamma), sq->make(x, sq->acting().identity())),
                                        sq->inverse(sq->make(nq->identity(), gamma)));
        ASSERT_EQ(lhs, sq->make(GroupElement(sq->acting().act(gamma, x.to_vector())), sq->acting().identity()));
      }
  }
  auto trivial = matrix_group_mod(3, {IntMatrix::identity(2)});
  auto direct = std::make_shared<SemidirectProduct>(AbelianGroup::power(3, 2), trivial);
  EXPECT_EQ(direct->order(), 9u);
}

TEST(Groups, GeneratedMatrixGroups) {
  IntMatrix s{{0, -1}, {1, 0}}, t{{1, 1}, {0, 1}};
  for (std::int64_t q = 2; q <= 8; ++q) EXPECT_EQ(matrix_group_mod(q, {s, t})->order(), sl2_order(q));
  EXPECT_EQ(matrix_group_mod(4, {t})->order(), 4u);
  EXPECT_THROW(matrix_group_mod(4, {IntMatrix{{2, 0}, {0, 1}}}), PreconditionError);
  auto gl = matrix_group_mod(3, {IntMatrix{{1, 0}, {0, -1}}, s, t});
  EXPECT_EQ(gl->order(), 48u);
  auto sp4 = matrix_group_mod(2, {theta_embedding(t), theta_embedding(s),
                                   IntMatrix{{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  EXPECT_TRUE(verify_group_axioms(*sp4, 1, 0, 5000).ok());
}

TEST(Groups, SubgroupsAndTables) {
  auto g = sl2_mod(3);
  auto h = generated_subgroup(g, {g->make(IntMatrix{{1, 1}, {0, 1}})});
  EXPECT_EQ(h->order(), 3u);
  EXPECT_THROW(Subgroup(g, {g->identity(), g->make(IntMatrix{{1, 1}, {0, 1}})}), PreconditionError);
  std::vector<std::size_t> z3 = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  TableGroup t(3, z3);
  EXPECT_TRUE(verify_group_axioms(t).ok());
  EXPECT_EQ(t.inverse(GroupElement{1}), GroupElement{2});
  EXPECT_THROW(TableGroup(2, {0, 1, 1, 1}), PreconditionError);
}

TEST(Groups, LatticeGroups) {
  LatticeGroup z2(2);
  GroupElement a{3, -4}, b{-1, 7};
  EXPECT_EQ(z2.multiply(a, b), (GroupElement{2, 3}));
  EXPECT_EQ(z2.multiply(a, z2.inverse(a)), z2.identity());
  AffineLatticeGroup aff(2, {IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{0, -1}, {1, 0}}});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    GroupElement x = aff.sample(rng), y = aff.sample(rng), z = aff.sample(rng);
    ASSERT_EQ(aff.multiply(aff.multiply(x, y), z), aff.multiply(x, aff.multiply(y, z)));
    ASSERT_EQ(aff.multiply(x, aff.inverse(x)), aff.identity());
  }
}
