#include <gtest/gtest.h>

#include <numeric>

#include "mfn/groups/automorphism.hpp"
#include "mfn/groups/checks.hpp"
#include "mfn/groups/concrete_group.hpp"
#include "mfn/groups/construction.hpp"
#include "mfn/groups/params.hpp"

using namespace mfn;

namespace {

Construction at(int p, int l = 2, int t1 = 1, int t2 = 1) {
  return Construction(make_params(l, p, t1, t2, true));
}

}  // namespace

TEST(Params, HypothesisGate) {
  EXPECT_THROW(make_params(2, 5, 1, 1), ParameterError);
  EXPECT_THROW(make_params(2, 3, 1, 1), ParameterError);
  EXPECT_NO_THROW(make_params(2, 5, 1, 1, true));
  EXPECT_THROW(make_params(2, 2, 1, 1, true), ParameterError);
  EXPECT_THROW(make_params(2, 9, 1, 1), ParameterError);
  EXPECT_THROW(make_params(2, 7, 0, 1), ParameterError);
}

TEST(Params, DerivedFields) {
  const auto p7 = make_params(2, 7, 1, 2);
  EXPECT_EQ(p7.a, 1);
  EXPECT_EQ(p7.lambda, 3);
  EXPECT_EQ(p7.z_lprime_order(), 3);
  const auto p29 = make_params(2, 29, 1, 2);
  EXPECT_EQ(p29.a, 2);
  EXPECT_EQ(p29.z_lprime_order(), 7);
  const auto p17 = make_params(3, 17, 1, 2);
  EXPECT_EQ(p17.a, 0);
  EXPECT_EQ(p17.z_lprime_order(), 16);
}

TEST(Multiplication, Examples) {
  const auto c = at(7);
  const EElement e = c.e_identity();
  const EElement g = c.e_from_values(2, 5, 3, 6, 2);
  EXPECT_EQ(c.e_mul(e, g), g);
  EXPECT_EQ(c.e_mul(c.e_from_values(1, 0, 3, 1, 1), c.e_from_values(1, 0, 1, 1, 1)), c.e_from_values(4, 0, 3, 1, 1));
  const auto c5 = at(5);
  EXPECT_EQ(c5.f_mul(c5.f_from_values(1, 2), c5.f_from_values(3, 4)), c5.f_from_values(2, 3));
}

TEST(Multiplication, ActionOnFp) {
  const auto c = at(7);
  for (int y = 0; y < 7; ++y) EXPECT_EQ(c.f_act(c.f_from_values(0, 1), y), y);
  EXPECT_EQ(c.f_act(c.f_from_values(1, 1), 0), 1);
  EXPECT_EQ(c.f_act(c.f_from_values(2, 3), 4), 0);
}

TEST(Projection, KernelAndDisplay) {
  const auto c = at(7);
  for (int mu = 1; mu < 7; ++mu) {
    const auto [f1, f2] = c.e_to_f_pair(c.e_from_values(0, 0, 1, 1, mu));
    EXPECT_EQ(f1, c.f_from_values(0, 1));
    EXPECT_EQ(f2, c.f_from_values(0, 1));
  }
  const auto [f1, f2] = c.e_to_f_pair(c.e_from_values(3, 5, 2, 4, 6));
  EXPECT_EQ(f1, c.f_from_values(3, 2));
  EXPECT_EQ(f2, c.f_from_values(5, 4));
}

TEST(Projection, IsAHomomorphism) {
  EXPECT_TRUE(verify_projection(at(5)).passed);
}

TEST(ActionOnD, TrivialActions) {
  const auto c = at(5);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const DElement d = detail::random_d(c, rng);
    EXPECT_EQ(c.act_on_D(c.e_identity(), d), d);
    EXPECT_EQ(c.act_on_D(c.z_element(static_cast<int>(rng() % 4)), d), d);
  }
}

TEST(ActionOnD, TranslationShiftsFirstFactor) {
  const auto c = at(3);
  const DElement d{{1, 1, 0}, {0, 1, 1}};
  const EElement e = c.e_from_values(1, 0, 1, 1, 1);
  const DElement image = c.act_on_D(e, d);
  EXPECT_EQ(image.first, (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(image.second, d.second);
}

TEST(Commutator, Basics) {
  const auto c = at(7);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const EElement g = detail::random_e(c, rng, false);
    EXPECT_EQ(c.e_commutator(g, g), c.e_identity());
    EXPECT_EQ(c.e_commutator(g, c.e_identity()), c.e_identity());
  }
}

TEST(Commutator, LiftsOfLambda) {
  const auto c = at(7);
  const FElement f = c.f_from_values(0, 3);
  for (int r1 = 0; r1 < 6; ++r1)
    for (int r2 = 0; r2 < 6; ++r2) {
      EXPECT_EQ(c.e_commutator(c.lift_first(f, r1), c.lift_second(f, r2)), c.e_from_values(0, 0, 1, 1, 5));
    }
}

TEST(Commutator, RelationExhaustive) {
  for (int p : {5, 7}) {
    const auto r = verify_comm_relation(at(p));
    EXPECT_TRUE(r.passed) << p;
    EXPECT_TRUE(r.counterexamples.empty());
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Commutator, FaithfulZ) {
  for (int p : {5, 7}) EXPECT_TRUE(verify_faithful(at(p)).passed) << p;
}

TEST(Subgroups, Membership) {
  const auto c = at(7);
  for (auto tag : {SubgroupTag::ELprime, SubgroupTag::ZLprime, SubgroupTag::Z, SubgroupTag::P1, SubgroupTag::P2,
                   SubgroupTag::P, SubgroupTag::D, SubgroupTag::Lambda}) {
    EXPECT_TRUE(c.in_subgroup(tag, c.e_identity()));
  }
  EXPECT_TRUE(c.in_subgroup(SubgroupTag::ELprime, c.e_from_values(0, 0, 2, 1, 1)));
  EXPECT_FALSE(c.in_subgroup(SubgroupTag::ELprime, c.e_from_values(0, 0, 3, 1, 1)));
  EXPECT_EQ(c.order_Z_lprime(), 3u);
  EXPECT_EQ(c.z_lprime_elements().size(), 3u);
  EXPECT_EQ(c.order_E_lprime(), 1323u);
  EXPECT_EQ(c.e_lprime_elements().size(), 1323u);
  EXPECT_EQ(c.order_D(), mpz_class(4096));
}

TEST(Groups, LawsAndOrders) {
  for (int p : {5, 7}) {
    const auto c = at(p);
    EXPECT_TRUE(verify_group_laws(c, 20'000).passed) << p;
    EXPECT_TRUE(verify_action(c, 5'000).passed) << p;
    EXPECT_TRUE(verify_orders(c).passed) << p;
  }
}

TEST(Automorphisms, IdentityAndSwap) {
  const auto c = at(7);
  const auto id = AutomorphismSpec::conjugation(c.e_identity());
  const auto swap = AutomorphismSpec::swap();
  for (const auto& e : c.e_lprime_elements()) {
    EXPECT_EQ(apply_automorphism(c, id, e), e);
    EXPECT_EQ(apply_automorphism(c, swap, apply_automorphism(c, swap, e)), e);
  }
  EXPECT_EQ(apply_automorphism(c, swap, EElement{1, 2, 3, 4, 5}), (EElement{2, 1, 4, 3, (12 - 5) % 6}));
}

TEST(Automorphisms, StandardOnesVerify) {
  const auto c = at(7);
  for (const auto& spec : standard_automorphisms(c)) EXPECT_TRUE(verify_automorphism(c, spec).passed) << spec.describe();
}

TEST(Automorphisms, SwapNeedsEqualLevels) {
  const auto c = at(7, 2, 1, 2);
  EXPECT_THROW(apply_automorphism(c, AutomorphismSpec::swap(), c.e_identity()), ParameterError);
}

TEST(ConjugacyClasses, AbelianGroupsHaveSingletons) {
  const auto g = make_cyclic_group(12);
  const auto cs = conjugacy_classes(g);
  EXPECT_EQ(cs->count(), 12u);
  for (auto s : cs->sizes) EXPECT_EQ(s, 1u);
}

TEST(ConjugacyClasses, CountMatchesCommutingPairs) {
  const auto c = at(7);
  const auto g = make_e_lprime_group(c);
  const auto cs = conjugacy_classes(g);
  EXPECT_EQ(std::accumulate(cs->sizes.begin(), cs->sizes.end(), u64{0}), g.order());
  u64 commuting = 0;
  for (const auto& a : g.elements())
    for (const auto& b : g.elements())
      if (g.mul(a, b) == g.mul(b, a)) ++commuting;
  EXPECT_EQ(commuting % g.order(), 0u);
  EXPECT_EQ(cs->count(), commuting / g.order());
  EXPECT_EQ(cs->count(), 59u);
}

TEST(ConjugacyClasses, BoundIsEnforced) {
  const auto g = make_cyclic_group(50);
  EXPECT_THROW(conjugacy_classes(g, 10), BoundExceeded);
}
