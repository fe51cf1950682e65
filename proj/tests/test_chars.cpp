#include <gtest/gtest.h>

#include <map>
#include <random>

#include "mfn/chars/character_table.hpp"
#include "mfn/chars/clifford.hpp"
#include "mfn/chars/dkernel.hpp"
#include "mfn/chars/induction.hpp"
#include "mfn/chars/linear_character.hpp"
#include "mfn/groups/checks.hpp"

using namespace mfn;

namespace {

Construction at(int p, int l = 2, int t1 = 1, int t2 = 1) {
  return Construction(make_params(l, p, t1, t2, true));
}

std::map<long, int> degree_multiset(const CharacterTable& t) {
  std::map<long, int> m;
  for (const auto& d : t.degrees()) ++m[d.get_si()];
  return m;
}

// Trial stability under translation by 1 and scaling by lambda, written without the library's orbit code.
u64 brute_stable_count(int l, int p, int t) {
  const int q = static_cast<int>(checked_pow(l, static_cast<unsigned>(t)));
  const int lambda = static_cast<int>(primitive_root(p));
  u64 total = 1;
  for (int i = 0; i < p; ++i) total *= static_cast<u64>(q);
  u64 stable = 0;
  std::vector<int> u(static_cast<std::size_t>(p));
  for (u64 idx = 0; idx < total; ++idx) {
    u64 rest = idx;
    for (auto& x : u) {
      x = static_cast<int>(rest % static_cast<u64>(q));
      rest /= static_cast<u64>(q);
    }
    bool ok = true;
    for (int i = 0; i < p && ok; ++i) {
      ok = u[static_cast<std::size_t>((i + 1) % p)] == u[static_cast<std::size_t>(i)] &&
           u[static_cast<std::size_t>(i * lambda % p)] == u[static_cast<std::size_t>(i)];
    }
    if (ok) ++stable;
  }
  return stable;
}

}  // namespace

TEST(LinearCharacters, AbelianEnumeration) {
  const auto c = at(7);
  const auto z = irr_abelian(c, CharacterDomain::ZLprime);
  EXPECT_EQ(z.size(), 3u);
  EXPECT_TRUE(std::any_of(z.begin(), z.end(), [](const LinearCharacter& x) { return x.is_trivial(); }));
  EXPECT_EQ(irr_abelian(at(3), CharacterDomain::D).size(), 16u);
  EXPECT_EQ(irr_abelian(c, CharacterDomain::P).size(), 49u);
  EXPECT_EQ(irr_abelian(c, CharacterDomain::Lambda, 2).size(), 4u);
}

TEST(LinearCharacters, OrthogonalityOverZ) {
  const auto c = at(29);
  const auto chars = irr_abelian(c, CharacterDomain::ZLprime);
  const auto zs = c.z_lprime_elements();
  for (const auto& a : chars)
    for (const auto& b : chars) {
      CyclotomicNumber s(0L);
      for (const auto& z : zs) s += evaluate(c, a, z) * evaluate(c, b, z).conj();
      EXPECT_EQ(s, CyclotomicNumber(a == b ? static_cast<long>(zs.size()) : 0L));
    }
}

TEST(LinearCharacters, ActionFixesTrivialAndIdentity) {
  const auto c = at(5);
  std::mt19937_64 rng(4);
  const auto chars = irr_abelian(c, CharacterDomain::D);
  const LinearCharacter trivial = chars.front();
  ASSERT_TRUE(trivial.is_trivial());
  for (int i = 0; i < 50; ++i) {
    const EElement e = detail::random_e(c, rng, true);
    EXPECT_EQ(character_action(c, e, trivial), trivial);
    const auto& chi = chars[rng() % chars.size()];
    EXPECT_EQ(character_action(c, c.e_identity(), chi), chi);
  }
}

TEST(LinearCharacters, ActionIsContragredient) {
  const auto c = at(5);
  std::mt19937_64 rng(8);
  const auto chars = irr_abelian(c, CharacterDomain::D);
  for (int i = 0; i < 200; ++i) {
    const auto& chi = chars[rng() % chars.size()];
    const EElement e = detail::random_e(c, rng, true);
    const DElement d = detail::random_d(c, rng);
    // (e.chi)(d) = chi(e^-1 . d)
    EXPECT_EQ(evaluate(character_action(c, e, chi), d), evaluate(chi, c.act_on_D(c.e_inverse(e), d)));
  }
}

TEST(LinearCharacters, OrbitsPartitionIrrD) {
  const auto orbits = d_character_orbits(at(3));
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& o : orbits) {
    sizes.push_back(o.size());
    total += o.size();
  }
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(total, 16u);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 3, 9}));
}

TEST(FpStable, SmallCases) {
  const auto r3 = fp_stable_characters(at(3), 1);
  EXPECT_EQ(r3.total, 8u);
  EXPECT_EQ(r3.stable.size(), 2u);
  EXPECT_TRUE(r3.check.passed);
  const auto r5 = fp_stable_characters(at(5), 1);
  EXPECT_EQ(r5.stable.size(), 2u);
  EXPECT_TRUE(std::any_of(r5.stable.begin(), r5.stable.end(), [](const LinearCharacter& x) { return x.is_trivial(); }));
}

TEST(FpStable, MatchesBruteForce) {
  for (auto [l, p] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}})
    for (int t : {1, 2}) {
      const auto rep = fp_stable_characters(at(p, l), t);
      EXPECT_TRUE(rep.check.passed);
      EXPECT_EQ(rep.stable.size(), brute_stable_count(l, p, t)) << l << " " << p << " " << t;
      EXPECT_EQ(rep.stable.size(), static_cast<std::size_t>(checked_pow(l, static_cast<unsigned>(t))));
    }
}

TEST(Stabilizers, TrivialCharacterAndFirstFactor) {
  const auto c = at(7);
  const auto chars = irr_abelian(c, CharacterDomain::D);
  EXPECT_EQ(stabilizer_in_P(c, chars.front()), StabilizerTag::P);
  for (const auto& theta : chars) {
    const auto second = d_second(theta, 7);
    const bool second_trivial = std::all_of(second.begin(), second.end(), [](int u) { return u == 0; });
    if (theta.is_trivial() || !second_trivial) continue;
    const auto tag = stabilizer_in_P(c, theta);
    EXPECT_TRUE(tag == StabilizerTag::P2 || tag == StabilizerTag::Trivial);
  }
}

TEST(Stabilizers, TrichotomyExhaustive) {
  const auto r = check_stabilizer_trichotomy(at(7));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.checked, 4095u);
}

TEST(CharacterTables, CyclicGroup) {
  const auto g = make_cyclic_group(6);
  const auto t = irr_small_group(g);
  EXPECT_EQ(t.characters.size(), 6u);
  for (const auto& chi : t.characters) EXPECT_EQ(chi.degree(), 1);
  EXPECT_TRUE(check_first_orthogonality(t.characters).passed);
}

TEST(CharacterTables, ELprimeAtSeven) {
  const auto c = at(7);
  const auto e = make_e_lprime_group(c);
  const auto t = irr_small_group(e);
  EXPECT_EQ(t.characters.size(), 59u);
  EXPECT_EQ(sum_of_squared_degrees(t.characters), 1323);
  EXPECT_EQ(degree_multiset(t), (std::map<long, int>{{1, 9}, {3, 38}, {9, 12}}));
  EXPECT_TRUE(check_first_orthogonality(t.characters).passed);
  EXPECT_TRUE(check_second_orthogonality(t.characters).passed);
}

TEST(CharacterTables, BoundIsEnforced) {
  EXPECT_THROW(irr_small_group(make_cyclic_group(40), 10), BoundExceeded);
}

TEST(Induction, TrivialCharacters) {
  const auto c = at(7);
  const auto e = make_e_lprime_group(c);
  const auto ec = conjugacy_classes(e);
  const auto z = e.subgroup("Z_l'", [&c](const EElement& x) { return c.in_subgroup(SubgroupTag::ZLprime, x); });
  const auto zc = conjugacy_classes(z);
  const auto emb = make_embedding(z, zc, e, ec);
  EXPECT_EQ(restrict_to(trivial_character(ec), emb), trivial_character(zc));
  const auto induced = induce_restrict(trivial_character(zc), emb, InductionDirection::Up);
  EXPECT_EQ(induced.degree(), 441);
}

TEST(Induction, FrobeniusReciprocity) {
  const auto c = at(7);
  const auto e = make_e_lprime_group(c);
  const auto et = irr_small_group(e);
  const auto p = e.subgroup("PZ", [&c](const EElement& x) { return x.m == 0 && x.n == 0 && c.is_lprime_exponent(x.r); });
  const auto pt = irr_small_group(p);
  const auto emb = make_embedding(p, pt.classes, e, et.classes);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto& psi = pt.characters[rng() % pt.characters.size()];
    const auto& chi = et.characters[rng() % et.characters.size()];
    EXPECT_EQ(inner_product(induce_from(psi, emb), chi), inner_product(psi, restrict_to(chi, emb)));
  }
}

TEST(Clifford, TrivialOrbitInflatesIrrE) {
  const auto c = at(7);
  const auto setup = build_clifford_setup(c);
  const auto& first = setup.orbits.front();
  EXPECT_TRUE(first.orbit_rep.is_trivial());
  EXPECT_EQ(first.orbit_size, 1u);
  EXPECT_EQ(first.constituents.size(), setup.e_table.characters.size());
  mpz_class total = 0;
  for (const auto& o : setup.orbits)
    for (std::size_t i = 0; i < o.constituents.size(); ++i) total += o.induced_degree(i) * o.induced_degree(i);
  EXPECT_EQ(total, c.order_G_lprime());
  EXPECT_EQ(setup.orbits.size(), 36u);
  EXPECT_EQ(setup.character_count(), 512u);
}

TEST(Clifford, MachineryScaleMatchesGenericTable) {
  const auto c = at(5);
  const auto setup = build_clifford_setup(c);
  EXPECT_EQ(setup.orbits.size(), 16u);
  for (const auto& o : setup.orbits) {
    if (o.orbit_size == 5) {
      for (std::size_t i = 0; i < o.constituents.size(); ++i) EXPECT_EQ(o.induced_degree(i), 5);
    }
  }
  const auto g = make_g_lprime_group(c);
  const auto gt = irr_small_group(g);
  const auto clifford = irr_G_via_clifford(setup, g, gt.classes);
  EXPECT_EQ(sum_of_squared_degrees(clifford), 6400);
  EXPECT_EQ(sum_of_squared_degrees(gt.characters), 6400);
  EXPECT_TRUE(check_clifford_norms(clifford).passed);
  EXPECT_TRUE(check_first_orthogonality(clifford).passed);
  ASSERT_EQ(clifford.size(), gt.characters.size());
  for (std::size_t i = 0; i < clifford.size(); ++i) EXPECT_EQ(clifford[i], gt.characters[i]) << i;
}

TEST(DKernel, FullCheckAtMachineryScale) {
  const auto c = at(5);
  const auto g = make_g_lprime_group(c);
  const auto gt = irr_small_group(g);
  const auto e = make_e_lprime_group(c);
  const auto ec = conjugacy_classes(e);
  const auto r = check_dkernel_full(c, g, gt.characters, e, ec);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.checked, 64u);
}

TEST(DKernel, RestrictionDichotomyAtSeven) {
  const auto c = at(7);
  const auto e = make_e_lprime_group(c);
  const auto r = check_restriction_dichotomy(c, e, irr_small_group(e));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.checked, 118u);
}
