#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mfn/blocks/decomposition.hpp"
#include "mfn/blocks/idempotent.hpp"
#include "mfn/groups/checks.hpp"
#include "mfn/morita/cartan_permutation.hpp"

using namespace mfn;

namespace {

Construction at(int p, int l = 2, int t1 = 1, int t2 = 1) {
  return Construction(make_params(l, p, t1, t2, true));
}

CycloElement random_element(const Construction& c, std::mt19937_64& rng, i64 order, int terms) {
  CycloElement x(kGroupAlgebra);
  for (int i = 0; i < terms; ++i) {
    std::vector<mpz_class> counts(static_cast<std::size_t>(order));
    for (auto& v : counts) v = static_cast<long>(rng() % 5) - 2;
    x.add_term(detail::random_g(c, rng), CyclotomicNumber::from_exponent_counts(order, counts, 3));
  }
  return x;
}

mpz_class laplace_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return static_cast<long>(m[0][0]);
  mpz_class det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<i64> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const mpz_class term = static_cast<long>(m[0][j]) * laplace_det(minor);
    det += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return det;
}

std::size_t rank_by_span(const std::vector<std::vector<i64>>& rows, i64 l) {
  std::set<std::vector<i64>> span;
  const std::size_t r = rows.size();
  const std::size_t cols = r ? rows[0].size() : 0;
  u64 combos = 1;
  for (std::size_t i = 0; i < r; ++i) combos *= static_cast<u64>(l);
  for (u64 code = 0; code < combos; ++code) {
    std::vector<i64> v(cols, 0);
    u64 rest = code;
    for (std::size_t i = 0; i < r; ++i) {
      const i64 coef = static_cast<i64>(rest % static_cast<u64>(l));
      rest /= static_cast<u64>(l);
      for (std::size_t j = 0; j < cols; ++j) v[j] = mod(v[j] + coef * rows[i][j], l);
    }
    span.insert(v);
  }
  std::size_t rank = 0;
  for (std::size_t size = span.size(); size > 1; size /= static_cast<std::size_t>(l)) ++rank;
  return rank;
}

}  // namespace

TEST(Idempotents, TrivialCharacterAtSeven) {
  const auto c = at(7);
  const auto b = build_idempotent(c, z_character(c, 0));
  ASSERT_EQ(b.idempotent.terms().size(), 3u);
  for (const auto& [g, coefficient] : b.idempotent.terms()) {
    EXPECT_TRUE(c.in_subgroup(SubgroupTag::ZLprime, g));
    EXPECT_EQ(coefficient, CyclotomicNumber(mpq_class(1, 3)));
  }
}

TEST(Idempotents, LawsAtSevenAndTwentyNine) {
  for (int p : {7, 29}) {
    const auto c = at(p);
    const auto blocks = all_blocks(c);
    EXPECT_EQ(blocks.size(), c.order_Z_lprime());
    EXPECT_TRUE(check_idempotent_laws(c, blocks).passed) << p;
    EXPECT_TRUE(check_reduced_laws(c, blocks, block_reduction(c)).passed) << p;
  }
}

TEST(Idempotents, DirectConvolution) {
  const auto c = at(7);
  const auto blocks = all_blocks(c);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      // (sum a_z z)(sum b_w w) over the cyclic Z_{l'} written out by exponent
      std::map<int, CyclotomicNumber> product;
      for (const auto& [g, a] : blocks[i].idempotent.terms())
        for (const auto& [h, b] : blocks[j].idempotent.terms()) {
          const int r = (g.e.r + h.e.r) % 6;
          product[r] = product.count(r) ? product[r] + a * b : a * b;
        }
      CycloElement expected = i == j ? blocks[i].idempotent : CycloElement(kGroupAlgebra);
      CycloElement got(kGroupAlgebra);
      for (const auto& [r, v] : product) got.add_term(c.embed(c.z_element(r)), v);
      EXPECT_EQ(got, expected) << i << "," << j;
    }
}

TEST(Idempotents, TrivialZGivesOne) {
  const auto c = at(5);
  const auto blocks = all_blocks(c);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].idempotent, cyclo_one(c));
}

TEST(Reduction, OneAndProducts) {
  const auto c = at(7);
  const auto rmap = block_reduction(c);
  EXPECT_EQ(reduce_element(cyclo_one(c), rmap), reduced_one(c, rmap));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(c, rng, 3, 1 + static_cast<int>(rng() % 3));
    const auto y = random_element(c, rng, 3, 1 + static_cast<int>(rng() % 3));
    EXPECT_EQ(reduce_element(g_product(c, x, y), rmap), g_product(c, reduce_element(x, rmap), reduce_element(y, rmap)));
  }
}

TEST(Twist, PrimeFieldAndFullOrbit) {
  const auto c = at(7);
  const auto rmap = block_reduction(c);
  ReducedElement x(kGroupAlgebra);
  x.add_term(c.g_identity(), FiniteFieldElement::one(rmap.field()));
  x.add_term(c.embed(c.z_element(2)), FiniteFieldElement::one(rmap.field()));
  EXPECT_EQ(frobenius_twist(x, 1), x);
  for (const auto& b : all_blocks(c)) {
    const auto e = reduce_element(b.idempotent, rmap);
    EXPECT_EQ(frobenius_twist(e, rmap.field_degree()), e);
  }
  EXPECT_THROW(frobenius_twist(x, 0), ParameterError);
  EXPECT_THROW(frobenius_twist(cyclo_one(c), 1), ParameterError);
}

TEST(Twist, PermutesBlocks) {
  const auto c = at(7);
  const auto rmap = block_reduction(c);
  const auto theta = z_character(c, 1);
  EXPECT_EQ(frobenius_twist(reduce_element(build_idempotent(c, theta).idempotent, rmap), 1),
            reduce_element(build_idempotent(c, power(theta, 2)).idempotent, rmap));
  for (int p : {7, 29}) {
    const auto cp = at(p);
    const auto rp = block_reduction(cp);
    EXPECT_TRUE(check_twist_permutation(cp, all_blocks(cp), rp, rp.field_degree()).passed) << p;
  }
}

TEST(Partition, PassesWithPrimitivity) {
  for (int p : {3, 5, 7}) {
    const auto r = block_partition_check(at(p));
    EXPECT_TRUE(r.passed) << p;
    EXPECT_EQ(r.detail, "primitivity checked on the orbit-sum algebra");
  }
  const auto r29 = block_partition_check(at(29));
  EXPECT_TRUE(r29.passed);
  EXPECT_EQ(r29.detail, "primitivity skipped: D above bound");
}

TEST(Partition, OrbitSumAlgebraIsLocalByBruteForce) {
  // Enumerate k[D]^E for p = 3, l = 2 and count idempotents by direct convolution over F_2.
  const auto c = at(3);
  const auto ds = c.d_elements();
  const auto orbits = [&] {
    std::vector<std::set<std::size_t>> out;
    std::vector<char> seen(ds.size(), 0);
    const auto es = c.e_lprime_elements();
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (seen[i]) continue;
      std::set<std::size_t> o;
      for (const auto& e : es) o.insert(static_cast<std::size_t>(c.key(c.act_on_D(e, ds[i]))));
      for (auto j : o) seen[j] = 1;
      out.push_back(o);
    }
    return out;
  }();
  ASSERT_EQ(orbits.size(), 4u);
  int idempotents = 0;
  for (u64 mask = 0; mask < (1u << orbits.size()); ++mask) {
    std::vector<int> x(ds.size(), 0);
    for (std::size_t o = 0; o < orbits.size(); ++o)
      if (mask >> o & 1)
        for (auto j : orbits[o]) x[j] = 1;
    std::vector<int> sq(ds.size(), 0);
    for (std::size_t a = 0; a < ds.size(); ++a)
      for (std::size_t b = 0; b < ds.size(); ++b)
        if (x[a] && x[b]) sq[static_cast<std::size_t>(c.key(c.d_mul(ds[a], ds[b])))] ^= 1;
    if (sq == x) ++idempotents;
  }
  EXPECT_EQ(idempotents, 2);
  EXPECT_EQ(center_idempotent_count(c), 1u);
}

TEST(LinearAlgebra, RankModMatchesSpanCount) {
  std::mt19937_64 rng(12);
  for (i64 l : {2, 3, 5})
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 4, cols = 1 + rng() % 5;
      std::vector<std::vector<i64>> m(r, std::vector<i64>(cols));
      for (auto& row : m)
        for (auto& v : row) v = static_cast<i64>(rng() % static_cast<u64>(l));
      EXPECT_EQ(detail::rank_mod(m, l), rank_by_span(m, l));
    }
}

TEST(LinearAlgebra, BareissMatchesLaplace) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    IntMatrix m(n, std::vector<i64>(n));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<i64>(rng() % 9) - 4;
    EXPECT_EQ(bareiss_determinant(m), laplace_det(m));
  }
  EXPECT_TRUE(is_exact_power(2, 1024));
  EXPECT_TRUE(is_exact_power(3, 1));
  EXPECT_FALSE(is_exact_power(2, 12));
  EXPECT_FALSE(is_exact_power(2, 0));
}

TEST(Rank, ClosedForm) {
  EXPECT_EQ(block_rank_closed_form(at(7)), 1806336);
  EXPECT_EQ(block_rank_closed_form(at(5)), 6400);
}

TEST(Decomposition, MachineryScaleBothRoutes) {
  const auto c = at(5);
  const auto setup = build_clifford_setup(c);
  const auto phi = z_character(c, 0);
  const auto via_clifford = decomposition_via_clifford(setup, phi);
  const auto g = make_g_lprime_group(c);
  const auto gt = irr_small_group(g);
  const auto e = make_e_lprime_group(c);
  const auto et = irr_small_group(e);
  const auto via_tables = decomposition_via_tables(c, g, gt, e, et, phi);

  EXPECT_EQ(via_clifford.k(), 64u);
  EXPECT_EQ(via_clifford.l(), 25u);
  EXPECT_EQ(via_tables.k(), 64u);
  EXPECT_EQ(via_tables.l(), 25u);
  EXPECT_EQ(via_clifford.cartan, via_tables.cartan);
  auto rows_a = via_clifford.matrix, rows_b = via_tables.matrix;
  std::sort(rows_a.begin(), rows_a.end());
  std::sort(rows_b.begin(), rows_b.end());
  EXPECT_EQ(rows_a, rows_b);

  const auto rank = block_rank(c, &via_clifford);
  EXPECT_TRUE(rank.consistent());
  EXPECT_EQ(*rank.computed, 6400);

  const auto check = check_cartan(via_clifford, 2);
  EXPECT_TRUE(check.passed);
  EXPECT_EQ(check.detail, "det=1099511627776");
  for (std::size_t i = 0; i < 25; ++i) {
    EXPECT_EQ(via_clifford.cartan[i][i], 16);
    for (std::size_t j = 0; j < 25; ++j)
      if (i != j) EXPECT_TRUE(via_clifford.cartan[i][j] == 9 || via_clifford.cartan[i][j] == 12);
  }
}

TEST(Decomposition, TheoremScaleAtSeven) {
  const auto c = at(7);
  const auto setup = build_clifford_setup(c);
  const std::vector<std::tuple<i64, std::size_t, std::size_t, std::string>> expected{
      {0, 256, 25, "det=1267650600228229401496703205376"},
      {1, 128, 17, "det=4503599627370496"},
      {2, 128, 17, "det=4503599627370496"}};
  std::vector<IntMatrix> cartans;
  for (const auto& [k, rows, cols, det] : expected) {
    const auto data = decomposition_via_clifford(setup, z_character(c, k));
    EXPECT_EQ(data.k(), rows);
    EXPECT_EQ(data.l(), cols);
    EXPECT_EQ(data.degree_square_sum(), 1806336);
    const auto check = check_cartan(data, 2);
    EXPECT_TRUE(check.passed);
    EXPECT_EQ(check.detail, det);
    cartans.push_back(data.cartan);
  }
  EXPECT_TRUE(equal_up_to_permutation(cartans[1], cartans[2]));
}

TEST(Decomposition, CartanCheckCatchesCorruption) {
  const auto c = at(5);
  auto data = decomposition_via_clifford(build_clifford_setup(c), z_character(c, 0));
  data.cartan[0][1] += 1;
  const auto r = check_cartan(data, 2);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.counterexamples.empty());
}
