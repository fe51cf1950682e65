#include <gtest/gtest.h>

#include <array>
#include <random>
#include <vector>

#include "mfn/exactnum/cyclotomic.hpp"
#include "mfn/exactnum/finite_field.hpp"
#include "mfn/exactnum/number_theory.hpp"
#include "mfn/exactnum/reduction.hpp"

using namespace mfn;

namespace {

std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= n; ++i)
    if (prime[i])
      for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
  return prime;
}

bool power_of_by_multiplying(i64 base, i64 x) {
  for (i64 v = 1; v <= x; v *= base)
    if (v == x) return true;
  return false;
}

i64 brute_order(i64 a, i64 N) {
  i64 v = mod(a, N);
  for (i64 m = 1; m <= N; ++m) {
    if (mod(v, N) == 1 % N) return m;
    v = v * mod(a, N) % N;
  }
  return -1;
}

i64 sieve_find_prime(i64 l, int n, const std::vector<bool>& prime) {
  const i64 q = checked_pow(l, static_cast<unsigned>(n)) - 1;
  for (std::size_t p = 2; p < prime.size(); ++p) {
    const auto ip = static_cast<i64>(p);
    if (prime[p] && ip != l && (ip - 1) % q == 0 && !power_of_by_multiplying(l, ip - 1)) return ip;
  }
  return -1;
}

CyclotomicNumber random_cyclotomic(std::mt19937_64& rng, i64 order) {
  std::vector<mpz_class> counts(static_cast<std::size_t>(order));
  for (auto& c : counts) c = static_cast<long>(rng() % 7) - 3;
  return CyclotomicNumber::from_exponent_counts(order, counts, std::array<long, 3>{1, 11, 13}[rng() % 3]);
}

}  // namespace

TEST(NumberTheory, IsPrimeMatchesSieve) {
  const auto prime = sieve(20000);
  for (std::size_t n = 0; n < prime.size(); ++n) EXPECT_EQ(is_prime(static_cast<i64>(n)), prime[n]) << n;
}

TEST(NumberTheory, FindPrimeExamples) {
  EXPECT_EQ(find_prime(2, 2), 7);
  EXPECT_EQ(find_prime(2, 3), 29);
  EXPECT_EQ(find_prime(3, 2), 17);
}

TEST(NumberTheory, FindPrimeAgreesWithSieve) {
  const auto prime = sieve(200000);
  for (i64 l : {2, 3, 5, 7})
    for (int n = 1; n <= 6; ++n) {
      const i64 q = checked_pow(l, static_cast<unsigned>(n));
      if (q > 20000) continue;
      EXPECT_EQ(find_prime(l, n), sieve_find_prime(l, n, prime)) << "l=" << l << " n=" << n;
    }
}

TEST(NumberTheory, FindPrimeRespectsSearchBound) {
  EXPECT_THROW(find_prime(2, 2, 6), BoundExceeded);
  EXPECT_THROW(find_prime(4, 2), ParameterError);
  EXPECT_THROW(find_prime(2, 0), ParameterError);
}

TEST(NumberTheory, AdicValuation) {
  EXPECT_EQ(l_adic_valuation(2, 6), 1);
  EXPECT_EQ(l_adic_valuation(3, 16), 0);
  EXPECT_EQ(l_adic_valuation(2, 28), 2);
  for (i64 x = 1; x < 2000; ++x) {
    const int v = l_adic_valuation(3, x);
    const i64 pv = checked_pow(3, static_cast<unsigned>(v));
    EXPECT_EQ(x % pv, 0);
    EXPECT_NE(x % (pv * 3), 0);
  }
}

TEST(NumberTheory, MultiplicativeOrder) {
  EXPECT_EQ(multiplicative_order(2, 7), 3);
  EXPECT_EQ(multiplicative_order(5, 24), 2);
  EXPECT_EQ(multiplicative_order(12, 1), 1);
  for (i64 N = 2; N < 120; ++N)
    for (i64 a = 1; a < N; ++a)
      if (std::gcd(a, N) == 1) ASSERT_EQ(multiplicative_order(a, N), brute_order(a, N)) << a << " mod " << N;
  EXPECT_THROW(multiplicative_order(2, 6), ParameterError);
}

TEST(NumberTheory, PowerOf) {
  for (i64 x = 1; x < 5000; ++x) EXPECT_EQ(is_power_of(2, x), power_of_by_multiplying(2, x));
}

TEST(Cyclotomic, RootArithmetic) {
  const auto z4 = CyclotomicNumber::root_of_unity(4, 1);
  EXPECT_EQ(z4 * z4, CyclotomicNumber(-1L));
  EXPECT_EQ(CyclotomicNumber(1L) + CyclotomicNumber(0L), CyclotomicNumber(1L));
  const auto z3 = CyclotomicNumber::root_of_unity(3, 1);
  EXPECT_EQ(z3.inverse(), CyclotomicNumber::root_of_unity(3, 2));
  EXPECT_EQ(z3.conj(), CyclotomicNumber::root_of_unity(3, 2));
  EXPECT_EQ(z3 + z3 * z3, CyclotomicNumber(-1L));
}

TEST(Cyclotomic, SumOfAllRootsVanishes) {
  for (i64 N = 2; N <= 40; ++N) {
    CyclotomicNumber s(0L);
    for (i64 k = 0; k < N; ++k) s += CyclotomicNumber::root_of_unity(N, k);
    EXPECT_TRUE(s.is_zero()) << N;
  }
}

TEST(Cyclotomic, FieldLaws) {
  std::mt19937_64 rng(11);
  for (i64 order : {1, 3, 4, 5, 7, 8, 9, 12, 15}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_cyclotomic(rng, order);
      const auto b = random_cyclotomic(rng, order);
      const auto c = random_cyclotomic(rng, order);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a - a), CyclotomicNumber(0L));
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CyclotomicNumber(1L));
      EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    }
  }
}

TEST(Cyclotomic, MixedOrdersCompareByValue) {
  const auto z6 = CyclotomicNumber::root_of_unity(6, 1);
  EXPECT_EQ(z6, -CyclotomicNumber::root_of_unity(3, 2));
  EXPECT_EQ(CyclotomicNumber::root_of_unity(12, 4), CyclotomicNumber::root_of_unity(3, 1));
}

TEST(Cyclotomic, Descent) {
  const auto x = CyclotomicNumber::root_of_unity(12, 2);
  const auto d = x.descended(6);
  EXPECT_EQ(d.order(), 6);
  EXPECT_EQ(d, CyclotomicNumber::root_of_unity(6, 1));
  EXPECT_THROW(CyclotomicNumber::root_of_unity(12, 1).descended(6), ArithmeticError);
  EXPECT_THROW(x.descended(5), ParameterError);
  const auto r = (CyclotomicNumber::root_of_unity(10, 2) + CyclotomicNumber::root_of_unity(10, 8)).descended(5);
  EXPECT_EQ(r.order(), 5);
  EXPECT_EQ(r, CyclotomicNumber::root_of_unity(5, 1) + CyclotomicNumber::root_of_unity(5, 4));
}

TEST(FiniteField, ModulusIsLexSmallestIrreducible) {
  for (i64 l : {2, 3, 5})
    for (int m : {2, 3}) {
      const auto F = finite_field(l, m);
      const auto has_root = [l](const ffpoly::Poly& f) {
        for (i64 x = 0; x < l; ++x) {
          i64 v = 0;
          for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % l;
          if (v == 0) return true;
        }
        return false;
      };
      EXPECT_FALSE(has_root(F->modulus()));
      const i64 own_code = [&] {
        i64 code = 0;
        for (std::size_t i = static_cast<std::size_t>(m); i-- > 0;) code = code * l + (i < F->modulus().size() ? F->modulus()[i] : 0);
        return code;
      }();
      for (i64 code = 0; code < own_code; ++code) {
        auto f = ffpoly::from_code(code, l, static_cast<std::size_t>(m));
        f.push_back(1);
        EXPECT_TRUE(has_root(f)) << "smaller irreducible code " << code;
      }
    }
}

TEST(FiniteField, GeneratorAndFrobenius) {
  for (auto [l, m] : std::vector<std::pair<i64, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 6}, {3, 2}, {3, 4}, {5, 2}, {7, 3}}) {
    const auto F = finite_field(l, m);
    const auto g = FiniteFieldElement::generator(F);
    EXPECT_EQ(g.multiplicative_order(), F->size() - 1);
    std::mt19937_64 rng(static_cast<u64>(l * 100 + m));
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = FiniteFieldElement::from_code(F, static_cast<i64>(rng() % static_cast<u64>(F->size())));
      const auto b = FiniteFieldElement::from_code(F, static_cast<i64>(rng() % static_cast<u64>(F->size())));
      EXPECT_EQ(a.frobenius(1), a.pow(static_cast<u64>(l)));
      EXPECT_EQ(a.frobenius(m), a);
      EXPECT_EQ((a + b).frobenius(1), a.frobenius(1) + b.frobenius(1));
      EXPECT_EQ((a * b).frobenius(1), a.frobenius(1) * b.frobenius(1));
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Reduction, FourElementField) {
  const auto r = build_reduction(3, 2);
  EXPECT_EQ(r.field_degree(), 2);
  EXPECT_EQ(r.field()->size(), 4);
  EXPECT_EQ(r.zeta_image().multiplicative_order(), 3);
  const auto z3 = CyclotomicNumber::root_of_unity(3, 1);
  EXPECT_EQ(r.reduce(z3 + z3 * z3), r.reduce(CyclotomicNumber(-1L)));
}

TEST(Reduction, TrivialModulus) {
  const auto r = build_reduction(1, 5);
  EXPECT_EQ(r.field_degree(), 1);
  EXPECT_TRUE(r.zeta_image().is_one());
}

TEST(Reduction, RejectsBadInput) {
  EXPECT_THROW(build_reduction(6, 2), ParameterError);
  const auto r = build_reduction(3, 2);
  EXPECT_THROW(r.reduce(mpq_class(1, 2)), ArithmeticError);
  EXPECT_THROW(r.reduce(CyclotomicNumber::root_of_unity(5, 1)), ParameterError);
}

TEST(Reduction, IsARingHomomorphism) {
  std::mt19937_64 rng(5);
  for (auto [N, l] : std::vector<std::pair<i64, i64>>{{7, 2}, {15, 2}, {8, 3}, {16, 3}, {12, 5}}) {
    const auto r = build_reduction(N, l);
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_cyclotomic(rng, N);
      const auto b = random_cyclotomic(rng, N);
      EXPECT_EQ(r.reduce(a * b), r.reduce(a) * r.reduce(b));
      EXPECT_EQ(r.reduce(a + b), r.reduce(a) + r.reduce(b));
    }
    EXPECT_EQ(r.zeta_image().pow(static_cast<u64>(N)), FiniteFieldElement::one(r.field()));
    EXPECT_EQ(r.zeta_image().multiplicative_order(), N);
  }
}
