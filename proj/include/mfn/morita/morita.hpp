#pragma once

// Morita classification of the blocks B_phi, Morita-Frobenius numbers and the rank inequality.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mfn/blocks/decomposition.hpp"
#include "mfn/blocks/idempotent.hpp"
#include "mfn/chars/linear_character.hpp"
#include "mfn/exactnum/number_theory.hpp"
#include "mfn/morita/cartan_permutation.hpp"

namespace mfn {

enum class MoritaReason { SamePhi, InverseSwap, ClassifiedDistinct };

inline std::string to_string(MoritaReason r) {
  switch (r) {
    case MoritaReason::SamePhi: return "samePhi";
    case MoritaReason::InverseSwap: return "inverseSwap";
    case MoritaReason::ClassifiedDistinct: return "classifiedDistinct";
  }
  return "?";
}

struct BlockInvariants {
  u64 k = 0;
  u64 l = 0;
  mpz_class rank;
  IntMatrix cartan;
};

inline BlockInvariants invariants_of(const DecompositionData& data) {
  return {data.k(), data.l(), data.degree_square_sum(), data.cartan};
}

struct InvariantComparison {
  bool k_equal = false;
  bool l_equal = false;
  bool rank_equal = false;
  bool cartan_equal = false;

  bool all_agree() const { return k_equal && l_equal && rank_equal && cartan_equal; }
};

inline InvariantComparison compare_invariants(const BlockInvariants& a, const BlockInvariants& b) {
  InvariantComparison cmp;
  cmp.k_equal = a.k == b.k;
  cmp.l_equal = a.l == b.l;
  cmp.rank_equal = a.rank == b.rank;
  cmp.cartan_equal = equal_up_to_permutation(a.cartan, b.cartan);
  return cmp;
}

struct MoritaVerdict {
  BlockDescriptor block_a;
  BlockDescriptor block_b;
  bool equivalent = false;
  MoritaReason reason = MoritaReason::ClassifiedDistinct;
  std::optional<InvariantComparison> invariants;

  /// Equivalent blocks must agree on every computed invariant.
  bool consistent() const { return !equivalent || !invariants || invariants->all_agree(); }

  std::string status() const {
    if (!consistent()) return "inconsistent: equivalent blocks with different invariants";
    if (equivalent) return reason == MoritaReason::SamePhi ? "identical blocks" : "equivalent via the swap automorphism";
    return invariants ? "classified by paper, invariants consistent" : "classified by paper";
  }
};

/// B_a ~ B_b iff phi_a = phi_b, or t1 = t2 and phi_b = phi_a^-1. Inequivalence is taken from the classification.
inline MoritaVerdict morita_equivalent(const BlockDescriptor& a, const BlockDescriptor& b,
                                      const BlockInvariants* inv_a = nullptr, const BlockInvariants* inv_b = nullptr) {
  if (!(a.params == b.params)) throw ParameterError("morita_equivalent: blocks come from different parameters");
  MoritaVerdict v{a, b, false, MoritaReason::ClassifiedDistinct, std::nullopt};
  if (a.phi == b.phi) {
    v.equivalent = true;
    v.reason = MoritaReason::SamePhi;
  } else if (a.params.t1 == a.params.t2 && inverse(a.phi) == b.phi) {
    v.equivalent = true;
    v.reason = MoritaReason::InverseSwap;
  }
  if (inv_a && inv_b) v.invariants = compare_invariants(*inv_a, *inv_b);
  return v;
}

// ---- Morita-Frobenius numbers --------------------------------------------------------

struct MfnResult {
  ConstructionParams params;
  LinearCharacter theta;
  i64 mfn = 1;
  std::vector<LinearCharacter> orbit;  // theta^(l^m), m = 0, ..., mfn - 1
  bool via_inverse_swap = false;
};

/// Smallest m >= 1 with theta^(l^m) = theta, or t1 = t2 and theta^(l^m) = theta^-1.
inline MfnResult morita_frobenius_number(const Construction& c, const LinearCharacter& theta) {
  if (theta.domain != CharacterDomain::ZLprime) throw ParameterError("mfn needs a character of Z_l'");
  MfnResult r{c.params(), theta, 0, {theta}, false};
  const bool swap_allowed = c.params().t1 == c.params().t2;
  const LinearCharacter inv = inverse(theta);
  LinearCharacter current = theta;
  for (i64 m = 1;; ++m) {
    current = power(current, c.l());
    if (current == theta || (swap_allowed && current == inv)) {
      r.mfn = m;
      r.via_inverse_swap = !(current == theta);
      return r;
    }
    r.orbit.push_back(current);
  }
}

struct TheoremInstance {
  int n = 1;
  ConstructionParams params;
  LinearCharacter phi;    // canonical faithful character of Z_{l'}
  LinearCharacter theta;  // phi^((p-1)/(l^a (l^n - 1)))
  MfnResult result;
  CheckResult check;      // post-hoc validation of p and of ord(theta)

  bool matches() const { return check.passed && result.mfn == n; }
};

/// p = find_prime(l, n), t = (1, 2), theta of order l^n - 1.
inline TheoremInstance construct_theorem_instance(int l, int n, i64 prime_bound = kDefaultPrimeSearchBound) {
  const i64 p = find_prime(l, n, prime_bound);
  TheoremInstance inst;
  inst.n = n;
  inst.params = make_params(l, static_cast<int>(p), 1, 2, false, n);
  const Construction c(inst.params);
  const i64 target = checked_pow(l, static_cast<unsigned>(n)) - 1;
  const auto N = static_cast<i64>(c.order_Z_lprime());
  inst.check.name = "theorem instance";
  inst.check.require(is_prime(p) && p != l, "p is not an admissible prime");
  inst.check.require((p - 1) % target == 0 && N % target == 0, "l^n - 1 does not divide |Z_l'|");
  inst.check.require(inst.params.satisfies_standing_hypothesis(), "p - 1 is a power of l");
  inst.phi = z_character(c, 1);
  inst.check.require(inst.phi.order() == N, "phi is not faithful");
  inst.theta = power(inst.phi, N / target);
  inst.check.require(inst.theta.order() == target, "theta has order " + std::to_string(inst.theta.order()));
  inst.result = morita_frobenius_number(c, inst.theta);
  inst.check.require(inst.result.mfn == n, "mfn = " + std::to_string(inst.result.mfn) + " differs from n");
  return inst;
}

// ---- rank inequality -------------------------------------------------------------------

struct RankBoundReport {
  mpz_class rank;
  bool identity_ok = false;
  bool sorted_equality_case_ok = false;  // sorted pairing reaches rank iff the degree multisets agree
  u64 samples = 0;
  u64 violations = 0;
  std::vector<std::string> witnesses;
  bool passed() const { return identity_ok && sorted_equality_case_ok && violations == 0; }
};

/// sum chi(1) sigma(chi)(1) <= rank for bijections sigma between the degree lists of two blocks of equal rank.
inline RankBoundReport rank_bound_check(const std::vector<mpz_class>& degrees_a, const std::vector<mpz_class>& degrees_b,
                                        u64 samples = 1000, u64 seed = 7) {
  mpz_class ra = 0, rb = 0;
  for (const auto& d : degrees_a) ra += d * d;
  for (const auto& d : degrees_b) rb += d * d;
  if (ra != rb) throw ParameterError("rank_bound_check: ranks differ (" + ra.get_str() + " vs " + rb.get_str() + ")");
  if (degrees_a.size() != degrees_b.size()) throw ParameterError("rank_bound_check: no bijection between the character sets");
  RankBoundReport rep;
  rep.rank = ra;
  const auto pairing = [&](const std::vector<std::size_t>& sigma) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) s += degrees_a[i] * degrees_b[sigma[i]];
    return s;
  };
  std::vector<std::size_t> sigma(degrees_a.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
  rep.identity_ok = pairing(sigma) <= ra;

  auto sa = degrees_a, sb = degrees_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  mpz_class sorted_sum = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) sorted_sum += sa[i] * sb[i];
  rep.sorted_equality_case_ok = sorted_sum <= ra && ((sorted_sum == ra) == (sa == sb));

  std::mt19937_64 rng(seed);
  for (u64 s = 0; s < samples; ++s) {
    for (std::size_t i = sigma.size(); i > 1; --i) std::swap(sigma[i - 1], sigma[static_cast<std::size_t>(rng() % i)]);
    ++rep.samples;
    const mpz_class value = pairing(sigma);
    if (value > ra) {
      ++rep.violations;
      if (rep.witnesses.size() < CheckResult::kMaxCounterexamples) rep.witnesses.push_back("sample " + std::to_string(s) + ": " + value.get_str());
    }
  }
  return rep;
}

}  // namespace mfn
