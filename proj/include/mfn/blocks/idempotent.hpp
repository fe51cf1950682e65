#pragma once

// Block idempotents e_phi of O G_{l'} supported on Z_{l'}, their reductions and Frobenius twists.

#include <string>
#include <vector>

#include "mfn/blocks/algebra.hpp"
#include "mfn/chars/linear_character.hpp"
#include "mfn/check_result.hpp"
#include "mfn/exactnum/finite_field.hpp"
#include "mfn/exactnum/reduction.hpp"
#include "mfn/groups/construction.hpp"

namespace mfn {

using CycloElement = AlgebraElement<GElement, CyclotomicNumber>;
using ReducedElement = AlgebraElement<GElement, FiniteFieldElement>;

inline const std::string kGroupAlgebra = "G_l'";

struct BlockDescriptor {
  ConstructionParams params;
  LinearCharacter phi;
  CycloElement idempotent;
};

template <class Scalar>
AlgebraElement<GElement, Scalar> g_product(const Construction& c, const AlgebraElement<GElement, Scalar>& a,
                                           const AlgebraElement<GElement, Scalar>& b) {
  return a.multiply(b, [&c](const GElement& x, const GElement& y) { return c.g_mul(x, y); });
}

inline CycloElement cyclo_one(const Construction& c) {
  return CycloElement::basis(kGroupAlgebra, c.g_identity(), CyclotomicNumber(1L));
}

inline ReducedElement reduced_one(const Construction& c, const ReductionMap& rmap) {
  return ReducedElement::basis(kGroupAlgebra, c.g_identity(), FiniteFieldElement::one(rmap.field()));
}

/// e_phi = |Z_{l'}|^-1 sum_z phi(z^-1) z.
inline BlockDescriptor build_idempotent(const Construction& c, const LinearCharacter& phi) {
  if (phi.domain != CharacterDomain::ZLprime) throw ParameterError("block idempotents are indexed by Irr(Z_l')");
  const auto N = static_cast<long>(c.order_Z_lprime());
  const CyclotomicNumber inv_n(mpq_class(1, N));
  CycloElement e(kGroupAlgebra);
  for (const auto& z : c.z_lprime_elements()) {
    e.add_term(c.embed(z), evaluate(c, phi, c.e_inverse(z)) * inv_n);
  }
  return {c.params(), phi, std::move(e)};
}

/// One descriptor per phi_k, k = 0, ..., |Z_{l'}| - 1.
inline std::vector<BlockDescriptor> all_blocks(const Construction& c) {
  std::vector<BlockDescriptor> out;
  for (u64 k = 0; k < c.order_Z_lprime(); ++k) out.push_back(build_idempotent(c, z_character(c, static_cast<i64>(k))));
  return out;
}

/// Reduction to F_{l^m} with m = ord_{|Z_{l'}|}(l), the smallest field holding every phi.
inline ReductionMap block_reduction(const Construction& c) {
  return build_reduction(static_cast<i64>(c.order_Z_lprime()), c.l());
}

inline ReducedElement reduce_element(const CycloElement& x, const ReductionMap& rmap) {
  return x.map_coefficients([&rmap](const CyclotomicNumber& v) { return rmap.reduce(v); });
}

/// sum a_g g -> sum a_g^(l^m) g.
inline ReducedElement frobenius_twist(const ReducedElement& x, i64 m) {
  if (m < 1) throw ParameterError("frobenius_twist: m must be positive");
  return x.map_coefficients([m](const FiniteFieldElement& v) { return v.frobenius(m); });
}

inline ReducedElement frobenius_twist(const CycloElement&, i64) {
  throw ParameterError("frobenius_twist: reduce the element modulo l first");
}

// ---- checks ---------------------------------------------------------------------

namespace detail {

template <class Scalar>
void check_block_laws(const Construction& c, const std::vector<AlgebraElement<GElement, Scalar>>& es,
                      const AlgebraElement<GElement, Scalar>& one, CheckResult& res) {
  AlgebraElement<GElement, Scalar> sum(kGroupAlgebra);
  for (const auto& e : es) sum += e;
  res.require(sum == one, "idempotents do not sum to 1");
  for (std::size_t i = 0; i < es.size(); ++i) {
    res.require(g_product(c, es[i], es[i]) == es[i], "e_" + std::to_string(i) + " is not idempotent");
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      res.require(g_product(c, es[i], es[j]).is_zero(), "e_" + std::to_string(i) + " e_" + std::to_string(j) + " != 0");
    }
    for (const auto& g : c.g_lprime_generators()) {
      AlgebraElement<GElement, Scalar> gx(kGroupAlgebra);
      gx.add_term(g, one.terms().begin()->second);
      res.require(g_product(c, gx, es[i]) == g_product(c, es[i], gx),
                  "e_" + std::to_string(i) + " does not commute with " + to_string(g));
    }
    for (const auto& [g, coefficient] : es[i].terms()) {
      res.require(c.in_subgroup(SubgroupTag::ZLprime, g), "e_" + std::to_string(i) + " has support outside Z_l'");
    }
  }
}

/// Rank of a matrix over F_l.
inline std::size_t rank_mod(std::vector<std::vector<i64>> a, i64 l) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rank;
    while (sel < rows && a[sel][c] % l == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    const i64 inv = powmod(mod(a[rank][c], l), static_cast<u64>(l - 2), l);
    for (auto& v : a[rank]) v = mod(v * inv, l);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] % l == 0) continue;
      const i64 f = a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = mod(a[r][j] - f * a[rank][j], l);
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<i64>> mat_mul_mod(const std::vector<std::vector<i64>>& a,
                                                 const std::vector<std::vector<i64>>& b, i64 l) {
  const std::size_t n = a.size();
  std::vector<std::vector<i64>> r(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] = (r[i][j] + a[i][k] * b[k][j]) % l;
    }
  return r;
}

}  // namespace detail

/// Partition of unity, idempotency, orthogonality, centrality on generators and support in Z_{l'}.
inline CheckResult check_idempotent_laws(const Construction& c, const std::vector<BlockDescriptor>& blocks) {
  CheckResult res{"idempotents"};
  std::vector<CycloElement> es;
  for (const auto& b : blocks) es.push_back(b.idempotent);
  detail::check_block_laws(c, es, cyclo_one(c), res);
  return res;
}

/// The same laws after reduction modulo l; also reduce(xy) = reduce(x) reduce(y) on the products used.
inline CheckResult check_reduced_laws(const Construction& c, const std::vector<BlockDescriptor>& blocks,
                                      const ReductionMap& rmap) {
  CheckResult res{"reduced idempotents"};
  std::vector<ReducedElement> es;
  for (const auto& b : blocks) es.push_back(reduce_element(b.idempotent, rmap));
  detail::check_block_laws(c, es, reduced_one(c, rmap), res);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      res.require(reduce_element(g_product(c, blocks[i].idempotent, blocks[j].idempotent), rmap) ==
                      g_product(c, es[i], es[j]),
                  "reduction is not multiplicative on e_" + std::to_string(i) + " e_" + std::to_string(j));
    }
  return res;
}

/// twist(reduce(e_phi), m) = reduce(e_{phi^(l^m)}) for all phi and 1 <= m <= max_m.
inline CheckResult check_twist_permutation(const Construction& c, const std::vector<BlockDescriptor>& blocks,
                                           const ReductionMap& rmap, i64 max_m) {
  CheckResult res{"twist permutation"};
  for (const auto& b : blocks) {
    const ReducedElement reduced = reduce_element(b.idempotent, rmap);
    i64 lm = 1;
    for (i64 m = 1; m <= max_m; ++m) {
      lm = mulmod(lm, c.l(), static_cast<i64>(c.order_Z_lprime()));
      const BlockDescriptor image = build_idempotent(c, power(b.phi, lm));
      res.require(frobenius_twist(reduced, m) == reduce_element(image.idempotent, rmap),
                  b.phi.to_string() + " at m=" + std::to_string(m));
    }
  }
  return res;
}

/// Number of primitive idempotents of k[D]^{E_{l'}} over an algebraically closed k of characteristic l.
///
/// On the orbit-sum basis the l-power map is F_l-linear with matrix entry |O|/|O'| at (O', O), where O' is
/// the orbit of l*d for d in O. Its eventual image has F_l-dimension sum of the residue degrees of the local
/// factors, which is the number of primitive idempotents after extending scalars. Each e_phi cuts out a copy
/// of this algebra inside Z(kG_{l'}) on the support D x Z_{l'}.
inline u64 center_idempotent_count(const Construction& c, u64 bound = kDefaultElementBound) {
  const auto ds = c.d_elements(bound);
  const auto gens = c.e_lprime_generators();
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> orbit_of(ds.size(), kUnset);
  std::vector<u64> orbit_size;
  std::vector<std::size_t> orbit_rep;
  for (std::size_t start = 0; start < ds.size(); ++start) {
    if (orbit_of[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(orbit_size.size());
    orbit_of[start] = id;
    std::vector<std::size_t> members{start};
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const auto& g : gens) {
        const auto j = static_cast<std::size_t>(c.key(c.act_on_D(g, ds[members[i]])));
        if (orbit_of[j] == kUnset) {
          orbit_of[j] = id;
          members.push_back(j);
        }
      }
    }
    orbit_size.push_back(members.size());
    orbit_rep.push_back(start);
  }
  const std::size_t n = orbit_size.size();
  const i64 l = c.l();
  std::vector<std::vector<i64>> frob(n, std::vector<i64>(n, 0));
  for (std::size_t o = 0; o < n; ++o) {
    DElement d = ds[orbit_rep[o]];
    for (auto& v : d.first) v = static_cast<int>(mod(static_cast<i64>(v) * l, c.modulus_first()));
    for (auto& v : d.second) v = static_cast<int>(mod(static_cast<i64>(v) * l, c.modulus_second()));
    const std::size_t target = orbit_of[static_cast<std::size_t>(c.key(d))];
    frob[target][o] = static_cast<i64>((orbit_size[o] / orbit_size[target]) % static_cast<u64>(l));
  }
  // F^(2^s) with 2^s >= n kills the nilpotent part
  auto power = frob;
  for (std::size_t s = 1; s < n; s *= 2) power = detail::mat_mul_mod(power, power, l);
  return detail::rank_mod(power, l);
}

struct PartitionOptions {
  u64 d_bound = kDefaultElementBound;  // primitivity needs D enumerated
};

/// All block-level laws; primitivity is included when D is enumerable.
inline CheckResult block_partition_check(const Construction& c, const PartitionOptions& options = {}) {
  CheckResult res{"partition"};
  const auto blocks = all_blocks(c);
  const ReductionMap rmap = block_reduction(c);
  res.absorb(check_idempotent_laws(c, blocks));
  res.absorb(check_reduced_laws(c, blocks, rmap));
  if (c.order_D() <= mpz_class(static_cast<unsigned long>(options.d_bound))) {
    const u64 count = center_idempotent_count(c, options.d_bound);
    res.require(count == 1, "k[D]^E has " + std::to_string(count) + " primitive idempotents");
    res.detail = "primitivity checked on the orbit-sum algebra";
  } else {
    res.detail = "primitivity skipped: D above bound";
  }
  return res;
}

}  // namespace mfn
