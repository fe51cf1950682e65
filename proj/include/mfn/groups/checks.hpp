#pragma once

// Exhaustive and sampled checks of the group constructions.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "mfn/check_result.hpp"
#include "mfn/error.hpp"
#include "mfn/groups/automorphism.hpp"
#include "mfn/groups/concrete_group.hpp"
#include "mfn/groups/construction.hpp"

namespace mfn {


namespace detail {

inline std::vector<FElement> f_elements(const Construction& c) {
  std::vector<FElement> out;
  for (int x = 0; x < c.p(); ++x)
    for (int m = 0; m < c.p() - 1; ++m) out.push_back({x, m});
  return out;
}

inline EElement random_e(const Construction& c, std::mt19937_64& rng, bool lprime) {
  const auto ex = c.lprime_exponents();
  auto pick_exp = [&] {
    return lprime ? ex[rng() % ex.size()] : static_cast<int>(rng() % static_cast<u64>(c.p() - 1));
  };
  EElement e;
  e.x = static_cast<int>(rng() % static_cast<u64>(c.p()));
  e.y = static_cast<int>(rng() % static_cast<u64>(c.p()));
  e.m = pick_exp();
  e.n = pick_exp();
  e.r = pick_exp();
  return e;
}

inline DElement random_d(const Construction& c, std::mt19937_64& rng) {
  DElement d = c.d_identity();
  const auto p = static_cast<std::size_t>(c.p());
  i64 s1 = 0, s2 = 0;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    d.first[i] = static_cast<int>(rng() % static_cast<u64>(c.modulus_first()));
    d.second[i] = static_cast<int>(rng() % static_cast<u64>(c.modulus_second()));
    s1 += d.first[i];
    s2 += d.second[i];
  }
  d.first[p - 1] = static_cast<int>(mod(-s1, c.modulus_first()));
  d.second[p - 1] = static_cast<int>(mod(-s2, c.modulus_second()));
  return d;
}

inline GElement random_g(const Construction& c, std::mt19937_64& rng) { return {random_d(c, rng), random_e(c, rng, true)}; }

}  // namespace detail

/// Associativity, identity and inverse laws for F, E and G_{l'}.
/// Exhaustive for F when p <= 5 and for E when p <= 3; otherwise random triples.
inline CheckResult verify_group_laws(const Construction& c, u64 random_triples = 100'000, u64 seed = 1) {
  CheckResult res{"group-laws"};
  std::mt19937_64 rng(seed);

  const auto fs = detail::f_elements(c);
  const FElement f1{};
  for (const auto& a : fs) {
    res.require(c.f_mul(a, f1) == a && c.f_mul(f1, a) == a, "F identity");
    res.require(c.f_mul(a, c.f_inverse(a)) == f1 && c.f_mul(c.f_inverse(a), a) == f1, "F inverse");
  }
  if (c.p() <= 5) {
    for (const auto& a : fs)
      for (const auto& b : fs)
        for (const auto& d : fs) res.require(c.f_mul(c.f_mul(a, b), d) == c.f_mul(a, c.f_mul(b, d)), "F assoc");
  } else {
    for (u64 i = 0; i < random_triples; ++i) {
      const auto& a = fs[rng() % fs.size()];
      const auto& b = fs[rng() % fs.size()];
      const auto& d = fs[rng() % fs.size()];
      res.require(c.f_mul(c.f_mul(a, b), d) == c.f_mul(a, c.f_mul(b, d)), "F assoc");
    }
  }

  const EElement e1 = c.e_identity();
  auto e_triple = [&](const EElement& a, const EElement& b, const EElement& d) {
    if (!(c.e_mul(c.e_mul(a, b), d) == c.e_mul(a, c.e_mul(b, d)))) {
      res.fail("E assoc " + to_string(a) + " " + to_string(b) + " " + to_string(d));
    }
    ++res.checked;
  };
  if (c.p() <= 3) {
    const auto es = c.e_elements();
    for (const auto& a : es) {
      res.require(c.e_mul(a, e1) == a && c.e_mul(e1, a) == a, "E identity " + to_string(a));
      res.require(c.e_mul(a, c.e_inverse(a)) == e1 && c.e_mul(c.e_inverse(a), a) == e1, "E inverse " + to_string(a));
      for (const auto& b : es)
        for (const auto& d : es) e_triple(a, b, d);
    }
  } else {
    for (u64 i = 0; i < random_triples; ++i) {
      const EElement a = detail::random_e(c, rng, false);
      res.require(c.e_mul(a, c.e_inverse(a)) == e1 && c.e_mul(c.e_inverse(a), a) == e1, "E inverse " + to_string(a));
      res.require(c.e_mul(a, e1) == a && c.e_mul(e1, a) == a, "E identity " + to_string(a));
      e_triple(a, detail::random_e(c, rng, false), detail::random_e(c, rng, false));
    }
  }

  const GElement g1 = c.g_identity();
  const u64 g_triples = std::min<u64>(random_triples, 20'000);
  for (u64 i = 0; i < g_triples; ++i) {
    const GElement a = detail::random_g(c, rng);
    const GElement b = detail::random_g(c, rng);
    const GElement d = detail::random_g(c, rng);
    res.require(c.g_mul(c.g_mul(a, b), d) == c.g_mul(a, c.g_mul(b, d)), "G assoc " + to_string(a));
    res.require(c.g_mul(a, c.g_inverse(a)) == g1 && c.g_mul(c.g_inverse(a), a) == g1, "G inverse " + to_string(a));
    res.require(c.g_mul(a, g1) == a && c.g_mul(g1, a) == a, "G identity " + to_string(a));
  }
  return res;
}

/// phi: E -> F_1 x F_2 is a homomorphism with kernel Z and image of order |E|/|Z|.
/// Runs on all of E when |E|^2 is within the bound, otherwise on E_{l'}.
inline CheckResult verify_projection(const Construction& c, u64 pair_bound = kDefaultExhaustionBound) {
  CheckResult res{"projection"};
  const bool full = c.order_E() * c.order_E() <= pair_bound;
  const auto es = full ? c.e_elements() : c.e_lprime_elements();
  if (!full && static_cast<u64>(es.size()) * es.size() > pair_bound * 10) {
    throw BoundExceeded("projection check: E_l' too large for exhaustion");
  }
  for (const auto& a : es) {
    const auto [a1, a2] = c.e_to_f_pair(a);
    for (const auto& b : es) {
      const auto [b1, b2] = c.e_to_f_pair(b);
      const auto [p1, p2] = c.e_to_f_pair(c.e_mul(a, b));
      res.require(p1 == c.f_mul(a1, b1) && p2 == c.f_mul(a2, b2), "phi(ab) != phi(a)phi(b) at " + to_string(a));
    }
  }
  std::set<std::pair<FElement, FElement>> image;
  u64 kernel = 0;
  for (const auto& a : es) {
    const auto pr = c.e_to_f_pair(a);
    image.insert(pr);
    const bool trivial = pr.first == FElement{} && pr.second == FElement{};
    if (trivial) ++kernel;
    res.require(trivial == c.in_subgroup(SubgroupTag::Z, a), "kernel mismatch at " + to_string(a));
  }
  const u64 z_order = full ? static_cast<u64>(c.p() - 1) : c.order_Z_lprime();
  res.require(kernel == z_order, "kernel order " + std::to_string(kernel));
  res.require(image.size() * z_order == es.size(), "image order " + std::to_string(image.size()));
  res.detail = full ? "all of E" : "E_l'";
  return res;
}

/// act_on_D is an action, preserves D, and Z acts trivially.
inline CheckResult verify_action(const Construction& c, u64 samples = 20'000, u64 seed = 2) {
  CheckResult res{"action"};
  std::mt19937_64 rng(seed);
  for (u64 i = 0; i < samples; ++i) {
    const EElement a = detail::random_e(c, rng, false);
    const EElement b = detail::random_e(c, rng, false);
    const DElement d = detail::random_d(c, rng);
    const DElement lhs = c.act_on_D(c.e_mul(a, b), d);
    res.require(lhs == c.act_on_D(a, c.act_on_D(b, d)), "act(ab,d) != act(a,act(b,d)) at " + to_string(a));
    res.require(c.is_valid(lhs), "action leaves D at " + to_string(a));
    res.require(c.act_on_D(c.z_element(a.r), d) == d, "Z acts nontrivially");
  }
  return res;
}

/// [lift(x, l^m), lift(y, l^n)] = l^(-mn) for all x, y, m, n and every pair of lifts.
inline CheckResult verify_comm_relation(const Construction& c, u64 bound = kDefaultExhaustionBound) {
  CheckResult res{"comm"};
  const u64 p = static_cast<u64>(c.p());
  const u64 work = p * p * (p - 1) * (p - 1) * (p - 1) * (p - 1);
  if (work > bound) throw BoundExceeded("comm check needs " + std::to_string(work) + " commutators");
  for (int x = 0; x < c.p(); ++x)
    for (int y = 0; y < c.p(); ++y)
      for (int m = 0; m < c.p() - 1; ++m)
        for (int n = 0; n < c.p() - 1; ++n) {
          const EElement expected = c.z_element(-m * n);
          for (int r1 = 0; r1 < c.p() - 1; ++r1)
            for (int r2 = 0; r2 < c.p() - 1; ++r2) {
              const EElement a = c.lift_first({x, m}, r1);
              const EElement b = c.lift_second({y, n}, r2);
              const EElement got = c.e_commutator(a, b);
              if (!(got == expected)) res.fail("[" + to_string(a) + "," + to_string(b) + "] = " + to_string(got));
              ++res.checked;
            }
        }
  return res;
}

/// E_{l'}/Z_{l'} acts faithfully on D; Lambda_t is the F_p-fixed part of Omega_t and D_t has no
/// nonzero F_p-fixed points, for t = 1, 2.
inline CheckResult verify_faithful(const Construction& c, u64 bound = kDefaultExhaustionBound) {
  CheckResult res{"faithful"};
  const auto gens = c.d_generators();
  for (const auto& e : c.e_lprime_elements()) {
    if (e.r != 0) continue;  // one representative per Z_{l'} coset
    bool moves = false;
    for (const auto& d : gens) {
      if (!(c.act_on_D(e, d) == d)) {
        moves = true;
        break;
      }
    }
    res.require(moves == !(e == c.e_identity()), "coset of " + to_string(e) + " acts trivially on D");
  }
  for (int t = 1; t <= 2; ++t) {
    for (const auto& w : c.omega_elements(t, bound)) {
      bool fixed = true;
      for (int x = 1; x < c.p() && fixed; ++x) fixed = c.omega_act({x, 0}, w) == w;
      const bool diagonal = c.in_subgroup(SubgroupTag::Lambda, w, t);
      res.require(fixed == diagonal, "t=" + std::to_string(t) + " fixed point mismatch at " + to_string(w.v));
      if (fixed && c.in_subgroup(SubgroupTag::D, w, t)) {
        const bool zero = std::all_of(w.v.begin(), w.v.end(), [](int v) { return v == 0; });
        res.require(zero, "nonzero F_p-fixed point of D_t " + to_string(w.v));
      }
    }
  }
  return res;
}

/// Conjugation by lifts of generators of F_1 x F_2, plus the swap when t1 = t2.
inline std::vector<AutomorphismSpec> standard_automorphisms(const Construction& c) {
  std::vector<AutomorphismSpec> out{AutomorphismSpec::conjugation({1, 0, 0, 0, 0}),
                                    AutomorphismSpec::conjugation({0, 1, 0, 0, 0}),
                                    AutomorphismSpec::conjugation({0, 0, 1, 0, 0}),
                                    AutomorphismSpec::conjugation({0, 0, 0, 1, 0})};
  if (c.params().t1 == c.params().t2) out.push_back(AutomorphismSpec::swap());
  return out;
}

/// The map is a bijective homomorphism of G_{l'}: checked on all ordered pairs of E_{l'},
/// on E_{l'} x (generators of D), and additively on D. Its restriction to Z_{l'} is the identity
/// (conjugation) or inversion (swap); the swap is an involution.
inline CheckResult verify_automorphism(const Construction& c, const AutomorphismSpec& spec) {
  CheckResult res{"autos " + spec.describe()};
  const auto es = c.e_lprime_elements();
  std::set<EElement> image;
  for (const auto& a : es) {
    const EElement fa = apply_automorphism(c, spec, a);
    res.require(c.in_subgroup(SubgroupTag::ELprime, fa), "image leaves E_l' at " + to_string(a));
    image.insert(fa);
    for (const auto& b : es) {
      const EElement lhs = apply_automorphism(c, spec, c.e_mul(a, b));
      const EElement rhs = c.e_mul(fa, apply_automorphism(c, spec, b));
      if (!(lhs == rhs)) res.fail("not multiplicative at " + to_string(a) + ", " + to_string(b));
      ++res.checked;
    }
  }
  res.require(image.size() == es.size(), "not injective on E_l'");

  const auto ds = c.d_generators();
  for (const auto& d : ds) {
    const DElement fd = apply_automorphism(c, spec, d);
    res.require(c.is_valid(fd), "image leaves D at " + to_string(d));
    for (const auto& d2 : ds) {
      res.require(apply_automorphism(c, spec, c.d_mul(d, d2)) ==
                      c.d_mul(fd, apply_automorphism(c, spec, d2)),
                  "not additive on D");
    }
    for (const auto& e : es) {
      const GElement ed = c.g_mul(c.embed(e), c.embed(d));
      const GElement lhs = apply_automorphism(c, spec, ed);
      const GElement rhs = c.g_mul(apply_automorphism(c, spec, c.embed(e)), apply_automorphism(c, spec, c.embed(d)));
      res.require(lhs == rhs, "incompatible with the action at " + to_string(e) + ", " + to_string(d));
    }
  }

  for (const auto& z : c.z_lprime_elements()) {
    const EElement fz = apply_automorphism(c, spec, z);
    const EElement expected = spec.kind == AutomorphismKind::Swap ? c.e_inverse(z) : z;
    res.require(fz == expected, "wrong restriction to Z_l' at " + to_string(z));
  }
  if (spec.kind == AutomorphismKind::Swap) {
    for (const auto& a : es) {
      res.require(apply_automorphism(c, spec, apply_automorphism(c, spec, a)) == a, "swap^2 != id at " + to_string(a));
    }
    for (const auto& d : ds) res.require(swap_d(swap_d(d)) == d, "swap^2 != id on D");
  }
  return res;
}

/// Order formulas against direct enumeration (only the enumerable parts).
inline CheckResult verify_orders(const Construction& c, u64 bound = kDefaultElementBound) {
  CheckResult res{"orders"};
  const auto es = c.e_lprime_elements();
  u64 in_e = 0;
  for (const auto& e : c.e_elements(bound)) in_e += c.in_subgroup(SubgroupTag::ELprime, e) ? 1 : 0;
  res.require(in_e == es.size() && es.size() == c.order_E_lprime(), "|E_l'| mismatch");
  u64 in_z = 0;
  for (const auto& e : es) in_z += c.in_subgroup(SubgroupTag::ZLprime, e) ? 1 : 0;
  res.require(in_z == c.order_Z_lprime(), "|Z_l'| mismatch");
  if (c.order_D() <= mpz_class(static_cast<unsigned long>(bound))) {
    res.require(mpz_class(static_cast<unsigned long>(c.d_elements(bound).size())) == c.order_D(), "|D| mismatch");
  }
  return res;
}

}  // namespace mfn
