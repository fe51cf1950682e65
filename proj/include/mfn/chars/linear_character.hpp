#pragma once

// Linear characters of the abelian pieces: D, Z_{l'}, Omega_t, P and Lambda_t.
//
// A character is a dual exponent vector u with per-coordinate moduli; its value
// on an element with exponent vector v is zeta_N^(sum_i u_i v_i N / q_i), with N
// the lcm of the moduli. Characters of D are taken modulo constant duals on each
// factor, and stored with the last coordinate of each factor equal to zero.

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "mfn/check_result.hpp"
#include "mfn/error.hpp"
#include "mfn/exactnum/cyclotomic.hpp"
#include "mfn/groups/construction.hpp"

namespace mfn {

enum class CharacterDomain { D, ZLprime, Omega, P, Lambda };

inline std::string to_string(CharacterDomain d) {
  switch (d) {
    case CharacterDomain::D: return "D";
    case CharacterDomain::ZLprime: return "Z_l'";
    case CharacterDomain::Omega: return "Omega";
    case CharacterDomain::P: return "P";
    case CharacterDomain::Lambda: return "Lambda";
  }
  return "?";
}

struct LinearCharacter {
  CharacterDomain domain = CharacterDomain::ZLprime;
  std::vector<int> dual;
  std::vector<int> moduli;
  i64 value_order = 1;

  auto operator<=>(const LinearCharacter&) const = default;

  bool is_trivial() const {
    for (int u : dual) {
      if (u != 0) return false;
    }
    return true;
  }

  /// k with value = zeta_{value_order}^k.
  i64 exponent_at(const std::vector<int>& exps) const {
    if (exps.size() != dual.size()) throw ParameterError("character evaluated on an element of the wrong shape");
    i64 k = 0;
    for (std::size_t i = 0; i < dual.size(); ++i) {
      k = mod(k + static_cast<i64>(dual[i]) * exps[i] * (value_order / moduli[i]), value_order);
    }
    return k;
  }
  CyclotomicNumber value(const std::vector<int>& exps) const {
    return CyclotomicNumber::root_of_unity(value_order, exponent_at(exps));
  }

  /// Multiplicative order of the character.
  i64 order() const {
    i64 o = 1;
    for (std::size_t i = 0; i < dual.size(); ++i) o = std::lcm(o, moduli[i] / std::gcd<i64>(dual[i], moduli[i]));
    return o;
  }

  std::string to_string() const { return mfn::to_string(domain) + mfn::to_string(dual); }
};

inline i64 lcm_of(const std::vector<int>& moduli) {
  i64 n = 1;
  for (int q : moduli) n = std::lcm<i64>(n, q);
  return n;
}

inline LinearCharacter make_linear_character(CharacterDomain domain, std::vector<int> dual, std::vector<int> moduli) {
  if (dual.size() != moduli.size()) throw ParameterError("dual vector and moduli differ in length");
  for (std::size_t i = 0; i < dual.size(); ++i) dual[i] = static_cast<int>(mod(dual[i], moduli[i]));
  LinearCharacter chi{domain, std::move(dual), std::move(moduli), 1};
  chi.value_order = lcm_of(chi.moduli);
  return chi;
}

// ---- D ---------------------------------------------------------------------

inline std::vector<int> d_moduli(const Construction& c) {
  std::vector<int> m(static_cast<std::size_t>(c.p()), c.modulus_first());
  m.resize(static_cast<std::size_t>(2 * c.p()), c.modulus_second());
  return m;
}

/// Character of D with duals u1 (first factor) and u2 (second), canonicalized.
inline LinearCharacter d_character(const Construction& c, std::vector<int> u1, std::vector<int> u2) {
  const auto p = static_cast<std::size_t>(c.p());
  if (u1.size() != p || u2.size() != p) throw ParameterError("d_character: duals must have length p");
  const int s1 = u1.back(), s2 = u2.back();
  for (auto& v : u1) v = static_cast<int>(mod(v - s1, c.modulus_first()));
  for (auto& v : u2) v = static_cast<int>(mod(v - s2, c.modulus_second()));
  std::vector<int> dual = std::move(u1);
  dual.insert(dual.end(), u2.begin(), u2.end());
  return make_linear_character(CharacterDomain::D, std::move(dual), d_moduli(c));
}

inline std::vector<int> d_first(const LinearCharacter& theta, std::size_t p) {
  return {theta.dual.begin(), theta.dual.begin() + static_cast<std::ptrdiff_t>(p)};
}
inline std::vector<int> d_second(const LinearCharacter& theta, std::size_t p) {
  return {theta.dual.begin() + static_cast<std::ptrdiff_t>(p), theta.dual.end()};
}

inline std::vector<int> d_exponents(const DElement& d) {
  std::vector<int> v = d.first;
  v.insert(v.end(), d.second.begin(), d.second.end());
  return v;
}

inline CyclotomicNumber evaluate(const LinearCharacter& theta, const DElement& d) {
  return theta.value(d_exponents(d));
}

/// Dense index of a canonical D-character in [0, |D|).
inline u64 d_character_key(const Construction& c, const LinearCharacter& theta) {
  const auto p = static_cast<std::size_t>(c.p());
  u64 k = 0;
  for (std::size_t i = 0; i + 1 < p; ++i) k = k * static_cast<u64>(c.modulus_first()) + static_cast<u64>(theta.dual[i]);
  for (std::size_t i = 0; i + 1 < p; ++i)
    k = k * static_cast<u64>(c.modulus_second()) + static_cast<u64>(theta.dual[p + i]);
  return k;
}

inline LinearCharacter d_character_from_key(const Construction& c, u64 key) {
  const auto p = static_cast<std::size_t>(c.p());
  std::vector<int> u1(p, 0), u2(p, 0);
  for (std::size_t i = p - 1; i-- > 0;) {
    u2[i] = static_cast<int>(key % static_cast<u64>(c.modulus_second()));
    key /= static_cast<u64>(c.modulus_second());
  }
  for (std::size_t i = p - 1; i-- > 0;) {
    u1[i] = static_cast<int>(key % static_cast<u64>(c.modulus_first()));
    key /= static_cast<u64>(c.modulus_first());
  }
  return d_character(c, std::move(u1), std::move(u2));
}

// ---- Z_{l'} ------------------------------------------------------------------

/// phi_k(lambda^(l^a j)) = zeta_N^(k j), N = |Z_{l'}|. phi_1 is the canonical faithful character.
inline LinearCharacter z_character(const Construction& c, i64 k) {
  const int N = static_cast<int>(c.order_Z_lprime());
  return make_linear_character(CharacterDomain::ZLprime, {static_cast<int>(mod(k, N))}, {N});
}

inline i64 z_index(const LinearCharacter& phi) {
  if (phi.domain != CharacterDomain::ZLprime) throw ParameterError("expected a character of Z_l'");
  return phi.dual.front();
}

/// Exponent j of z = lambda^(l^a j) in Z_{l'}.
inline std::vector<int> z_exponents(const Construction& c, const EElement& z) {
  if (!c.in_subgroup(SubgroupTag::ZLprime, z)) throw ParameterError("element " + to_string(z) + " is not in Z_l'");
  return {c.lprime_step() == 0 ? 0 : z.r / c.lprime_step()};
}

inline CyclotomicNumber evaluate(const Construction& c, const LinearCharacter& phi, const EElement& z) {
  return phi.value(z_exponents(c, z));
}

inline LinearCharacter power(const LinearCharacter& chi, i64 k) {
  std::vector<int> dual = chi.dual;
  for (std::size_t i = 0; i < dual.size(); ++i) dual[i] = static_cast<int>(mod(static_cast<i64>(dual[i]) * k, chi.moduli[i]));
  LinearCharacter out = chi;
  out.dual = std::move(dual);
  return out;
}

inline LinearCharacter inverse(const LinearCharacter& chi) { return power(chi, -1); }

// ---- Omega_t, P, Lambda_t ------------------------------------------------------

inline LinearCharacter omega_character(const Construction& c, int t, std::vector<int> u) {
  const int q = static_cast<int>(checked_pow(c.l(), static_cast<unsigned>(t)));
  if (u.size() != static_cast<std::size_t>(c.p())) throw ParameterError("omega_character: dual must have length p");
  return make_linear_character(CharacterDomain::Omega, std::move(u), std::vector<int>(static_cast<std::size_t>(c.p()), q));
}

inline LinearCharacter p_character(const Construction& c, int a, int b) {
  return make_linear_character(CharacterDomain::P, {a, b}, {c.p(), c.p()});
}

inline LinearCharacter lambda_character(const Construction& c, int t, int k) {
  const int q = static_cast<int>(checked_pow(c.l(), static_cast<unsigned>(t)));
  return make_linear_character(CharacterDomain::Lambda, {k}, {q});
}

// ---- enumeration -----------------------------------------------------------------

/// All linear characters of the given abelian piece, ordered by dual vector.
inline std::vector<LinearCharacter> irr_abelian(const Construction& c, CharacterDomain domain, int t = 1,
                                                u64 bound = kDefaultElementBound) {
  std::vector<LinearCharacter> out;
  switch (domain) {
    case CharacterDomain::D: {
      const mpz_class order = c.order_D();
      if (order > mpz_class(static_cast<unsigned long>(bound))) {
        throw BoundExceeded("Irr(D) has " + order.get_str() + " characters, above bound");
      }
      for (u64 k = 0; k < order.get_ui(); ++k) out.push_back(d_character_from_key(c, k));
      break;
    }
    case CharacterDomain::ZLprime:
      for (u64 k = 0; k < c.order_Z_lprime(); ++k) out.push_back(z_character(c, static_cast<i64>(k)));
      break;
    case CharacterDomain::Omega:
      for (const auto& w : c.omega_elements(t, bound)) out.push_back(omega_character(c, t, w.v));
      break;
    case CharacterDomain::P:
      for (int a = 0; a < c.p(); ++a)
        for (int b = 0; b < c.p(); ++b) out.push_back(p_character(c, a, b));
      break;
    case CharacterDomain::Lambda: {
      const int q = static_cast<int>(checked_pow(c.l(), static_cast<unsigned>(t)));
      for (int k = 0; k < q; ++k) out.push_back(lambda_character(c, t, k));
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- actions --------------------------------------------------------------------

/// (f.chi)(w) = chi(f^-1 . w) on Omega_t.
inline LinearCharacter character_action(const Construction& c, const FElement& f, const LinearCharacter& chi) {
  if (chi.domain != CharacterDomain::Omega) throw ParameterError("F acts on characters of Omega_t only");
  LinearCharacter out = chi;
  out.dual = c.permute(f, chi.dual);
  return out;
}

/// (e.chi)(g) = chi(e^-1 g e) on D, P and Z_{l'}.
inline LinearCharacter character_action(const Construction& c, const EElement& e, const LinearCharacter& chi) {
  switch (chi.domain) {
    case CharacterDomain::D: {
      const auto p = static_cast<std::size_t>(c.p());
      const auto [f1, f2] = c.e_to_f_pair(e);
      return d_character(c, c.permute(f1, d_first(chi, p)), c.permute(f2, d_second(chi, p)));
    }
    case CharacterDomain::P:
      return p_character(c, static_cast<int>(mod(static_cast<i64>(chi.dual[0]) * c.lambda_pow(-e.m), c.p())),
                         static_cast<int>(mod(static_cast<i64>(chi.dual[1]) * c.lambda_pow(-e.n), c.p())));
    case CharacterDomain::ZLprime:
      return chi;
    default:
      throw ParameterError("E does not act on characters of " + to_string(chi.domain));
  }
}

// ---- F_p-stable characters ------------------------------------------------------------

struct FpStableReport {
  int t = 1;
  u64 total = 0;
  std::vector<LinearCharacter> stable;
  u64 kernel_count = 0;       // characters with D_t in the kernel
  bool sets_equal = true;     // stable set == {theta : D_t <= ker theta}
  u64 stable_on_D = 0;        // F_p-stable characters of D_t
  CheckResult check;
};

/// All F_p-stable characters of Omega_t, compared with the characters trivial on D_t.
inline FpStableReport fp_stable_characters(const Construction& c, int t, u64 bound = kDefaultExhaustionBound) {
  FpStableReport rep;
  rep.t = t;
  rep.check.name = "fpstable t=" + std::to_string(t);
  const int q = static_cast<int>(checked_pow(c.l(), static_cast<unsigned>(t)));
  const auto p = static_cast<std::size_t>(c.p());
  u64 total = 1;
  for (std::size_t i = 0; i < p; ++i) {
    total *= static_cast<u64>(q);
    if (total > bound) throw BoundExceeded("Irr(Omega_t) exceeds the exhaustion bound");
  }
  rep.total = total;
  std::vector<int> u(p, 0);
  std::vector<int> shifted(p);
  for (u64 idx = 0; idx < total; ++idx) {
    bool stable = true;
    for (int x = 1; x < c.p() && stable; ++x) {
      for (std::size_t y = 0; y < p; ++y) shifted[(y + static_cast<std::size_t>(x)) % p] = u[y];
      stable = shifted == u;
    }
    bool kernel = true;
    for (std::size_t i = 0; i + 1 < p && kernel; ++i) kernel = u[i] == u[p - 1];
    if (stable) rep.stable.push_back(omega_character(c, t, u));
    if (kernel) ++rep.kernel_count;
    rep.check.require(stable == kernel, "stability and kernel disagree at " + to_string(u));
    for (std::size_t i = p; i-- > 0;) {
      if (++u[i] < q) break;
      u[i] = 0;
    }
  }
  rep.sets_equal = rep.check.passed;
  // characters of D_t: canonical duals with last coordinate zero
  u64 d_total = total / static_cast<u64>(q);
  std::fill(u.begin(), u.end(), 0);
  for (u64 idx = 0; idx < d_total; ++idx) {
    bool stable = true;
    for (int x = 1; x < c.p() && stable; ++x) {
      for (std::size_t y = 0; y < p; ++y) shifted[(y + static_cast<std::size_t>(x)) % p] = u[y];
      const int s = shifted.back();
      for (auto& v : shifted) v = static_cast<int>(mod(v - s, q));
      stable = shifted == u;
    }
    if (stable) ++rep.stable_on_D;
    for (std::size_t i = p - 1; i-- > 0;) {
      if (++u[i] < q) break;
      u[i] = 0;
    }
  }
  rep.check.require(rep.stable.size() == static_cast<std::size_t>(q), "stable count differs from |Irr(Lambda_t)|");
  rep.check.require(rep.stable_on_D == 1, "D_t has a nontrivial F_p-stable character");
  return rep;
}

// ---- stabilizers in P -----------------------------------------------------------------

enum class StabilizerTag { Trivial, P1, P2, P };

inline std::string to_string(StabilizerTag t) {
  switch (t) {
    case StabilizerTag::Trivial: return "1";
    case StabilizerTag::P1: return "P1";
    case StabilizerTag::P2: return "P2";
    case StabilizerTag::P: return "P";
  }
  return "?";
}

/// Stab_P(theta). P = P1 x P2 acts factorwise and each P_i has prime order, so it suffices
/// to test the generators.
inline StabilizerTag stabilizer_in_P(const Construction& c, const LinearCharacter& theta) {
  if (theta.domain != CharacterDomain::D) throw ParameterError("stabilizer_in_P expects a character of D");
  const bool first = character_action(c, EElement{1, 0, 0, 0, 0}, theta) == theta;
  const bool second = character_action(c, EElement{0, 1, 0, 0, 0}, theta) == theta;
  if (first && second) return StabilizerTag::P;
  if (first) return StabilizerTag::P1;
  if (second) return StabilizerTag::P2;
  return StabilizerTag::Trivial;
}

}  // namespace mfn
