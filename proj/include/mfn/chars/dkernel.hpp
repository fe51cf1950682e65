#pragma once

// Checks around the identification of IBr(G_{l'}) with Irr(E_{l'}) by restriction.

#include <memory>
#include <string>
#include <vector>

#include "mfn/chars/character_table.hpp"
#include "mfn/chars/class_function.hpp"
#include "mfn/chars/induction.hpp"
#include "mfn/chars/linear_character.hpp"
#include "mfn/check_result.hpp"
#include "mfn/groups/concrete_group.hpp"

namespace mfn {

/// No nontrivial character of D is fixed by all of P; the computed tag agrees with brute force over P.
inline CheckResult check_stabilizer_trichotomy(const Construction& c, u64 bound = kDefaultElementBound) {
  CheckResult res{"stabilizer trichotomy"};
  const auto ps = c.p_elements();
  for (const auto& theta : irr_abelian(c, CharacterDomain::D, 1, bound)) {
    if (theta.is_trivial()) continue;
    const StabilizerTag tag = stabilizer_in_P(c, theta);
    std::size_t fixed = 0;
    bool first_only = true, second_only = true;
    for (const auto& e : ps) {
      if (character_action(c, e, theta) != theta) continue;
      ++fixed;
      if (e.y != 0) first_only = false;
      if (e.x != 0) second_only = false;
    }
    StabilizerTag brute = StabilizerTag::Trivial;
    if (fixed == ps.size()) brute = StabilizerTag::P;
    else if (fixed > 1 && first_only) brute = StabilizerTag::P1;
    else if (fixed > 1 && second_only) brute = StabilizerTag::P2;
    const bool diagonal = fixed > 1 && fixed < ps.size() && !first_only && !second_only;
    res.require(tag != StabilizerTag::P && tag == brute && !diagonal,
                theta.to_string() + " has stabilizer " + to_string(tag) + " (brute force " + to_string(brute) + ")");
  }
  return res;
}

/// For each xi in Irr(E_{l'}), xi restricted to P_i is either a multiple of 1 or has no trivial constituent.
inline CheckResult check_restriction_dichotomy(const Construction& c, const ConcreteGroup<EElement>& e_group,
                                               const CharacterTable& e_table) {
  CheckResult res{"restriction dichotomy"};
  for (int factor = 0; factor < 2; ++factor) {
    const auto pi = e_group.subgroup(factor == 0 ? "P1" : "P2", [factor](const EElement& e) {
      return e.m == 0 && e.n == 0 && e.r == 0 && (factor == 0 ? e.y == 0 : e.x == 0);
    });
    if (pi.order() != static_cast<u64>(c.p())) throw VerificationFailure("P_i has the wrong order");
    const auto pc = conjugacy_classes(pi);
    const auto emb = make_embedding(pi, pc, e_group, e_table.classes);
    const ClassFunction one = trivial_character(pc);
    for (std::size_t i = 0; i < e_table.characters.size(); ++i) {
      const auto& xi = e_table.characters[i];
      const CyclotomicNumber m0 = inner_product(restrict_to(xi, emb), one);
      const bool ok = m0 == CyclotomicNumber(0L) || m0 == xi.degree_value();
      res.require(ok, "xi_" + std::to_string(i) + " restricted to P" + std::to_string(factor + 1) +
                          " has trivial multiplicity " + m0.to_string() + " of " + xi.degree_value().to_string());
    }
  }
  return res;
}

/// chi restricted to E_{l'} is irreducible exactly when D lies in the kernel of chi, for all chi in Irr(G_{l'}).
inline CheckResult check_dkernel_full(const Construction& c, const ConcreteGroup<GElement>& g,
                                      const std::vector<ClassFunction>& irr_g, const ConcreteGroup<EElement>& e_group,
                                      const std::shared_ptr<const ClassStructure>& e_classes) {
  CheckResult res{"dkernel"};
  if (irr_g.empty()) {
    res.fail("empty character list");
    return res;
  }
  const auto& gc = irr_g.front().classes();
  const auto emb = make_embedding<EElement, GElement>(e_group, e_classes, g, gc,
                                                      [&c](const EElement& e) { return c.embed(e); });
  std::vector<std::size_t> d_classes;
  for (std::size_t k = 0; k < gc->count(); ++k) {
    if (g.element(gc->representatives[k]).e == c.e_identity()) d_classes.push_back(k);
  }
  for (std::size_t i = 0; i < irr_g.size(); ++i) {
    const auto& chi = irr_g[i];
    const ClassFunction res_e = restrict_to(chi, emb);
    const bool irreducible = inner_product(res_e, res_e) == CyclotomicNumber(1L);
    bool d_in_kernel = true;
    for (std::size_t k : d_classes) d_in_kernel = d_in_kernel && chi.value(k) == chi.degree_value();
    res.require(irreducible == d_in_kernel, "chi_" + std::to_string(i) + ": restriction irreducible = " +
                                                std::to_string(irreducible) + ", D in kernel = " +
                                                std::to_string(d_in_kernel));
  }
  return res;
}

}  // namespace mfn
