#pragma once

// Clifford theory for G_{l'} = D : E_{l'} over the abelian normal subgroup D.
//
// The extension splits and D is abelian, so theta in Irr(D) extends to its inertia
// group T = D : H (H = Stab_{E_{l'}}(theta)) by theta(d)psi(h), and
// Irr(G_{l'} | theta) = { Ind_T^G(theta psi) : psi in Irr(H) }.

#include <memory>
#include <string>
#include <vector>

#include "mfn/chars/character_table.hpp"
#include "mfn/chars/class_function.hpp"
#include "mfn/chars/induction.hpp"
#include "mfn/chars/linear_character.hpp"
#include "mfn/groups/concrete_group.hpp"
#include "mfn/groups/construction.hpp"

namespace mfn {

struct CliffordDatum {
  LinearCharacter orbit_rep;  // minimal key in its orbit
  u64 orbit_size = 1;
  StabilizerTag stabilizer_in_p = StabilizerTag::P;
  std::shared_ptr<const ConcreteGroup<EElement>> stabilizer;  // H; the inertia group in G_{l'} is D : H
  std::shared_ptr<const ClassStructure> stabilizer_classes;
  std::vector<ClassFunction> constituents;                     // Irr(H)
  SubgroupEmbedding into_e;                                    // H -> E_{l'}

  /// Degree of Ind_T^G(theta psi_i) = [E_{l'} : H] psi_i(1).
  mpz_class induced_degree(std::size_t i) const {
    return mpz_class(static_cast<unsigned long>(orbit_size)) * constituents[i].degree();
  }
};

/// E_{l'}, its character table and the Clifford data for every orbit on Irr(D).
struct CliffordSetup {
  Construction construction;
  std::shared_ptr<const ConcreteGroup<EElement>> e_group;
  std::shared_ptr<const ClassStructure> e_classes;
  CharacterTable e_table;
  std::vector<CliffordDatum> orbits;
  std::vector<std::uint32_t> orbit_of;  // per D-character key

  std::size_t character_count() const {
    std::size_t k = 0;
    for (const auto& o : orbits) k += o.constituents.size();
    return k;
  }
};

/// Orbits of E_{l'} on Irr(D) as lists of character keys; each orbit starts with its minimal key.
inline std::vector<std::vector<u64>> d_character_orbits(const Construction& c, u64 bound = kDefaultElementBound) {
  const mpz_class order = c.order_D();
  if (order > mpz_class(static_cast<unsigned long>(bound))) {
    throw BoundExceeded("Irr(D) has " + order.get_str() + " characters, above bound");
  }
  const u64 n = order.get_ui();
  const auto gens = c.e_lprime_generators();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<u64>> orbits;
  for (u64 start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    std::vector<u64> orbit{start};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const LinearCharacter theta = d_character_from_key(c, orbit[i]);
      for (const auto& g : gens) {
        const u64 k = d_character_key(c, character_action(c, g, theta));
        if (!seen[k]) {
          seen[k] = 1;
          orbit.push_back(k);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

inline CliffordSetup build_clifford_setup(const Construction& c, u64 bound = kDefaultElementBound) {
  CliffordSetup s{c, nullptr, nullptr, {}, {}, {}};
  s.e_group = std::make_shared<const ConcreteGroup<EElement>>(make_e_lprime_group(c));
  s.e_table = irr_small_group(*s.e_group);
  s.e_classes = s.e_table.classes;
  const auto orbits = d_character_orbits(c, bound);
  s.orbit_of.assign(static_cast<std::size_t>(c.order_D().get_ui()), 0);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (u64 k : orbits[o]) s.orbit_of[k] = static_cast<std::uint32_t>(o);
    CliffordDatum datum;
    datum.orbit_rep = d_character_from_key(c, orbits[o].front());
    datum.orbit_size = orbits[o].size();
    datum.stabilizer_in_p = stabilizer_in_P(c, datum.orbit_rep);
    if (datum.orbit_size == 1) {
      datum.stabilizer = s.e_group;
      datum.stabilizer_classes = s.e_classes;
      datum.constituents = s.e_table.characters;
    } else {
      const LinearCharacter theta = datum.orbit_rep;
      datum.stabilizer = std::make_shared<const ConcreteGroup<EElement>>(s.e_group->subgroup(
          "Stab(" + theta.to_string() + ")",
          [&c, &theta](const EElement& e) { return character_action(c, e, theta) == theta; }));
      if (datum.stabilizer->order() * datum.orbit_size != s.e_group->order()) {
        throw VerificationFailure("orbit-stabilizer mismatch for " + theta.to_string());
      }
      auto table = irr_small_group(*datum.stabilizer);
      datum.stabilizer_classes = table.classes;
      datum.constituents = std::move(table.characters);
    }
    datum.into_e = make_embedding(*datum.stabilizer, datum.stabilizer_classes, *s.e_group, s.e_classes);
    s.orbits.push_back(std::move(datum));
  }
  return s;
}

/// Irr(G_{l'} | theta) as class functions on an enumerated G_{l'}, for all constituents of one orbit.
inline std::vector<ClassFunction> irr_G_over_theta(const Construction& c, const ConcreteGroup<GElement>& g,
                                                   const std::shared_ptr<const ClassStructure>& gc,
                                                   const CliffordDatum& datum) {
  const auto eg = static_cast<i64>(gc->exponent);
  const auto eh = static_cast<i64>(datum.stabilizer_classes->exponent);
  const i64 theta_order = datum.orbit_rep.value_order;
  if (eg % eh != 0 || eg % theta_order != 0) throw VerificationFailure("Clifford: exponents do not divide exp(G)");
  const std::size_t npsi = datum.constituents.size();
  const std::size_t k = gc->count();
  const auto& H = *datum.stabilizer;

  // psi values per element of H as (exponent -> coefficient) lists at order exp(G)
  std::vector<std::vector<std::vector<std::pair<i64, i64>>>> psi_terms(npsi);
  for (std::size_t i = 0; i < npsi; ++i) {
    psi_terms[i].resize(datum.stabilizer_classes->count());
    for (std::size_t cl = 0; cl < datum.stabilizer_classes->count(); ++cl) {
      const auto coords = detail::small_coordinates(datum.constituents[i].value(cl));
      if (coords.empty()) throw ArithmeticError("Clifford: character value is not integral in the power basis");
      for (std::size_t s = 0; s < coords.size(); ++s) {
        if (coords[s] != 0) psi_terms[i][cl].emplace_back(static_cast<i64>(s) * (eg / eh), coords[s]);
      }
    }
  }

  std::vector<std::vector<std::vector<i64>>> acc(npsi, std::vector<std::vector<i64>>(k, std::vector<i64>(static_cast<std::size_t>(eg), 0)));
  const i64 theta_scale = eg / theta_order;
  for (const auto& d : c.d_elements()) {
    const i64 te = datum.orbit_rep.exponent_at(d_exponents(d)) * theta_scale;
    for (std::size_t hi = 0; hi < H.order(); ++hi) {
      const EElement& h = H.element(hi);
      const std::size_t cls = gc->class_of[g.index_of(GElement{d, h})];
      const std::size_t hcls = datum.stabilizer_classes->class_of[hi];
      for (std::size_t i = 0; i < npsi; ++i) {
        auto& row = acc[i][cls];
        for (const auto& [e, coef] : psi_terms[i][hcls]) row[static_cast<std::size_t>((e + te) % eg)] += coef;
      }
    }
  }

  const mpz_class t_order = c.order_D() * mpz_class(static_cast<unsigned long>(H.order()));
  std::vector<ClassFunction> out;
  out.reserve(npsi);
  for (std::size_t i = 0; i < npsi; ++i) {
    std::vector<CyclotomicNumber> values(k);
    for (std::size_t cl = 0; cl < k; ++cl) {
      std::vector<mpz_class> counts(acc[i][cl].begin(), acc[i][cl].end());
      const mpq_class factor(mpz_class(static_cast<unsigned long>(gc->group_order)),
                             mpz_class(static_cast<unsigned long>(gc->sizes[cl])) * t_order);
      values[cl] = CyclotomicNumber::from_exponent_counts(eg, counts) * CyclotomicNumber(factor);
    }
    out.emplace_back(gc, std::move(values));
  }
  return out;
}

/// The full Irr(G_{l'}) assembled orbit by orbit, in canonical order.
inline std::vector<ClassFunction> irr_G_via_clifford(const CliffordSetup& setup, const ConcreteGroup<GElement>& g,
                                                     const std::shared_ptr<const ClassStructure>& gc) {
  std::vector<ClassFunction> all;
  for (const auto& datum : setup.orbits) {
    auto part = irr_G_over_theta(setup.construction, g, gc, datum);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(all.begin(), all.end(), [](const ClassFunction& a, const ClassFunction& b) { return canonical_less(a, b); });
  return all;
}

/// Every induced character has norm 1.
inline CheckResult check_clifford_norms(const std::vector<ClassFunction>& chars) {
  CheckResult res{"clifford norms"};
  for (std::size_t i = 0; i < chars.size(); ++i) {
    res.require(inner_product(chars[i], chars[i]) == CyclotomicNumber(1L), "character " + std::to_string(i));
  }
  return res;
}

/// Index k with chi(z) = zeta_N^k chi(1) on the generator z of Z_{l'} (N = |Z_{l'}|).
inline i64 central_character_index(const Construction& c, const ConcreteGroup<EElement>& group,
                                   const std::shared_ptr<const ClassStructure>& classes, const ClassFunction& chi) {
  const auto N = static_cast<i64>(c.order_Z_lprime());
  if (N == 1) return 0;
  const EElement z = c.z_element(c.lprime_step());
  const CyclotomicNumber ratio = chi.value(classes->class_of[group.index_of(z)]) * chi.degree_value().inverse();
  for (i64 k = 0; k < N; ++k) {
    if (ratio == CyclotomicNumber::root_of_unity(N, k)) return k;
  }
  throw VerificationFailure("character does not restrict to a multiple of a linear character on Z_l'");
}

}  // namespace mfn
