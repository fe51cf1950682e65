#pragma once

// Restriction and induction along an explicit subgroup embedding.

#include <functional>
#include <memory>
#include <vector>

#include "mfn/chars/class_function.hpp"
#include "mfn/error.hpp"
#include "mfn/groups/concrete_group.hpp"

namespace mfn {

struct SubgroupEmbedding {
  std::shared_ptr<const ClassStructure> sub;
  std::shared_ptr<const ClassStructure> super;
  std::vector<std::size_t> fusion;  // class of H -> class of G
};

/// Embedding of H into G through `map`; every element of H must land in G.
template <class SubElem, class SupElem>
SubgroupEmbedding make_embedding(const ConcreteGroup<SubElem>& h, std::shared_ptr<const ClassStructure> h_classes,
                                 const ConcreteGroup<SupElem>& g, std::shared_ptr<const ClassStructure> g_classes,
                                 const std::function<SupElem(const SubElem&)>& map) {
  SubgroupEmbedding emb{h_classes, g_classes, {}};
  for (const auto& x : h.elements()) {
    if (!g.contains(map(x))) throw ParameterError(h.name() + " is not a subgroup of " + g.name());
  }
  for (std::size_t k = 0; k < h_classes->count(); ++k) {
    const SupElem image = map(h.element(h_classes->representatives[k]));
    emb.fusion.push_back(g_classes->class_of[g.index_of(image)]);
  }
  return emb;
}

template <class Elem>
SubgroupEmbedding make_embedding(const ConcreteGroup<Elem>& h, std::shared_ptr<const ClassStructure> h_classes,
                                 const ConcreteGroup<Elem>& g, std::shared_ptr<const ClassStructure> g_classes) {
  return make_embedding<Elem, Elem>(h, std::move(h_classes), g, std::move(g_classes),
                                    [](const Elem& x) { return x; });
}

inline ClassFunction restrict_to(const ClassFunction& chi, const SubgroupEmbedding& emb) {
  if (chi.classes() != emb.super) throw ParameterError("restriction: character lives on another group");
  std::vector<CyclotomicNumber> values;
  values.reserve(emb.fusion.size());
  for (std::size_t k : emb.fusion) values.push_back(chi.value(k));
  return {emb.sub, std::move(values)};
}

/// Ind(psi)(g_k) = |G| / (|K_k| |H|) * sum over H-classes c fusing into K_k of |c| psi(c).
inline ClassFunction induce_from(const ClassFunction& psi, const SubgroupEmbedding& emb) {
  if (psi.classes() != emb.sub) throw ParameterError("induction: character lives on another group");
  const auto& gs = *emb.super;
  const auto& hs = *emb.sub;
  const auto eg = static_cast<i64>(gs.exponent);
  std::vector<CyclotomicNumber> sums(gs.count(), CyclotomicNumber(0L));
  for (std::size_t c = 0; c < hs.count(); ++c) {
    sums[emb.fusion[c]] += at_order(psi.value(c), eg) * CyclotomicNumber(mpz_class(static_cast<unsigned long>(hs.sizes[c])));
  }
  for (std::size_t k = 0; k < gs.count(); ++k) {
    if (sums[k].is_zero()) continue;
    const mpq_class factor(mpz_class(static_cast<unsigned long>(gs.group_order)),
                           mpz_class(static_cast<unsigned long>(gs.sizes[k])) *
                               mpz_class(static_cast<unsigned long>(hs.group_order)));
    sums[k] = sums[k] * CyclotomicNumber(factor);
  }
  return {emb.super, std::move(sums)};
}

enum class InductionDirection { Up, Down };

inline ClassFunction induce_restrict(const ClassFunction& chi, const SubgroupEmbedding& emb, InductionDirection dir) {
  return dir == InductionDirection::Up ? induce_from(chi, emb) : restrict_to(chi, emb);
}

/// Trivial character on the given classes.
inline ClassFunction trivial_character(std::shared_ptr<const ClassStructure> classes) {
  std::vector<CyclotomicNumber> ones(classes->count(), CyclotomicNumber(1L));
  return {std::move(classes), std::move(ones)};
}

}  // namespace mfn
