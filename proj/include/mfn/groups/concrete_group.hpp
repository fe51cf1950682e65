#pragma once

// Explicitly enumerated finite groups and their conjugacy classes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mfn/error.hpp"
#include "mfn/exactnum/number_theory.hpp"
#include "mfn/groups/construction.hpp"

namespace mfn {

inline constexpr u64 kDefaultClassBound = 100'000;

template <class Elem>
class ConcreteGroup {
 public:
  using Mul = std::function<Elem(const Elem&, const Elem&)>;
  using Inv = std::function<Elem(const Elem&)>;
  using Key = std::function<u64(const Elem&)>;

  ConcreteGroup(std::string name, std::vector<Elem> elements, std::vector<Elem> generators, Mul mul, Inv inv,
                Key key)
      : name_(std::move(name)),
        elements_(std::move(elements)),
        generators_(std::move(generators)),
        mul_(std::move(mul)),
        inv_(std::move(inv)),
        key_(std::move(key)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    index_.reserve(elements_.size() * 2);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!index_.emplace(key_(elements_[i]), static_cast<std::uint32_t>(i)).second) {
        throw VerificationFailure(name_ + ": element keys collide");
      }
    }
    if (elements_.empty()) throw ParameterError(name_ + ": empty element list");
    for (const auto& g : generators_) {
      if (!contains(g)) throw ParameterError(name_ + ": generator outside the group");
    }
  }

  const std::string& name() const { return name_; }
  u64 order() const { return elements_.size(); }
  const std::vector<Elem>& elements() const { return elements_; }
  const Elem& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Elem>& generators() const { return generators_; }

  std::optional<std::size_t> find(const Elem& g) const {
    const auto it = index_.find(key_(g));
    if (it == index_.end() || !(elements_[it->second] == g)) return std::nullopt;
    return it->second;
  }
  bool contains(const Elem& g) const { return find(g).has_value(); }
  std::size_t index_of(const Elem& g) const {
    const auto idx = find(g);
    if (!idx) throw ParameterError(name_ + ": element is not a member");
    return *idx;
  }

  Elem mul(const Elem& a, const Elem& b) const { return mul_(a, b); }
  Elem inverse(const Elem& a) const { return inv_(a); }
  Elem conjugate(const Elem& g, const Elem& x) const { return mul_(mul_(g, x), inv_(g)); }
  u64 key(const Elem& g) const { return key_(g); }

  /// Elements are sorted, so the identity (all-zero tuple) sits at index 0 for every construction here.
  std::size_t identity_index() const { return 0; }

  bool is_abelian() const {
    for (const auto& a : generators_)
      for (const auto& b : generators_)
        if (!(mul_(a, b) == mul_(b, a))) return false;
    return true;
  }

  /// Subgroup of the elements satisfying pred; the caller guarantees closure.
  ConcreteGroup subgroup(std::string name, const std::function<bool(const Elem&)>& pred) const {
    std::vector<Elem> members;
    for (const auto& g : elements_) {
      if (pred(g)) members.push_back(g);
    }
    return from_members(std::move(name), std::move(members));
  }

  /// Subgroup with the given (sorted or unsorted) member list; generators are chosen greedily.
  ConcreteGroup from_members(std::string name, std::vector<Elem> members) const {
    std::sort(members.begin(), members.end());
    std::vector<Elem> gens;
    std::vector<Elem> span{members.front()};
    std::unordered_map<u64, char> seen{{key_(members.front()), 1}};
    for (const auto& g : members) {
      if (seen.count(key_(g))) continue;
      gens.push_back(g);
      // extend the span by closing under right multiplication with all generators
      std::vector<Elem> frontier = span;
      while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const auto& x : frontier) {
          for (const auto& s : gens) {
            Elem y = mul_(x, s);
            if (seen.emplace(key_(y), 1).second) {
              span.push_back(y);
              next.push_back(std::move(y));
            }
          }
        }
        frontier = std::move(next);
      }
    }
    if (span.size() != members.size()) throw VerificationFailure(name + ": member list is not a subgroup");
    return ConcreteGroup(std::move(name), std::move(members), std::move(gens), mul_, inv_, key_);
  }

 private:
  std::string name_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
  Mul mul_;
  Inv inv_;
  Key key_;
  std::unordered_map<u64, std::uint32_t> index_;
};

/// Conjugacy classes of a ConcreteGroup, ordered by minimal element.
struct ClassStructure {
  std::string group_name;
  u64 group_order = 0;
  std::vector<u64> sizes;
  std::vector<std::size_t> representatives;  // element index of the minimal member
  std::vector<std::size_t> inverse_class;
  std::vector<u64> element_order;
  std::vector<std::vector<std::size_t>> power_map;  // power_map[k][j]: class of rep_k^j, j < element_order[k]
  std::vector<std::uint32_t> class_of;               // per element index
  u64 exponent = 1;

  std::size_t count() const { return sizes.size(); }
  u64 centralizer_order(std::size_t k) const { return group_order / sizes[k]; }
  std::vector<std::size_t> members(std::size_t k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < class_of.size(); ++i) {
      if (class_of[i] == k) out.push_back(i);
    }
    return out;
  }
};

template <class Elem>
std::shared_ptr<const ClassStructure> conjugacy_classes(const ConcreteGroup<Elem>& group,
                                                        u64 bound = kDefaultClassBound) {
  if (group.order() > bound) {
    throw BoundExceeded(group.name() + " has order " + std::to_string(group.order()) + " above class bound " +
                        std::to_string(bound));
  }
  auto cs = std::make_shared<ClassStructure>();
  cs->group_name = group.name();
  cs->group_order = group.order();
  const std::size_t n = group.order();
  constexpr std::uint32_t kUnset = UINT32_MAX;
  cs->class_of.assign(n, kUnset);
  std::vector<Elem> gen_inv;
  for (const auto& g : group.generators()) gen_inv.push_back(group.inverse(g));

  for (std::size_t start = 0; start < n; ++start) {
    if (cs->class_of[start] != kUnset) continue;
    const auto k = static_cast<std::uint32_t>(cs->sizes.size());
    cs->class_of[start] = k;
    std::vector<std::size_t> frontier{start};
    u64 size = 1;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t i : frontier) {
        const Elem& x = group.element(i);
        for (std::size_t s = 0; s < gen_inv.size(); ++s) {
          const std::size_t j = group.index_of(group.mul(group.mul(group.generators()[s], x), gen_inv[s]));
          if (cs->class_of[j] == kUnset) {
            cs->class_of[j] = k;
            ++size;
            next.push_back(j);
          }
        }
      }
      frontier = std::move(next);
    }
    cs->sizes.push_back(size);
    cs->representatives.push_back(start);
  }

  const std::size_t k = cs->count();
  cs->inverse_class.resize(k);
  cs->element_order.resize(k);
  cs->power_map.resize(k);
  u64 exponent = 1;
  for (std::size_t c = 0; c < k; ++c) {
    const Elem& g = group.element(cs->representatives[c]);
    cs->inverse_class[c] = cs->class_of[group.index_of(group.inverse(g))];
    std::vector<std::size_t> powers{cs->class_of[group.identity_index()]};
    Elem power = g;
    std::size_t idx = group.index_of(power);
    while (idx != group.identity_index()) {
      powers.push_back(cs->class_of[idx]);
      power = group.mul(power, g);
      idx = group.index_of(power);
    }
    cs->element_order[c] = powers.size();
    cs->power_map[c] = std::move(powers);
    exponent = std::lcm(exponent, cs->element_order[c]);
  }
  cs->exponent = exponent;
  return cs;
}

// ---- the concrete groups of the construction -------------------------------

inline ConcreteGroup<EElement> make_e_lprime_group(const Construction& c) {
  return ConcreteGroup<EElement>(
      "E_l'", c.e_lprime_elements(), c.e_lprime_generators(),
      [c](const EElement& a, const EElement& b) { return c.e_mul(a, b); },
      [c](const EElement& a) { return c.e_inverse(a); }, [c](const EElement& a) { return c.key(a); });
}

inline ConcreteGroup<EElement> make_e_group(const Construction& c, u64 bound = kDefaultElementBound) {
  std::vector<EElement> gens{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
  return ConcreteGroup<EElement>(
      "E", c.e_elements(bound), gens, [c](const EElement& a, const EElement& b) { return c.e_mul(a, b); },
      [c](const EElement& a) { return c.e_inverse(a); }, [c](const EElement& a) { return c.key(a); });
}

inline ConcreteGroup<GElement> make_g_lprime_group(const Construction& c, u64 bound = kDefaultElementBound) {
  return ConcreteGroup<GElement>(
      "G_l'", c.g_lprime_elements(bound), c.g_lprime_generators(),
      [c](const GElement& a, const GElement& b) { return c.g_mul(a, b); },
      [c](const GElement& a) { return c.g_inverse(a); }, [c](const GElement& a) { return c.key(a); });
}

/// Cyclic group Z/N written additively in the r-slot of E elements; used for small oracles.
inline ConcreteGroup<EElement> make_cyclic_group(int N) {
  if (N < 1) throw ParameterError("cyclic group order must be positive");
  std::vector<EElement> elems;
  for (int r = 0; r < N; ++r) elems.push_back({0, 0, 0, 0, r});
  std::vector<EElement> gens;
  if (N > 1) gens.push_back({0, 0, 0, 0, 1});
  return ConcreteGroup<EElement>(
      "C" + std::to_string(N), elems, gens,
      [N](const EElement& a, const EElement& b) { return EElement{0, 0, 0, 0, (a.r + b.r) % N}; },
      [N](const EElement& a) { return EElement{0, 0, 0, 0, (N - a.r) % N}; },
      [](const EElement& a) { return static_cast<u64>(a.r); });
}

}  // namespace mfn
