#pragma once

// Conjugation by elements of E and the factor swap on G_{l'}.

#include <string>

#include "mfn/error.hpp"
#include "mfn/groups/construction.hpp"

namespace mfn {

enum class AutomorphismKind { Conjugation, Swap };

struct AutomorphismSpec {
  AutomorphismKind kind = AutomorphismKind::Conjugation;
  EElement conjugator;  // ignored for Swap

  static AutomorphismSpec conjugation(const EElement& g) { return {AutomorphismKind::Conjugation, g}; }
  static AutomorphismSpec swap() { return {AutomorphismKind::Swap, {}}; }

  std::string describe() const {
    return kind == AutomorphismKind::Swap ? std::string("swap") : "conjugation by " + to_string(conjugator);
  }
};

inline void check_automorphism_spec(const Construction& c, const AutomorphismSpec& spec) {
  if (spec.kind == AutomorphismKind::Swap && c.params().t1 != c.params().t2) {
    throw ParameterError("the swap automorphism needs t1 = t2, got t=(" + std::to_string(c.params().t1) + "," +
                         std::to_string(c.params().t2) + ")");
  }
}

/// delta(x, y, l^m, l^n, l^r) = (y, x, l^n, l^m, l^(mn - r)).
inline EElement swap_e(const Construction& c, const EElement& e) {
  return {e.y, e.x, e.n, e.m, c.reduce_exponent(static_cast<i64>(e.m) * e.n - e.r)};
}

inline DElement swap_d(const DElement& d) { return {d.second, d.first}; }

inline EElement apply_automorphism(const Construction& c, const AutomorphismSpec& spec, const EElement& e) {
  check_automorphism_spec(c, spec);
  if (spec.kind == AutomorphismKind::Swap) return swap_e(c, e);
  return c.e_mul(c.e_mul(spec.conjugator, e), c.e_inverse(spec.conjugator));
}

inline DElement apply_automorphism(const Construction& c, const AutomorphismSpec& spec, const DElement& d) {
  check_automorphism_spec(c, spec);
  if (spec.kind == AutomorphismKind::Swap) return swap_d(d);
  return c.act_on_D(spec.conjugator, d);
}

inline GElement apply_automorphism(const Construction& c, const AutomorphismSpec& spec, const GElement& g) {
  return {apply_automorphism(c, spec, g.d), apply_automorphism(c, spec, g.e)};
}

}  // namespace mfn
