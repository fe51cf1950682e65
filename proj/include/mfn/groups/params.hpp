#pragma once

#include <optional>
#include <string>

#include "mfn/error.hpp"
#include "mfn/exactnum/number_theory.hpp"

namespace mfn {

/// The integer tuple (l, p, t1, t2, a, lambda[, n]) parameterising one member of the family.
struct ConstructionParams {
  int l = 2;
  int p = 7;
  int t1 = 1;
  int t2 = 1;
  int a = 1;       // v_l(p - 1)
  int lambda = 3;  // smallest generator of F_p^x
  std::optional<int> n;
  bool machinery_mode = false;

  bool operator==(const ConstructionParams&) const = default;

  /// p - 1 is not a power of l.
  bool satisfies_standing_hypothesis() const { return !is_power_of(l, p - 1); }

  i64 l_power_a() const { return checked_pow(l, static_cast<unsigned>(a)); }
  /// |Z_{l'}| = (p - 1) / l^a.
  i64 z_lprime_order() const { return (p - 1) / l_power_a(); }
  i64 modulus_first() const { return checked_pow(l, static_cast<unsigned>(t1)); }
  i64 modulus_second() const { return checked_pow(l, static_cast<unsigned>(t2)); }

  std::string describe() const {
    std::string s = "l=" + std::to_string(l) + " p=" + std::to_string(p) + " t=(" + std::to_string(t1) + "," +
                    std::to_string(t2) + ") a=" + std::to_string(a) + " lambda=" + std::to_string(lambda);
    if (n) s += " n=" + std::to_string(*n);
    if (machinery_mode) s += " [machinery]";
    return s;
  }
};

/// Validates and completes the parameters. Without machinery_mode, p - 1 must not be a power of l.
inline ConstructionParams make_params(int l, int p, int t1, int t2, bool machinery_mode = false,
                                      std::optional<int> n = std::nullopt) {
  if (!is_prime(l)) throw ParameterError("l = " + std::to_string(l) + " is not prime");
  if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
  if (p == l) throw ParameterError("p must differ from l");
  if (t1 < 1 || t2 < 1) throw ParameterError("t1 and t2 must be positive");
  if (n && *n < 1) throw ParameterError("n must be positive");
  ConstructionParams params;
  params.l = l;
  params.p = p;
  params.t1 = t1;
  params.t2 = t2;
  params.a = l_adic_valuation(l, p - 1);
  params.lambda = static_cast<int>(primitive_root(p));
  params.n = n;
  params.machinery_mode = machinery_mode;
  if (!machinery_mode && !params.satisfies_standing_hypothesis()) {
    throw ParameterError("p - 1 = " + std::to_string(p - 1) + " is a power of l = " + std::to_string(l) +
                         " (use machinery mode for oracle-scale runs)");
  }
  return params;
}

/// Gate for theorem-level entry points; machinery mode does not lift it.
inline void require_theorem_hypothesis(const ConstructionParams& params) {
  if (!params.satisfies_standing_hypothesis()) {
    throw ParameterError("theorem-level operation needs p - 1 not a power of l, got l=" + std::to_string(params.l) +
                         " p=" + std::to_string(params.p));
  }
}

}  // namespace mfn
