#pragma once

// Reduction modulo l of values in Z[zeta_N] localised away from l.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "mfn/error.hpp"
#include "mfn/exactnum/cyclotomic.hpp"
#include "mfn/exactnum/finite_field.hpp"
#include "mfn/exactnum/number_theory.hpp"

namespace mfn {

class ReductionMap {
 public:
  ReductionMap(i64 N, i64 l) : N_(N), l_(l) {
    if (N < 1) throw ParameterError("build_reduction: N must be positive");
    if (!is_prime(l)) throw ParameterError("build_reduction: l = " + std::to_string(l) + " is not prime");
    if (N % l == 0) {
      throw ParameterError("build_reduction: l = " + std::to_string(l) + " divides N = " + std::to_string(N));
    }
    m_ = static_cast<int>(multiplicative_order(l, N));
    field_ = finite_field(l, m_);
    zeta_image_ = FiniteFieldElement::generator(field_).pow(static_cast<u64>((field_->size() - 1) / N));
    powers_.reserve(static_cast<std::size_t>(N));
    FiniteFieldElement current = FiniteFieldElement::one(field_);
    for (i64 k = 0; k < N; ++k) {
      powers_.push_back(current);
      current = current * zeta_image_;
    }
  }

  i64 root_order() const { return N_; }
  i64 characteristic() const { return l_; }
  int field_degree() const { return m_; }
  const std::shared_ptr<const FiniteField>& field() const { return field_; }
  const FiniteFieldElement& zeta_image() const { return zeta_image_; }

  FiniteFieldElement reduce(const mpq_class& q) const {
    const mpz_class lz(l_);
    const mpz_class den_mod = mpz_class(q.get_den() % lz);
    if (den_mod == 0) throw ArithmeticError("reduce: l divides the denominator of " + q.get_str());
    mpz_class num_mod = q.get_num() % lz;
    if (num_mod < 0) num_mod += lz;
    const i64 value = mulmod(num_mod.get_si(), ffpoly::inverse_mod(den_mod.get_si(), l_), l_);
    return FiniteFieldElement::from_int(field_, value);
  }

  /// Image of x; the order of x must divide N.
  FiniteFieldElement reduce(const CyclotomicNumber& x) const {
    if (N_ % x.order() != 0) {
      throw ParameterError("reduce: value of order " + std::to_string(x.order()) +
                           " does not live in Q(zeta_" + std::to_string(N_) + ")");
    }
    const i64 step = N_ / x.order();
    const mpz_class lz(l_);
    const mpz_class den_mod = mpz_class(x.denominator() % lz);
    if (den_mod == 0) throw ArithmeticError("reduce: l divides the denominator of " + x.to_string());
    FiniteFieldElement acc = FiniteFieldElement::zero(field_);
    const auto& nums = x.numerators();
    for (std::size_t i = 0; i < nums.size(); ++i) {
      mpz_class c = nums[i] % lz;
      if (c < 0) c += lz;
      if (c == 0) continue;
      acc += FiniteFieldElement::from_int(field_, c.get_si()) *
             powers_[static_cast<std::size_t>(mod(static_cast<i64>(i) * step, N_))];
    }
    return acc * FiniteFieldElement::from_int(field_, ffpoly::inverse_mod(den_mod.get_si(), l_));
  }

 private:
  i64 N_;
  i64 l_;
  int m_ = 1;
  std::shared_ptr<const FiniteField> field_;
  FiniteFieldElement zeta_image_;
  std::vector<FiniteFieldElement> powers_;
};

inline ReductionMap build_reduction(i64 N, i64 l) { return ReductionMap(N, l); }

}  // namespace mfn
