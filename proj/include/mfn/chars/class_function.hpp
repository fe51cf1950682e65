#pragma once

// Class functions with exact cyclotomic values and their inner products.

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "mfn/check_result.hpp"
#include "mfn/error.hpp"
#include "mfn/exactnum/cyclotomic.hpp"
#include "mfn/groups/concrete_group.hpp"

namespace mfn {

/// Brings x to order N (x must live in Q(zeta_N)).
inline CyclotomicNumber at_order(const CyclotomicNumber& x, i64 N) {
  if (x.order() == N) return x;
  if (N % x.order() == 0) return x.lifted(N);
  try {
    return x.descended(std::gcd(x.order(), N)).lifted(N);
  } catch (const ArithmeticError&) {
    throw ParameterError("value of order " + std::to_string(x.order()) + " does not live in Q(zeta_" +
                         std::to_string(N) + ")");
  }
}

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(std::shared_ptr<const ClassStructure> classes, std::vector<CyclotomicNumber> values)
      : classes_(std::move(classes)), values_(std::move(values)) {
    if (!classes_ || values_.size() != classes_->count()) {
      throw ParameterError("class function needs one value per class");
    }
    const auto e = static_cast<i64>(classes_->exponent);
    for (auto& v : values_) v = at_order(v, e);
  }

  const std::shared_ptr<const ClassStructure>& classes() const { return classes_; }
  const std::vector<CyclotomicNumber>& values() const { return values_; }
  const CyclotomicNumber& value(std::size_t k) const { return values_[k]; }
  const CyclotomicNumber& degree_value() const { return values_[0]; }
  /// chi(1) as an integer; throws if it is not one.
  mpz_class degree() const {
    if (!values_[0].is_integer()) throw ArithmeticError("class function has non-integral value at 1");
    return values_[0].to_rational().get_num();
  }

  ClassFunction conj() const {
    std::vector<CyclotomicNumber> v;
    v.reserve(values_.size());
    for (const auto& x : values_) v.push_back(x.conj());
    return {classes_, std::move(v)};
  }

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    a.check_same(b);
    std::vector<CyclotomicNumber> v(a.values_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.values_[k] + b.values_[k];
    return {a.classes_, std::move(v)};
  }
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    a.check_same(b);
    std::vector<CyclotomicNumber> v(a.values_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.values_[k] * b.values_[k];
    return {a.classes_, std::move(v)};
  }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.classes_ == b.classes_ && a.values_ == b.values_;
  }

  /// Canonical order: by degree, then by value representations class by class.
  friend bool canonical_less(const ClassFunction& a, const ClassFunction& b) {
    const mpq_class da = a.values_[0].is_rational() ? a.values_[0].to_rational() : mpq_class(0);
    const mpq_class db = b.values_[0].is_rational() ? b.values_[0].to_rational() : mpq_class(0);
    if (da != db) return da < db;
    for (std::size_t k = 0; k < a.values_.size(); ++k) {
      if (canonical_less(a.values_[k], b.values_[k])) return true;
      if (canonical_less(b.values_[k], a.values_[k])) return false;
    }
    return false;
  }

  void check_same(const ClassFunction& o) const {
    if (classes_ != o.classes_) throw ParameterError("class functions live on different groups");
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < values_.size(); ++k) s += (k ? ", " : "") + values_[k].to_string();
    return s + "]";
  }

 private:
  std::shared_ptr<const ClassStructure> classes_;
  std::vector<CyclotomicNumber> values_;
};

namespace detail {

/// Integral power-basis coordinates, or empty when some coordinate is not a small integer.
inline std::vector<i64> small_coordinates(const CyclotomicNumber& x) {
  if (x.denominator() != 1) return {};
  std::vector<i64> out;
  out.reserve(x.numerators().size());
  for (const auto& c : x.numerators()) {
    if (!c.fits_slong_p()) return {};
    out.push_back(c.get_si());
  }
  return out;
}

/// sum_k w_k a_k conj(b_k) for values of common order N, accumulated as exponent counts.
inline CyclotomicNumber weighted_hermitian_sum(const std::vector<CyclotomicNumber>& a,
                                               const std::vector<CyclotomicNumber>& b,
                                               const std::vector<u64>& weights, i64 N) {
  std::vector<__int128> acc(static_cast<std::size_t>(N), 0);
  bool fast = true;
  for (std::size_t k = 0; k < a.size() && fast; ++k) {
    const auto ca = small_coordinates(a[k]);
    const auto cb = small_coordinates(b[k]);
    if (ca.empty() || cb.empty()) {
      fast = false;
      break;
    }
    const auto w = static_cast<__int128>(weights[k]);
    for (std::size_t s = 0; s < ca.size(); ++s) {
      if (ca[s] == 0) continue;
      for (std::size_t t = 0; t < cb.size(); ++t) {
        if (cb[t] == 0) continue;
        acc[static_cast<std::size_t>(mod(static_cast<i64>(s) - static_cast<i64>(t), N))] +=
            w * ca[s] * cb[t];
      }
    }
  }
  if (fast) {
    std::vector<mpz_class> counts(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      const __int128 v = acc[i];
      const bool neg = v < 0;
      unsigned __int128 m = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
      mpz_class z = static_cast<unsigned long>(m >> 64);
      z <<= 64;
      z += static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL);
      counts[i] = neg ? mpz_class(-z) : z;
    }
    return CyclotomicNumber::from_exponent_counts(N, counts);
  }
  CyclotomicNumber total;
  for (std::size_t k = 0; k < a.size(); ++k) {
    total += a[k] * b[k].conj() * CyclotomicNumber(mpz_class(static_cast<unsigned long>(weights[k])));
  }
  return total;
}

}  // namespace detail

/// <a, b> = |G|^-1 sum_g a(g) conj(b(g)), exactly.
inline CyclotomicNumber inner_product(const ClassFunction& a, const ClassFunction& b) {
  a.check_same(b);
  const auto& cs = *a.classes();
  const CyclotomicNumber s =
      detail::weighted_hermitian_sum(a.values(), b.values(), cs.sizes, static_cast<i64>(cs.exponent));
  return s * CyclotomicNumber(mpq_class(1, static_cast<unsigned long>(cs.group_order)));
}

/// <chi_i, chi_j> = delta_ij over the whole list.
inline CheckResult check_first_orthogonality(const std::vector<ClassFunction>& chars) {
  CheckResult res{"first orthogonality"};
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = i; j < chars.size(); ++j) {
      const CyclotomicNumber ip = inner_product(chars[i], chars[j]);
      res.require(ip == CyclotomicNumber(i == j ? 1L : 0L),
                  "<" + std::to_string(i) + "," + std::to_string(j) + "> = " + ip.to_string());
    }
  return res;
}

/// sum_chi chi(g_i) conj(chi(g_j)) = delta_ij |C(g_i)|; the list must be complete.
inline CheckResult check_second_orthogonality(const std::vector<ClassFunction>& chars) {
  CheckResult res{"second orthogonality"};
  if (chars.empty()) {
    res.fail("empty character list");
    return res;
  }
  const auto& cs = *chars.front().classes();
  const std::size_t k = cs.count();
  res.require(chars.size() == k, "character count " + std::to_string(chars.size()) + " != class count " +
                                     std::to_string(k));
  if (chars.size() != k) return res;
  const std::vector<u64> ones(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<CyclotomicNumber> col_i(k);
    for (std::size_t c = 0; c < k; ++c) col_i[c] = chars[c].value(i);
    for (std::size_t j = i; j < k; ++j) {
      std::vector<CyclotomicNumber> col_j(k);
      for (std::size_t c = 0; c < k; ++c) col_j[c] = chars[c].value(j);
      const CyclotomicNumber s = detail::weighted_hermitian_sum(col_i, col_j, ones, static_cast<i64>(cs.exponent));
      const long expected = i == j ? static_cast<long>(cs.centralizer_order(i)) : 0L;
      res.require(s == CyclotomicNumber(expected), "columns " + std::to_string(i) + "," + std::to_string(j));
    }
  }
  return res;
}

/// sum chi(1)^2 over the list.
inline mpz_class sum_of_squared_degrees(const std::vector<ClassFunction>& chars) {
  mpz_class s = 0;
  for (const auto& chi : chars) s += chi.degree() * chi.degree();
  return s;
}

}  // namespace mfn
