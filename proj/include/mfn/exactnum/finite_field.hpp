#pragma once

// Finite fields F_{l^m} realised as F_l[x]/(f) with a canonical modulus.
//
// Polynomials over F_l are ordered by the base-l encoding sum_i c_i l^i of
// their coefficients (highest degree most significant). The modulus for a
// given (l, m) is the smallest monic irreducible polynomial of degree m in
// that order, and the distinguished generator is the smallest element whose
// multiplicative order is l^m - 1. Both are fixed per process.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mfn/error.hpp"
#include "mfn/exactnum/number_theory.hpp"

namespace mfn {

namespace ffpoly {

using Poly = std::vector<i64>;  // coefficients mod l, lowest degree first

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline i64 inverse_mod(i64 a, i64 l) { return powmod(a, static_cast<u64>(l - 2), l); }

/// Remainder of a modulo the nonzero polynomial f.
inline Poly rem(Poly a, const Poly& f, i64 l) {
  trim(a);
  Poly g = f;
  trim(g);
  const std::size_t df = g.size() - 1;
  const i64 lead_inv = inverse_mod(g.back(), l);
  while (a.size() > df && !a.empty()) {
    const i64 c = mulmod(a.back(), lead_inv, l);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = mod(a[shift + i] - c * g[i], l);
    trim(a);
  }
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, i64 l) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % l;
  }
  trim(r);
  return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, i64 l) { return rem(mul(a, b, l), f, l); }

inline Poly powmod(Poly base, u64 e, const Poly& f, i64 l) {
  Poly result{1};
  base = rem(base, f, l);
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, f, l);
    base = mulmod(base, base, f, l);
    e >>= 1U;
  }
  return rem(result, f, l);
}

inline Poly sub(Poly a, const Poly& b, i64 l) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], l);
  trim(a);
  return a;
}

inline Poly gcd(Poly a, Poly b, i64 l) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, l);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's test for a monic f of degree m.
inline bool is_irreducible(const Poly& f, i64 l) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  const Poly x{0, 1};
  auto frobenius_iterate = [&](std::size_t times) {
    Poly h = x;
    for (std::size_t i = 0; i < times; ++i) h = powmod(h, static_cast<u64>(l), f, l);
    return h;
  };
  if (sub(frobenius_iterate(m), x, l) != Poly{}) return false;
  for (i64 q : prime_factors(static_cast<i64>(m))) {
    const Poly g = gcd(f, sub(frobenius_iterate(m / static_cast<std::size_t>(q)), x, l), l);
    if (g.size() != 1) return false;
  }
  return true;
}

inline Poly from_code(i64 code, i64 l, std::size_t length) {
  Poly out(length, 0);
  for (std::size_t i = 0; i < length; ++i) {
    out[i] = code % l;
    code /= l;
  }
  return out;
}

}  // namespace ffpoly

class FiniteField {
 public:
  FiniteField(i64 l, int m) : l_(l), m_(m) {
    if (!is_prime(l)) throw ParameterError("FiniteField: characteristic " + std::to_string(l) + " is not prime");
    if (m < 1) throw ParameterError("FiniteField: degree must be positive");
    size_ = checked_pow(l, static_cast<unsigned>(m));
    if (size_ > (i64{1} << 40)) throw BoundExceeded("FiniteField: field too large for this implementation");
    for (i64 code = 0; code < size_; ++code) {
      ffpoly::Poly f = ffpoly::from_code(code, l, static_cast<std::size_t>(m));
      f.push_back(1);
      if (ffpoly::is_irreducible(f, l)) {
        modulus_ = std::move(f);
        break;
      }
    }
    if (modulus_.empty()) throw VerificationFailure("FiniteField: no irreducible polynomial found");
    const auto qs = prime_factors(size_ - 1);
    for (i64 code = 1; code < size_; ++code) {
      const ffpoly::Poly g = ffpoly::from_code(code, l, static_cast<std::size_t>(m));
      bool generates = true;
      for (i64 q : qs) {
        if (reduce(ffpoly::powmod(g, static_cast<u64>((size_ - 1) / q), modulus_, l)) == one_rep()) {
          generates = false;
          break;
        }
      }
      if (generates) {
        generator_ = g;
        break;
      }
    }
  }

  i64 characteristic() const { return l_; }
  int degree() const { return m_; }
  i64 size() const { return size_; }
  const ffpoly::Poly& modulus() const { return modulus_; }
  const ffpoly::Poly& generator_rep() const { return generator_; }

  /// Fixed-length representation (length m).
  ffpoly::Poly reduce(ffpoly::Poly a) const {
    a = ffpoly::rem(std::move(a), modulus_, l_);
    a.resize(static_cast<std::size_t>(m_), 0);
    return a;
  }
  ffpoly::Poly one_rep() const {
    ffpoly::Poly r(static_cast<std::size_t>(m_), 0);
    r[0] = 1;
    return r;
  }

 private:
  i64 l_;
  int m_;
  i64 size_ = 0;
  ffpoly::Poly modulus_;
  ffpoly::Poly generator_;
};

/// Canonical field F_{l^m}; one instance per (l, m) for the whole process.
inline std::shared_ptr<const FiniteField> finite_field(i64 l, int m) {
  static std::mutex guard;
  static std::map<std::pair<i64, int>, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto key = std::make_pair(l, m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_shared<const FiniteField>(l, m)).first;
  return it->second;
}

class FiniteFieldElement {
 public:
  FiniteFieldElement() = default;
  FiniteFieldElement(std::shared_ptr<const FiniteField> field, ffpoly::Poly rep)
      : field_(std::move(field)), rep_(field_->reduce(std::move(rep))) {}

  static FiniteFieldElement zero(const std::shared_ptr<const FiniteField>& f) { return {f, {}}; }
  static FiniteFieldElement one(const std::shared_ptr<const FiniteField>& f) { return {f, {1}}; }
  static FiniteFieldElement from_int(const std::shared_ptr<const FiniteField>& f, i64 v) {
    return {f, {mod(v, f->characteristic())}};
  }
  static FiniteFieldElement from_code(const std::shared_ptr<const FiniteField>& f, i64 code) {
    return {f, ffpoly::from_code(code, f->characteristic(), static_cast<std::size_t>(f->degree()))};
  }
  static FiniteFieldElement generator(const std::shared_ptr<const FiniteField>& f) { return {f, f->generator_rep()}; }

  const std::shared_ptr<const FiniteField>& field() const { return field_; }
  const ffpoly::Poly& rep() const { return rep_; }

  i64 code() const {
    i64 c = 0;
    for (std::size_t i = rep_.size(); i-- > 0;) c = c * field_->characteristic() + rep_[i];
    return c;
  }

  bool is_zero() const {
    for (i64 c : rep_) {
      if (c != 0) return false;
    }
    return true;
  }
  bool is_one() const { return rep_ == field_->one_rep(); }

  FiniteFieldElement operator+(const FiniteFieldElement& o) const {
    check_same(o);
    ffpoly::Poly r = rep_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + o.rep_[i]) % field_->characteristic();
    return {field_, std::move(r)};
  }
  FiniteFieldElement operator-() const {
    ffpoly::Poly r = rep_;
    for (auto& c : r) c = mod(-c, field_->characteristic());
    return {field_, std::move(r)};
  }
  FiniteFieldElement operator-(const FiniteFieldElement& o) const { return *this + (-o); }
  FiniteFieldElement operator*(const FiniteFieldElement& o) const {
    check_same(o);
    return {field_, ffpoly::mul(rep_, o.rep_, field_->characteristic())};
  }
  FiniteFieldElement& operator+=(const FiniteFieldElement& o) { return *this = *this + o; }
  FiniteFieldElement& operator*=(const FiniteFieldElement& o) { return *this = *this * o; }

  FiniteFieldElement pow(u64 e) const {
    return {field_, ffpoly::powmod(rep_, e, field_->modulus(), field_->characteristic())};
  }
  FiniteFieldElement pow(const mpz_class& e) const {
    if (is_zero()) return e == 0 ? one(field_) : zero(field_);
    if (e < 0) return inverse().pow(mpz_class(-e));
    const mpz_class reduced = e % mpz_class(field_->size() - 1);
    return pow(static_cast<u64>(reduced.get_ui()));
  }
  FiniteFieldElement inverse() const {
    if (is_zero()) throw ArithmeticError("FiniteFieldElement: inverse of zero");
    return pow(static_cast<u64>(field_->size() - 2));
  }
  FiniteFieldElement operator/(const FiniteFieldElement& o) const { return *this * o.inverse(); }

  /// x -> x^(l^k); k is taken modulo the field degree.
  FiniteFieldElement frobenius(i64 k) const {
    FiniteFieldElement r = *this;
    const i64 steps = mod(k, field_->degree());
    for (i64 i = 0; i < steps; ++i) r = r.pow(static_cast<u64>(field_->characteristic()));
    return r;
  }

  i64 multiplicative_order() const {
    if (is_zero()) throw ArithmeticError("multiplicative_order of zero");
    i64 order = field_->size() - 1;
    for (i64 q : prime_factors(order)) {
      while (order % q == 0 && pow(static_cast<u64>(order / q)).is_one()) order /= q;
    }
    return order;
  }

  friend bool operator==(const FiniteFieldElement& a, const FiniteFieldElement& b) {
    return a.same_field(b) && a.rep_ == b.rep_;
  }
  friend bool operator<(const FiniteFieldElement& a, const FiniteFieldElement& b) { return a.code() < b.code(); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rep_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(rep_[i]);
    }
    return s + "]";
  }

 private:
  bool same_field(const FiniteFieldElement& o) const {
    return field_ == o.field_ || (field_ && o.field_ && field_->characteristic() == o.field_->characteristic() &&
                                  field_->degree() == o.field_->degree());
  }
  void check_same(const FiniteFieldElement& o) const {
    if (!same_field(o)) throw ParameterError("FiniteFieldElement: operands live in different fields");
  }

  std::shared_ptr<const FiniteField> field_;
  ffpoly::Poly rep_;
};

}  // namespace mfn
