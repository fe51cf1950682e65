#pragma once

// Sparse elements of a group algebra with cyclotomic or finite-field coefficients.

#include <functional>
#include <map>
#include <type_traits>
#include <string>
#include <utility>

#include "mfn/error.hpp"

namespace mfn {

template <class Elem, class Scalar>
class AlgebraElement {
 public:
  using Terms = std::map<Elem, Scalar>;
  using Mul = std::function<Elem(const Elem&, const Elem&)>;

  AlgebraElement() = default;
  explicit AlgebraElement(std::string ambient) : ambient_(std::move(ambient)) {}

  static AlgebraElement basis(std::string ambient, const Elem& g, const Scalar& coefficient) {
    AlgebraElement x(std::move(ambient));
    x.add_term(g, coefficient);
    return x;
  }

  const std::string& ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c*g; zero coefficients never stay in the support.
  void add_term(const Elem& g, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      terms_.emplace(g, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_same(o);
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a.check_same(b);
    for (const auto& [g, c] : b.terms_) a.add_term(g, -c);
    return a;
  }

  AlgebraElement scaled(const Scalar& s) const {
    AlgebraElement r(ambient_);
    for (const auto& [g, c] : terms_) r.add_term(g, c * s);
    return r;
  }

  /// Convolution product under the group law `mul`.
  AlgebraElement multiply(const AlgebraElement& o, const Mul& mul) const {
    check_same(o);
    AlgebraElement r(ambient_);
    for (const auto& [g, a] : terms_)
      for (const auto& [h, b] : o.terms_) r.add_term(mul(g, h), a * b);
    return r;
  }

  /// Coefficient-wise image under f; terms mapping to zero are dropped.
  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Scalar&>()))>;
    AlgebraElement<Elem, Out> r(ambient_);
    for (const auto& [g, c] : terms_) r.add_term(g, f(c));
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const AlgebraElement& o) const {
    if (ambient_ != o.ambient_) throw ParameterError("algebra elements of " + ambient_ + " and " + o.ambient_);
  }

  std::string ambient_;
  Terms terms_;
};

}  // namespace mfn
