#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_N).
//
// An element of order N is stored in the power basis 1, z, ..., z^(phi(N)-1)
// of Z[z]/(Phi_N(z)) as an integer numerator vector over one positive common
// denominator, with gcd(content, denominator) = 1. That form is unique, so two
// values of the same order are equal exactly when their representations are.
// Operands of different orders are lifted to the lcm of the orders first.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "mfn/error.hpp"
#include "mfn/exactnum/number_theory.hpp"

namespace mfn {

namespace detail {

using Poly = std::vector<mpz_class>;

inline void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Exact quotient of a by the monic polynomial b.
inline Poly poly_div_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return Poly{0};
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw ArithmeticError("poly_div_exact: nonzero remainder");
  }
  trim(q);
  return q;
}

inline int mobius(i64 n) {
  int result = 1;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

/// Phi_N as the product of (x^d - 1)^mu(N/d) over d | N.
inline Poly cyclotomic_polynomial(i64 N) {
  Poly num{1}, den{1};
  for (i64 d : divisors(N)) {
    const int mu = mobius(N / d);
    if (mu == 0) continue;
    Poly term(static_cast<std::size_t>(d) + 1, 0);
    term[0] = -1;
    term[static_cast<std::size_t>(d)] = 1;
    if (mu > 0) {
      num = poly_mul(num, term);
    } else {
      den = poly_mul(den, term);
    }
  }
  return poly_div_exact(num, den);
}

struct CyclotomicBasis {
  i64 order = 1;
  std::size_t degree = 1;
  Poly phi;                      // monic, size degree + 1
  std::vector<Poly> power;       // z^k reduced mod Phi_N, k in [0, N), each of size degree
};

inline std::unique_ptr<CyclotomicBasis> make_basis(i64 N) {
  auto basis = std::make_unique<CyclotomicBasis>();
  basis->order = N;
  basis->phi = cyclotomic_polynomial(N);
  basis->degree = basis->phi.size() - 1;
  const std::size_t deg = basis->degree;
  basis->power.reserve(static_cast<std::size_t>(N));
  Poly current(deg, 0);
  current[0] = 1;
  for (i64 k = 0; k < N; ++k) {
    basis->power.push_back(current);
    // multiply by z and reduce the overflow coefficient with Phi_N
    Poly next(deg, 0);
    mpz_class carry = current[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) next[i] = current[i - 1];
    next[0] = 0;
    if (carry != 0) {
      for (std::size_t i = 0; i < deg; ++i) next[i] -= carry * basis->phi[i];
    }
    current = std::move(next);
  }
  return basis;
}

inline const CyclotomicBasis& cyclotomic_basis(i64 N) {
  static std::mutex guard;
  static std::map<i64, std::unique_ptr<CyclotomicBasis>> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, make_basis(N)).first;
  return *it->second;
}

}  // namespace detail

class CyclotomicNumber {
 public:
  CyclotomicNumber() : order_(1), num_(1, 0), den_(1) {}
  CyclotomicNumber(long value) : order_(1), num_(1, value), den_(1) {}  // NOLINT(implicit)
  explicit CyclotomicNumber(const mpz_class& value) : order_(1), num_(1, value), den_(1) {}
  explicit CyclotomicNumber(const mpq_class& value) : order_(1), num_(1, value.get_num()), den_(value.get_den()) {}

  /// zeta_order^exponent.
  static CyclotomicNumber root_of_unity(i64 order, i64 exponent) {
    if (order < 1) throw ParameterError("root_of_unity: order must be positive");
    const auto& basis = detail::cyclotomic_basis(order);
    CyclotomicNumber r;
    r.order_ = order;
    r.num_ = basis.power[static_cast<std::size_t>(mod(exponent, order))];
    r.den_ = 1;
    return r;
  }

  /// (sum_k counts[k] zeta_order^k) / den, for counts indexed by exponent in [0, order).
  static CyclotomicNumber from_exponent_counts(i64 order, const std::vector<mpz_class>& counts,
                                               const mpz_class& den = 1) {
    if (den == 0) throw ArithmeticError("from_exponent_counts: zero denominator");
    const auto& basis = detail::cyclotomic_basis(order);
    CyclotomicNumber r;
    r.order_ = order;
    r.num_.assign(basis.degree, 0);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      const auto& pw = basis.power[k % static_cast<std::size_t>(order)];
      for (std::size_t i = 0; i < basis.degree; ++i) {
        if (pw[i] != 0) r.num_[i] += counts[k] * pw[i];
      }
    }
    r.den_ = den;
    r.normalize();
    return r;
  }

  i64 order() const { return order_; }
  std::size_t degree() const { return num_.size(); }
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  /// Rational coefficient of z^i in the power basis.
  mpq_class coefficient(std::size_t i) const {
    if (i >= num_.size()) return 0;
    mpq_class q(num_[i], den_);
    q.canonicalize();
    return q;
  }

  /// Non-zero coefficients keyed by exponent.
  std::map<std::size_t, mpq_class> coefficients() const {
    std::map<std::size_t, mpq_class> out;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] != 0) out.emplace(i, coefficient(i));
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& c : num_) {
      if (c != 0) return false;
    }
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i) {
      if (num_[i] != 0) return false;
    }
    return true;
  }
  mpq_class to_rational() const {
    if (!is_rational()) throw ArithmeticError("to_rational: value is not rational: " + to_string());
    return coefficient(0);
  }
  bool is_integer() const { return is_rational() && den_ == 1; }

  /// Same value written in order M (a multiple of the current order).
  CyclotomicNumber lifted(i64 M) const {
    if (M == order_) return *this;
    if (M % order_ != 0) {
      throw ParameterError("lifted: order " + std::to_string(M) + " is not a multiple of " +
                           std::to_string(order_));
    }
    const i64 step = M / order_;
    std::vector<mpz_class> counts(static_cast<std::size_t>(M), 0);
    for (std::size_t i = 0; i < num_.size(); ++i) counts[i * static_cast<std::size_t>(step)] = num_[i];
    return from_exponent_counts(M, counts, den_);
  }

  /// Same value written in order d (a divisor of the current order); throws if it is not in Q(zeta_d).
  CyclotomicNumber descended(i64 d) const {
    if (d == order_) return *this;
    if (d < 1 || order_ % d != 0) {
      throw ParameterError("descended: order " + std::to_string(d) + " does not divide " + std::to_string(order_));
    }
    if (is_rational()) {
      CyclotomicNumber r(to_rational());
      return r.lifted(d);
    }
    const auto& big = detail::cyclotomic_basis(order_);
    const auto& small = detail::cyclotomic_basis(d);
    const std::size_t rows = big.degree;
    const std::size_t cols = small.degree;
    const i64 step = order_ / d;
    // augmented system: columns are zeta_d^i written in order N, last column is the numerator
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols + 1));
    for (std::size_t i = 0; i < cols; ++i) {
      const auto& col = big.power[i * static_cast<std::size_t>(step)];
      for (std::size_t r = 0; r < rows; ++r) a[r][i] = col[r];
    }
    for (std::size_t r = 0; r < rows; ++r) a[r][cols] = num_[r];
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
      std::size_t sel = prow;
      while (sel < rows && a[sel][c] == 0) ++sel;
      if (sel == rows) continue;
      std::swap(a[sel], a[prow]);
      const mpq_class inv = 1 / a[prow][c];
      for (auto& v : a[prow]) v *= inv;
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == prow || a[r][c] == 0) continue;
        const mpq_class f = a[r][c];
        for (std::size_t j = c; j <= cols; ++j) a[r][j] -= f * a[prow][j];
      }
      pivots.push_back(c);
      ++prow;
    }
    for (std::size_t r = prow; r < rows; ++r) {
      if (a[r][cols] != 0) throw ArithmeticError("descended: " + to_string() + " is not in Q(zeta_" + std::to_string(d) + ")");
    }
    std::vector<mpq_class> y(cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = a[i][cols];
    mpz_class lcm_den = 1;
    for (const auto& v : y) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
    CyclotomicNumber r;
    r.order_ = d;
    r.num_.resize(cols);
    for (std::size_t i = 0; i < cols; ++i) r.num_[i] = y[i].get_num() * (lcm_den / y[i].get_den());
    r.den_ = lcm_den * den_;
    r.normalize();
    return r;
  }

  /// Galois automorphism z -> z^k, gcd(k, order) = 1.
  CyclotomicNumber galois(i64 k) const {
    if (std::gcd(mod(k, order_), order_) != 1 && order_ > 1) {
      throw ParameterError("galois: exponent not coprime to the order");
    }
    std::vector<mpz_class> counts(static_cast<std::size_t>(order_), 0);
    for (std::size_t i = 0; i < num_.size(); ++i) {
      counts[static_cast<std::size_t>(mod(static_cast<i64>(i) * k, order_))] += num_[i];
    }
    return from_exponent_counts(order_, counts, den_);
  }

  CyclotomicNumber conj() const { return galois(-1); }

  CyclotomicNumber inverse() const {
    if (is_zero()) throw ArithmeticError("CyclotomicNumber: division by zero");
    if (is_rational()) return CyclotomicNumber(mpq_class(1) / to_rational());
    // x^{-1} = (prod_{k != 1} sigma_k(x)) / N(x)
    CyclotomicNumber others(1L);
    for (i64 k = 2; k < order_; ++k) {
      if (std::gcd(k, order_) == 1) others *= galois(k);
    }
    const CyclotomicNumber norm = *this * others;
    return others * CyclotomicNumber(mpq_class(1) / norm.to_rational());
  }

  CyclotomicNumber operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) {
    if (o.order_ != order_) return *this = *this + o;
    if (den_ == o.den_) {
      for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
      for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this += -o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
  CyclotomicNumber& operator/=(const CyclotomicNumber& o) { return *this = *this * o.inverse(); }

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ != b.order_) {
      const i64 M = std::lcm(a.order_, b.order_);
      return a.lifted(M) + b.lifted(M);
    }
    CyclotomicNumber r = a;
    r += b;
    return r;
  }
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ != b.order_) {
      // rationals multiply coefficientwise without lifting
      if (a.order_ == 1) return b.scaled(a.num_[0], a.den_);
      if (b.order_ == 1) return a.scaled(b.num_[0], b.den_);
      const i64 M = std::lcm(a.order_, b.order_);
      return a.lifted(M) * b.lifted(M);
    }
    const auto& basis = detail::cyclotomic_basis(a.order_);
    const std::size_t deg = basis.degree;
    std::vector<mpz_class> raw(2 * deg - 1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < deg; ++j) {
        if (b.num_[j] != 0) mpz_addmul(raw[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
    CyclotomicNumber r;
    r.order_ = a.order_;
    r.num_.assign(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(deg));
    for (std::size_t k = deg; k < raw.size(); ++k) {
      if (raw[k] == 0) continue;
      const auto& pw = basis.power[k % static_cast<std::size_t>(a.order_)];
      for (std::size_t i = 0; i < deg; ++i) {
        if (pw[i] != 0) mpz_addmul(r.num_[i].get_mpz_t(), raw[k].get_mpz_t(), pw[i].get_mpz_t());
      }
    }
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.inverse(); }

  /// Value equality (orders may differ).
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
    const i64 M = std::lcm(a.order_, b.order_);
    const CyclotomicNumber la = a.lifted(M);
    const CyclotomicNumber lb = b.lifted(M);
    return la.den_ == lb.den_ && la.num_ == lb.num_;
  }

  /// Total order on representations; meaningful for values of a common order.
  friend bool canonical_less(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

  std::string to_string() const {
    std::ostringstream os;
    if (is_rational()) {
      os << num_[0];
      if (den_ != 1) os << "/" << den_;
      return os.str();
    }
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      if (!first) os << (num_[i] > 0 ? " + " : " - ");
      else if (num_[i] < 0) os << "-";
      first = false;
      const mpz_class a = abs(num_[i]);
      if (i == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        os << "z" << order_;
        if (i > 1) os << "^" << i;
      }
    }
    os << ")";
    if (den_ != 1) os << "/" << den_;
    return os.str();
  }

 private:
  CyclotomicNumber scaled(const mpz_class& n, const mpz_class& d) const {
    CyclotomicNumber r = *this;
    for (auto& c : r.num_) c *= n;
    r.den_ *= d;
    r.normalize();
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    for (const auto& c : num_) {
      if (g == 1) break;
      if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (is_zero()) {
      den_ = 1;
      return;
    }
    if (g != 1) {
      for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  i64 order_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

inline std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) { return os << x.to_string(); }

}  // namespace mfn
