#pragma once

// Concrete models of the groups Omega_t, D_t, Lambda_t, F, E, Z and G_{l'}.
//
// Every element is a fixed-shape integer tuple. Multiplicative data of F_p^x
// is kept in exponent form with respect to the fixed generator lambda, so
// l'-part membership is a congruence on exponents. D = D_{t1} x D_{t2} and
// Omega_t are written additively (exponent vectors indexed by F_p).

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "mfn/error.hpp"
#include "mfn/exactnum/number_theory.hpp"
#include "mfn/groups/params.hpp"

namespace mfn {

/// (x, lambda^m) in F = F_p x| F_p^x.
struct FElement {
  int x = 0;
  int m = 0;
  auto operator<=>(const FElement&) const = default;
};

/// (x, y, lambda^m, lambda^n, lambda^r) in E.
struct EElement {
  int x = 0;
  int y = 0;
  int m = 0;
  int n = 0;
  int r = 0;
  auto operator<=>(const EElement&) const = default;
};

/// Exponent vector indexed by F_p, entries modulo l^t.
struct OmegaElement {
  std::vector<int> v;
  auto operator<=>(const OmegaElement&) const = default;
};

/// Element of D = D_{t1} x D_{t2}: two zero-sum exponent vectors.
struct DElement {
  std::vector<int> first;
  std::vector<int> second;
  auto operator<=>(const DElement&) const = default;
};

/// Element (d, e) of the semidirect product D x| E.
struct GElement {
  DElement d;
  EElement e;
  auto operator<=>(const GElement&) const = default;
};

enum class SubgroupTag { ELprime, ZLprime, Z, P1, P2, P, D, Lambda };

inline std::string to_string(SubgroupTag tag) {
  switch (tag) {
    case SubgroupTag::ELprime: return "E_l'";
    case SubgroupTag::ZLprime: return "Z_l'";
    case SubgroupTag::Z: return "Z";
    case SubgroupTag::P1: return "P1";
    case SubgroupTag::P2: return "P2";
    case SubgroupTag::P: return "P";
    case SubgroupTag::D: return "D";
    case SubgroupTag::Lambda: return "Lambda";
  }
  return "?";
}

inline std::string to_string(const EElement& e) {
  return "(" + std::to_string(e.x) + "," + std::to_string(e.y) + ",l^" + std::to_string(e.m) + ",l^" +
         std::to_string(e.n) + ",l^" + std::to_string(e.r) + ")";
}

inline std::string to_string(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string to_string(const DElement& d) { return to_string(d.first) + "|" + to_string(d.second); }
inline std::string to_string(const GElement& g) { return to_string(g.d) + ";" + to_string(g.e); }

inline constexpr u64 kDefaultElementBound = 1'000'000;
inline constexpr u64 kDefaultExhaustionBound = 5'000'000;

class Construction {
 public:
  explicit Construction(ConstructionParams params) : params_(std::move(params)) {
    const int p = params_.p;
    pow_.resize(static_cast<std::size_t>(p - 1));
    log_.assign(static_cast<std::size_t>(p), -1);
    i64 v = 1;
    for (int k = 0; k < p - 1; ++k) {
      pow_[static_cast<std::size_t>(k)] = static_cast<int>(v);
      log_[static_cast<std::size_t>(v)] = k;
      v = v * params_.lambda % p;
    }
    for (int k = 1; k < p; ++k) {
      if (log_[static_cast<std::size_t>(k)] < 0) throw ParameterError("lambda does not generate F_p^x");
    }
    q1_ = static_cast<int>(params_.modulus_first());
    q2_ = static_cast<int>(params_.modulus_second());
    step_ = static_cast<int>(params_.l_power_a() % (p - 1));
    e_order_ = static_cast<u64>(p) * static_cast<u64>(p) * static_cast<u64>(p - 1) * static_cast<u64>(p - 1) *
               static_cast<u64>(p - 1);
  }

  const ConstructionParams& params() const { return params_; }
  int p() const { return params_.p; }
  int l() const { return params_.l; }
  /// Moduli l^t1 and l^t2 of the two D factors.
  int modulus_first() const { return q1_; }
  int modulus_second() const { return q2_; }
  /// l^a reduced mod p - 1: the exponent step of the l'-parts (0 when F_p^x is an l-group).
  int lprime_step() const { return step_; }

  int lambda_pow(i64 e) const { return pow_[static_cast<std::size_t>(mod(e, params_.p - 1))]; }
  int lambda_log(int value) const {
    const int v = static_cast<int>(mod(value, params_.p));
    if (v == 0) throw ParameterError("lambda_log: zero has no logarithm");
    return log_[static_cast<std::size_t>(v)];
  }
  int reduce_residue(i64 x) const { return static_cast<int>(mod(x, params_.p)); }
  int reduce_exponent(i64 e) const { return static_cast<int>(mod(e, params_.p - 1)); }

  // ---- F ---------------------------------------------------------------

  /// (x, alpha) with alpha given as a field value.
  FElement f_from_values(int x, int alpha) const { return {reduce_residue(x), lambda_log(alpha)}; }
  int f_alpha_value(const FElement& f) const { return lambda_pow(f.m); }

  FElement f_mul(const FElement& a, const FElement& b) const {
    return {reduce_residue(a.x + static_cast<i64>(lambda_pow(a.m)) * b.x), reduce_exponent(a.m + b.m)};
  }
  FElement f_inverse(const FElement& a) const {
    return {reduce_residue(-static_cast<i64>(lambda_pow(-a.m)) * a.x), reduce_exponent(-a.m)};
  }
  /// (x, alpha).y = x + alpha y.
  int f_act(const FElement& f, int y) const { return reduce_residue(f.x + static_cast<i64>(lambda_pow(f.m)) * y); }

  // ---- E ---------------------------------------------------------------

  EElement e_from_values(int x, int y, int alpha, int beta, int mu) const {
    return {reduce_residue(x), reduce_residue(y), lambda_log(alpha), lambda_log(beta), lambda_log(mu)};
  }

  EElement e_mul(const EElement& a, const EElement& b) const {
    return {reduce_residue(a.x + static_cast<i64>(lambda_pow(a.m)) * b.x),
            reduce_residue(a.y + static_cast<i64>(lambda_pow(a.n)) * b.y), reduce_exponent(a.m + b.m),
            reduce_exponent(a.n + b.n), reduce_exponent(a.r + b.r + static_cast<i64>(a.n) * b.m)};
  }
  EElement e_inverse(const EElement& a) const {
    return {reduce_residue(-static_cast<i64>(lambda_pow(-a.m)) * a.x),
            reduce_residue(-static_cast<i64>(lambda_pow(-a.n)) * a.y), reduce_exponent(-a.m),
            reduce_exponent(-a.n), reduce_exponent(-a.r + static_cast<i64>(a.n) * a.m)};
  }
  EElement e_identity() const { return {}; }
  /// The central element lambda^r of Z.
  EElement z_element(int r) const { return {0, 0, 0, 0, reduce_exponent(r)}; }

  /// phi: E -> F_1 x F_2, kernel Z.
  std::pair<FElement, FElement> e_to_f_pair(const EElement& e) const { return {{e.x, e.m}, {e.y, e.n}}; }
  /// Lift of f in F_1 (resp. F_2) to E, with Z-component lambda^r.
  EElement lift_first(const FElement& f, int r) const { return {f.x, 0, f.m, 0, reduce_exponent(r)}; }
  EElement lift_second(const FElement& f, int r) const { return {0, f.x, 0, f.m, reduce_exponent(r)}; }

  EElement e_commutator(const EElement& a, const EElement& b) const {
    return e_mul(e_mul(e_inverse(a), e_inverse(b)), e_mul(a, b));
  }

  // ---- Omega_t and D -----------------------------------------------------

  /// f permutes indices: the entry at y moves to f.y.
  std::vector<int> permute(const FElement& f, const std::vector<int>& v) const {
    check_length(v);
    std::vector<int> out(v.size());
    for (int y = 0; y < params_.p; ++y) out[static_cast<std::size_t>(f_act(f, y))] = v[static_cast<std::size_t>(y)];
    return out;
  }
  OmegaElement omega_act(const FElement& f, const OmegaElement& w) const { return {permute(f, w.v)}; }

  DElement act_on_D(const EElement& e, const DElement& d) const {
    const auto [f1, f2] = e_to_f_pair(e);
    return {permute(f1, d.first), permute(f2, d.second)};
  }

  DElement d_identity() const {
    return {std::vector<int>(static_cast<std::size_t>(params_.p), 0),
            std::vector<int>(static_cast<std::size_t>(params_.p), 0)};
  }
  DElement d_mul(const DElement& a, const DElement& b) const {
    check_length(a.first);
    check_length(b.first);
    check_length(a.second);
    check_length(b.second);
    DElement out = a;
    for (std::size_t i = 0; i < out.first.size(); ++i) {
      out.first[i] = static_cast<int>(mod(out.first[i] + b.first[i], q1_));
      out.second[i] = static_cast<int>(mod(out.second[i] + b.second[i], q2_));
    }
    return out;
  }
  DElement d_inverse(const DElement& a) const {
    DElement out = a;
    for (auto& c : out.first) c = static_cast<int>(mod(-c, q1_));
    for (auto& c : out.second) c = static_cast<int>(mod(-c, q2_));
    return out;
  }
  bool is_valid(const DElement& d) const {
    if (d.first.size() != static_cast<std::size_t>(params_.p) || d.second.size() != static_cast<std::size_t>(params_.p))
      return false;
    i64 s1 = 0, s2 = 0;
    for (int c : d.first) {
      if (c < 0 || c >= q1_) return false;
      s1 += c;
    }
    for (int c : d.second) {
      if (c < 0 || c >= q2_) return false;
      s2 += c;
    }
    return s1 % q1_ == 0 && s2 % q2_ == 0;
  }

  // ---- G = D x| E ----------------------------------------------------------

  GElement g_identity() const { return {d_identity(), e_identity()}; }
  GElement g_mul(const GElement& a, const GElement& b) const {
    return {d_mul(a.d, act_on_D(a.e, b.d)), e_mul(a.e, b.e)};
  }
  GElement g_inverse(const GElement& a) const {
    const EElement inv = e_inverse(a.e);
    return {d_inverse(act_on_D(inv, a.d)), inv};
  }
  GElement embed(const EElement& e) const { return {d_identity(), e}; }
  GElement embed(const DElement& d) const { return {d, e_identity()}; }
  GElement g_commutator(const GElement& a, const GElement& b) const {
    return g_mul(g_mul(g_inverse(a), g_inverse(b)), g_mul(a, b));
  }

  // ---- subgroups -----------------------------------------------------------

  bool is_lprime_exponent(int e) const { return step_ == 0 ? e == 0 : e % step_ == 0; }

  bool in_subgroup(SubgroupTag tag, const EElement& e) const {
    switch (tag) {
      case SubgroupTag::ELprime: return is_lprime_exponent(e.m) && is_lprime_exponent(e.n) && is_lprime_exponent(e.r);
      case SubgroupTag::ZLprime: return e.x == 0 && e.y == 0 && e.m == 0 && e.n == 0 && is_lprime_exponent(e.r);
      case SubgroupTag::Z: return e.x == 0 && e.y == 0 && e.m == 0 && e.n == 0;
      case SubgroupTag::P1: return e.y == 0 && e.m == 0 && e.n == 0 && e.r == 0;
      case SubgroupTag::P2: return e.x == 0 && e.m == 0 && e.n == 0 && e.r == 0;
      case SubgroupTag::P: return e.m == 0 && e.n == 0 && e.r == 0;
      case SubgroupTag::D: return e == e_identity();
      case SubgroupTag::Lambda: return e == e_identity();
    }
    return false;
  }

  bool in_subgroup(SubgroupTag tag, const GElement& g) const {
    const bool d_trivial = g.d == d_identity();
    if (tag == SubgroupTag::D) return g.e == e_identity() && is_valid(g.d);
    if (tag == SubgroupTag::Lambda) return d_trivial && g.e == e_identity();
    return d_trivial && in_subgroup(tag, g.e);
  }

  /// D (zero-sum) and Lambda (constant) membership inside Omega_t.
  bool in_subgroup(SubgroupTag tag, const OmegaElement& w, int t) const {
    const i64 q = checked_pow(params_.l, static_cast<unsigned>(t));
    if (tag == SubgroupTag::D) {
      i64 s = 0;
      for (int c : w.v) s += c;
      return s % q == 0;
    }
    if (tag == SubgroupTag::Lambda) {
      for (int c : w.v) {
        if (c != w.v.front()) return false;
      }
      return true;
    }
    return std::all_of(w.v.begin(), w.v.end(), [](int c) { return c == 0; });
  }

  // ---- orders ----------------------------------------------------------------

  mpz_class order_D() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(params_.l),
                  static_cast<unsigned long>((params_.t1 + params_.t2) * (params_.p - 1)));
    return r;
  }
  u64 order_E() const { return e_order_; }
  u64 order_Z_lprime() const { return static_cast<u64>(params_.z_lprime_order()); }
  u64 order_E_lprime() const {
    const u64 z = order_Z_lprime();
    return static_cast<u64>(params_.p) * static_cast<u64>(params_.p) * z * z * z;
  }
  mpz_class order_G_lprime() const { return order_D() * mpz_class(static_cast<unsigned long>(order_E_lprime())); }

  // ---- enumeration -----------------------------------------------------------

  std::vector<int> lprime_exponents() const {
    std::vector<int> out;
    for (int e = 0; e < params_.p - 1; ++e) {
      if (is_lprime_exponent(e)) out.push_back(e);
    }
    return out;
  }

  /// E_{l'} in lexicographic order.
  std::vector<EElement> e_lprime_elements() const {
    const auto ex = lprime_exponents();
    std::vector<EElement> out;
    out.reserve(order_E_lprime());
    for (int x = 0; x < params_.p; ++x)
      for (int y = 0; y < params_.p; ++y)
        for (int m : ex)
          for (int n : ex)
            for (int r : ex) out.push_back({x, y, m, n, r});
    return out;
  }
  std::vector<EElement> e_elements(u64 bound = kDefaultElementBound) const {
    if (e_order_ > bound) throw BoundExceeded("E has order " + std::to_string(e_order_) + " above bound");
    std::vector<EElement> out;
    out.reserve(e_order_);
    const int p = params_.p;
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y)
        for (int m = 0; m < p - 1; ++m)
          for (int n = 0; n < p - 1; ++n)
            for (int r = 0; r < p - 1; ++r) out.push_back({x, y, m, n, r});
    return out;
  }
  std::vector<EElement> z_lprime_elements() const {
    std::vector<EElement> out;
    for (int r : lprime_exponents()) out.push_back(z_element(r));
    return out;
  }
  std::vector<EElement> p_elements() const {
    std::vector<EElement> out;
    for (int x = 0; x < params_.p; ++x)
      for (int y = 0; y < params_.p; ++y) out.push_back({x, y, 0, 0, 0});
    return out;
  }

  /// All zero-sum vectors of Omega_t for one factor, lexicographic.
  std::vector<std::vector<int>> d_factor_elements(int modulus, u64 bound = kDefaultElementBound) const {
    const u64 count = saturating_power(static_cast<u64>(modulus), static_cast<unsigned>(params_.p - 1));
    if (count > bound) throw BoundExceeded("D_t has order " + std::to_string(count) + " above bound");
    std::vector<std::vector<int>> out;
    out.reserve(count);
    std::vector<int> v(static_cast<std::size_t>(params_.p), 0);
    for (u64 idx = 0; idx < count; ++idx) {
      u64 rest = idx;
      i64 sum = 0;
      for (int i = params_.p - 2; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<u64>(modulus));
        rest /= static_cast<u64>(modulus);
        sum += v[static_cast<std::size_t>(i)];
      }
      v.back() = static_cast<int>(mod(-sum, modulus));
      out.push_back(v);
    }
    return out;
  }

  std::vector<DElement> d_elements(u64 bound = kDefaultElementBound) const {
    const mpz_class order = order_D();
    if (order > mpz_class(static_cast<unsigned long>(bound))) {
      throw BoundExceeded("D has order " + order.get_str() + " above bound " + std::to_string(bound));
    }
    const auto firsts = d_factor_elements(q1_, bound);
    const auto seconds = d_factor_elements(q2_, bound);
    std::vector<DElement> out;
    out.reserve(firsts.size() * seconds.size());
    for (const auto& a : firsts)
      for (const auto& b : seconds) out.push_back({a, b});
    return out;
  }

  std::vector<GElement> g_lprime_elements(u64 bound = kDefaultElementBound) const {
    const mpz_class order = order_G_lprime();
    if (order > mpz_class(static_cast<unsigned long>(bound))) {
      throw BoundExceeded("G_l' has order " + order.get_str() + " above bound " + std::to_string(bound));
    }
    const auto ds = d_elements(bound);
    const auto es = e_lprime_elements();
    std::vector<GElement> out;
    out.reserve(ds.size() * es.size());
    for (const auto& d : ds)
      for (const auto& e : es) out.push_back({d, e});
    return out;
  }

  std::vector<OmegaElement> omega_elements(int t, u64 bound = kDefaultElementBound) const {
    const u64 q = static_cast<u64>(checked_pow(params_.l, static_cast<unsigned>(t)));
    const u64 count = saturating_power(q, static_cast<unsigned>(params_.p));
    if (count > bound) throw BoundExceeded("Omega_t has order " + std::to_string(count) + " above bound");
    std::vector<OmegaElement> out;
    out.reserve(count);
    for (u64 idx = 0; idx < count; ++idx) {
      OmegaElement w{std::vector<int>(static_cast<std::size_t>(params_.p))};
      u64 rest = idx;
      for (int i = params_.p - 1; i >= 0; --i) {
        w.v[static_cast<std::size_t>(i)] = static_cast<int>(rest % q);
        rest /= q;
      }
      out.push_back(std::move(w));
    }
    return out;
  }

  // ---- generators --------------------------------------------------------------

  /// e_x - e_{p-1} in each factor.
  std::vector<DElement> d_generators() const {
    std::vector<DElement> out;
    const auto p = static_cast<std::size_t>(params_.p);
    for (std::size_t x = 0; x + 1 < p; ++x) {
      DElement d = d_identity();
      d.first[x] = 1;
      d.first[p - 1] = q1_ - 1;
      out.push_back(d);
    }
    for (std::size_t x = 0; x + 1 < p; ++x) {
      DElement d = d_identity();
      d.second[x] = 1;
      d.second[p - 1] = q2_ - 1;
      out.push_back(d);
    }
    return out;
  }

  std::vector<EElement> e_lprime_generators() const {
    std::vector<EElement> out{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}};
    if (step_ != 0) {
      out.push_back({0, 0, step_, 0, 0});
      out.push_back({0, 0, 0, step_, 0});
      out.push_back({0, 0, 0, 0, step_});
    }
    return out;
  }

  std::vector<GElement> g_lprime_generators() const {
    std::vector<GElement> out;
    for (const auto& d : d_generators()) out.push_back(embed(d));
    for (const auto& e : e_lprime_generators()) out.push_back(embed(e));
    return out;
  }

  // ---- keys for hashing enumerable groups ----------------------------------------

  u64 key(const EElement& e) const {
    const u64 p = static_cast<u64>(params_.p);
    return (((static_cast<u64>(e.x) * p + static_cast<u64>(e.y)) * (p - 1) + static_cast<u64>(e.m)) * (p - 1) +
            static_cast<u64>(e.n)) * (p - 1) + static_cast<u64>(e.r);
  }
  /// Index of d among the zero-sum vectors (last coordinates are implied).
  u64 key(const DElement& d) const {
    const mpz_class order = order_D();
    if (!order.fits_ulong_p() || order.get_ui() > (u64{1} << 40)) {
      throw BoundExceeded("D is too large to index");
    }
    u64 k = 0;
    for (std::size_t i = 0; i + 1 < d.first.size(); ++i) k = k * static_cast<u64>(q1_) + static_cast<u64>(d.first[i]);
    for (std::size_t i = 0; i + 1 < d.second.size(); ++i)
      k = k * static_cast<u64>(q2_) + static_cast<u64>(d.second[i]);
    return k;
  }
  u64 key(const GElement& g) const { return key(g.d) * e_order_ + key(g.e); }

 private:
  static u64 saturating_power(u64 base, unsigned exp) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
      r *= base;
      if (r > (static_cast<unsigned __int128>(1) << 62)) return u64{1} << 62;
    }
    return static_cast<u64>(r);
  }
  void check_length(const std::vector<int>& v) const {
    if (v.size() != static_cast<std::size_t>(params_.p)) {
      throw ParameterError("element vector of length " + std::to_string(v.size()) + " does not match p = " +
                           std::to_string(params_.p));
    }
  }

  ConstructionParams params_;
  std::vector<int> pow_;
  std::vector<int> log_;
  int q1_ = 2;
  int q2_ = 2;
  int step_ = 0;
  u64 e_order_ = 0;
};

}  // namespace mfn
