#pragma once

// Irreducible characters of an enumerated group by simultaneous diagonalisation of the
// class multiplication matrices over a prime field F_q with q = 1 mod exp(G), followed
// by an exact lift of every value to Q(zeta_exp(G)).

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "mfn/chars/class_function.hpp"
#include "mfn/error.hpp"
#include "mfn/exactnum/cyclotomic.hpp"
#include "mfn/exactnum/number_theory.hpp"
#include "mfn/groups/concrete_group.hpp"

namespace mfn {

inline constexpr u64 kDefaultCharacterTableBound = 10'000;

struct CharacterTable {
  std::shared_ptr<const ClassStructure> classes;
  std::vector<ClassFunction> characters;  // canonical order
  i64 modulus = 0;                       // the prime used for the modular stage

  std::vector<mpz_class> degrees() const {
    std::vector<mpz_class> d;
    for (const auto& chi : characters) d.push_back(chi.degree());
    return d;
  }
};

namespace detail {

using ModMatrix = std::vector<std::vector<i64>>;  // row-major

inline i64 inv_mod(i64 a, i64 q) { return powmod(mod(a, q), static_cast<u64>(q - 2), q); }

/// Smallest prime q = 1 mod e with q > lower.
inline i64 dixon_prime(i64 e, i64 lower) {
  for (i64 q = e + 1;; q += e) {
    if (q > lower && is_prime(q)) return q;
  }
}

/// Basis of the null space of A (rows x cols) over F_q, as column vectors.
inline ModMatrix null_space(ModMatrix a, i64 q) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    const i64 inv = inv_mod(a[r][c], q);
    for (auto& v : a[r]) v = v * inv % q;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const i64 f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], q);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;
  ModMatrix basis;  // list of vectors
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<i64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = mod(-a[i][free], q);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial (low degree first) via reduction to Hessenberg form.
inline std::vector<i64> char_poly(ModMatrix h, i64 q) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const i64 inv = inv_mod(h[m][m - 1], q);
    for (std::size_t k = m + 1; k < n; ++k) {
      const i64 f = h[k][m - 1] * inv % q;
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[k][j] = mod(h[k][j] - f * h[m][j], q);
      for (std::size_t j = 0; j < n; ++j) h[j][m] = (h[j][m] + f * h[j][k]) % q;
    }
  }
  std::vector<std::vector<i64>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<i64> next(m + 1, 0);
    for (std::size_t j = 0; j < p[m - 1].size(); ++j) {
      next[j + 1] = (next[j + 1] + p[m - 1][j]) % q;
      next[j] = mod(next[j] - h[m - 1][m - 1] * p[m - 1][j], q);
    }
    i64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h[m - i][m - i - 1] % q;
      const i64 coeff = t * h[m - i - 1][m - 1] % q;
      if (coeff == 0) continue;
      for (std::size_t j = 0; j < p[m - i - 1].size(); ++j) next[j] = mod(next[j] - coeff * p[m - i - 1][j], q);
    }
    p[m] = std::move(next);
  }
  return p[n];
}

inline i64 eval_poly(const std::vector<i64>& f, i64 x, i64 q) {
  i64 r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % q;
  return r;
}

/// Columns of `basis` brought to reduced column echelon form; returns pivot rows.
inline std::vector<std::size_t> echelonize(ModMatrix& basis, i64 q) {
  // basis is a list of column vectors
  std::vector<std::size_t> pivots;
  const std::size_t len = basis.empty() ? 0 : basis[0].size();
  std::size_t r = 0;
  for (std::size_t row = 0; row < len && r < basis.size(); ++row) {
    std::size_t sel = r;
    while (sel < basis.size() && basis[sel][row] == 0) ++sel;
    if (sel == basis.size()) continue;
    std::swap(basis[sel], basis[r]);
    const i64 inv = inv_mod(basis[r][row], q);
    for (auto& v : basis[r]) v = v * inv % q;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == r || basis[i][row] == 0) continue;
      const i64 f = basis[i][row];
      for (std::size_t j = 0; j < len; ++j) basis[i][j] = mod(basis[i][j] - f * basis[r][j], q);
    }
    pivots.push_back(row);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// All irreducible characters of a group of order at most `bound`, canonically ordered.
template <class Elem>
CharacterTable irr_small_group(const ConcreteGroup<Elem>& group, std::shared_ptr<const ClassStructure> classes,
                               u64 bound = kDefaultCharacterTableBound) {
  using detail::ModMatrix;
  if (group.order() > bound) {
    throw BoundExceeded(group.name() + " has order " + std::to_string(group.order()) +
                        " above the character table bound " + std::to_string(bound));
  }
  const auto& cs = *classes;
  const std::size_t k = cs.count();
  const u64 n = group.order();
  const auto e = static_cast<i64>(cs.exponent);
  const i64 q = detail::dixon_prime(e, static_cast<i64>(2 * std::sqrt(static_cast<double>(n))) + 1);

  // c[j][a][b] = #{x in C_j : x^-1 z_b in C_a} for fixed z_b in C_b.
  std::vector<ModMatrix> m(k, ModMatrix(k, std::vector<i64>(k, 0)));
  for (std::size_t b = 0; b < k; ++b) {
    const Elem& z = group.element(cs.representatives[b]);
    for (std::size_t xi = 0; xi < n; ++xi) {
      const Elem& x = group.element(xi);
      const std::size_t j = cs.class_of[xi];
      const std::size_t a = cs.class_of[group.index_of(group.mul(group.inverse(x), z))];
      ++m[j][a][b];
    }
  }
  for (auto& mat : m)
    for (auto& row : mat)
      for (auto& v : row) v %= q;

  // Split F_q^k into joint eigenspaces of the M_j; spaces are lists of column vectors.
  std::vector<ModMatrix> spaces;
  {
    ModMatrix id(k, std::vector<i64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t j = 1; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const ModMatrix& s) { return s.size() == 1; })) break;
    std::vector<ModMatrix> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      const auto pivots = detail::echelonize(space, q);
      const std::size_t d = space.size();
      // R[r][c] = (M_j b_c)[pivot_r]
      ModMatrix r(d, std::vector<i64>(d, 0));
      for (std::size_t rr = 0; rr < d; ++rr) {
        const auto& row = m[j][pivots[rr]];
        for (std::size_t c = 0; c < d; ++c) {
          i64 s = 0;
          for (std::size_t t = 0; t < k; ++t) {
            if (row[t] != 0 && space[c][t] != 0) s = (s + row[t] * space[c][t]) % q;
          }
          r[rr][c] = s;
        }
      }
      const auto poly = detail::char_poly(r, q);
      std::vector<i64> roots;
      for (i64 x = 0; x < q; ++x) {
        if (detail::eval_poly(poly, x, q) == 0) roots.push_back(x);
      }
      if (roots.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::size_t covered = 0;
      for (i64 root : roots) {
        ModMatrix shifted = r;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = mod(shifted[i][i] - root, q);
        const ModMatrix kernel = detail::null_space(shifted, q);
        ModMatrix sub;
        for (const auto& coeffs : kernel) {
          std::vector<i64> v(k, 0);
          for (std::size_t c = 0; c < d; ++c) {
            if (coeffs[c] == 0) continue;
            for (std::size_t t = 0; t < k; ++t) v[t] = (v[t] + coeffs[c] * space[c][t]) % q;
          }
          sub.push_back(std::move(v));
        }
        covered += sub.size();
        next.push_back(std::move(sub));
      }
      if (covered != d) throw VerificationFailure("class matrix is not diagonalisable over F_" + std::to_string(q));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) {
    throw VerificationFailure(group.name() + ": eigenspaces did not split into " + std::to_string(k) + " lines");
  }

  // primitive e-th root of unity in F_q
  const i64 omega_e = powmod(primitive_root(q), static_cast<u64>((q - 1) / e), q);
  const i64 n_mod = static_cast<i64>(n % static_cast<u64>(q));
  const auto max_degree = static_cast<i64>(std::sqrt(static_cast<double>(n)) + 1);

  std::vector<ClassFunction> chars;
  chars.reserve(k);
  for (auto& space : spaces) {
    std::vector<i64> w = space[0];
    const i64 w0inv = detail::inv_mod(w[0], q);
    for (auto& v : w) v = v * w0inv % q;
    i64 s = 0;
    for (std::size_t c = 0; c < k; ++c) {
      s = (s + w[c] * w[cs.inverse_class[c]] % q * detail::inv_mod(static_cast<i64>(cs.sizes[c] % q), q)) % q;
    }
    const i64 d2 = n_mod * detail::inv_mod(s, q) % q;
    i64 degree = 0;
    for (i64 d = 1; d <= max_degree; ++d) {
      if (static_cast<i64>(n % static_cast<u64>(d)) == 0 && d * d % q == d2) {
        if (degree != 0) throw VerificationFailure("ambiguous character degree modulo " + std::to_string(q));
        degree = d;
      }
    }
    if (degree == 0) throw VerificationFailure("no character degree matches modulo " + std::to_string(q));
    std::vector<i64> vals(k);
    for (std::size_t c = 0; c < k; ++c) {
      vals[c] = w[c] * (degree % q) % q * detail::inv_mod(static_cast<i64>(cs.sizes[c] % q), q) % q;
    }
    std::vector<CyclotomicNumber> exact(k);
    for (std::size_t c = 0; c < k; ++c) {
      const auto o = static_cast<i64>(cs.element_order[c]);
      const i64 omega_o = powmod(omega_e, static_cast<u64>(e / o), q);
      const i64 o_inv = detail::inv_mod(o % q, q);
      std::vector<mpz_class> counts(static_cast<std::size_t>(e), 0);
      i64 total = 0;
      for (i64 sidx = 0; sidx < o; ++sidx) {
        i64 acc = 0;
        const i64 step = powmod(omega_o, static_cast<u64>(mod(-sidx, o)), q);
        i64 tw = 1;
        for (i64 j = 0; j < o; ++j) {
          acc = (acc + vals[cs.power_map[c][static_cast<std::size_t>(j)]] * tw) % q;
          tw = tw * step % q;
        }
        const i64 mult = acc * o_inv % q;
        if (mult > degree) throw VerificationFailure("eigenvalue multiplicity out of range during the lift");
        counts[static_cast<std::size_t>(sidx * (e / o))] = mult;
        total += mult;
      }
      if (total != degree) throw VerificationFailure("lifted value has the wrong number of eigenvalues");
      exact[c] = CyclotomicNumber::from_exponent_counts(e, counts);
    }
    chars.emplace_back(classes, std::move(exact));
  }
  std::sort(chars.begin(), chars.end(), [](const ClassFunction& a, const ClassFunction& b) { return canonical_less(a, b); });
  return {std::move(classes), std::move(chars), q};
}

template <class Elem>
CharacterTable irr_small_group(const ConcreteGroup<Elem>& group, u64 bound = kDefaultCharacterTableBound) {
  return irr_small_group(group, conjugacy_classes(group), bound);
}

}  // namespace mfn
