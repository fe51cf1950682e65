#pragma once

// Ranks, decomposition matrices and Cartan matrices of the blocks B_phi.
//
// Brauer characters of G_{l'} are identified with Irr(E_{l'}) by restriction, so the
// decomposition number of chi at xi is <chi restricted to E_{l'}, xi>.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mfn/blocks/idempotent.hpp"
#include "mfn/chars/character_table.hpp"
#include "mfn/chars/clifford.hpp"
#include "mfn/chars/induction.hpp"
#include "mfn/check_result.hpp"

namespace mfn {

using IntMatrix = std::vector<std::vector<i64>>;

struct DecompositionData {
  LinearCharacter phi;
  std::vector<std::string> ordinary_labels;
  std::vector<std::string> brauer_labels;
  std::vector<mpz_class> ordinary_degrees;
  std::vector<mpz_class> brauer_degrees;
  IntMatrix matrix;  // rows ordinary, columns Brauer
  IntMatrix cartan;

  std::size_t k() const { return ordinary_labels.size(); }
  std::size_t l() const { return brauer_labels.size(); }
  mpz_class degree_square_sum() const {
    mpz_class s = 0;
    for (const auto& d : ordinary_degrees) s += d * d;
    return s;
  }
};

inline IntMatrix transpose_times(const IntMatrix& d, std::size_t cols) {
  IntMatrix c(cols, std::vector<i64>(cols, 0));
  for (const auto& row : d)
    for (std::size_t i = 0; i < cols; ++i) {
      if (row[i] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += row[i] * row[j];
    }
  return c;
}

namespace detail {

inline i64 small_integer(const CyclotomicNumber& x, const std::string& what) {
  if (!x.is_integer()) throw VerificationFailure(what + " is not an integer: " + x.to_string());
  const mpz_class v = x.to_rational().get_num();
  if (!v.fits_slong_p()) throw BoundExceeded(what + " does not fit in 64 bits");
  return v.get_si();
}

}  // namespace detail

/// Theorem-scale route: rows are Ind_{D:H}^{G}(theta psi), and by Mackey their restriction to E_{l'} is
/// Ind_H^{E_{l'}} psi, so d = <psi, xi restricted to H>_H.
inline DecompositionData decomposition_via_clifford(const CliffordSetup& setup, const LinearCharacter& phi) {
  const Construction& c = setup.construction;
  const i64 target = z_index(phi);
  DecompositionData data;
  data.phi = phi;
  std::vector<std::size_t> brauer;
  for (std::size_t i = 0; i < setup.e_table.characters.size(); ++i) {
    const auto& xi = setup.e_table.characters[i];
    if (central_character_index(c, *setup.e_group, setup.e_classes, xi) != target) continue;
    brauer.push_back(i);
    data.brauer_labels.push_back("xi" + std::to_string(i));
    data.brauer_degrees.push_back(xi.degree());
  }
  for (const auto& datum : setup.orbits) {
    std::vector<ClassFunction> restricted;
    for (std::size_t i : brauer) restricted.push_back(restrict_to(setup.e_table.characters[i], datum.into_e));
    const std::string theta_label = "theta" + std::to_string(d_character_key(c, datum.orbit_rep));
    for (std::size_t j = 0; j < datum.constituents.size(); ++j) {
      const auto& psi = datum.constituents[j];
      if (central_character_index(c, *datum.stabilizer, datum.stabilizer_classes, psi) != target) continue;
      std::vector<i64> row;
      row.reserve(brauer.size());
      for (const auto& xi_h : restricted) row.push_back(detail::small_integer(inner_product(psi, xi_h), "decomposition number"));
      data.ordinary_labels.push_back(theta_label + ".psi" + std::to_string(j));
      data.ordinary_degrees.push_back(datum.induced_degree(j));
      data.matrix.push_back(std::move(row));
    }
  }
  data.cartan = transpose_times(data.matrix, data.l());
  return data;
}

/// Oracle-scale route from complete character tables of G_{l'} and E_{l'}.
inline DecompositionData decomposition_via_tables(const Construction& c, const ConcreteGroup<GElement>& g,
                                                  const CharacterTable& g_table, const ConcreteGroup<EElement>& e,
                                                  const CharacterTable& e_table, const LinearCharacter& phi) {
  const i64 target = z_index(phi);
  const auto N = static_cast<i64>(c.order_Z_lprime());
  const EElement z = c.z_element(c.lprime_step());
  const auto index_of = [N](const CyclotomicNumber& ratio) -> i64 {
    for (i64 k = 0; k < N; ++k) {
      if (ratio == CyclotomicNumber::root_of_unity(N, k)) return k;
    }
    throw VerificationFailure("character is not scalar on Z_l'");
  };
  const auto g_z = g_table.classes->class_of[g.index_of(c.embed(z))];
  const auto e_z = e_table.classes->class_of[e.index_of(z)];
  const auto emb = make_embedding<EElement, GElement>(e, e_table.classes, g, g_table.classes,
                                                      [&c](const EElement& x) { return c.embed(x); });
  DecompositionData data;
  data.phi = phi;
  std::vector<std::size_t> brauer;
  for (std::size_t i = 0; i < e_table.characters.size(); ++i) {
    const auto& xi = e_table.characters[i];
    if (N > 1 && index_of(xi.value(e_z) * xi.degree_value().inverse()) != target) continue;
    brauer.push_back(i);
    data.brauer_labels.push_back("xi" + std::to_string(i));
    data.brauer_degrees.push_back(xi.degree());
  }
  for (std::size_t i = 0; i < g_table.characters.size(); ++i) {
    const auto& chi = g_table.characters[i];
    if (N > 1 && index_of(chi.value(g_z) * chi.degree_value().inverse()) != target) continue;
    const ClassFunction res = restrict_to(chi, emb);
    std::vector<i64> row;
    for (std::size_t j : brauer) row.push_back(detail::small_integer(inner_product(res, e_table.characters[j]), "decomposition number"));
    data.ordinary_labels.push_back("chi" + std::to_string(i));
    data.ordinary_degrees.push_back(chi.degree());
    data.matrix.push_back(std::move(row));
  }
  data.cartan = transpose_times(data.matrix, data.l());
  return data;
}

// ---- rank -------------------------------------------------------------------------

struct BlockRank {
  mpz_class closed_form;               // [G_{l'} : Z_{l'}]
  std::optional<mpz_class> computed;   // sum of chi(1)^2 over Irr(B_phi)
  bool consistent() const { return !computed || *computed == closed_form; }
};

inline mpz_class block_rank_closed_form(const Construction& c) {
  return c.order_G_lprime() / mpz_class(static_cast<unsigned long>(c.order_Z_lprime()));
}

inline BlockRank block_rank(const Construction& c, const DecompositionData* data = nullptr) {
  BlockRank r{block_rank_closed_form(c), std::nullopt};
  if (data) r.computed = data->degree_square_sum();
  return r;
}

// ---- Cartan matrix checks -------------------------------------------------------------

/// Exact determinant by fraction-free elimination.
inline mpz_class bareiss_determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(a[k], a[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline IntMatrix leading_minor(const IntMatrix& m, std::size_t k) {
  IntMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) out[i].assign(m[i].begin(), m[i].begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

inline bool is_exact_power(const mpz_class& base, mpz_class value) {
  if (value < 1) return false;
  while (value % base == 0) value /= base;
  return value == 1;
}

/// Cartan = D^T D (recomputed entrywise), symmetric, positive definite, det a power of l, no zero rows.
inline CheckResult check_cartan(const DecompositionData& data, int l) {
  CheckResult res{"cartan " + data.phi.to_string()};
  const std::size_t n = data.l();
  res.require(data.cartan.size() == n, "Cartan matrix has the wrong size");
  for (std::size_t r = 0; r < data.matrix.size(); ++r) {
    res.require(std::any_of(data.matrix[r].begin(), data.matrix[r].end(), [](i64 v) { return v != 0; }),
                "row " + data.ordinary_labels[r] + " is zero");
    res.require(std::all_of(data.matrix[r].begin(), data.matrix[r].end(), [](i64 v) { return v >= 0; }),
                "row " + data.ordinary_labels[r] + " has a negative entry");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      i64 s = 0;
      for (const auto& row : data.matrix) s += row[i] * row[j];
      res.require(s == data.cartan[i][j], "C[" + std::to_string(i) + "][" + std::to_string(j) + "] != (D^T D)");
      res.require(data.cartan[i][j] == data.cartan[j][i], "C is not symmetric at " + std::to_string(i) + "," + std::to_string(j));
    }
  for (std::size_t k = 1; k <= n; ++k) {
    const mpz_class minor = bareiss_determinant(leading_minor(data.cartan, k));
    res.require(minor > 0, "leading minor " + std::to_string(k) + " = " + minor.get_str());
  }
  const mpz_class det = bareiss_determinant(data.cartan);
  res.require(is_exact_power(mpz_class(l), det), "det C = " + det.get_str() + " is not a power of " + std::to_string(l));
  res.detail = "det=" + det.get_str();
  return res;
}

}  // namespace mfn
