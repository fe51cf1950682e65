#pragma once

// One entry point for the exhaustive or certified checks behind each structural claim.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "mfn/blocks/decomposition.hpp"
#include "mfn/blocks/idempotent.hpp"
#include "mfn/chars/character_table.hpp"
#include "mfn/chars/clifford.hpp"
#include "mfn/chars/dkernel.hpp"
#include "mfn/chars/linear_character.hpp"
#include "mfn/check_result.hpp"
#include "mfn/groups/automorphism.hpp"
#include "mfn/groups/checks.hpp"

namespace mfn {

enum class Lemma { FpStable, Comm, Faithful, Autos, DKernel, TwistPerm, Partition };

inline const std::vector<Lemma>& all_lemmas() {
  static const std::vector<Lemma> all{Lemma::FpStable, Lemma::Comm,      Lemma::Faithful, Lemma::Autos,
                                      Lemma::DKernel,  Lemma::TwistPerm, Lemma::Partition};
  return all;
}

inline std::string to_string(Lemma l) {
  switch (l) {
    case Lemma::FpStable: return "fpstable";
    case Lemma::Comm: return "comm";
    case Lemma::Faithful: return "faithful";
    case Lemma::Autos: return "autos";
    case Lemma::DKernel: return "dkernel";
    case Lemma::TwistPerm: return "twistperm";
    case Lemma::Partition: return "partition";
  }
  return "?";
}

inline Lemma lemma_from_string(const std::string& s) {
  for (Lemma l : all_lemmas()) {
    if (to_string(l) == s) return l;
  }
  throw ParameterError("unknown lemma '" + s + "'");
}

/// Lemmas about the blocks need p - 1 not a power of l, unless machinery mode is requested.
inline bool lemma_needs_hypothesis(Lemma l) {
  return l == Lemma::Autos || l == Lemma::DKernel || l == Lemma::TwistPerm || l == Lemma::Partition;
}

enum class LemmaStatus { Pass, Fail, BoundExceeded, Invalid };

inline std::string to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Pass: return "pass";
    case LemmaStatus::Fail: return "fail";
    case LemmaStatus::BoundExceeded: return "bound-exceeded";
    case LemmaStatus::Invalid: return "invalid";
  }
  return "?";
}

struct LemmaOutcome {
  Lemma lemma = Lemma::Comm;
  LemmaStatus status = LemmaStatus::Pass;
  std::vector<CheckResult> checks;
  std::string message;
  double seconds = 0;

  u64 checked() const {
    u64 n = 0;
    for (const auto& c : checks) n += c.checked;
    return n;
  }
};

struct SuiteOptions {
  u64 exhaustion_bound = kDefaultExhaustionBound;
  u64 element_bound = kDefaultElementBound;
  u64 table_bound = kDefaultCharacterTableBound;
  std::optional<int> fpstable_t;  // default: the levels t1 and t2 of the parameters
};

namespace detail {

inline CycloElement apply_to_element(const Construction& c, const AutomorphismSpec& spec, const CycloElement& x) {
  CycloElement out(x.ambient());
  for (const auto& [g, coefficient] : x.terms()) out.add_term(apply_automorphism(c, spec, g), coefficient);
  return out;
}

inline std::vector<CheckResult> run_fpstable(const Construction& c, const SuiteOptions& o) {
  std::vector<int> levels;
  if (o.fpstable_t) {
    levels.push_back(*o.fpstable_t);
  } else {
    levels.push_back(c.params().t1);
    if (c.params().t2 != c.params().t1) levels.push_back(c.params().t2);
  }
  std::vector<CheckResult> out;
  for (int t : levels) {
    auto rep = fp_stable_characters(c, t, o.exhaustion_bound);
    rep.check.detail = "|Irr(Omega)|=" + std::to_string(rep.total) + " stable=" + std::to_string(rep.stable.size());
    out.push_back(std::move(rep.check));
  }
  return out;
}

inline std::vector<CheckResult> run_autos(const Construction& c) {
  std::vector<CheckResult> out;
  const auto blocks = all_blocks(c);
  for (const auto& spec : standard_automorphisms(c)) {
    CheckResult res = verify_automorphism(c, spec);
    for (const auto& b : blocks) {
      const CycloElement image = detail::apply_to_element(c, spec, b.idempotent);
      const LinearCharacter expected_phi = spec.kind == AutomorphismKind::Swap ? inverse(b.phi) : b.phi;
      res.require(image == build_idempotent(c, expected_phi).idempotent,
                  spec.describe() + " maps e_" + b.phi.to_string() + " to the wrong idempotent");
      if (spec.kind == AutomorphismKind::Swap) {
        res.require(detail::apply_to_element(c, spec, image) == b.idempotent, "swap^2 != id on e_" + b.phi.to_string());
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

inline std::vector<CheckResult> run_dkernel(const Construction& c, const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const mpz_class g_order = c.order_G_lprime();
  if (g_order <= mpz_class(static_cast<unsigned long>(o.table_bound))) {
    const auto g = make_g_lprime_group(c, o.table_bound);
    const auto table = irr_small_group(g, o.table_bound);
    const auto e = make_e_lprime_group(c);
    const auto e_classes = conjugacy_classes(e);
    auto full = check_dkernel_full(c, g, table.characters, e, e_classes);
    full.detail = "full check over Irr(G_l'), " + std::to_string(table.characters.size()) + " characters";
    out.push_back(std::move(full));
  }
  const auto e = make_e_lprime_group(c);
  const auto table = irr_small_group(e, o.table_bound);
  out.push_back(check_stabilizer_trichotomy(c, o.element_bound));
  out.push_back(check_restriction_dichotomy(c, e, table));
  return out;
}

}  // namespace detail

inline LemmaOutcome run_lemma(Lemma lemma, const ConstructionParams& params, const SuiteOptions& options = {}) {
  LemmaOutcome outcome;
  outcome.lemma = lemma;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (lemma_needs_hypothesis(lemma) && !params.satisfies_standing_hypothesis() && !params.machinery_mode) {
      throw ParameterError(to_string(lemma) + " needs p - 1 not a power of l (or machinery mode)");
    }
    const Construction c(params);
    switch (lemma) {
      case Lemma::FpStable: outcome.checks = detail::run_fpstable(c, options); break;
      case Lemma::Comm: outcome.checks.push_back(verify_comm_relation(c, options.exhaustion_bound)); break;
      case Lemma::Faithful: outcome.checks.push_back(verify_faithful(c, options.exhaustion_bound)); break;
      case Lemma::Autos: outcome.checks = detail::run_autos(c); break;
      case Lemma::DKernel: outcome.checks = detail::run_dkernel(c, options); break;
      case Lemma::TwistPerm: {
        const auto rmap = block_reduction(c);
        outcome.checks.push_back(check_twist_permutation(c, all_blocks(c), rmap, rmap.field_degree()));
        break;
      }
      case Lemma::Partition: outcome.checks.push_back(block_partition_check(c, {options.element_bound})); break;
    }
    outcome.status = LemmaStatus::Pass;
    for (const auto& ch : outcome.checks) {
      if (!ch.passed) outcome.status = LemmaStatus::Fail;
    }
  } catch (const BoundExceeded& e) {
    outcome.status = LemmaStatus::BoundExceeded;
    outcome.message = to_string(lemma) + " needs smaller parameters: " + e.what();
  } catch (const ParameterError& e) {
    outcome.status = LemmaStatus::Invalid;
    outcome.message = e.what();
  }
  outcome.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

inline std::vector<LemmaOutcome> verify_lemma_suite(const std::vector<Lemma>& which, const ConstructionParams& params,
                                                    const SuiteOptions& options = {}) {
  std::vector<LemmaOutcome> out;
  for (Lemma l : which) out.push_back(run_lemma(l, params, options));
  return out;
}

}  // namespace mfn
