#pragma once

// JSON encodings of the library's results. Exact numbers become integers when they fit
// in 64 bits and decimal strings otherwise; floats never appear outside timing data.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "mfn/blocks/decomposition.hpp"
#include "mfn/blocks/idempotent.hpp"
#include "mfn/check_result.hpp"
#include "mfn/groups/params.hpp"
#include "mfn/morita/lemma_suite.hpp"
#include "mfn/morita/morita.hpp"

namespace mfn::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline const std::string kPaperClosedForm = "paper-closed-form";
inline const std::string kComputed = "computed";

inline json exact(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline json exact(const mpq_class& v) {
  if (v.get_den() == 1) return exact(v.get_num());
  return v.get_str();
}

inline json with_provenance(json value, const std::string& provenance) {
  return json{{"value", std::move(value)}, {"provenance", provenance}};
}

inline json to_json(const ConstructionParams& p) {
  json j{{"l", p.l}, {"p", p.p}, {"t1", p.t1}, {"t2", p.t2}, {"a", p.a}, {"lambda", p.lambda},
         {"machinery_mode", p.machinery_mode}};
  j["n"] = p.n ? json(*p.n) : json(nullptr);
  return j;
}

inline json to_json(const CheckResult& r) {
  json j{{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"counterexamples", r.counterexamples}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

/// A character of Z_{l'} by its index k (phi_k(z_1) = zeta^k) and its order.
inline json z_character_json(const LinearCharacter& phi) {
  return json{{"index", z_index(phi)}, {"order", phi.order()}};
}

inline json to_json(const CycloElement& x) {
  json terms = json::array();
  for (const auto& [g, c] : x.terms()) terms.push_back(json{{"element", to_string(g)}, {"coefficient", c.to_string()}});
  return terms;
}

inline json to_json(const ReducedElement& x) {
  json terms = json::array();
  for (const auto& [g, c] : x.terms()) terms.push_back(json{{"element", to_string(g)}, {"coefficient", c.to_string()}});
  return terms;
}

inline json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& r : m) rows.push_back(r);
  return rows;
}

inline json degrees_json(const std::vector<mpz_class>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(exact(d));
  return out;
}

inline json to_json(const DecompositionData& d) {
  return json{{"phi", z_character_json(d.phi)},
              {"k", d.k()},
              {"l", d.l()},
              {"ordinary_labels", d.ordinary_labels},
              {"brauer_labels", d.brauer_labels},
              {"ordinary_degrees", degrees_json(d.ordinary_degrees)},
              {"brauer_degrees", degrees_json(d.brauer_degrees)},
              {"decomposition", matrix_json(d.matrix)},
              {"cartan", matrix_json(d.cartan)}};
}

inline DecompositionData decomposition_from_json(const json& j, const Construction& c) {
  DecompositionData d;
  d.phi = z_character(c, j.at("phi").at("index").get<i64>());
  d.ordinary_labels = j.at("ordinary_labels").get<std::vector<std::string>>();
  d.brauer_labels = j.at("brauer_labels").get<std::vector<std::string>>();
  const auto degrees = [](const json& a) {
    std::vector<mpz_class> out;
    for (const auto& v : a) out.push_back(v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>()));
    return out;
  };
  d.ordinary_degrees = degrees(j.at("ordinary_degrees"));
  d.brauer_degrees = degrees(j.at("brauer_degrees"));
  d.matrix = j.at("decomposition").get<IntMatrix>();
  d.cartan = j.at("cartan").get<IntMatrix>();
  if (d.matrix.size() != d.ordinary_labels.size() || d.cartan.size() != d.brauer_labels.size()) {
    throw ParameterError("cached decomposition data is inconsistent");
  }
  if (d.ordinary_degrees.size() != d.matrix.size() || d.brauer_degrees.size() != d.brauer_labels.size() ||
      d.cartan != transpose_times(d.matrix, d.brauer_labels.size())) {
    throw ParameterError("cached decomposition data is inconsistent");
  }
  for (std::size_t i = 0; i < d.matrix.size(); ++i) {
    if (d.matrix[i].size() != d.brauer_degrees.size()) throw ParameterError("cached decomposition data is inconsistent");
    mpz_class restricted = 0;
    for (std::size_t j = 0; j < d.brauer_degrees.size(); ++j) restricted += d.matrix[i][j] * d.brauer_degrees[j];
    if (restricted != d.ordinary_degrees[i]) throw ParameterError("cached decomposition degrees do not restrict");
  }
  return d;
}

inline json to_json(const MfnResult& r) {
  json orbit = json::array();
  for (const auto& th : r.orbit) orbit.push_back(z_index(th));
  return json{{"theta", z_character_json(r.theta)},
              {"mfn", with_provenance(r.mfn, kComputed)},
              {"orbit", orbit},
              {"clause", r.via_inverse_swap ? "inverseSwap" : "fixed"}};
}

inline json to_json(const InvariantComparison& c) {
  return json{{"k", c.k_equal}, {"l", c.l_equal}, {"rank", c.rank_equal}, {"cartan_up_to_permutation", c.cartan_equal}};
}

inline json to_json(const MoritaVerdict& v) {
  json j{{"a", z_index(v.block_a.phi)},
         {"b", z_index(v.block_b.phi)},
         {"equivalent", v.equivalent},
         {"reason", to_string(v.reason)},
         {"status", v.status()},
         {"consistent", v.consistent()}};
  j["invariants"] = v.invariants ? to_json(*v.invariants) : json(nullptr);
  return j;
}

inline json to_json(const LemmaOutcome& o, bool timing) {
  json checks = json::array();
  for (const auto& c : o.checks) checks.push_back(to_json(c));
  json j{{"lemma", to_string(o.lemma)}, {"status", to_string(o.status)}, {"checked", o.checked()}, {"checks", checks}};
  if (!o.message.empty()) j["message"] = o.message;
  if (timing) j["seconds"] = o.seconds;
  return j;
}

}  // namespace mfn::cli
