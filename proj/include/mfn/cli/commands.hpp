#pragma once

// The three subcommands behind the mfn tool. Each returns an exit code and a report; the
// caller decides how to render it. Exit codes: 0 all assertions held, 1 a mathematical
// assertion failed, 2 configuration or bound error.

#include <chrono>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mfn/blocks/decomposition.hpp"
#include "mfn/blocks/idempotent.hpp"
#include "mfn/chars/clifford.hpp"
#include "mfn/cli/cache.hpp"
#include "mfn/cli/serialize.hpp"
#include "mfn/morita/lemma_suite.hpp"
#include "mfn/morita/morita.hpp"

namespace mfn::cli {

enum class Format { Json, Csv, Text };

inline Format format_from_string(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw ParameterError("unknown format '" + s + "'");
}

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitConfig = 2;

struct RunConfig {
  int l = 2;
  std::optional<int> n;
  std::optional<int> p;
  std::optional<int> t1;
  std::optional<int> t2;
  std::optional<i64> phi;
  std::optional<i64> theta_order;
  bool machinery_mode = false;

  u64 exhaustion_bound = kDefaultExhaustionBound;
  u64 element_bound = kDefaultElementBound;
  u64 table_bound = kDefaultCharacterTableBound;
  i64 prime_bound = kDefaultPrimeSearchBound;

  Format format = Format::Json;
  std::string output;  // empty: stdout
  std::optional<std::filesystem::path> cache_dir;
  bool no_cache = false;

  u64 seed = 7;
  u64 samples = 1000;
  bool timing = false;

  std::vector<std::string> which;  // verify only
  bool all = false;
  std::optional<int> t;            // fpstable level

  Cache cache() const {
    if (no_cache) return {};
    return Cache(cache_dir ? *cache_dir : default_cache_dir());
  }
};

struct CommandResult {
  int exit_code = kExitOk;
  json report;
  std::vector<std::pair<std::string, IntMatrix>> matrices;  // CSV payload
  std::vector<std::string> csv_rows;                         // used when there are no matrices
};

namespace detail {

inline json report_header(const std::string& command, const ConstructionParams& params) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}, {"params", to_json(params)}};
}

inline int required_p(const RunConfig& cfg, const std::string& command) {
  if (!cfg.p) throw ParameterError(command + " needs --p");
  return *cfg.p;
}

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline LinearCharacter theta_of_order(const Construction& c, i64 order) {
  const auto N = static_cast<i64>(c.order_Z_lprime());
  if (order < 1 || N % order != 0) {
    throw ParameterError("no character of order " + std::to_string(order) + " in Irr(Z_l'), |Z_l'| = " + std::to_string(N));
  }
  return power(z_character(c, 1), N / order);
}

}  // namespace detail

// ---- mfn ---------------------------------------------------------------------------------

/// With --n and no override of t or theta, builds the canonical instance and asserts mfn = n.
/// Otherwise computes mfn for the requested character and asserts nothing.
inline CommandResult cmd_mfn(const RunConfig& cfg) {
  const detail::Stopwatch clock;
  const bool overridden = cfg.t1 || cfg.t2 || cfg.theta_order || cfg.phi;
  CommandResult out;

  if (cfg.n && !cfg.p && !overridden) {
    const auto inst = construct_theorem_instance(cfg.l, *cfg.n, cfg.prime_bound);
    const Construction c(inst.params);
    out.report = detail::report_header("mfn", inst.params);
    out.report["result"] = to_json(inst.result);
    out.report["block"] = json{{"phi", z_character_json(inst.theta)},
                               {"rank", with_provenance(exact(block_rank_closed_form(c)), kPaperClosedForm)}};
    out.report["assertion"] = json{{"target_n", inst.n}, {"matched", inst.matches()}, {"check", to_json(inst.check)}};
    out.exit_code = inst.matches() ? kExitOk : kExitAssertion;
  } else {
    int p = 0;
    if (cfg.p) {
      p = *cfg.p;
    } else if (cfg.n) {
      p = static_cast<int>(find_prime(cfg.l, *cfg.n, cfg.prime_bound));
    } else {
      throw ParameterError("mfn needs --n or --p");
    }
    const auto params = make_params(cfg.l, p, cfg.t1.value_or(1), cfg.t2.value_or(2), cfg.machinery_mode, cfg.n);
    const Construction c(params);
    LinearCharacter theta;
    if (cfg.phi) {
      theta = z_character(c, *cfg.phi);
    } else if (cfg.theta_order) {
      theta = detail::theta_of_order(c, *cfg.theta_order);
    } else if (cfg.n) {
      theta = detail::theta_of_order(c, checked_pow(cfg.l, static_cast<unsigned>(*cfg.n)) - 1);
    } else {
      theta = z_character(c, 1);
    }
    const auto result = morita_frobenius_number(c, theta);
    out.report = detail::report_header("mfn", params);
    out.report["result"] = to_json(result);
    out.report["block"] = json{{"phi", z_character_json(theta)},
                               {"rank", with_provenance(exact(block_rank_closed_form(c)), kPaperClosedForm)}};
    out.report["assertion"] = nullptr;
  }

  const auto& orbit = out.report["result"]["orbit"];
  out.csv_rows.push_back("m,theta_index");
  for (std::size_t m = 0; m < orbit.size(); ++m) out.csv_rows.push_back(std::to_string(m) + "," + orbit[m].dump());
  if (cfg.timing) out.report["timing"] = json{{"seconds", clock.seconds()}};
  return out;
}

// ---- verify ------------------------------------------------------------------------------

inline std::vector<Lemma> selected_lemmas(const RunConfig& cfg) {
  if (cfg.all) return all_lemmas();
  if (cfg.which.empty()) throw ParameterError("verify needs --which or --all");
  std::vector<Lemma> out;
  for (const auto& name : cfg.which) {
    const Lemma l = lemma_from_string(name);
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

/// Lemmas that make no use of the standing hypothesis run at any p; the hypothesis is then waived.
inline CommandResult cmd_verify(const RunConfig& cfg) {
  const detail::Stopwatch clock;
  const auto lemmas = selected_lemmas(cfg);
  const bool hypothesis_free = std::none_of(lemmas.begin(), lemmas.end(), lemma_needs_hypothesis);
  auto params = make_params(cfg.l, detail::required_p(cfg, "verify"), cfg.t1.value_or(1), cfg.t2.value_or(1), true, cfg.n);
  params.machinery_mode = cfg.machinery_mode || (hypothesis_free && !params.satisfies_standing_hypothesis());

  SuiteOptions options;
  options.exhaustion_bound = cfg.exhaustion_bound;
  options.element_bound = cfg.element_bound;
  options.table_bound = cfg.table_bound;
  options.fpstable_t = cfg.t;

  CommandResult out;
  out.report = detail::report_header("verify", params);
  json outcomes = json::array();
  bool failed = false, unfinished = false;
  out.csv_rows.push_back("lemma,status,checked");
  for (const auto& o : verify_lemma_suite(lemmas, params, options)) {
    outcomes.push_back(to_json(o, cfg.timing));
    failed = failed || o.status == LemmaStatus::Fail;
    unfinished = unfinished || o.status == LemmaStatus::BoundExceeded || o.status == LemmaStatus::Invalid;
    out.csv_rows.push_back(to_string(o.lemma) + "," + to_string(o.status) + "," + std::to_string(o.checked()));
  }
  out.report["lemmas"] = outcomes;
  out.exit_code = failed ? kExitAssertion : unfinished ? kExitConfig : kExitOk;
  if (cfg.timing) out.report["timing"] = json{{"seconds", clock.seconds()}};
  return out;
}

// ---- blocks ------------------------------------------------------------------------------

inline std::string decomposition_cache_key(const ConstructionParams& params) {
  return "decomposition v1 l=" + std::to_string(params.l) + " p=" + std::to_string(params.p) + " t=" +
         std::to_string(params.t1) + "," + std::to_string(params.t2) + " lambda=" + std::to_string(params.lambda);
}

struct DecompositionLookup {
  std::vector<DecompositionData> blocks;  // indexed by phi
  std::string omitted;                    // reason when blocks is empty
};

/// Decomposition data for every block, from the cache when possible.
inline DecompositionLookup decomposition_for_all(const Construction& c, const RunConfig& cfg) {
  const Cache cache = cfg.cache();
  const std::string key = decomposition_cache_key(c.params());
  DecompositionLookup out;
  if (auto hit = cache.load(key)) {
    try {
      for (const auto& entry : *hit) {
        out.blocks.push_back(decomposition_from_json(entry, c));
        if (z_index(out.blocks.back().phi) != static_cast<i64>(out.blocks.size()) - 1) throw ParameterError("cache order");
      }
      if (out.blocks.size() == c.order_Z_lprime()) return out;
    } catch (const std::exception&) {
    }
    out.blocks.clear();
  }
  try {
    const auto setup = build_clifford_setup(c, cfg.element_bound);
    for (u64 k = 0; k < c.order_Z_lprime(); ++k) {
      out.blocks.push_back(decomposition_via_clifford(setup, z_character(c, static_cast<i64>(k))));
    }
  } catch (const BoundExceeded& e) {
    out.blocks.clear();
    out.omitted = std::string("needs machinery scale: ") + e.what();
    return out;
  }
  json payload = json::array();
  for (const auto& d : out.blocks) payload.push_back(to_json(d));
  cache.store(key, payload);
  return out;
}

inline CommandResult cmd_blocks(const RunConfig& cfg) {
  const detail::Stopwatch clock;
  const auto params = make_params(cfg.l, detail::required_p(cfg, "blocks"), cfg.t1.value_or(1), cfg.t2.value_or(1),
                                  cfg.machinery_mode, cfg.n);
  const Construction c(params);
  const auto N = static_cast<i64>(c.order_Z_lprime());
  if (cfg.phi && (*cfg.phi < 0 || *cfg.phi >= N)) {
    throw ParameterError("--phi must lie in [0, " + std::to_string(N) + ")");
  }
  const auto blocks = all_blocks(c);
  const auto rmap = block_reduction(c);
  const auto lookup = decomposition_for_all(c, cfg);
  const bool have_data = !lookup.blocks.empty();

  CommandResult out;
  out.report = detail::report_header("blocks", params);
  bool failed = false;
  json checks = json::array();
  const auto record = [&](const CheckResult& r) {
    failed = failed || !r.passed;
    checks.push_back(to_json(r));
  };
  record(check_idempotent_laws(c, blocks));
  record(check_reduced_laws(c, blocks, rmap));
  record(check_twist_permutation(c, blocks, rmap, rmap.field_degree()));

  std::vector<BlockInvariants> invariants;
  json listed = json::array();
  for (i64 k = 0; k < N; ++k) {
    const auto& b = blocks[static_cast<std::size_t>(k)];
    const DecompositionData* data = have_data ? &lookup.blocks[static_cast<std::size_t>(k)] : nullptr;
    const BlockRank rank = block_rank(c, data);
    if (data) invariants.push_back(invariants_of(*data));
    if (cfg.phi && *cfg.phi != k) continue;

    json entry{{"phi", z_character_json(b.phi)}, {"idempotent", to_json(b.idempotent)}};
    entry["rank"] = json{{"closed_form", with_provenance(exact(rank.closed_form), kPaperClosedForm)},
                         {"computed", rank.computed ? with_provenance(exact(*rank.computed), kComputed) : json(nullptr)},
                         {"consistent", rank.consistent()}};
    failed = failed || !rank.consistent();
    if (data) {
      entry["decomposition"] = to_json(*data);
      const auto cartan_check = check_cartan(*data, c.l());
      failed = failed || !cartan_check.passed;
      entry["cartan_check"] = to_json(cartan_check);
      out.matrices.emplace_back("decomposition phi=" + std::to_string(k), data->matrix);
      out.matrices.emplace_back("cartan phi=" + std::to_string(k), data->cartan);
    } else {
      entry["decomposition"] = nullptr;
    }
    listed.push_back(std::move(entry));
  }
  out.report["block_count"] = N;
  out.report["blocks"] = listed;
  out.report["checks"] = checks;
  out.report["decomposition_omitted"] = have_data ? json(nullptr) : json(lookup.omitted);

  json verdicts = json::array();
  json rank_bounds = json::array();
  for (i64 a = 0; a < N; ++a)
    for (i64 b = a + 1; b < N; ++b) {
      if (cfg.phi && *cfg.phi != a && *cfg.phi != b) continue;
      const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
      const auto v = have_data ? morita_equivalent(blocks[ua], blocks[ub], &invariants[ua], &invariants[ub])
                               : morita_equivalent(blocks[ua], blocks[ub]);
      failed = failed || !v.consistent();
      verdicts.push_back(to_json(v));
      if (have_data && lookup.blocks[ua].k() == lookup.blocks[ub].k()) {
        const auto rep = rank_bound_check(lookup.blocks[ua].ordinary_degrees, lookup.blocks[ub].ordinary_degrees,
                                          cfg.samples, cfg.seed);
        failed = failed || !rep.passed();
        rank_bounds.push_back(json{{"a", a},
                                   {"b", b},
                                   {"rank", exact(rep.rank)},
                                   {"identity_ok", rep.identity_ok},
                                   {"sorted_equality_case_ok", rep.sorted_equality_case_ok},
                                   {"samples", rep.samples},
                                   {"seed", cfg.seed},
                                   {"violations", rep.violations},
                                   {"witnesses", rep.witnesses}});
      }
    }
  out.report["morita"] = verdicts;
  out.report["rank_bound"] = rank_bounds;
  out.exit_code = failed ? kExitAssertion : kExitOk;
  if (cfg.timing) out.report["timing"] = json{{"seconds", clock.seconds()}};
  return out;
}

// ---- rendering ---------------------------------------------------------------------------

inline std::string render_csv(const CommandResult& r) {
  std::ostringstream os;
  if (r.matrices.empty()) {
    for (const auto& row : r.csv_rows) os << row << '\n';
    return os.str();
  }
  bool first = true;
  for (const auto& [name, m] : r.matrices) {
    if (!first) os << '\n';
    first = false;
    os << "# " << name << '\n';
    for (const auto& row : m) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
      os << '\n';
    }
  }
  return os.str();
}

inline std::string render_text(const CommandResult& r) {
  const json& j = r.report;
  std::ostringstream os;
  const auto& p = j.at("params");
  os << j.at("command").get<std::string>() << ": l=" << p.at("l") << " p=" << p.at("p") << " t=(" << p.at("t1") << ","
     << p.at("t2") << ")" << (p.at("machinery_mode").get<bool>() ? " machinery" : "") << '\n';
  const std::string command = j.at("command").get<std::string>();
  if (command == "mfn") {
    const auto& res = j.at("result");
    os << "theta index " << res.at("theta").at("index") << " of order " << res.at("theta").at("order") << '\n';
    os << "mfn = " << res.at("mfn").at("value") << " (" << res.at("clause").get<std::string>() << ")\n";
    os << "orbit:";
    for (const auto& v : res.at("orbit")) os << ' ' << v;
    os << '\n';
    if (!j.at("assertion").is_null()) {
      os << "target n = " << j.at("assertion").at("target_n") << ": "
         << (j.at("assertion").at("matched").get<bool>() ? "matched" : "MISMATCH") << '\n';
    }
  } else if (command == "verify") {
    for (const auto& o : j.at("lemmas")) {
      os << o.at("lemma").get<std::string>() << ": " << o.at("status").get<std::string>() << " (" << o.at("checked")
         << " checks)";
      if (o.contains("message")) os << " " << o.at("message").get<std::string>();
      os << '\n';
      for (const auto& ch : o.at("checks")) {
        for (const auto& cx : ch.at("counterexamples")) os << "  " << ch.at("name").get<std::string>() << ": " << cx.get<std::string>() << '\n';
      }
    }
  } else {
    os << j.at("block_count") << " blocks\n";
    for (const auto& b : j.at("blocks")) {
      os << "phi " << b.at("phi").at("index") << ": rank " << b.at("rank").at("closed_form").at("value");
      if (!b.at("decomposition").is_null()) {
        const auto& d = b.at("decomposition");
        os << " k=" << d.at("k") << " l=" << d.at("l") << " " << b.at("cartan_check").value("detail", "");
      }
      os << '\n';
    }
    if (!j.at("decomposition_omitted").is_null()) os << "decomposition omitted: " << j.at("decomposition_omitted").get<std::string>() << '\n';
    for (const auto& v : j.at("morita")) {
      os << "B" << v.at("a") << " vs B" << v.at("b") << ": " << v.at("status").get<std::string>() << '\n';
    }
    for (const auto& ch : j.at("checks")) {
      os << ch.at("name").get<std::string>() << ": " << (ch.at("passed").get<bool>() ? "pass" : "FAIL") << '\n';
    }
  }
  if (j.contains("timing")) os << "seconds: " << j.at("timing").at("seconds") << '\n';
  return os.str();
}

inline std::string render(const CommandResult& r, Format f) {
  switch (f) {
    case Format::Json: return r.report.dump(2) + "\n";
    case Format::Csv: return render_csv(r);
    case Format::Text: return render_text(r);
  }
  return {};
}

}  // namespace mfn::cli
