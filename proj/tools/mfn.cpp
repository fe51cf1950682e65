#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mfn/cli/commands.hpp"

namespace {

void add_common(CLI::App& app, mfn::cli::RunConfig& cfg, std::string& format) {
  app.add_option("--l", cfg.l, "the prime l")->capture_default_str();
  app.add_option("--n", cfg.n, "target Morita-Frobenius number");
  app.add_option("--p", cfg.p, "override the prime p");
  app.add_option("--t1", cfg.t1, "level of the first factor");
  app.add_option("--t2", cfg.t2, "level of the second factor");
  app.add_option("--phi", cfg.phi, "index k of phi_k in Irr(Z_l')");
  app.add_flag("--machinery-mode", cfg.machinery_mode, "allow p - 1 a power of l");
  app.add_option("--exhaustion-bound", cfg.exhaustion_bound, "max cases in an exhaustive check")->capture_default_str();
  app.add_option("--element-bound", cfg.element_bound, "max elements enumerated")->capture_default_str();
  app.add_option("--table-bound", cfg.table_bound, "max group order for a full character table")->capture_default_str();
  app.add_option("--prime-bound", cfg.prime_bound, "search limit when p is found from l and n")->capture_default_str();
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--output,-o", cfg.output, "write the report here instead of stdout");
  app.add_option("--cache-dir", cfg.cache_dir, "overrides MFN_CACHE_DIR");
  app.add_flag("--no-cache", cfg.no_cache, "neither read nor write the cache");
  app.add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--samples", cfg.samples, "random bijections for the rank bound")->capture_default_str();
  app.add_flag("--timing", cfg.timing, "include wall-clock seconds (breaks byte identity)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morita-Frobenius numbers of the blocks B_phi"};
  app.require_subcommand(1);
  mfn::cli::RunConfig cfg;
  std::string format = "json";

  auto* mfn_cmd = app.add_subcommand("mfn", "compute mf_O of a block");
  add_common(*mfn_cmd, cfg, format);
  mfn_cmd->add_option("--theta-order", cfg.theta_order, "use the character of Z_l' of this order");

  auto* verify_cmd = app.add_subcommand("verify", "run lemma checks");
  add_common(*verify_cmd, cfg, format);
  verify_cmd->add_option("--which", cfg.which, "lemma name (repeatable)");
  verify_cmd->add_flag("--all", cfg.all, "run every lemma");
  verify_cmd->add_option("--t", cfg.t, "level for fpstable");

  auto* blocks_cmd = app.add_subcommand("blocks", "list blocks with idempotents and invariants");
  add_common(*blocks_cmd, cfg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mfn::cli::kExitConfig;
  }

  try {
    cfg.format = mfn::cli::format_from_string(format);
    mfn::cli::CommandResult result;
    if (mfn_cmd->parsed()) {
      result = mfn::cli::cmd_mfn(cfg);
    } else if (verify_cmd->parsed()) {
      result = mfn::cli::cmd_verify(cfg);
    } else {
      result = mfn::cli::cmd_blocks(cfg);
    }
    const std::string text = mfn::cli::render(result, cfg.format);
    if (cfg.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.output, std::ios::binary | std::ios::trunc);
      out << text;
      if (!out) {
        std::cerr << "mfn: cannot write " << cfg.output << '\n';
        return mfn::cli::kExitConfig;
      }
    }
    return result.exit_code;
  } catch (const mfn::ParameterError& e) {
    std::cerr << "mfn: invalid parameters: " << e.what() << '\n';
  } catch (const mfn::BoundExceeded& e) {
    std::cerr << "mfn: bound exceeded: " << e.what() << '\n';
  } catch (const mfn::VerificationFailure& e) {
    std::cerr << "mfn: verification failed: " << e.what() << '\n';
    return mfn::cli::kExitAssertion;
  }
  return mfn::cli::kExitConfig;
}
