// betti4: Betti numbers of monomial ideals in four variables.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "betti4/commands.hpp"

namespace {

using namespace betti4::cli;

struct CommonFlags {
  bool json = false;
  bool table = false;
  std::size_t max_gens = betti4::kDefaultGeneratorCap;
  betti4::Exponent max_exp = betti4::kDefaultExponentCap;
  unsigned jobs = 0;

  OutputFormat format() const { return json && !table ? OutputFormat::Json : OutputFormat::Table; }
  Limits limits() const { return {max_gens, max_exp}; }
  unsigned worker_count() const { return jobs > 0 ? jobs : default_jobs(); }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_limits = true) {
  auto* json = cmd->add_flag("--json", flags.json, "Machine-readable JSON output");
  auto* table = cmd->add_flag("--table", flags.table, "Aligned text output (default)");
  json->excludes(table);
  if (!with_limits) return;
  cmd->add_option("--max-gens", flags.max_gens, "Largest accepted number of minimal generators")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();
  cmd->add_option("--max-exp", flags.max_exp, "Largest accepted exponent")
      ->check(CLI::Range(1u, betti4::kExponentLimit))
      ->capture_default_str();
  cmd->add_option("--jobs,-j", flags.jobs, "Worker threads (default: $BETTI4_JOBS or all cores)");
}

// Input from files, --ideal strings, or stdin when neither is given.
struct InputFlags {
  std::vector<std::string> files;
  std::vector<std::string> ideals;
};

std::unique_ptr<std::istream> open_input(const InputFlags& in, bool stdin_fallback) {
  auto buffer = std::make_unique<std::stringstream>();
  for (const auto& text : in.ideals) *buffer << text << '\n';
  for (const auto& path : in.files) {
    if (path == "-") {
      *buffer << std::cin.rdbuf();
      continue;
    }
    std::ifstream file(path);
    if (!file) throw CLI::ValidationError("input", "cannot open " + path);
    *buffer << file.rdbuf() << '\n';
  }
  if (in.files.empty() && in.ideals.empty()) {
    if (!stdin_fallback) return nullptr;
    *buffer << std::cin.rdbuf();
  }
  return buffer;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total and multigraded Betti numbers of monomial ideals in x1..x4"};
  app.require_subcommand(1);

  CommonFlags betti_flags;
  InputFlags betti_input;
  bool multigraded = false;
  auto* betti = app.add_subcommand("betti", "Betti tables via the closed formulas");
  add_common(betti, betti_flags);
  betti->add_flag("--multigraded", multigraded, "Include the multigraded Betti numbers");
  betti->add_option("--ideal", betti_input.ideals, "Ideal given inline, e.g. \"x1^2, x1*x2\"");
  betti->add_option("files", betti_input.files, "Input files, one ideal per line ('-' = stdin)");

  CommonFlags verify_flags;
  InputFlags verify_input;
  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check formulas against the homology oracle");
  add_common(verify, verify_flags);
  verify->add_option("--ideal", verify_input.ideals, "Ideal given inline");
  verify->add_option("files", verify_input.files, "Input files ('-' = stdin)");
  verify->add_flag("--atlas", verify_opts.include_atlas, "Include the 66 atlas ideals");
  verify->add_option("--random", verify_opts.random_count, "Number of seeded random ideals");
  verify->add_option("--seed", verify_opts.seed, "Seed for --random")->capture_default_str();
  verify->add_option("--random-max-generators", verify_opts.random_max_generators)->capture_default_str();
  verify->add_option("--random-max-exponent", verify_opts.random_max_exponent)->capture_default_str();

  CommonFlags experiment_flags;
  ExperimentOptions experiment_opts;
  auto* experiment = app.add_subcommand("experiment", "Compare beta2 and beta3 on random ideals (CSV)");
  add_common(experiment, experiment_flags);
  experiment->add_option("--samples", experiment_opts.config.sample_count)->capture_default_str();
  experiment->add_option("--max-generators", experiment_opts.config.max_generators)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment->add_option("--max-exponent", experiment_opts.config.max_exponent)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment->add_option("--seed", experiment_opts.config.seed)->capture_default_str();
  experiment->add_option("--inject", experiment_opts.injected, "Ideal evaluated before the samples");

  CommonFlags atlas_flags;
  AtlasOptions atlas_opts;
  auto* atlas = app.add_subcommand("atlas", "Print the 66 squarefree classes");
  add_common(atlas, atlas_flags, false);
  atlas->add_flag("--check", atlas_opts.check, "Re-derive every row with the homology oracle");

  try {
    app.parse(argc, argv);

    if (betti->parsed()) {
      BettiOptions opts{betti_flags.format(), multigraded, betti_flags.limits(), betti_flags.worker_count()};
      auto in = open_input(betti_input, true);
      return run_betti(*in, std::cout, std::cerr, opts);
    }
    if (verify->parsed()) {
      verify_opts.format = verify_flags.format();
      verify_opts.limits = verify_flags.limits();
      verify_opts.jobs = verify_flags.worker_count();
      const bool has_other = verify_opts.include_atlas || verify_opts.random_count > 0;
      auto in = open_input(verify_input, !has_other);
      return run_verify(in.get(), std::cout, std::cerr, verify_opts);
    }
    if (experiment->parsed()) {
      experiment_opts.limits = experiment_flags.limits();
      experiment_opts.jobs = experiment_flags.worker_count();
      return run_experiment(std::cout, std::cerr, experiment_opts);
    }
    if (atlas->parsed()) {
      atlas_opts.format = atlas_flags.format();
      return run_atlas(std::cout, std::cerr, atlas_opts);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return kExitUsage;
}
