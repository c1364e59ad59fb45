#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "gfix/run.hpp"

namespace {

struct Cli {
  std::string config_path;
  gfix::RunOptions opt;
};

void add_common(CLI::App* sub, Cli& cli, bool needs_config) {
  auto* c = sub->add_option("--config", cli.config_path, "problem config file (JSON)");
  if (needs_config) c->required();
  sub->add_option("--out", cli.opt.out_dir, "output directory (default: $GFIX_OUT_DIR or ./out)");
  sub->add_option("--eps", cli.opt.eps, "override solver eps");
  sub->add_option("--max-iter", cli.opt.max_iter, "override solver max_iter");
  sub->add_option("--seed", cli.opt.rng_seed, "override sampler RNG seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-metric fixed-point toolkit: axiom checkers, phi-order checks and "
               "n-tuple fixed-point iteration schemes"};
  app.require_subcommand(1);

  Cli cli;
  if (const char* env = std::getenv("GFIX_OUT_DIR")) cli.opt.out_dir = env;

  const char* subcommands[] = {"check-axioms", "check-order", "check-pair",
                               "check-chain", "solve", "verify"};
  for (const char* name : subcommands) add_common(app.add_subcommand(name), cli, true);
  add_common(app.add_subcommand("reproduce-paper", "run the bundled worked-example fixtures"),
             cli, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : gfix::kExitUsage;
  }

  std::string sub = app.get_subcommands().front()->get_name();
  try {
    if (sub == "reproduce-paper") return gfix::reproduce_paper(std::cout);
    gfix::ProblemConfig cfg = gfix::ProblemConfig::from_file(cli.config_path);
    return gfix::run_subcommand(sub, std::move(cfg), cli.opt, std::cout);
  } catch (const gfix::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return gfix::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gfix::kExitUsage;
  }
}
