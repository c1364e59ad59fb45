#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gfix/config.hpp"

namespace gfix {

struct RunOptions {
  std::string out_dir = "out";
  bool write_files = true;
  // Command-line overrides of config values.
  std::optional<double> eps;
  std::optional<std::size_t> max_iter;
  std::optional<std::uint64_t> rng_seed;
};

// Exit statuses of the batch front-end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailedCheck = 2;

/// Dispatches one subcommand (check-axioms, check-order, check-pair,
/// check-chain, solve, verify) against a loaded config. Human-readable
/// report goes to `out`; machine-readable files under
/// out_dir/<config-name>/ when write_files is set.
int run_subcommand(const std::string& subcommand, ProblemConfig cfg, const RunOptions& opt,
                   std::ostream& out);

/// Runs the bundled worked-example fixtures and prints a verdict table.
/// Returns kExitOk iff every fixture matches its expected outcome
/// (including the documented discrepancies, which are expected to appear).
int reproduce_paper(std::ostream& out);

}  // namespace gfix
