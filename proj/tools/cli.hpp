#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "manifest.hpp"

namespace sgsvd::cli {

/// Process exit codes. Stable across releases.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitIo = 3,
  kExitNumeric = 4,
};

/// Writes matrix.tsv, row_graph.tsv, col_graph.tsv, truth.tsv and
/// manifest.json into out_dir. A gamma sweep writes one such set per value
/// into out_dir/gamma_<value>/.
void execute_simulate(const SimulateOptions& opts, const std::filesystem::path& out_dir);

/// Writes factors.tsv, traces.tsv, manifest.json. Returns how many layers
/// stopped at max_iter without meeting epsilon.
int execute_fit(const FitOptions& opts, const std::filesystem::path& out_dir);

/// Writes report.tsv and manifest.json.
void execute_evaluate(const EvaluateOptions& opts, const std::filesystem::path& out_dir);

/// Re-runs the stage recorded in a manifest into out_dir.
void execute_replay(const std::filesystem::path& manifest, const std::filesystem::path& out_dir);

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgsvd::cli
