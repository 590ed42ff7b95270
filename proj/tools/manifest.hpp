#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgsvd/simulate.hpp"
#include "sgsvd/solver.hpp"

namespace sgsvd::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct GammaSweep {
  double from = 0.02;
  double to = 0.06;
  double step = 0.005;
};

struct SimulateOptions {
  SimSpec spec;
  std::optional<GammaSweep> sweep;
};

struct FitOptions {
  std::string matrix;
  std::string row_graph;
  std::string col_graph;
  SolverConfig config;
  Index rank = 1;
};

enum class ModuleSide { U, V };

struct EvaluateOptions {
  std::string factors;
  std::string truth;
  std::string graph;
  std::string matrix;
  ModuleSide side = ModuleSide::U;
  int permutations = 1000;
  std::uint64_t seed = 0;
};

/// Everything needed to re-run one pipeline stage. Output paths are stored
/// relative to the output directory, and no timestamps are kept, so the
/// same flags always serialize to the same bytes.
struct RunManifest {
  std::string command;
  std::string tool_version = kToolVersion;
  std::uint64_t seed = 0;
  nlohmann::ordered_json config;
  nlohmann::ordered_json inputs;
  std::vector<std::string> outputs;
};

nlohmann::ordered_json to_json(const SimSpec& spec);
SimSpec sim_spec_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const SolverConfig& cfg);
SolverConfig solver_config_from_json(const nlohmann::ordered_json& j);

RunManifest manifest_for(const SimulateOptions& opts);
RunManifest manifest_for(const FitOptions& opts);
RunManifest manifest_for(const EvaluateOptions& opts);

std::string serialize(const RunManifest& m);
RunManifest parse_manifest(const std::string& text);

FitOptions fit_options_from(const RunManifest& m);
SimulateOptions simulate_options_from(const RunManifest& m);
EvaluateOptions evaluate_options_from(const RunManifest& m);

// Enum spellings shared by flags and manifests.
const std::map<std::string, Variant>& variant_names();
const std::map<std::string, DenominatorMode>& denominator_names();
const std::map<std::string, LaplacianMode>& laplacian_names();
const std::map<std::string, SweepOrder>& sweep_names();
const std::map<std::string, InitKind>& init_names();
const std::map<std::string, SignMode>& sign_mode_names();
const std::map<std::string, ModuleSide>& side_names();

std::string to_string(Variant v);
std::string to_string(DenominatorMode d);
std::string to_string(LaplacianMode l);
std::string to_string(SweepOrder s);
std::string to_string(InitKind k);
std::string to_string(SignMode s);
std::string to_string(ModuleSide s);

}  // namespace sgsvd::cli
