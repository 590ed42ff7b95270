#include "manifest.hpp"

#include "sgsvd/errors.hpp"

namespace sgsvd::cli {

using json = nlohmann::ordered_json;

namespace {

template <typename E>
std::string name_of(const std::map<std::string, E>& names, E value) {
  for (const auto& [name, v] : names) {
    if (v == value) return name;
  }
  throw ConfigError("unnamed enum value");
}

template <typename E>
E parse_name(const std::map<std::string, E>& names, const std::string& text, const char* what) {
  auto it = names.find(text);
  if (it == names.end()) throw ConfigError(std::string("unknown ") + what + " '" + text + "'");
  return it->second;
}

std::string str(const json& j, const char* key) { return j.at(key).get<std::string>(); }

}  // namespace

const std::map<std::string, Variant>& variant_names() {
  static const std::map<std::string, Variant> names{{"l0-sgsvd-star", Variant::L0SgsvdStar},
                                                    {"l1-sgsvd-star", Variant::L1SgsvdStar},
                                                    {"sgsvd", Variant::SgsvdClassic},
                                                    {"l0svd", Variant::L0Svd}};
  return names;
}
const std::map<std::string, DenominatorMode>& denominator_names() {
  static const std::map<std::string, DenominatorMode> names{
      {"pseudocode", DenominatorMode::AlgorithmPseudocode}, {"exact", DenominatorMode::ExactKkt}};
  return names;
}
const std::map<std::string, LaplacianMode>& laplacian_names() {
  static const std::map<std::string, LaplacianMode> names{{"raw", LaplacianMode::Raw},
                                                          {"normalized", LaplacianMode::Normalized}};
  return names;
}
const std::map<std::string, SweepOrder>& sweep_names() {
  static const std::map<std::string, SweepOrder> names{{"auto", SweepOrder::Auto},
                                                       {"gauss-seidel", SweepOrder::GaussSeidel},
                                                       {"jacobi", SweepOrder::Jacobi}};
  return names;
}
const std::map<std::string, InitKind>& init_names() {
  static const std::map<std::string, InitKind> names{{"power", InitKind::PowerIteration},
                                                     {"random", InitKind::SeededRandom}};
  return names;
}
const std::map<std::string, SignMode>& sign_mode_names() {
  static const std::map<std::string, SignMode> names{{"mixed", SignMode::Mixed},
                                                     {"same", SignMode::SameSign}};
  return names;
}
const std::map<std::string, ModuleSide>& side_names() {
  static const std::map<std::string, ModuleSide> names{{"u", ModuleSide::U}, {"v", ModuleSide::V}};
  return names;
}

std::string to_string(Variant v) { return name_of(variant_names(), v); }
std::string to_string(DenominatorMode d) { return name_of(denominator_names(), d); }
std::string to_string(LaplacianMode l) { return name_of(laplacian_names(), l); }
std::string to_string(SweepOrder s) { return name_of(sweep_names(), s); }
std::string to_string(InitKind k) { return name_of(init_names(), k); }
std::string to_string(SignMode s) { return name_of(sign_mode_names(), s); }
std::string to_string(ModuleSide s) { return name_of(side_names(), s); }

json to_json(const SimSpec& spec) {
  return json{{"n", spec.n},
              {"p", spec.p},
              {"support_u", spec.support_u},
              {"support_v", spec.support_v},
              {"gamma", spec.gamma},
              {"sign_mode", to_string(spec.sign_mode)},
              {"p11", spec.p11},
              {"p12", spec.p12},
              {"seed", spec.seed}};
}

SimSpec sim_spec_from_json(const json& j) {
  SimSpec spec;
  spec.n = j.at("n").get<Index>();
  spec.p = j.at("p").get<Index>();
  spec.support_u = j.at("support_u").get<Index>();
  spec.support_v = j.at("support_v").get<Index>();
  spec.gamma = j.at("gamma").get<double>();
  spec.sign_mode = parse_name(sign_mode_names(), str(j, "sign_mode"), "sign mode");
  spec.p11 = j.at("p11").get<double>();
  spec.p12 = j.at("p12").get<double>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

json to_json(const SolverConfig& cfg) {
  return json{{"variant", to_string(cfg.variant)},
              {"k_u", cfg.k_u},
              {"k_v", cfg.k_v},
              {"lambda_u", cfg.lambda_u},
              {"lambda_v", cfg.lambda_v},
              {"sigma_u", cfg.sigma_u},
              {"sigma_v", cfg.sigma_v},
              {"eta", cfg.eta},
              {"denominator", to_string(cfg.denominator)},
              {"laplacian", to_string(cfg.laplacian)},
              {"sweep", to_string(cfg.sweep)},
              {"epsilon", cfg.epsilon},
              {"max_iter", cfg.max_iter},
              {"init", to_string(cfg.init.kind)},
              {"init_seed", cfg.init.seed}};
}

SolverConfig solver_config_from_json(const json& j) {
  SolverConfig cfg;
  cfg.variant = parse_name(variant_names(), str(j, "variant"), "variant");
  cfg.k_u = j.at("k_u").get<Index>();
  cfg.k_v = j.at("k_v").get<Index>();
  cfg.lambda_u = j.at("lambda_u").get<double>();
  cfg.lambda_v = j.at("lambda_v").get<double>();
  cfg.sigma_u = j.at("sigma_u").get<double>();
  cfg.sigma_v = j.at("sigma_v").get<double>();
  cfg.eta = j.at("eta").get<double>();
  cfg.denominator = parse_name(denominator_names(), str(j, "denominator"), "denominator");
  cfg.laplacian = parse_name(laplacian_names(), str(j, "laplacian"), "laplacian");
  cfg.sweep = parse_name(sweep_names(), str(j, "sweep"), "sweep");
  cfg.epsilon = j.at("epsilon").get<double>();
  cfg.max_iter = j.at("max_iter").get<int>();
  cfg.init.kind = parse_name(init_names(), str(j, "init"), "init");
  cfg.init.seed = j.at("init_seed").get<std::uint64_t>();
  return cfg;
}

RunManifest manifest_for(const SimulateOptions& opts) {
  RunManifest m;
  m.command = "simulate";
  m.seed = opts.spec.seed;
  m.config = to_json(opts.spec);
  m.inputs = json::object();
  m.outputs = {"matrix.tsv", "row_graph.tsv", "col_graph.tsv", "truth.tsv"};
  return m;
}

RunManifest manifest_for(const FitOptions& opts) {
  RunManifest m;
  m.command = "fit";
  m.seed = opts.config.init.seed;
  m.config = to_json(opts.config);
  m.config["rank"] = opts.rank;
  m.inputs = json{{"matrix", opts.matrix}, {"row_graph", opts.row_graph}, {"col_graph", opts.col_graph}};
  m.outputs = {"factors.tsv", "traces.tsv"};
  return m;
}

RunManifest manifest_for(const EvaluateOptions& opts) {
  RunManifest m;
  m.command = "evaluate";
  m.seed = opts.seed;
  m.config = json{{"side", to_string(opts.side)}, {"permutations", opts.permutations}};
  m.inputs = json{{"factors", opts.factors},
                  {"truth", opts.truth},
                  {"graph", opts.graph},
                  {"matrix", opts.matrix}};
  m.outputs = {"report.tsv"};
  return m;
}

std::string serialize(const RunManifest& m) {
  json j{{"command", m.command},
         {"tool", "sgsvd"},
         {"tool_version", m.tool_version},
         {"seed", m.seed},
         {"config", m.config},
         {"inputs", m.inputs},
         {"outputs", m.outputs}};
  return j.dump(2) + "\n";
}

RunManifest parse_manifest(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("manifest is not valid JSON: ") + e.what());
  }
  RunManifest m;
  try {
    m.command = str(j, "command");
    m.tool_version = str(j, "tool_version");
    m.seed = j.at("seed").get<std::uint64_t>();
    m.config = j.at("config");
    m.inputs = j.at("inputs");
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

FitOptions fit_options_from(const RunManifest& m) {
  FitOptions opts;
  opts.config = solver_config_from_json(m.config);
  opts.rank = m.config.at("rank").get<Index>();
  opts.matrix = str(m.inputs, "matrix");
  opts.row_graph = str(m.inputs, "row_graph");
  opts.col_graph = str(m.inputs, "col_graph");
  return opts;
}

SimulateOptions simulate_options_from(const RunManifest& m) {
  SimulateOptions opts;
  opts.spec = sim_spec_from_json(m.config);
  return opts;
}

EvaluateOptions evaluate_options_from(const RunManifest& m) {
  EvaluateOptions opts;
  opts.side = parse_name(side_names(), str(m.config, "side"), "side");
  opts.permutations = m.config.at("permutations").get<int>();
  opts.seed = m.seed;
  opts.factors = str(m.inputs, "factors");
  opts.truth = str(m.inputs, "truth");
  opts.graph = str(m.inputs, "graph");
  opts.matrix = str(m.inputs, "matrix");
  return opts;
}

}  // namespace sgsvd::cli
