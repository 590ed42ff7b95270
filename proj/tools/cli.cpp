#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgsvd/deflation.hpp"
#include "sgsvd/errors.hpp"
#include "sgsvd/evaluate.hpp"
#include "sgsvd/io.hpp"

namespace sgsvd::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kLevels[] = {0.1, 0.05, 0.01, 0.005, 0.001};
constexpr const char* kLevelNames[] = {"0.1", "0.05", "0.01", "0.005", "0.001"};

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'");
  }
}

void write_manifest(const fs::path& dir, const RunManifest& m) {
  io::save_text(dir / "manifest.json", serialize(m));
}

PriorGraph load_optional_graph(const std::string& path) {
  return path.empty() ? PriorGraph{} : io::load_graph(path);
}

std::string gamma_dir_name(double gamma) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "gamma_%.4f", gamma);
  return buf;
}

std::string cell(double value) {
  return std::isnan(value) ? "NA" : io::format_real(value);
}

double mean_of(const std::vector<double>& values) {
  if (values.empty()) return std::nan("");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

void execute_simulate(const SimulateOptions& opts, const fs::path& out_dir) {
  opts.spec.validate();
  if (opts.sweep) {
    for (double gamma : gamma_sweep(opts.sweep->from, opts.sweep->to, opts.sweep->step)) {
      SimulateOptions one{opts.spec, std::nullopt};
      one.spec.gamma = gamma;
      execute_simulate(one, out_dir / gamma_dir_name(gamma));
    }
    return;
  }
  const Dataset ds = gen_dataset(opts.spec);
  prepare_dir(out_dir);
  io::save_matrix(out_dir / "matrix.tsv", ds.x);
  io::save_graph(out_dir / "row_graph.tsv", ds.row_graph);
  io::save_graph(out_dir / "col_graph.tsv", ds.col_graph);
  io::save_truth(out_dir / "truth.tsv", ds.truth);
  write_manifest(out_dir, manifest_for(opts));
}

int execute_fit(const FitOptions& opts, const fs::path& out_dir) {
  const DenseMatrix x = io::load_matrix(opts.matrix);
  const PriorGraph rows = load_optional_graph(opts.row_graph);
  const PriorGraph cols = load_optional_graph(opts.col_graph);
  if (rows.vertex_count() != 0 && rows.vertex_count() != x.rows()) {
    throw DimensionError("row graph has " + std::to_string(rows.vertex_count()) +
                         " vertices, matrix has " + std::to_string(x.rows()) + " rows");
  }
  if (cols.vertex_count() != 0 && cols.vertex_count() != x.cols()) {
    throw DimensionError("column graph has " + std::to_string(cols.vertex_count()) +
                         " vertices, matrix has " + std::to_string(x.cols()) + " columns");
  }

  const FactorSeries series = fit_rank_k(x, rows, cols, opts.config, opts.rank);

  io::FactorTable table{x.rows(), x.cols(), {}};
  int unconverged = 0;
  for (std::size_t k = 0; k < series.factors.size(); ++k) {
    const bool converged = series.traces[k].converged;
    unconverged += converged ? 0 : 1;
    table.records.push_back({series.factors[k], converged});
  }
  prepare_dir(out_dir);
  io::save_factors(out_dir / "factors.tsv", table);
  io::save_traces(out_dir / "traces.tsv", series.traces);
  write_manifest(out_dir, manifest_for(opts));
  return unconverged;
}

void execute_evaluate(const EvaluateOptions& opts, const fs::path& out_dir) {
  if (opts.truth.empty() && opts.graph.empty()) {
    throw ConfigError("evaluate needs --truth and/or --graph");
  }
  const io::FactorTable table = io::load_factors(opts.factors);
  std::optional<GroundTruth> truth;
  if (!opts.truth.empty()) {
    truth = io::load_truth(opts.truth);
    if (truth->u_true.size() != table.rows || truth->v_true.size() != table.cols) {
      throw DimensionError("truth dimensions do not match the factors file");
    }
  }
  std::optional<PriorGraph> graph;
  const Index module_dim = opts.side == ModuleSide::U ? table.rows : table.cols;
  if (!opts.graph.empty()) {
    graph = io::load_graph(opts.graph);
    if (graph->vertex_count() != module_dim) {
      throw DimensionError("graph has " + std::to_string(graph->vertex_count()) +
                           " vertices, module side has length " + std::to_string(module_dim));
    }
  }
  std::optional<DenseMatrix> features;
  if (!opts.matrix.empty()) {
    DenseMatrix x = io::load_matrix(opts.matrix);
    if (x.rows() != table.rows || x.cols() != table.cols) {
      throw DimensionError("matrix dimensions do not match the factors file");
    }
    features = opts.side == ModuleSide::U ? x : DenseMatrix(RowMajorMatrix(x.values().transpose()));
  }
  Rng rng(opts.seed);

  std::ostringstream out;
  out << "factor\td\tconverged\tsens_u\tspec_u\tsens_v\tspec_v\tmodule_size\tinternal_edges\tfc"
         "\tp_value\tcorr_p\n";
  std::vector<double> sens_u, spec_u, sens_v, spec_v, fcs, pvals;
  for (std::size_t k = 0; k < table.records.size(); ++k) {
    const auto& rec = table.records[k];
    out << k << '\t' << io::format_real(rec.factor.d) << '\t' << (rec.converged ? "true" : "false");
    if (truth) {
      const auto mu = support_metrics(rec.factor.u, truth->support_u);
      const auto mv = support_metrics(rec.factor.v, truth->support_v);
      out << '\t' << cell(mu.sensitivity) << '\t' << cell(mu.specificity) << '\t'
          << cell(mv.sensitivity) << '\t' << cell(mv.specificity);
      sens_u.push_back(mu.sensitivity);
      spec_u.push_back(mu.specificity);
      sens_v.push_back(mv.sensitivity);
      spec_v.push_back(mv.specificity);
    } else {
      out << "\tNA\tNA\tNA\tNA";
    }
    const auto module = support_of(opts.side == ModuleSide::U ? rec.factor.u : rec.factor.v);
    out << '\t' << module.size();
    if (graph && module.size() >= 2 && graph->edge_count() > 0) {
      const auto e = module_enrichment(*graph, module);
      out << '\t' << e.internal_edges << '\t' << cell(e.fc) << '\t' << cell(e.p_value);
      fcs.push_back(e.fc);
      pvals.push_back(e.p_value);
    } else {
      out << "\tNA\tNA\tNA";
    }
    if (features && module.size() >= 2) {
      out << '\t' << cell(module_correlation_excess(*features, module, opts.permutations, rng));
    } else {
      out << "\tNA";
    }
    out << '\n';
  }

  out << "\nsummary\tmean_sens_u\tmean_spec_u\tmean_sens_v\tmean_spec_v\tmean_fc";
  for (const char* name : kLevelNames) out << "\tenriched_" << name;
  out << "\nall\t" << cell(mean_of(sens_u)) << '\t' << cell(mean_of(spec_u)) << '\t'
      << cell(mean_of(sens_v)) << '\t' << cell(mean_of(spec_v)) << '\t' << cell(mean_of(fcs));
  for (double level : kLevels) {
    if (pvals.empty()) {
      out << "\tNA";
      continue;
    }
    std::size_t hits = 0;
    for (double p : pvals) hits += p < level ? 1 : 0;
    out << '\t' << cell(static_cast<double>(hits) / static_cast<double>(table.records.size()));
  }
  out << '\n';

  prepare_dir(out_dir);
  io::save_text(out_dir / "report.tsv", out.str());
  write_manifest(out_dir, manifest_for(opts));
}

void execute_replay(const fs::path& manifest, const fs::path& out_dir) {
  const RunManifest m = parse_manifest(io::load_text(manifest));
  try {
    if (m.command == "simulate") {
      execute_simulate(simulate_options_from(m), out_dir);
    } else if (m.command == "fit") {
      execute_fit(fit_options_from(m), out_dir);
    } else if (m.command == "evaluate") {
      execute_evaluate(evaluate_options_from(m), out_dir);
    } else {
      throw IoError("manifest names unknown command '" + m.command + "'");
    }
  } catch (const nlohmann::ordered_json::exception& e) {
    throw IoError(std::string("malformed manifest: ") + e.what());
  }
}

namespace {

template <typename E>
CLI::CheckedTransformer choices(const std::map<std::string, E>& names) {
  return CLI::CheckedTransformer(names, CLI::ignore_case);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse graph-regularized rank-one SVD with deflation", "sgsvd"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  // simulate
  SimulateOptions sim;
  std::string sim_out;
  Index support_both = -1;
  std::vector<double> sweep;
  auto* simulate = app.add_subcommand("simulate", "Generate a planted rank-one dataset");
  simulate->add_option("--n", sim.spec.n, "Rows")->capture_default_str();
  simulate->add_option("--p", sim.spec.p, "Columns")->capture_default_str();
  simulate->add_option("--support", support_both, "Nonzeros in both u and v");
  simulate->add_option("--support-u", sim.spec.support_u, "Nonzeros in u")->capture_default_str();
  simulate->add_option("--support-v", sim.spec.support_v, "Nonzeros in v")->capture_default_str();
  auto* gamma_opt = simulate->add_option("--gamma", sim.spec.gamma, "Noise scale")->capture_default_str();
  simulate->add_option("--gamma-sweep", sweep, "FROM TO STEP; one dataset per gamma")
      ->expected(3)
      ->excludes(gamma_opt);
  simulate->add_option("--sign-mode", sim.spec.sign_mode, "mixed | same")
      ->transform(choices(sign_mode_names()));
  simulate->add_option("--p11", sim.spec.p11, "Edge probability inside the planted block")
      ->capture_default_str();
  simulate->add_option("--p12", sim.spec.p12, "Edge probability elsewhere")->capture_default_str();
  simulate->add_option("--seed", sim.spec.seed, "RNG seed")->capture_default_str();
  simulate->add_option("--out-dir", sim_out, "Output directory")->required();

  // fit
  FitOptions fit;
  fit.config.k_u = 0;
  fit.config.k_v = 0;
  std::string fit_out;
  bool normalized = false;
  std::uint64_t fit_seed = 0;
  auto* fitc = app.add_subcommand("fit", "Extract sparse rank-one layers");
  fitc->add_option("--matrix", fit.matrix, "Matrix TSV")->required();
  fitc->add_option("--row-graph", fit.row_graph, "Row prior graph (omit for none)");
  fitc->add_option("--col-graph", fit.col_graph, "Column prior graph (omit for none)");
  fitc->add_option("--variant", fit.config.variant, "l0-sgsvd-star | l1-sgsvd-star | sgsvd | l0svd")
      ->transform(choices(variant_names()));
  fitc->add_option("--ku", fit.config.k_u, "Nonzeros kept in u (L0 variants)");
  fitc->add_option("--kv", fit.config.k_v, "Nonzeros kept in v (L0 variants)");
  fitc->add_option("--lambda-u", fit.config.lambda_u, "Soft threshold for u (L1)");
  fitc->add_option("--lambda-v", fit.config.lambda_v, "Soft threshold for v (L1)");
  fitc->add_option("--sigma-u", fit.config.sigma_u, "Graph weight on u")->capture_default_str();
  fitc->add_option("--sigma-v", fit.config.sigma_v, "Graph weight on v")->capture_default_str();
  fitc->add_option("--eta", fit.config.eta, "Ridge term in exact denominators")->capture_default_str();
  fitc->add_option("--rank", fit.rank, "Number of layers")->capture_default_str();
  fitc->add_option("--epsilon", fit.config.epsilon, "Stop when |delta d| < epsilon")
      ->capture_default_str();
  fitc->add_option("--max-iter", fit.config.max_iter, "Iteration cap per layer")->capture_default_str();
  fitc->add_flag("--normalized-laplacian", normalized, "Use D^-1/2 L D^-1/2");
  fitc->add_option("--denominator", fit.config.denominator, "pseudocode | exact")
      ->transform(choices(denominator_names()));
  fitc->add_option("--sweep", fit.config.sweep, "auto | gauss-seidel | jacobi")
      ->transform(choices(sweep_names()));
  fitc->add_option("--init", fit.config.init.kind, "power | random")->transform(choices(init_names()));
  fitc->add_option("--seed", fit_seed, "Seed for --init random");
  fitc->add_option("--out-dir", fit_out, "Output directory")->required();

  // evaluate
  EvaluateOptions ev;
  std::string ev_out;
  auto* evaluate = app.add_subcommand("evaluate", "Score factors against truth and/or a graph");
  evaluate->add_option("--factors", ev.factors, "Factors file")->required();
  evaluate->add_option("--truth", ev.truth, "Ground-truth file");
  evaluate->add_option("--graph", ev.graph, "Prior graph for module enrichment");
  evaluate->add_option("--matrix", ev.matrix, "Matrix for the within-module correlation test");
  evaluate->add_option("--side", ev.side, "Which vector defines modules: u | v")
      ->transform(choices(side_names()));
  evaluate->add_option("--permutations", ev.permutations, "Random modules for the correlation test")
      ->capture_default_str();
  evaluate->add_option("--seed", ev.seed, "Seed for the permutation draws");
  evaluate->add_option("--out-dir", ev_out, "Output directory")->required();

  // replay
  std::string replay_manifest;
  std::string replay_out;
  auto* replay = app.add_subcommand("replay", "Re-run a stage from its manifest");
  replay->add_option("--manifest", replay_manifest, "manifest.json")->required();
  replay->add_option("--out-dir", replay_out, "Output directory")->required();

  std::vector<const char*> argv{"sgsvd"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*simulate) {
      if (support_both >= 0) sim.spec.support_u = sim.spec.support_v = support_both;
      if (!sweep.empty()) sim.sweep = GammaSweep{sweep[0], sweep[1], sweep[2]};
      execute_simulate(sim, sim_out);
    } else if (*fitc) {
      if (normalized) fit.config.laplacian = LaplacianMode::Normalized;
      fit.config.init.seed = fit_seed;
      const int unconverged = execute_fit(fit, fit_out);
      if (unconverged > 0) {
        err << "warning: " << unconverged << " layer(s) reached --max-iter without converging\n";
      }
    } else if (*evaluate) {
      execute_evaluate(ev, ev_out);
    } else if (*replay) {
      execute_replay(replay_manifest, replay_out);
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DegenerateError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace sgsvd::cli
