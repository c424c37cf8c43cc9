#include "unrel_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "unrel/engine.hpp"
#include "unrel/error.hpp"
#include "unrel/exact.hpp"
#include "unrel/gomory_hu.hpp"
#include "unrel_cli/bench.hpp"
#include "unrel_cli/report_json.hpp"

namespace unrel::cli {

namespace {

struct EstimateArgs {
  std::string file;
  double p = 0.0;
  EngineConfig cfg;
  std::string method = "auto";
  std::string trace;
};

struct ExactArgs {
  std::string file;
  double p = 0.0;
  std::vector<std::string> what{"u"};
};

struct GenArgs {
  std::string family;
  GeneratorParams params;
  bool allow_disconnected = false;
  std::string output;
};

struct BenchArgs {
  std::string suite;
  std::string output;
  BenchOptions options;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidArgument("cannot write " + path);
  file << text;
}

int cmd_estimate(const EstimateArgs& a, std::ostream& out) {
  const MultiGraph g = read_graph_file(a.file);
  const EngineResult r = estimate(g, a.p, parse_method(a.method), a.cfg);
  out << estimate_json(r, g, a.p, a.cfg.eps).dump(2) << '\n';
  if (!a.trace.empty()) write_output(a.trace, trace_json(r.trace).dump(2) + "\n", out);
  return kOk;
}

int cmd_exact(const ExactArgs& a, std::ostream& out) {
  if (!(a.p > 0.0 && a.p < 1.0)) throw InvalidArgument("p must lie in (0, 1)");
  const MultiGraph g = read_graph_file(a.file);
  Json j;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["p"] = a.p;
  for (const std::string& q : a.what) {
    LogWeight w;
    if (q == "u") {
      w = exact_log_u(g, a.p);
    } else if (q == "z") {
      w = exact_log_z(g, a.p);
    } else {
      w = exact_log_x(g, a.p);
    }
    j[q] = w.linear();
    j["log10_" + q] = log10_or_null(w);
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_stats(const std::string& file, std::ostream& out) {
  const MultiGraph g = read_graph_file(file);
  out << stats_json(g, build_gomory_hu(g)).dump(2) << '\n';
  return kOk;
}

int cmd_gen(GenArgs a, std::ostream& out) {
  a.params.connected = !a.allow_disconnected;
  write_output(a.output, to_string(generate(a.family, a.params)), out);
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  std::ifstream in(a.suite);
  if (!in) throw ParseError("cannot open benchmark spec: " + a.suite);
  const BenchmarkSpec spec = parse_benchmark_spec(in);
  std::ostringstream csv;
  run_benchmark(spec, a.options, csv);
  write_output(a.output, csv.str(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Network unreliability estimation", "unrel"};
  app.require_subcommand(1);

  EstimateArgs est;
  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate u_G(p) and print a JSON report");
  estimate_cmd->add_option("graph", est.file, "Graph file")->required();
  estimate_cmd->add_option("--p", est.p, "Edge failure probability")->required();
  estimate_cmd->add_option("--eps", est.cfg.eps, "Target relative accuracy")->capture_default_str();
  estimate_cmd->add_option("--delta", est.cfg.delta, "Failure probability of each randomized stage")
      ->capture_default_str();
  estimate_cmd->add_option("--method", est.method, "auto, exact, naive, two-step, importance or contraction")
      ->capture_default_str();
  estimate_cmd->add_option("--seed", est.cfg.seed, "Master seed")->envname("UNREL_SEED")->capture_default_str();
  estimate_cmd->add_option("--workers", est.cfg.workers, "Worker threads")->capture_default_str();
  estimate_cmd->add_option("--trace", est.trace, "Write the dispatch trace JSON here ('-' for stdout)");
  estimate_cmd->add_option("--base-n", est.cfg.base_n, "Largest graph solved exactly")->capture_default_str();
  estimate_cmd->add_option("--c-is", est.cfg.c_is, "Importance sample-budget constant")->capture_default_str();
  estimate_cmd->add_option("--c-alpha", est.cfg.c_alpha, "Skeleton probability constant")->capture_default_str();
  estimate_cmd->add_option("--xi", est.cfg.xi, "Sparsification trigger exponent")->capture_default_str();
  estimate_cmd->add_option("--lambda-sparsify", est.cfg.lambda_sparsify_threshold,
                           "Min-cut size above which sparsification applies (0: 12 log2(n)^3)");

  ExactArgs ex;
  auto* exact_cmd = app.add_subcommand("exact", "Exact u, z or x for small graphs");
  exact_cmd->add_option("graph", ex.file, "Graph file")->required();
  exact_cmd->add_option("--p", ex.p, "Edge failure probability")->required();
  exact_cmd->add_option("--what", ex.what, "Quantities to print: u, z, x")
      ->delimiter(',')
      ->check(CLI::IsMember({"u", "z", "x"}))
      ->capture_default_str();

  std::string stats_file;
  auto* stats_cmd = app.add_subcommand("stats", "Min cut, gamma, tau and the Gomory-Hu weight profile");
  stats_cmd->add_option("graph", stats_file, "Graph file")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
  gen_cmd->add_option("family", gen.family, "cycle, parallel_cycle, leaf_cycle, complete, gnm, dumbbell, two_vertex")
      ->required();
  gen_cmd->add_option("--n", gen.params.n, "Vertex count");
  gen_cmd->add_option("--k", gen.params.k, "Edge multiplicity or bridge count")->capture_default_str();
  gen_cmd->add_option("--lambda", gen.params.lambda, "Leaf multiplicity of leaf_cycle")->capture_default_str();
  gen_cmd->add_option("--m", gen.params.m, "Edge count of gnm");
  gen_cmd->add_option("--seed", gen.params.seed, "Generator seed")->envname("UNREL_SEED")->capture_default_str();
  gen_cmd->add_flag("--simple", gen.params.simple, "No parallel edges (gnm)");
  gen_cmd->add_flag("--allow-disconnected", gen.allow_disconnected, "Do not force gnm to be connected");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
  bench_cmd->add_option("suite", bench.suite, "Suite JSON")->required();
  bench_cmd->add_option("-o,--output", bench.output, "Output CSV (default stdout)");
  bench_cmd->add_option("--exact-max-n", bench.options.exact_max_n, "Largest n given an exact reference")
      ->capture_default_str();
  bench_cmd->add_option("--workers", bench.options.workers, "Worker threads")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "unrel: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*estimate_cmd) return cmd_estimate(est, out);
    if (*exact_cmd) return cmd_exact(ex, out);
    if (*stats_cmd) return cmd_stats(stats_file, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const ParseError& e) {
    err << "unrel: " << e.what() << '\n';
    return kParseError;
  } catch (const DisconnectedGraph& e) {
    err << "unrel: " << e.what() << '\n';
    return kDisconnected;
  } catch (const SizeLimitExceeded& e) {
    err << "unrel: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const InvalidArgument& e) {
    err << "unrel: " << e.what() << '\n';
    return kInvalidArgument;
  } catch (const std::exception& e) {
    err << "unrel: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace unrel::cli
