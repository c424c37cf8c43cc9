#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "unrel/engine.hpp"
#include "unrel/graph.hpp"

namespace unrel::cli {

/// One generator instance with the grid of runs made on it.
struct BenchEntry {
  std::string family;
  GeneratorParams params;
  std::vector<double> p;
  double eps = 0.1;
  std::vector<Method> methods;
  std::vector<std::uint64_t> seeds;
  int repetitions = 1;
};

struct BenchmarkSpec {
  std::vector<BenchEntry> entries;
};

/// Reads the suite format documented in the README. Throws ParseError on
/// malformed input, unknown methods or p outside (0, 1).
BenchmarkSpec parse_benchmark_spec(std::istream& in);

struct BenchOptions {
  /// Exact reference values are computed up to this many vertices.
  int exact_max_n = 16;
  int workers = 1;
};

inline constexpr const char* kBenchHeader =
    "family,n,m,p,method,estimate_log10,rel_err_vs_exact_when_available,samples,wall_ms,seed";

/// Runs every (instance, p, method, seed, repetition) and writes one CSV row each.
void run_benchmark(const BenchmarkSpec& spec, const BenchOptions& options, std::ostream& csv);

}  // namespace unrel::cli
