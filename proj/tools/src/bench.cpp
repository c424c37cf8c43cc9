#include "unrel_cli/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "unrel/error.hpp"
#include "unrel/exact.hpp"

namespace unrel::cli {

namespace {

using nlohmann::json;

template <typename T>
T field(const json& obj, const char* key, T fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  return it->get<T>();
}

BenchEntry parse_entry(const json& e, std::size_t index) {
  const std::string where = "entry " + std::to_string(index) + ": ";
  if (!e.is_object()) throw ParseError(where + "expected an object");
  BenchEntry out;
  if (!e.contains("family")) throw ParseError(where + "missing \"family\"");
  out.family = e.at("family").get<std::string>();
  const json params = e.value("params", json::object());
  out.params.n = field(params, "n", 0);
  out.params.k = field(params, "k", 1);
  out.params.lambda = field(params, "lambda", 2);
  out.params.m = field(params, "m", 0);
  out.params.simple = field(params, "simple", false);
  out.params.connected = field(params, "connected", true);
  out.params.seed = field<std::uint64_t>(params, "seed", 1);

  out.p = e.value("p", std::vector<double>{});
  if (out.p.empty()) throw ParseError(where + "needs at least one p");
  for (double p : out.p) {
    if (!(p > 0.0 && p < 1.0)) throw ParseError(where + "p must lie in (0, 1)");
  }
  out.eps = e.value("eps", 0.1);
  for (const std::string& name : e.value("methods", std::vector<std::string>{"auto"})) {
    try {
      out.methods.push_back(parse_method(name));
    } catch (const InvalidArgument&) {
      throw ParseError(where + "unknown method \"" + name + "\"");
    }
  }
  out.seeds = e.value("seeds", std::vector<std::uint64_t>{1});
  out.repetitions = e.value("repetitions", 1);
  if (out.repetitions < 1) throw ParseError(where + "repetitions must be positive");
  return out;
}

std::string number(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

}  // namespace

BenchmarkSpec parse_benchmark_spec(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("benchmark spec: ") + e.what());
  }
  const json* entries = &doc;
  if (doc.is_object()) {
    if (!doc.contains("entries")) throw ParseError("benchmark spec: missing \"entries\"");
    entries = &doc.at("entries");
  }
  if (!entries->is_array()) throw ParseError("benchmark spec: \"entries\" must be an array");
  BenchmarkSpec spec;
  try {
    for (std::size_t i = 0; i < entries->size(); ++i) spec.entries.push_back(parse_entry((*entries)[i], i));
  } catch (const json::exception& e) {
    throw ParseError(std::string("benchmark spec: ") + e.what());
  }
  return spec;
}

void run_benchmark(const BenchmarkSpec& spec, const BenchOptions& options, std::ostream& csv) {
  csv << kBenchHeader << '\n';
  for (const BenchEntry& entry : spec.entries) {
    const MultiGraph g = generate(entry.family, entry.params);
    const int n = g.num_vertices();
    for (double p : entry.p) {
      const bool with_exact = n <= options.exact_max_n && n <= kExactUMaxVertices;
      const LogWeight truth = with_exact ? exact_log_u(g, p) : LogWeight::zero();
      for (Method method : entry.methods) {
        for (std::uint64_t seed : entry.seeds) {
          for (int rep = 0; rep < entry.repetitions; ++rep) {
            EngineConfig cfg;
            cfg.eps = entry.eps;
            cfg.seed = seed;
            cfg.workers = options.workers;
            const auto start = std::chrono::steady_clock::now();
            const EngineResult r = estimate(g, p, method, cfg);
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            std::string name(method_name(method));
            if (method == Method::automatic) name += ":" + r.report.method;
            csv << entry.family << ',' << n << ',' << g.num_edges() << ',' << number(p) << ',' << name << ',';
            if (!r.report.estimate.is_zero()) csv << number(r.report.estimate.log10());
            csv << ',';
            if (with_exact && !truth.is_zero()) {
              csv << number(std::abs(std::exp(r.report.estimate.log() - truth.log()) - 1.0));
            }
            csv << ',' << r.report.samples << ',' << number(ms) << ',' << seed << '\n';
          }
        }
      }
    }
  }
}

}  // namespace unrel::cli
